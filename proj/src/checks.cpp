#include "zfilt/checks.hpp"

#include <functional>
#include <sstream>

#include "zfilt/dims.hpp"
#include "zfilt/errors.hpp"
#include "zfilt/extcount.hpp"
#include "zfilt/family.hpp"
#include "zfilt/group.hpp"
#include "zfilt/hall.hpp"
#include "zfilt/localqp.hpp"
#include "zfilt/poset.hpp"

namespace zfilt {

namespace {

struct Harness {
    std::vector<CheckResult> results;
    std::ostringstream detail;
    bool ok = true;

    void expect(bool cond, const std::string& what) {
        if (!cond) {
            ok = false;
            if (detail.tellp() > 0) detail << "; ";
            detail << "mismatch: " << what;
        }
    }
    template <typename A, typename B>
    void expect_eq(const A& a, const B& b, const std::string& what) {
        if (!(a == b)) {
            ok = false;
            if (detail.tellp() > 0) detail << "; ";
            detail << what << ": " << a << " != " << b;
        }
    }
    void run(int id, const std::string& name, const std::function<void()>& body) {
        ok = true;
        detail.str("");
        try {
            body();
        } catch (const std::exception& e) {
            ok = false;
            detail << "exception: " << e.what();
        }
        results.push_back({id, name, ok, detail.str()});
    }
};

// Valid (family, p) instances of the Demushkin classification for a given rank.
std::vector<std::pair<GroupFamily, int>> demushkin_instances(int d) {
    std::vector<std::pair<GroupFamily, int>> out;
    if (d % 2 == 1) {
        out.emplace_back(Demushkin{d, DemushkinCase::r2, 2, FExponent::of(2)}, 2);
    } else {
        out.emplace_back(Demushkin{d, DemushkinCase::r3, 2, FExponent::of(2)}, 2);
        out.emplace_back(Demushkin{d, DemushkinCase::r1, 3, FExponent::of(2)}, 3);
        out.emplace_back(Demushkin{d, DemushkinCase::r1, 5, FExponent::of(2)}, 5);
    }
    return out;
}

GroupFamily demushkin_for(int d, int p) {
    return p == 2 ? GroupFamily(Demushkin{d, d % 2 ? DemushkinCase::r2 : DemushkinCase::r3,
                                          2, FExponent::of(2)})
                  : GroupFamily(Demushkin{d, DemushkinCase::r1, p, FExponent::of(2)});
}

Integer free_c_oracle(int d, int p, int n) {
    Integer D = d;
    switch (n) {
        case 1: return D;
        case 2: return p != 2 ? div_exact(D * D - D, 2) : div_exact(D * D + D, 2);
        case 3:
            return p != 3 ? div_exact(D * D * D - D, 3) : div_exact(D * D * D + 2 * D, 3);
        case 4: {
            Integer D2 = D * D, D4 = D2 * D2;
            return p != 2 ? div_exact(D4 - D2, 4) : div_exact(D4 + D2 + 2 * D, 4);
        }
        case 5: {
            Integer D5 = D * D * D * D * D;
            return p != 5 ? div_exact(D5 - D, 5) : div_exact(D5 + 4 * D, 5);
        }
    }
    throw contract_error("oracle defined for n <= 5");
}

Integer demushkin_c_oracle(int d, int p, int n) {
    Integer D = d;
    switch (n) {
        case 1: return D;
        case 2:
            return p != 2 ? div_exact(D * D - D - 2, 2) : div_exact(D * D + D - 2, 2);
        case 3:
            return p != 3 ? div_exact(D * D * D - 4 * D, 3) : div_exact(D * D * D - D, 3);
        case 4: {
            Integer D2 = D * D, D4 = D2 * D2;
            return p != 2 ? div_exact(D4 - 5 * D2 + 4, 4) : div_exact(D4 - 3 * D2 + 2 * D, 4);
        }
        case 5: {
            Integer D3 = D * D * D, D5 = D3 * D * D;
            return p != 5 ? div_exact(D5 - 5 * D3 + 4 * D, 5)
                          : div_exact(D5 - 5 * D3 + 9 * D, 5);
        }
    }
    throw contract_error("oracle defined for n <= 5");
}

// mu_G closed form: (-1)^i p^{i(i-1)/2} when Phi(G) <= H and [G:H] = p^i, else 0.
Integer mu_closed_form(const FiniteGroup& G, const Subgroup& H, const Subgroup& phi, int p) {
    for (int g = 0; g < G.size(); ++g)
        if (phi.contains(g) && !H.contains(g)) return 0;
    int index = G.size() / H.order(), i = 0;
    while (index % p == 0) {
        index /= p;
        ++i;
    }
    Integer v = pow_int(p, static_cast<unsigned long>(i * (i - 1) / 2));
    return i % 2 == 0 ? v : -v;
}

void check_mu_lattice(Harness& h, const FiniteGroup& G, int p, const std::string& tag) {
    SubgroupLattice lat = subgroup_lattice(G);
    std::vector<Integer> mu = subgroup_mobius(lat);
    Subgroup phi = frattini(G, p);
    for (size_t i = 0; i < lat.subgroups.size(); ++i)
        h.expect_eq(mu[i], mu_closed_form(G, lat.subgroups[i], phi, p),
                    tag + " subgroup #" + std::to_string(i));
}

// Character table of D_4 indexed against generalized_dihedral({4}):
// element g = (a; eps) has index eps*4 + a.
long d4_character(int row, int g) {
    int a = g % 4, eps = g / 4;
    int cls = eps ? (a % 2 ? 4 : 3) : (a == 0 ? 0 : (a == 2 ? 1 : 2));
    static const long table[5][5] = {
        // classes: 1, r^2, {r,r^3}, {s,r^2s}, {rs,r^3s}
        {1, 1, 1, 1, 1},   {1, 1, 1, -1, -1}, {1, 1, -1, 1, -1},
        {1, 1, -1, -1, 1}, {2, -2, 0, 0, 0},
    };
    return table[row][cls];
}

// alpha(D_4) for the q=2, odd-degree relation via the character-sum route:
// |G|^{n-1} sum_chi chi(1)^{1-n} sum_{g,h} chi(g^2 h^3) chi(h).
Rational alpha_d4_charsum(const FiniteGroup& D4, int n) {
    const long deg[5] = {1, 1, 1, 1, 2};
    Rational total(0);
    for (int row = 0; row < 5; ++row) {
        Integer s = 0;
        for (int g = 0; g < D4.size(); ++g)
            for (int hh = 0; hh < D4.size(); ++hh)
                s += d4_character(row, D4.mul(D4.pow(g, 2), D4.pow(hh, 3))) *
                     d4_character(row, hh);
        Rational weight = make_rational(pow_int(8, static_cast<unsigned long>(n - 1)),
                                        pow_int(deg[row], static_cast<unsigned long>(n - 1)));
        total += weight * Rational(s);
    }
    return total;
}

Subgroup power_subgroup(const FiniteGroup& G, const Subgroup& H, long e) {
    std::vector<int> seed;
    for (int g = 0; g < G.size(); ++g)
        if (H.contains(g)) seed.push_back(G.pow(g, e));
    return subgroup_closure(G, seed);
}

} // namespace

std::vector<CheckResult> run_all_checks() {
    Harness h;

    h.run(1, "Jennings round-trip across all six families (order 24)", [&] {
        const int N = 24;
        std::vector<std::pair<GroupFamily, int>> cases;
        for (int d = 0; d <= 4; ++d)
            for (int p : {2, 3}) cases.emplace_back(FreeProP{d}, p);
        for (int d = 2; d <= 5; ++d)
            for (auto& inst : demushkin_instances(d)) cases.push_back(inst);
        for (int p : {2, 3})
            for (int k = 1; k <= 4; ++k) cases.emplace_back(FreeProdCyclicP{p, k}, p);
        for (int d = 0; d <= 3; ++d) cases.emplace_back(SuperPyth{d}, 2);
        for (int p : {2, 3}) cases.emplace_back(MixedFreeProd{{2, 2}, 1}, p);
        for (int p : {2, 3})
            for (int d = 0; d <= 3; ++d) cases.emplace_back(CyclicPFree{p, d}, p);
        for (auto& [fam, p] : cases) {
            auto P = family_series(fam, p, N);
            auto back = jennings_product(c_sequence(P, p, N), p);
            h.expect(back == P, family_name(fam) + " p=" + std::to_string(p));
        }
    });

    h.run(2, "free-group c_n closed forms (d<=5, p in {2,3,5}, n<=5)", [&] {
        for (int d = 1; d <= 5; ++d)
            for (int p : {2, 3, 5}) {
                GroupFamily fam = FreeProP{d};
                auto c = c_sequence(family_series(fam, p, 5), p, 5);
                for (int n = 1; n <= 5; ++n) {
                    Integer want = free_c_oracle(d, p, n);
                    std::string tag = "d=" + std::to_string(d) + ",p=" + std::to_string(p) +
                                      ",n=" + std::to_string(n);
                    h.expect_eq(c[static_cast<size_t>(n - 1)], want, "series " + tag);
                    h.expect_eq(c_closed(fam, p, n), want, "closed " + tag);
                }
            }
    });

    h.run(3, "Demushkin c_n closed forms (d in {2,4,6}, p in {2,3,5}, n<=5)", [&] {
        for (int d : {2, 4, 6})
            for (int p : {2, 3, 5}) {
                GroupFamily fam = demushkin_for(d, p);
                auto c = c_sequence(family_series(fam, p, 5), p, 5);
                for (int n = 1; n <= 5; ++n) {
                    Integer want = demushkin_c_oracle(d, p, n);
                    std::string tag = "d=" + std::to_string(d) + ",p=" + std::to_string(p) +
                                      ",n=" + std::to_string(n);
                    h.expect_eq(c[static_cast<size_t>(n - 1)], want, "series " + tag);
                    h.expect_eq(c_closed(fam, p, n), want, "closed " + tag);
                }
            }
    });

    h.run(4, "Hall-commutator oracle vs Witt numbers and Zassenhaus bases", [&] {
        for (int d = 1; d <= 4; ++d) {
            auto w = w_sequence(family_series(FreeProP{d}, 2, 10), 10);
            for (int n = 1; n <= 10; ++n)
                h.expect_eq(hall_count(d, n), w[static_cast<size_t>(n - 1)],
                            "hall d=" + std::to_string(d) + ",n=" + std::to_string(n));
        }
        for (int d = 1; d <= 3; ++d)
            for (int p : {2, 3})
                for (int n = 1; n <= 10; ++n)
                    h.expect_eq(Integer(static_cast<long>(zassenhaus_basis(d, p, n).size())),
                                c_closed(FreeProP{d}, p, n),
                                "basis d=" + std::to_string(d) + ",p=" + std::to_string(p) +
                                    ",n=" + std::to_string(n));
    });

    h.run(5, "unipotent groups: deepest Zassenhaus level n, subquotient order p", [&] {
        for (auto [n, p] : std::vector<std::pair<int, int>>{{2, 2}, {3, 2}, {2, 3}}) {
            auto G = FiniteGroup::unipotent(n + 1, p);
            auto chain = zassenhaus_chain(G, p, n + 2);
            std::string tag = "U_" + std::to_string(n + 1) + "(F_" + std::to_string(p) + ")";
            h.expect(chain[static_cast<size_t>(n - 1)].order() == p, tag + " level n order");
            h.expect(chain[static_cast<size_t>(n)].order() == 1, tag + " level n+1 trivial");
        }
    });

    h.run(6, "subgroup Mobius values vs closed form; D_4 table {1,-1x3,2,0x5}", [&] {
        auto D4 = FiniteGroup::unipotent(3, 2);
        check_mu_lattice(h, D4, 2, "D_4");
        check_mu_lattice(h, FiniteGroup::unipotent(3, 3), 3, "U_3(F_3)");
        check_mu_lattice(h, FiniteGroup::abelian({2, 2, 2}), 2, "C_2^3");
        check_mu_lattice(h, FiniteGroup::abelian({4, 2}), 2, "C_4xC_2");
        auto mu = subgroup_mobius(subgroup_lattice(D4));
        int ones = 0, minus = 0, twos = 0, zeros = 0;
        for (auto& m : mu) {
            if (m == 1) ++ones;
            else if (m == -1) ++minus;
            else if (m == 2) ++twos;
            else if (m == 0) ++zeros;
        }
        h.expect(mu.size() == 10 && ones == 1 && minus == 3 && twos == 1 && zeros == 5,
                 "D_4 multiset");
    });

    h.run(7, "nu(Q_2, D_4) by three routes (18); n=3 by two routes (1800)", [&] {
        auto D4 = FiniteGroup::unipotent(3, 2);
        LocalFieldParams n1{2, 1, 2, FExponent::of(2), DemushkinCase::r2};
        h.expect_eq(nu_yamagishi(n1, D4), Integer(18), "Yamagishi n=1");
        h.expect_eq(nu_u3(2, 1, 2), Integer(18), "closed form n=1");
        h.expect_eq(d4_extension_count_qp(2), Integer(18), "local-field route");
        LocalFieldParams n3{2, 3, 2, FExponent::of(2), DemushkinCase::r2};
        h.expect_eq(nu_yamagishi(n3, D4), Integer(1800), "Yamagishi n=3");
        h.expect_eq(nu_u3(2, 3, 2), Integer(1800), "closed form n=3");
    });

    h.run(8, "alpha(D_4) = 8^{n+1}(4+1/2^n) and abelian-subgroup alpha", [&] {
        auto D4 = FiniteGroup::generalized_dihedral({4});
        auto closed = [](int n) -> Integer {
            // 8^{n+1} (4 + 1/2^n) = 2^{3n+3} * (2^{n+2}+1) / 2^n
            return pow_int(2, static_cast<unsigned long>(2 * n + 3)) *
                   (pow_int(2, static_cast<unsigned long>(n + 2)) + 1);
        };
        // n = 1: exhaustive count; n = 2: character-sum route (the q=2 relation
        // word itself requires odd degree); n = 3: both again.
        for (int n : {1, 3}) {
            LocalFieldParams prm{2, n, 2, FExponent::of(2), DemushkinCase::r2};
            h.expect_eq(count_word_solutions(D4, demushkin_relation(prm)), closed(n),
                        "brute n=" + std::to_string(n));
        }
        for (int n : {1, 2, 3})
            h.expect_eq(alpha_d4_charsum(D4, n), Rational(closed(n)),
                        "charsum n=" + std::to_string(n));
        h.expect_eq(closed(1), Integer(288), "pinned n=1");
        h.expect_eq(closed(2), Integer(2176), "pinned n=2");
        // abelian H <= D_4: brute force equals |H|^{n+1} |{h : h^2 = 1}|
        LocalFieldParams prm{2, 1, 2, FExponent::of(2), DemushkinCase::r2};
        auto word = demushkin_relation(prm);
        for (auto& H : subgroup_lattice(D4).subgroups) {
            auto Hg = subgroup_as_group(D4, H);
            if (!Hg.is_abelian()) continue;
            long tor = 0;
            for (int g = 0; g < Hg.size(); ++g)
                if (Hg.pow(g, 2) == Hg.identity()) ++tor;
            h.expect_eq(count_word_solutions(Hg, word),
                        pow_int(H.order(), 2) * tor,
                        "abelian |H|=" + std::to_string(H.order()));
        }
    });

    h.run(9, "cup-product pair counts: closed vs exhaustive; U_3 consistency", [&] {
        // Realizable combinations: all-zero diagonal (alternating) needs even d;
        // the unit-diagonal case needs p = 2.
        for (int d : {4}) h.expect_eq(cp_pair_count(3, d, false),
                                      cp_pair_count_bruteforce(3, d, std::vector<int>(d, 0)),
                                      "p=3,d=" + std::to_string(d) + ",alternating");
        for (int d : {4}) h.expect_eq(cp_pair_count(2, d, false),
                                      cp_pair_count_bruteforce(2, d, std::vector<int>(d, 0)),
                                      "p=2,d=" + std::to_string(d) + ",alternating");
        for (int d : {3, 4, 5}) {
            std::vector<int> diag(static_cast<size_t>(d), 0);
            diag[0] = 1;
            h.expect_eq(cp_pair_count(2, d, true), cp_pair_count_bruteforce(2, d, diag),
                        "p=2,d=" + std::to_string(d) + ",unit-diagonal");
        }
        // Degenerate constructions must be rejected, not silently counted.
        for (auto [p, d] : std::vector<std::pair<int, int>>{{2, 3}, {2, 5}, {3, 3}}) {
            bool threw = false;
            try {
                cp_pair_count_bruteforce(p, d, std::vector<int>(static_cast<size_t>(d), 0));
            } catch (const contract_error&) {
                threw = true;
            }
            h.expect(threw, "odd-d alternating form accepted at p=" + std::to_string(p) +
                                ",d=" + std::to_string(d));
        }
        h.expect_eq(cp_pair_count(3, 4, false), Integer(1920), "pinned 1920");
        h.expect_eq(cp_pair_count(2, 3, true), Integer(18), "pinned 18");
        h.expect_eq(cp_pair_count(2, 4, false), Integer(90), "pinned 90");
        // nu_u3 internally asserts CP * p^{n+2} / |Aut| equals the closed form.
        for (int n = 1; n <= 4; ++n) nu_u3(2, n, 2);
        for (int n : {2, 4}) nu_u3(2, n, 4);
        for (int n : {2, 4}) nu_u3(3, n, 3);
        h.expect_eq(nu_u3(2, 2, 4), Integer(180), "pinned U_3 180");
        h.expect_eq(nu_u3(3, 2, 3), Integer(360), "pinned U_3 360");
    });

    h.run(10, "Shafarevich: q-binomial identity; nu(C_2 x C_2, n=1) = 1", [&] {
        for (int p : {2, 3, 5})
            for (int d = 0; d <= 4; ++d)
                for (int n = 0; n <= 4; ++n) {
                    Integer lhs = 1;
                    for (int i = 0; i < d; ++i)
                        lhs *= pow_int(p, static_cast<unsigned long>(n + 1)) -
                               pow_int(p, static_cast<unsigned long>(i));
                    Integer rhs = 0;
                    for (int i = 0; i <= d; ++i) {
                        Integer term = gaussian_binomial(d, i, p) *
                                       pow_int(p, static_cast<unsigned long>(i * (i - 1) / 2)) *
                                       pow_int(pow_int(p, static_cast<unsigned long>(n + 1)),
                                               static_cast<unsigned long>(d - i));
                        rhs += i % 2 == 0 ? term : -term;
                    }
                    h.expect_eq(lhs, rhs,
                                "p=" + std::to_string(p) + ",d=" + std::to_string(d) +
                                    ",n=" + std::to_string(n));
                }
        auto V = FiniteGroup::abelian({2, 2});
        h.expect_eq(automorphism_count(V), Integer(6), "|Aut(C_2 x C_2)|");
        h.expect_eq(nu_shafarevich(2, 1, V), Integer(1), "nu(C_2 x C_2)");
    });

    h.run(11, "SAP D_4 table for n = 2..8", [&] {
        const long want[] = {1, 12, 100, 720, 4816, 30912, 193600};
        for (int n = 2; n <= 8; ++n)
            h.expect_eq(sap_d4_count(n), Integer(want[n - 2]), "n=" + std::to_string(n));
    });

    h.run(12, "superpythagorean w/c patterns and finite-quotient oracle", [&] {
        // Corrected patterns (see the decisions ledger): the filtration lemma
        // G_(n) = H^{2^s} forces c_n = 0 off powers of 2, hence w_n = 0 for
        // n >= 3; the printed "c_n = 1 otherwise" contradicts the same
        // section's lemma and every cross-check below.
        for (int d = 0; d <= 3; ++d) {
            GroupFamily fam = SuperPyth{d};
            auto P = family_series(fam, 2, 12);
            auto w = w_sequence(P, 12);
            auto c = c_sequence(P, 2, 12);
            for (int n = 1; n <= 12; ++n) {
                Integer wantw = n == 1 ? Integer(d + 1) : n == 2 ? Integer(-1) : Integer(0);
                Integer wantc = n == 1              ? Integer(d + 1)
                                : (n & (n - 1)) == 0 ? Integer(d)
                                                     : Integer(0);
                std::string tag = "d=" + std::to_string(d) + ",n=" + std::to_string(n);
                h.expect_eq(w[static_cast<size_t>(n - 1)], wantw, "w " + tag);
                h.expect_eq(c[static_cast<size_t>(n - 1)], wantc, "c " + tag);
                h.expect_eq(w_closed(fam, 2, n), wantw, "w-closed " + tag);
                h.expect_eq(c_closed(fam, 2, n), wantc, "c-closed " + tag);
            }
        }
        for (int d = 1; d <= 2; ++d)
            for (int K = 1; K <= 4; ++K) {
                std::vector<int> orders(static_cast<size_t>(d), 1 << K);
                auto G = FiniteGroup::generalized_dihedral(orders);
                Subgroup H;  // index-2 subgroup: the abelian part
                H.members.assign(static_cast<size_t>(G.size()), false);
                for (int g = 0; g < G.size() / 2; ++g) H.members[static_cast<size_t>(g)] = true;
                auto chain = zassenhaus_chain(G, 2, 8);
                for (int n = 2; n <= 8; ++n) {
                    int s = 0;
                    while ((1 << s) < n) ++s;
                    h.expect(chain[static_cast<size_t>(n - 1)] ==
                                 power_subgroup(G, H, 1L << s),
                             "d=" + std::to_string(d) + ",K=" + std::to_string(K) +
                                 ",n=" + std::to_string(n));
                }
            }
    });

    h.run(13, "free product of C_2's: series identity and c_n comparison", [&] {
        for (int order : {8, 16, 32})
            h.expect(family_series(FreeProdCyclicP{2, 2}, 2, order) ==
                         family_series(SuperPyth{1}, 2, order),
                     "series order " + std::to_string(order));
        for (int d = 1; d <= 4; ++d) {
            GroupFamily G = FreeProdCyclicP{2, d + 1}, H = FreeProP{d};
            h.expect_eq(c_closed(G, 2, 1), c_closed(H, 2, 1) + 1, "c_1 d=" + std::to_string(d));
            auto cG = c_sequence(family_series(G, 2, 16), 2, 16);
            auto cH = c_sequence(family_series(H, 2, 16), 2, 16);
            for (int n = 2; n <= 16; ++n)
                h.expect_eq(cG[static_cast<size_t>(n - 1)], cH[static_cast<size_t>(n - 1)],
                            "c_" + std::to_string(n) + " d=" + std::to_string(d));
        }
    });

    h.run(14, "automorphism counts: D_4, U_3(F_3), C_4, C_2^2", [&] {
        h.expect_eq(automorphism_count(FiniteGroup::unipotent(3, 2)), Integer(8), "D_4");
        h.expect_eq(automorphism_count(FiniteGroup::unipotent(3, 3)), Integer(432),
                    "U_3(F_3)");
        h.expect_eq(automorphism_count(FiniteGroup::abelian({4})), Integer(2), "C_4");
        h.expect_eq(automorphism_count(FiniteGroup::abelian({2, 2})), Integer(6), "C_2^2");
    });

    h.run(15, "D_4-extension counts of Q_p for p in {2,3,5,7,11,13}", [&] {
        const long want[] = {18, 1, 0, 1, 1, 0};
        const long primes[] = {2, 3, 5, 7, 11, 13};
        for (int i = 0; i < 6; ++i)
            h.expect_eq(d4_extension_count_qp(primes[i]), Integer(want[i]),
                        "p=" + std::to_string(primes[i]));
    });

    return h.results;
}

} // namespace zfilt
