#include "zfilt/extcount.hpp"

#include <algorithm>

#include "zfilt/errors.hpp"

namespace zfilt {

namespace {

bool is_p_power(int q, int p) {
    if (q < 1) return false;
    while (q % p == 0) q /= p;
    return q == 1;
}

long two_to(const FExponent& f) {
    if (f.infinite) return 0;  // convention p^inf = 0
    if (f.value < 0 || f.value > 62) throw contract_error("f out of range");
    return 1L << f.value;
}

Integer aut_u3(int p) {
    if (p == 2) return 8;
    Integer P = p;
    return P * P * P * (P * P - 1) * (P - 1);
}

} // namespace

void validate_local_params(const LocalFieldParams& params) {
    if (params.p < 2) throw contract_error("p must be at least 2");
    if (params.n < 1) throw contract_error("degree n must be at least 1");
    if (!params.f.infinite && params.f.value < 2)
        throw contract_error("f must be >= 2 or infinite");
    const int d = params.rank();
    if (params.is_free()) {
        if (params.q != 0) throw contract_error("free case requires q = 0");
        return;
    }
    switch (*params.relation_case) {
        case DemushkinCase::r1:
            if (params.q == 2 || !is_p_power(params.q, params.p) || params.q < 2)
                throw contract_error("case r1 requires q != 2, a p-power");
            if (d % 2 != 0) throw contract_error("case r1 requires n + 2 even");
            break;
        case DemushkinCase::r2:
            if (params.q != 2 || params.p != 2) throw contract_error("case r2 requires q = 2");
            if (d % 2 == 0) throw contract_error("case r2 requires n + 2 odd");
            break;
        case DemushkinCase::r3:
            if (params.q != 2 || params.p != 2) throw contract_error("case r3 requires q = 2");
            if (d % 2 != 0) throw contract_error("case r3 requires n + 2 even");
            break;
        case DemushkinCase::r4:
            if (params.q != 2 || params.p != 2) throw contract_error("case r4 requires q = 2");
            if (d % 2 != 0) throw contract_error("case r4 requires n + 2 even");
            if (params.f.infinite) throw contract_error("case r4 requires finite f");
            break;
    }
}

RelationWord demushkin_relation(const LocalFieldParams& params) {
    validate_local_params(params);
    if (params.is_free()) throw contract_error("the free case has no defining relation");
    const int d = params.rank();
    std::vector<RelationWord> parts;
    auto brackets_from = [&](int first) {  // [x_first,x_{first+1}][x_{first+2},...]...
        for (int i = first; i + 1 < d; i += 2)
            parts.push_back(
                RelationWord::commutator(RelationWord::gen(i), RelationWord::gen(i + 1)));
    };
    switch (*params.relation_case) {
        case DemushkinCase::r1:
            parts.push_back(RelationWord::gen(0, params.q));
            brackets_from(0);
            break;
        case DemushkinCase::r2:
            parts.push_back(RelationWord::gen(0, 2));
            parts.push_back(RelationWord::gen(1, two_to(params.f)));
            brackets_from(1);
            break;
        case DemushkinCase::r3:
            parts.push_back(RelationWord::gen(0, 2 + two_to(params.f)));
            brackets_from(0);
            break;
        case DemushkinCase::r4:
            parts.push_back(RelationWord::gen(0, 2));
            parts.push_back(
                RelationWord::commutator(RelationWord::gen(0), RelationWord::gen(1)));
            parts.push_back(RelationWord::gen(2, two_to(params.f)));
            brackets_from(2);
            break;
    }
    // Make sure every one of the d symbols appears, so arity() is d.
    RelationWord word = RelationWord::concat(std::move(parts));
    if (word.arity() != d) throw data_error("relation word misses symbols");
    return word;
}

Integer nu_yamagishi(const LocalFieldParams& params, const FiniteGroup& G) {
    validate_local_params(params);
    SubgroupLattice lat = subgroup_lattice(G);
    std::vector<Integer> mu = subgroup_mobius(lat);
    std::optional<RelationWord> word;
    if (!params.is_free()) word = demushkin_relation(params);
    const unsigned long np1 = static_cast<unsigned long>(params.n + 1);

    Integer total = 0;
    for (size_t i = 0; i < lat.subgroups.size(); ++i) {
        if (mu[i] == 0) continue;  // only H containing Phi(G) contribute
        const Subgroup& H = lat.subgroups[i];
        Integer alpha;
        if (params.is_free()) {
            alpha = pow_int(H.order(), np1);
        } else {
            FiniteGroup Hg = subgroup_as_group(G, H);
            if (Hg.is_abelian()) {
                long torsion = 0;
                for (int g = 0; g < Hg.size(); ++g)
                    if (Hg.pow(g, params.q) == Hg.identity()) ++torsion;
                alpha = pow_int(H.order(), np1) * torsion;
            } else {
                alpha = count_word_solutions(Hg, *word);
            }
        }
        total += mu[i] * alpha;
    }
    Integer nu = div_exact(total, automorphism_count(G));
    if (nu < 0) throw data_error("negative extension count");
    return nu;
}

Integer nu_shafarevich(int p, int n, const FiniteGroup& G) {
    if (p < 2) throw contract_error("p must be at least 2");
    if (n < 1) throw contract_error("degree n must be at least 1");
    Subgroup Phi = frattini(G, p);
    int index = G.size() / Phi.order(), d = 0;
    if (G.size() % Phi.order() != 0) throw data_error("Frattini index not integral");
    while (index % p == 0) {
        index /= p;
        ++d;
    }
    if (index != 1) throw contract_error("group is not a p-group");
    Integer result = pow_int(Phi.order(), static_cast<unsigned long>(n + 1));
    for (int i = 0; i < d; ++i)
        result *= pow_int(p, static_cast<unsigned long>(n + 1)) -
                  pow_int(p, static_cast<unsigned long>(i));
    return div_exact(result, automorphism_count(G));
}

Integer cp_pair_count(int p, int d, bool q_is_2) {
    if (d < 3) throw contract_error("dimension must be at least 3");
    if (p < 2) throw contract_error("p must be at least 2");
    if (q_is_2) {
        if (p != 2) throw contract_error("q = 2 requires p = 2");
        Integer h = pow_int(2, static_cast<unsigned long>(d - 1));
        return (h - 1) * (h - 2) + h * (h - 1);
    }
    return (pow_int(p, static_cast<unsigned long>(d)) - 1) *
           (pow_int(p, static_cast<unsigned long>(d - 1)) - p);
}

Integer cp_pair_count_bruteforce(int p, int d, const std::vector<int>& diagonal) {
    if (d < 3) throw contract_error("dimension must be at least 3");
    if (p < 2) throw contract_error("p must be at least 2");
    if (diagonal.size() != static_cast<size_t>(d))
        throw contract_error("diagonal has wrong length");
    long size = 1;
    for (int i = 0; i < d; ++i) {
        size *= p;
        if (size > (1 << 16)) throw resource_error("pair enumeration budget is p^d <= 2^16");
    }
    for (int v : diagonal) {
        if (v < 0 || v >= p) throw contract_error("diagonal entry out of range");
        if (v != 0 && p != 2)
            throw contract_error("skew-symmetric forms have zero diagonal unless p = 2");
    }
    // Gram matrix: requested diagonal + symplectic blocks on consecutive
    // coordinates, skipping coordinate 0 when d is odd.
    std::vector<int> B(static_cast<size_t>(d) * static_cast<size_t>(d), 0);
    for (int i = 0; i < d; ++i)
        B[static_cast<size_t>(i * d + i)] = diagonal[static_cast<size_t>(i)];
    for (int i = d % 2; i + 1 < d; i += 2) {
        B[static_cast<size_t>(i * d + (i + 1))] = 1;
        B[static_cast<size_t>((i + 1) * d + i)] = p - 1;
    }
    // Non-degeneracy: full rank over F_p.
    {
        std::vector<int> M = B;
        int rank = 0;
        for (int col = 0; col < d && rank < d; ++col) {
            int pivot = -1;
            for (int row = rank; row < d; ++row)
                if (M[static_cast<size_t>(row * d + col)] % p != 0) {
                    pivot = row;
                    break;
                }
            if (pivot < 0) continue;
            for (int j = 0; j < d; ++j)
                std::swap(M[static_cast<size_t>(rank * d + j)],
                          M[static_cast<size_t>(pivot * d + j)]);
            int inv = 1, a = M[static_cast<size_t>(rank * d + col)] % p;
            for (int t = 1; t < p; ++t)
                if (a * t % p == 1) inv = t;
            for (int row = rank + 1; row < d; ++row) {
                int factor = M[static_cast<size_t>(row * d + col)] % p * inv % p;
                for (int j = 0; j < d; ++j)
                    M[static_cast<size_t>(row * d + j)] =
                        ((M[static_cast<size_t>(row * d + j)] -
                          factor * M[static_cast<size_t>(rank * d + j)]) %
                             p +
                         p) %
                        p;
            }
            ++rank;
        }
        if (rank < d) throw contract_error("form is degenerate for this (p, d, diagonal)");
    }
    auto decode = [&](long idx, std::vector<int>& v) {
        for (int i = 0; i < d; ++i) {
            v[static_cast<size_t>(i)] = static_cast<int>(idx % p);
            idx /= p;
        }
    };
    Integer count = 0;
    std::vector<int> x(static_cast<size_t>(d)), y(static_cast<size_t>(d)),
        By(static_cast<size_t>(d));
    for (long yi = 1; yi < size; ++yi) {
        decode(yi, y);
        for (int i = 0; i < d; ++i) {
            int s = 0;
            for (int j = 0; j < d; ++j)
                s += B[static_cast<size_t>(i * d + j)] * y[static_cast<size_t>(j)];
            By[static_cast<size_t>(i)] = s % p;
        }
        for (long xi = 1; xi < size; ++xi) {
            decode(xi, x);
            int s = 0;
            for (int i = 0; i < d; ++i)
                s += x[static_cast<size_t>(i)] * By[static_cast<size_t>(i)];
            if (s % p != 0) continue;
            // independence: y must not be a scalar multiple of x
            int lead = 0;
            while (x[static_cast<size_t>(lead)] == 0) ++lead;
            int lambda = -1;
            for (int t = 0; t < p; ++t)
                if (t * x[static_cast<size_t>(lead)] % p == y[static_cast<size_t>(lead)])
                    lambda = t;
            bool dependent = true;
            for (int i = 0; i < d; ++i)
                if (lambda * x[static_cast<size_t>(i)] % p != y[static_cast<size_t>(i)]) {
                    dependent = false;
                    break;
                }
            if (!dependent) ++count;
        }
    }
    return count;
}

Integer nu_u3(int p, int n, int q) {
    if (p < 2) throw contract_error("p must be at least 2");
    if (n < 1) throw contract_error("degree n must be at least 1");
    if (q < p || !is_p_power(q, p))
        throw contract_error("q must be a p-power with q >= p (zeta_p in K)");
    if (q != 2 && n % 2 != 0)
        throw contract_error("q != 2 requires even degree n");
    Integer value;
    if (p > 2) {
        Integer P = p;
        value = div_exact(pow_int(p, static_cast<unsigned long>(n)) *
                              (pow_int(p, static_cast<unsigned long>(n + 2)) - 1) *
                              (pow_int(p, static_cast<unsigned long>(n)) - 1),
                          (P * P - 1) * (P - 1));
    } else if (q > 2) {
        value = pow_int(2, static_cast<unsigned long>(n)) *
                (pow_int(2, static_cast<unsigned long>(n)) - 1) *
                (pow_int(2, static_cast<unsigned long>(n + 2)) - 1);
    } else {
        Integer m = pow_int(2, static_cast<unsigned long>(n + 1)) - 1;
        value = pow_int(2, static_cast<unsigned long>(n)) * m * m;
    }
    // Independent route: surjections to U_3(F_p) from cup-product pairs.
    Integer via_pairs = div_exact(
        cp_pair_count(p, n + 2, q == 2) * pow_int(p, static_cast<unsigned long>(n + 2)),
        aut_u3(p));
    if (via_pairs != value) throw data_error("U_3 count cross-check failed");
    return value;
}

Integer sap_pair_count(int n) {
    if (n < 2) throw contract_error("n must be at least 2");
    return pow_int(3, static_cast<unsigned long>(n)) -
           pow_int(2, static_cast<unsigned long>(n + 1)) + 1;
}

Integer sap_d4_count(int n) {
    if (n < 2) throw contract_error("n must be at least 2");
    return div_exact(sap_pair_count(n), 2) * pow_int(2, static_cast<unsigned long>(n - 2));
}

} // namespace zfilt
