#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "zfilt/errors.hpp"
#include "zfilt/extcount.hpp"

using namespace zfilt;

namespace {

LocalFieldParams params(int p, int n, int q, DemushkinCase c,
                        FExponent f = FExponent::of(2)) {
    LocalFieldParams out;
    out.p = p;
    out.n = n;
    out.q = q;
    out.f = f;
    out.relation_case = c;
    return out;
}

LocalFieldParams free_params(int p, int n) {
    LocalFieldParams out;
    out.p = p;
    out.n = n;
    out.q = 0;
    out.relation_case.reset();
    return out;
}

long binom(int n, int k) {
    long r = 1;
    for (int i = 0; i < k; ++i) r = r * (n - i) / (i + 1);
    return r;
}

} // namespace

TEST_CASE("defining relation words") {
    CHECK(demushkin_relation(params(2, 1, 2, DemushkinCase::r2)).str() ==
          "x1^2*x2^4*[x2,x3]");
    CHECK(demushkin_relation(params(3, 2, 3, DemushkinCase::r1)).str() ==
          "x1^3*[x1,x2]*[x3,x4]");
    CHECK(demushkin_relation(params(2, 2, 2, DemushkinCase::r3)).str() ==
          "x1^6*[x1,x2]*[x3,x4]");
    CHECK(demushkin_relation(params(2, 2, 2, DemushkinCase::r3, FExponent::inf())).str() ==
          "x1^2*[x1,x2]*[x3,x4]");
    CHECK(demushkin_relation(params(2, 2, 2, DemushkinCase::r4, FExponent::of(3))).str() ==
          "x1^2*[x1,x2]*x3^8*[x3,x4]");
    CHECK_THROWS_AS(demushkin_relation(free_params(2, 1)), contract_error);
}

TEST_CASE("parameter validation") {
    // r1 needs q != 2 and even rank
    CHECK_THROWS_AS(validate_local_params(params(2, 1, 2, DemushkinCase::r1)),
                    contract_error);
    CHECK_THROWS_AS(validate_local_params(params(3, 1, 3, DemushkinCase::r1)),
                    contract_error);
    // r2 needs q = 2 and odd rank
    CHECK_THROWS_AS(validate_local_params(params(2, 2, 2, DemushkinCase::r2)),
                    contract_error);
    CHECK_THROWS_AS(validate_local_params(params(3, 1, 3, DemushkinCase::r2)),
                    contract_error);
    // r4 needs finite f
    CHECK_THROWS_AS(
        validate_local_params(params(2, 2, 2, DemushkinCase::r4, FExponent::inf())),
        contract_error);
    // q must be 0 in the free case and a p-power otherwise
    LocalFieldParams bad = free_params(2, 1);
    bad.q = 2;
    CHECK_THROWS_AS(validate_local_params(bad), contract_error);
    CHECK_THROWS_AS(validate_local_params(params(2, 2, 6, DemushkinCase::r3)),
                    contract_error);
}

TEST_CASE("lattice-sum counts for small targets over Q_2") {
    auto D4 = FiniteGroup::generalized_dihedral({4});
    CHECK(nu_yamagishi(params(2, 1, 2, DemushkinCase::r2), D4) == 18);
    CHECK(nu_yamagishi(params(2, 3, 2, DemushkinCase::r2), D4) == 1800);
    // abelian targets
    CHECK(nu_yamagishi(params(2, 1, 2, DemushkinCase::r2), FiniteGroup::abelian({2})) == 7);
    // C_4: (alpha(C_4) - alpha(C_2)) / |Aut C_4| = (32 - 8) / 2
    CHECK(nu_yamagishi(params(2, 1, 2, DemushkinCase::r2), FiniteGroup::abelian({4})) == 12);
}

TEST_CASE("free-case lattice sum agrees with the closed product formula") {
    for (int n : {1, 2}) {
        for (auto orders : std::vector<std::vector<int>>{{2}, {2, 2}, {4}, {3}}) {
            int p = orders[0] % 2 == 0 ? 2 : 3;
            auto G = FiniteGroup::abelian(orders);
            CHECK(nu_yamagishi(free_params(p, n), G) == nu_shafarevich(p, n, G));
        }
        auto D4 = FiniteGroup::generalized_dihedral({4});
        CHECK(nu_yamagishi(free_params(2, n), D4) == nu_shafarevich(2, n, D4));
    }
}

TEST_CASE("closed product formula values") {
    CHECK(nu_shafarevich(2, 1, FiniteGroup::abelian({2, 2})) == 1);
    CHECK(nu_shafarevich(2, 1, FiniteGroup::abelian({2})) == 3);   // quadratic extensions
    CHECK(nu_shafarevich(3, 1, FiniteGroup::abelian({3})) == 4);
    CHECK(nu_shafarevich(2, 2, FiniteGroup::abelian({2})) == 7);
}

TEST_CASE("commuting independent pair counts") {
    CHECK(cp_pair_count(3, 4, false) == 1920);
    CHECK(cp_pair_count(2, 3, true) == 18);
    CHECK(cp_pair_count(2, 4, false) == 90);
    CHECK(cp_pair_count(2, 4, true) == cp_pair_count_bruteforce(2, 4, {1, 0, 0, 0}));
    CHECK_THROWS_AS(cp_pair_count(2, 2, false), contract_error);
    CHECK_THROWS_AS(cp_pair_count(3, 4, true), contract_error);
    CHECK_THROWS_AS(cp_pair_count_bruteforce(2, 3, {0, 0, 0}), contract_error);
    CHECK_THROWS_AS(cp_pair_count_bruteforce(3, 4, {1, 0, 0, 0}), contract_error);
}

TEST_CASE("Heisenberg-target counts") {
    CHECK(nu_u3(2, 1, 2) == 18);
    CHECK(nu_u3(2, 3, 2) == 1800);
    CHECK(nu_u3(2, 2, 4) == 180);
    CHECK(nu_u3(3, 2, 3) == 360);
    CHECK(nu_u3(5, 2, 5) == 3900);  // 5^2 (5^4 - 1)(5^2 - 1) / ((5^2 - 1)(5 - 1))
    CHECK_THROWS_AS(nu_u3(3, 1, 3), contract_error);  // odd degree cannot carry zeta_3
    CHECK_THROWS_AS(nu_u3(2, 1, 4), contract_error);
    CHECK_THROWS_AS(nu_u3(3, 2, 2), contract_error);  // q must be a power of p
}

TEST_CASE("rigid-field counts") {
    CHECK(sap_pair_count(2) == 2);
    CHECK(sap_pair_count(3) == 12);
    const long want[] = {1, 12, 100, 720, 4816, 30912, 193600};
    for (int n = 2; n <= 8; ++n) {
        CHECK(sap_d4_count(n) == want[n - 2]);
        // inclusion-exclusion identity for the pair count
        Integer s = 0;
        for (int k = 2; k <= n; ++k)
            s += binom(n, k) * (pow_int(2, static_cast<unsigned long>(k)) - 2);
        CHECK(sap_pair_count(n) == s);
    }
    CHECK_THROWS_AS(sap_pair_count(1), contract_error);
}
