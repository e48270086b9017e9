#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "zfilt/errors.hpp"
#include "zfilt/family.hpp"

using namespace zfilt;

TEST_CASE("free pro-p series is geometric in d") {
    for (int d = 0; d <= 4; ++d) {
        auto s = family_series(FreeProP{d}, 2, 10);
        CHECK(s == from_rational_function({1}, {1, -d}, 10));
    }
}

TEST_CASE("Demushkin series is independent of the relation case") {
    auto base = from_rational_function({1}, {1, -4, 1}, 12);
    CHECK(family_series(Demushkin{4, DemushkinCase::r1, 3, FExponent::of(2)}, 3, 12) == base);
    CHECK(family_series(Demushkin{4, DemushkinCase::r3, 2, FExponent::of(2)}, 2, 12) == base);
    CHECK(family_series(Demushkin{4, DemushkinCase::r4, 2, FExponent::of(3)}, 2, 12) == base);
    CHECK(family_series(Demushkin{3, DemushkinCase::r2, 2, FExponent::inf()}, 2, 12) ==
          from_rational_function({1}, {1, -3, 1}, 12));
}

TEST_CASE("cyclic free products match their printed closed forms") {
    // k copies of C_p: (1+t+...+t^{p-1})/(1-(k-1)t-...-(k-1)t^{p-1})
    auto s3 = family_series(FreeProdCyclicP{3, 3}, 3, 10);
    CHECK(s3 == from_rational_function({1, 1, 1}, {1, -2, -2}, 10));
    // C_p * free of rank e: degree-p denominator
    auto m = family_series(CyclicPFree{3, 2}, 3, 10);
    CHECK(m == from_rational_function({1, 1, 1}, {1, -2, -2, -2}, 10));
}

TEST_CASE("binary coproduct fold reproduces every product family") {
    const int N = 16;
    auto cp = [&](int p) {
        return from_rational_function(std::vector<Integer>(static_cast<size_t>(p), 1), {1}, N);
    };
    SUBCASE("k copies of C_p") {
        for (int p : {2, 3}) {
            std::vector<TruncatedSeries> factors(4, cp(p));
            CHECK(free_product_series(factors) == family_series(FreeProdCyclicP{p, 4}, p, N));
        }
    }
    SUBCASE("C_p against a free factor") {
        for (int p : {2, 3}) {
            std::vector<TruncatedSeries> factors{cp(p), family_series(FreeProP{3}, p, N)};
            CHECK(free_product_series(factors) == family_series(CyclicPFree{p, 3}, p, N));
        }
    }
    SUBCASE("Demushkin factors and a free factor") {
        std::vector<TruncatedSeries> factors{
            family_series(Demushkin{2, DemushkinCase::r3, 2, FExponent::of(2)}, 2, N),
            family_series(Demushkin{2, DemushkinCase::r3, 2, FExponent::of(2)}, 2, N),
            family_series(FreeProP{1}, 2, N)};
        CHECK(free_product_series(factors) == family_series(MixedFreeProd{{2, 2}, 1}, 2, N));
    }
    SUBCASE("fold is permutation invariant") {
        std::vector<TruncatedSeries> factors{cp(2), family_series(FreeProP{2}, 2, N),
                                             family_series(Demushkin{2, DemushkinCase::r3, 2,
                                                                     FExponent::of(2)},
                                                           2, N)};
        auto ref = free_product_series(factors);
        std::sort(factors.begin(), factors.end(),
                  [](const TruncatedSeries& a, const TruncatedSeries& b) {
                      return a.coeff(1) < b.coeff(1);
                  });
        do {
            CHECK(free_product_series(factors) == ref);
        } while (std::next_permutation(
            factors.begin(), factors.end(),
            [](const TruncatedSeries& a, const TruncatedSeries& b) {
                return a.coeff(1) < b.coeff(1);
            }));
    }
}

TEST_CASE("witt and jennings products") {
    // 1/(1-t)^2 * (1-t^2) = (1+t)/(1-t)
    auto w = witt_product({2, -1, 0, 0, 0, 0});
    CHECK(w == from_rational_function({1, 1}, {1, -1}, 6));
    // C_2 itself: c = (1, 0, ...) gives (1-t^2)/(1-t) = 1+t
    auto j = jennings_product({1, 0, 0, 0}, 2);
    CHECK(j == TruncatedSeries::polynomial({1, 1}, 4));
}

TEST_CASE("family names are distinct and stable") {
    CHECK(family_name(FreeProP{2}) != family_name(SuperPyth{2}));
    CHECK(family_name(FreeProdCyclicP{2, 2}) != family_name(CyclicPFree{2, 2}));
}

TEST_CASE("parameter validation") {
    CHECK_THROWS_AS(validate_family(FreeProP{-1}, 2), contract_error);
    CHECK_THROWS_AS(validate_family(Demushkin{1, DemushkinCase::r1, 3, FExponent::of(2)}, 3),
                    contract_error);
    // r1 requires q != 2; r2 demands an odd rank; r4 demands finite f
    CHECK_THROWS_AS(validate_family(Demushkin{2, DemushkinCase::r1, 2, FExponent::of(2)}, 2),
                    contract_error);
    CHECK_THROWS_AS(validate_family(Demushkin{4, DemushkinCase::r2, 2, FExponent::of(2)}, 2),
                    contract_error);
    CHECK_THROWS_AS(validate_family(Demushkin{4, DemushkinCase::r4, 2, FExponent::inf()}, 2),
                    contract_error);
    // the inversion-action semidirect family lives at p = 2 only
    CHECK_THROWS_AS(validate_family(SuperPyth{2}, 3), contract_error);
    CHECK_THROWS_AS(validate_family(FreeProdCyclicP{2, 2}, 3), contract_error);
    CHECK_THROWS_AS(validate_family(FreeProdCyclicP{2, 0}, 2), contract_error);
    CHECK_THROWS_AS(validate_family(MixedFreeProd{{1}, 0}, 2), contract_error);
}
