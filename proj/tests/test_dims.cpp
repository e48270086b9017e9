#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "zfilt/dims.hpp"
#include "zfilt/errors.hpp"

using namespace zfilt;

namespace {

GroupFamily demushkin_for(int d, int p) {
    if (p == 2)
        return Demushkin{d, d % 2 ? DemushkinCase::r2 : DemushkinCase::r3, 2,
                         FExponent::of(2)};
    return Demushkin{d, DemushkinCase::r1, p, FExponent::of(2)};
}

} // namespace

TEST_CASE("b, w, c for the rank-2 free pro-2 group") {
    auto P = family_series(FreeProP{2}, 2, 6);
    auto b = b_sequence(P, 6);
    for (int n = 1; n <= 6; ++n) CHECK(b[n - 1] == make_rational(pow_int(2, n), n));
    auto w = w_sequence(P, 6);
    // necklace numbers over a 2-letter alphabet: 2, 1, 2, 3, 6, 9
    const long wantw[] = {2, 1, 2, 3, 6, 9};
    for (int n = 1; n <= 6; ++n) CHECK(w[n - 1] == wantw[n - 1]);
    auto c = c_sequence(P, 2, 6);
    const long wantc[] = {2, 3, 2, 6, 6, 11};
    for (int n = 1; n <= 6; ++n) CHECK(c[n - 1] == wantc[n - 1]);
}

TEST_CASE("closed-route c_n equals the series route on every family") {
    std::vector<std::pair<GroupFamily, int>> cases = {
        {FreeProP{3}, 3},       {demushkin_for(4, 5), 5},  {demushkin_for(3, 2), 2},
        {FreeProdCyclicP{3, 3}, 3}, {SuperPyth{2}, 2},     {MixedFreeProd{{2, 3}, 2}, 3},
        {CyclicPFree{2, 2}, 2},
    };
    for (auto& [fam, p] : cases) {
        auto P = family_series(fam, p, 16);
        auto w = w_sequence(P, 16);
        auto c = c_sequence(P, p, 16);
        for (int n = 1; n <= 16; ++n) {
            CAPTURE(family_name(fam));
            CAPTURE(n);
            CHECK(w_closed(fam, p, n) == w[static_cast<size_t>(n - 1)]);
            CHECK(c_closed(fam, p, n) == c[static_cast<size_t>(n - 1)]);
        }
    }
}

TEST_CASE("power sums via Newton's identities") {
    // inverse roots of 1 - 4t + t^2 are 2 +- sqrt 3: sums 4, 14, 52, 194
    auto s = power_sums({1, -4, 1}, 4);
    CHECK(s == std::vector<Integer>{4, 14, 52, 194});
    // Lucas numbers from 1 - t - t^2
    auto l = power_sums({1, -1, -1}, 5);
    CHECK(l == std::vector<Integer>{1, 3, 4, 7, 11});
    CHECK_THROWS_AS(power_sums({2, 1}, 3), contract_error);
}

TEST_CASE("comparison principle: quotient series dominate coefficientwise") {
    // the rank-d free group surjects onto any d-generated Demushkin group, and
    // its c_n are no smaller level by level
    for (int d : {2, 4})
        for (int p : {2, 3}) {
            auto cf = c_sequence(family_series(FreeProP{d}, p, 12), p, 12);
            auto cd = c_sequence(family_series(demushkin_for(d, p), p, 12), p, 12);
            for (int n = 0; n < 12; ++n) CHECK(cf[n] >= cd[n]);
        }
}

TEST_CASE("adjoining one C_2 factor shifts w by a fixed correction") {
    // w_n(free d) - w_n(free d  *  C_2) = (-1, 1, 0, 0, ...) independently of d
    for (int d = 1; d <= 4; ++d) {
        auto wh = w_sequence(family_series(FreeProP{d}, 2, 12), 12);
        auto wg = w_sequence(family_series(FreeProdCyclicP{2, d + 1}, 2, 12), 12);
        for (int n = 1; n <= 12; ++n) {
            Integer want = n == 1 ? -1 : n == 2 ? 1 : 0;
            CHECK(wh[n - 1] - wg[n - 1] == want);
        }
    }
}

TEST_CASE("dimension table bundles the pipeline") {
    auto P = family_series(FreeProP{2}, 2, 5);
    auto t = dimension_table(P, 2, 5, FreeProP{2});
    CHECK(t.b == b_sequence(P, 5));
    CHECK(t.w == w_sequence(P, 5));
    CHECK(t.c == c_sequence(P, 2, 5));
    CHECK(t.family.has_value());
}

TEST_CASE("subgroup generator counts") {
    // Schreier: the level-n term of the free rank-d group is free of rank
    // p^{c_1+...+c_{n-1}} (d-1) + 1
    CHECK(generator_counts(FreeProP{2}, 2, 1) == 2);
    CHECK(generator_counts(FreeProP{2}, 2, 2) == 5);        // 2^2 * 1 + 1
    CHECK(generator_counts(FreeProP{2}, 2, 3) == 33);       // 2^5 * 1 + 1
    CHECK(generator_counts(demushkin_for(2, 3), 3, 2) == 2);  // d=2: stays rank 2
    CHECK(generator_counts(demushkin_for(4, 3), 3, 2) == 164);  // 3^4 * 2 + 2
    CHECK_THROWS_AS(generator_counts(SuperPyth{2}, 2, 2), contract_error);
}

TEST_CASE("invalid series are rejected with data errors") {
    // non-integral Mobius transform
    auto half = TruncatedSeries({Rational(1), make_rational(1, 2)}, 1);
    CHECK_THROWS_AS(w_sequence(half, 1), data_error);
    // negative dimension: 1/(1+t) has w_1 = -1
    CHECK_THROWS_AS(c_sequence(from_rational_function({1}, {1, 1}, 4), 2, 4), data_error);
    CHECK_THROWS_AS(b_sequence(TruncatedSeries::one(3), 5), contract_error);
    CHECK_THROWS_AS(c_closed(FreeProP{2}, 2, 0), contract_error);
}
