#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "zfilt/errors.hpp"
#include "zfilt/series.hpp"

using namespace zfilt;

TEST_CASE("geometric series expansion") {
    auto s = from_rational_function({1}, {1, -1}, 8);
    for (int n = 0; n <= 8; ++n) CHECK(s.coeff(n) == 1);
}

TEST_CASE("rational function with nontrivial numerator") {
    // (1+t)/(1-t) = 1 + 2t + 2t^2 + ...
    auto s = from_rational_function({1, 1}, {1, -1}, 6);
    CHECK(s.coeff(0) == 1);
    for (int n = 1; n <= 6; ++n) CHECK(s.coeff(n) == 2);
}

TEST_CASE("multiply by inverse gives one") {
    auto s = from_rational_function({1, 2, 3}, {1, -1, 0, 5}, 12);
    CHECK(s.multiply(s.inverse()) == TruncatedSeries::one(12));
}

TEST_CASE("log of 1/(1-t) is sum t^n/n") {
    auto l = from_rational_function({1}, {1, -1}, 10).log();
    CHECK(l.coeff(0) == 0);
    for (int n = 1; n <= 10; ++n) CHECK(l.coeff(n) == make_rational(1, n));
}

TEST_CASE("log turns products into sums") {
    auto a = from_rational_function({1, 3}, {1, -2}, 9);
    auto b = from_rational_function({1}, {1, -1, -1}, 9);
    CHECK(a.multiply(b).log() == a.log().add(b.log()));
}

TEST_CASE("pow matches the binomial theorem") {
    auto s = TruncatedSeries::polynomial({1, 1}, 6).pow(5);
    const long binom[] = {1, 5, 10, 10, 5, 1, 0};
    for (int n = 0; n <= 6; ++n) CHECK(s.coeff(n) == binom[n]);
}

TEST_CASE("negative pow inverts") {
    auto s = from_rational_function({1, 1}, {1, -3}, 7);
    CHECK(s.pow(-2) == s.inverse().pow(2));
    CHECK(s.pow(0) == TruncatedSeries::one(7));
}

TEST_CASE("truncate shortens and preserves coefficients") {
    auto s = from_rational_function({1}, {1, -2}, 10);
    auto t = s.truncate(4);
    CHECK(t.order() == 4);
    for (int n = 0; n <= 4; ++n) CHECK(t.coeff(n) == s.coeff(n));
    CHECK_THROWS_AS(t.truncate(5), contract_error);
}

TEST_CASE("error contracts") {
    auto s = TruncatedSeries::polynomial({0, 1}, 5);
    CHECK_THROWS_AS(s.inverse(), invertibility_error);
    CHECK_THROWS_AS(TruncatedSeries::polynomial({2, 1}, 5).log(), contract_error);
    auto a = TruncatedSeries::one(5), b = TruncatedSeries::one(6);
    CHECK_THROWS_AS(a.add(b), contract_error);
    CHECK_THROWS_AS(a.multiply(b), contract_error);
    CHECK_THROWS_AS(from_rational_function({1}, {0, 1}, 5), invertibility_error);
    CHECK_THROWS_AS(TruncatedSeries({Rational(1)}, 5), contract_error);
}

TEST_CASE("str renders a readable polynomial") {
    auto s = TruncatedSeries::polynomial({1, 2, 0, -1}, 3);
    CHECK(s.str().find("2") != std::string::npos);
    CHECK(s.str("u").find("u") != std::string::npos);
}
