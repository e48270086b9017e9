#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "zfilt/errors.hpp"
#include "zfilt/hall.hpp"
#include "zfilt/poset.hpp"

using namespace zfilt;

namespace {

Integer witt_formula(int d, int n) {
    Integer s = 0;
    for (int m = 1; m <= n; ++m)
        if (n % m == 0) s += classical_mobius(n / m) * pow_int(d, static_cast<unsigned long>(m));
    return div_exact(s, n);
}

} // namespace

TEST_CASE("weight-3 basis on two generators") {
    auto basis = hall_basis(2, 3);
    REQUIRE(basis.size() == 2);
    std::set<std::string> got{basis[0].str(), basis[1].str()};
    CHECK(got == std::set<std::string>{"[[x1,x2],x1]", "[[x1,x2],x2]"});
}

TEST_CASE("low-weight bases") {
    CHECK(hall_basis(2, 1).size() == 2);
    CHECK(hall_basis(2, 2).size() == 1);
    CHECK(hall_basis(2, 2)[0].str() == "[x1,x2]");
    CHECK(hall_basis(3, 2).size() == 3);
    CHECK(hall_basis(1, 2).empty());
}

TEST_CASE("basis terms are admissible, sorted, and deduplicated") {
    for (int d : {2, 3})
        for (int n = 1; n <= 6; ++n) {
            auto basis = hall_basis(d, n);
            for (const auto& t : basis) {
                CHECK(t.is_admissible());
                CHECK(t.weight() == n);
            }
            for (size_t i = 1; i < basis.size(); ++i) CHECK(basis[i - 1] < basis[i]);
        }
}

TEST_CASE("counts agree with the necklace formula across the enumeration cutoff") {
    for (int d = 1; d <= 4; ++d)
        for (int n = 1; n <= 14; ++n) {
            CAPTURE(d);
            CAPTURE(n);
            CHECK(hall_count(d, n) == witt_formula(d, n));
        }
    // large inputs only make sense through the formula route
    CHECK(hall_count(2, 40) == witt_formula(2, 40));
}

TEST_CASE("term ordering and structure accessors") {
    auto x1 = HallTerm::generator(1), x2 = HallTerm::generator(2);
    CHECK(x2 < x1);  // later generators are smaller
    auto b = HallTerm::bracket(x1, x2);
    CHECK(x1 < b);  // weight dominates
    CHECK(b.left() == x1);
    CHECK(b.right() == x2);
    CHECK(b.weight() == 2);
    CHECK(b.is_admissible());
    CHECK_FALSE(HallTerm::bracket(x2, x1).is_admissible());
}

TEST_CASE("graded basis of the restricted setting") {
    // n = p^k m decomposes levelwise: terms of weight m, pm, ..., n with
    // p-power multiplicities p^k, p^{k-1}, ..., 1
    auto basis = zassenhaus_basis(2, 2, 4);
    REQUIRE(basis.size() == 6);
    int e4 = 0, e2 = 0, e1 = 0;
    for (auto& [term, q] : basis) {
        if (q == 4) { ++e4; CHECK(term.weight() == 1); }
        if (q == 2) { ++e2; CHECK(term.weight() == 2); }
        if (q == 1) { ++e1; CHECK(term.weight() == 4); }
    }
    CHECK(e4 == 2);
    CHECK(e2 == 1);
    CHECK(e1 == 3);
    // odd level at p = 2: single layer
    for (auto& [term, q] : zassenhaus_basis(2, 2, 5)) {
        CHECK(q == 1);
        CHECK(term.weight() == 5);
    }
}

TEST_CASE("parameter validation") {
    CHECK_THROWS_AS(hall_basis(-1, 2), contract_error);
    CHECK_THROWS_AS(hall_basis(2, 0), contract_error);
    CHECK_THROWS_AS(HallTerm::generator(0), contract_error);
    CHECK_THROWS_AS(zassenhaus_basis(2, 1, 3), contract_error);
}
