#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "zfilt/errors.hpp"
#include "zfilt/group.hpp"

using namespace zfilt;

namespace {

Subgroup join(const FiniteGroup& G, const Subgroup& A, const Subgroup& B) {
    std::vector<int> seed;
    for (int g = 0; g < G.size(); ++g)
        if (A.contains(g) || B.contains(g)) seed.push_back(g);
    return subgroup_closure(G, seed);
}

Subgroup power_subgroup(const FiniteGroup& G, const Subgroup& H, long e) {
    std::vector<int> seed;
    for (int g = 0; g < G.size(); ++g)
        if (H.contains(g)) seed.push_back(G.pow(g, e));
    return subgroup_closure(G, seed);
}

std::vector<int> order_histogram(const FiniteGroup& G) {
    std::vector<int> h(static_cast<size_t>(G.size()) + 1, 0);
    for (int g = 0; g < G.size(); ++g) ++h[static_cast<size_t>(G.element_order(g))];
    return h;
}

} // namespace

TEST_CASE("construction from permutations") {
    // S_3 from a 3-cycle and a transposition
    auto S3 = FiniteGroup::from_permutations({{1, 2, 0}, {1, 0, 2}});
    CHECK(S3.size() == 6);
    CHECK_FALSE(S3.is_abelian());
    auto hist = order_histogram(S3);
    CHECK(hist[1] == 1);
    CHECK(hist[2] == 3);
    CHECK(hist[3] == 2);
}

TEST_CASE("abelian and dihedral builders") {
    auto C12 = FiniteGroup::abelian({4, 3});
    CHECK(C12.size() == 12);
    CHECK(C12.is_abelian());
    CHECK(C12.element_order(C12.mul(C12.generators()[0], C12.generators()[1])) == 12);

    auto D4 = FiniteGroup::generalized_dihedral({4});
    CHECK(D4.size() == 8);
    CHECK_FALSE(D4.is_abelian());
    CHECK(order_histogram(D4)[2] == 5);
}

TEST_CASE("unipotent matrix groups") {
    auto U32 = FiniteGroup::unipotent(3, 2);
    CHECK(U32.size() == 8);
    // U_3(F_2) is dihedral of order 8: same order statistics and |Aut|
    auto D4 = FiniteGroup::generalized_dihedral({4});
    CHECK(order_histogram(U32) == order_histogram(D4));
    CHECK(automorphism_count(U32) == automorphism_count(D4));

    CHECK(FiniteGroup::unipotent(3, 3).size() == 27);
    CHECK(FiniteGroup::unipotent(4, 2).size() == 64);
    CHECK_THROWS_AS(FiniteGroup::unipotent(6, 2), contract_error);
}

TEST_CASE("group axioms are validated") {
    // identity row broken: 2x2 table that is not a group
    CHECK_THROWS_AS(FiniteGroup(2, {0, 1, 1, 1}), contract_error);
    // associativity broken on a 3-element magma with valid identity
    CHECK_THROWS_AS(FiniteGroup(3, {0, 1, 2, 1, 0, 1, 2, 1, 0}), contract_error);
    // corrupt one entry of a valid C_4 table
    auto C4 = FiniteGroup::abelian({4});
    std::vector<uint16_t> table;
    for (int a = 0; a < 4; ++a)
        for (int b = 0; b < 4; ++b)
            table.push_back(static_cast<uint16_t>(C4.mul(a, b)));
    table[15] = 1;
    CHECK_THROWS_AS(FiniteGroup(4, table), contract_error);
}

TEST_CASE("subgroup lattices") {
    CHECK(subgroup_lattice(FiniteGroup::generalized_dihedral({4})).subgroups.size() == 10);
    CHECK(subgroup_lattice(FiniteGroup::abelian({2})).subgroups.size() == 2);
    CHECK(subgroup_lattice(FiniteGroup::abelian({2, 2})).subgroups.size() == 5);
    CHECK(subgroup_lattice(FiniteGroup::abelian({3, 3})).subgroups.size() == 6);

    auto G = FiniteGroup::unipotent(3, 3);
    auto lat = subgroup_lattice(G);
    // orders divide |G| and the lattice is sorted by order
    for (size_t i = 1; i < lat.subgroups.size(); ++i)
        CHECK(lat.subgroups[i - 1].order() <= lat.subgroups[i].order());
    CHECK(lat.subgroups.front().order() == 1);
    CHECK(lat.subgroups.back().order() == G.size());
}

TEST_CASE("Frattini subgroups") {
    CHECK(frattini(FiniteGroup::abelian({8}), 2).order() == 4);
    CHECK(frattini(FiniteGroup::abelian({2, 2, 2}), 2).order() == 1);
    CHECK(frattini(FiniteGroup::generalized_dihedral({4}), 2).order() == 2);
    CHECK(frattini(FiniteGroup::unipotent(3, 3), 3).order() == 3);
}

TEST_CASE("filtration chains and their dimensions") {
    auto D4 = FiniteGroup::generalized_dihedral({4});
    auto chain = zassenhaus_chain(D4, 2, 4);
    auto dims = chain_dimensions(D4, chain, 2);
    CHECK(dims == std::vector<int>{2, 1, 0});

    auto U43 = FiniteGroup::unipotent(4, 3);
    auto c3 = chain_dimensions(U43, zassenhaus_chain(U43, 3, 4), 3);
    CHECK(c3 == std::vector<int>{3, 2, 1});

    auto lc = lower_central_chain(D4);
    CHECK(lc.front().order() == 8);
    CHECK(lc.back().order() == 1);
    CHECK(lc.size() == 3);  // G > <r^2> > 1
}

TEST_CASE("Zassenhaus terms from the lower central series") {
    // G_(n) is generated by the p^j-th powers of the lower central terms G_i
    // with i p^j >= n
    for (int p : {2, 3}) {
        auto G = FiniteGroup::unipotent(4, p);
        auto zc = zassenhaus_chain(G, p, 6);
        auto lc = lower_central_chain(G);
        for (int n = 1; n <= 6; ++n) {
            Subgroup acc;
            acc.members.assign(static_cast<size_t>(G.size()), false);
            acc.members[static_cast<size_t>(G.identity())] = true;
            for (size_t i = 1; i <= lc.size(); ++i) {
                const Subgroup& Gi = lc[std::min(i, lc.size()) - 1];
                long pj = 1;
                while (static_cast<long>(i) * pj < n) pj *= p;
                acc = join(G, acc, power_subgroup(G, Gi, pj));
            }
            CHECK(zc[static_cast<size_t>(n - 1)] == acc);
        }
    }
}

TEST_CASE("automorphism counts") {
    CHECK(automorphism_count(FiniteGroup::abelian({8})) == 4);
    CHECK(automorphism_count(FiniteGroup::abelian({3, 3})) == 48);  // |GL_2(F_3)|
    CHECK(automorphism_count(FiniteGroup::from_permutations({{1, 2, 0}, {1, 0, 2}})) == 6);
    CHECK(automorphism_count(FiniteGroup::unipotent(3, 3)) == 432);
}

TEST_CASE("relation words and solution counts") {
    auto w = RelationWord::concat(
        {RelationWord::gen(0, 2),
         RelationWord::commutator(RelationWord::gen(1), RelationWord::gen(2))});
    CHECK(w.str() == "x1^2*[x2,x3]");
    CHECK(w.arity() == 3);

    auto C2 = FiniteGroup::abelian({2});
    CHECK(count_word_solutions(C2, RelationWord::gen(0, 2)) == 2);

    // commuting pairs in D_4: sum over g of |centralizer| = 8 * 5 classes
    auto D4 = FiniteGroup::generalized_dihedral({4});
    auto comm = RelationWord::commutator(RelationWord::gen(0), RelationWord::gen(1));
    CHECK(count_word_solutions(D4, comm) == 40);
    // the count is an isomorphism invariant: same word on U_3(F_2)
    CHECK(count_word_solutions(FiniteGroup::unipotent(3, 2), comm) == 40);

    // eval against an explicit assignment
    auto r = D4.generators()[1];  // any non-central generator works for arity
    std::vector<int> assign{r, D4.identity(), D4.identity()};
    CHECK(w.eval(D4, assign) == D4.pow(r, 2));
}
