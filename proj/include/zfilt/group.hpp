#ifndef ZFILT_GROUP_HPP
#define ZFILT_GROUP_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "zfilt/poset.hpp"
#include "zfilt/rational.hpp"

namespace zfilt {

/// Explicit finite group: multiplication table plus generator indices.
/// Group axioms are validated on construction; instances are immutable.
class FiniteGroup {
public:
    FiniteGroup(int size, std::vector<uint16_t> mult_table,
                std::vector<int> generators = {},
                std::vector<std::string> labels = {});

    int size() const { return size_; }
    int mul(int a, int b) const {
        return mult_[static_cast<size_t>(a) * static_cast<size_t>(size_) +
                     static_cast<size_t>(b)];
    }
    int identity() const { return identity_; }
    int inv(int a) const { return inv_[static_cast<size_t>(a)]; }
    int pow(int a, long e) const;
    int commutator(int a, int b) const;  // a^-1 b^-1 a b
    int element_order(int a) const;
    bool is_abelian() const;

    const std::vector<int>& generators() const { return generators_; }
    const std::string& label(int a) const { return labels_[static_cast<size_t>(a)]; }

    /// Closure of the permutations under composition; canonical indexing by
    /// discovery order (identity first).  Throws resource_error above 2^14.
    static FiniteGroup from_permutations(const std::vector<std::vector<int>>& gens);

    /// Direct product of cyclic groups of the given orders.
    static FiniteGroup abelian(const std::vector<int>& orders);

    /// Generalized dihedral group A x| C_2 with inversion action,
    /// A = direct product of cyclic groups of the given orders.
    /// generalized_dihedral({4}) is D_4; generalized_dihedral({2^K,...,2^K})
    /// is the finite quotient (Z/2^K)^d x| C_2 of the superpythagorean group.
    static FiniteGroup generalized_dihedral(const std::vector<int>& orders);

    /// Upper-triangular unipotent n x n matrices over F_p, 2 <= n <= 5,
    /// with the superdiagonal elementary matrices as generators.
    static FiniteGroup unipotent(int n, int p);

private:
    int size_;
    std::vector<uint16_t> mult_;
    int identity_;
    std::vector<uint16_t> inv_;
    std::vector<int> generators_;
    std::vector<std::string> labels_;
};

/// Subgroup of a parent FiniteGroup as a member bitmask.
struct Subgroup {
    std::vector<bool> members;

    int order() const;
    bool contains(int g) const { return members[static_cast<size_t>(g)]; }
    bool operator==(const Subgroup& other) const = default;
    bool operator<(const Subgroup& other) const { return members < other.members; }
};

/// Smallest subgroup containing the seed elements.
Subgroup subgroup_closure(const FiniteGroup& G, const std::vector<int>& seed);

/// Subgroup as a standalone group (elements re-indexed in member order).
FiniteGroup subgroup_as_group(const FiniteGroup& G, const Subgroup& H);

struct SubgroupLattice {
    std::vector<Subgroup> subgroups;  // sorted; index 0 trivial, last = G
    FinitePoset order;                // inclusion
};

/// All subgroups, ordered by inclusion.  Budget: |G| <= 512.
SubgroupLattice subgroup_lattice(const FiniteGroup& G);

/// Mobius function mu_G on the subgroup lattice, aligned with lat.subgroups:
/// mu_G(G) = 1, sum_{H<=K} mu_G(K) = 0 for H < G.
std::vector<Integer> subgroup_mobius(const SubgroupLattice& lat);

/// Frattini subgroup G^p[G,G] of a p-group.
Subgroup frattini(const FiniteGroup& G, int p);

/// Zassenhaus filtration G_(1) >= G_(2) >= ... >= G_(max_n), where
/// G_(n) = G_(ceil(n/p))^p * prod_{i+j=n} [G_(i), G_(j)].
std::vector<Subgroup> zassenhaus_chain(const FiniteGroup& G, int p, int max_n);

/// Per-level dimensions log_p [G_(n) : G_(n+1)] of a computed chain.
std::vector<int> chain_dimensions(const FiniteGroup& G, const std::vector<Subgroup>& chain,
                                  int p);

/// Descending central series G_1 = G, G_{i+1} = [G_i, G], until stable.
/// The returned chain ends with the stable (for nilpotent G, trivial) term.
std::vector<Subgroup> lower_central_chain(const FiniteGroup& G);

/// |Aut(G)| by enumerating generator-image tuples over a minimal generating
/// tuple.  Budget: |G| <= 1024 and a generating set of size <= 3.
Integer automorphism_count(const FiniteGroup& G);

/// Abstract relation word over symbols x_0..x_{arity-1}.
struct RelationWord {
    enum class Kind { Gen, Commutator, Concat };
    Kind kind = Kind::Gen;
    int symbol = 0;
    long exponent = 1;
    std::vector<RelationWord> children;

    static RelationWord gen(int symbol, long exponent = 1);
    static RelationWord commutator(RelationWord a, RelationWord b);
    static RelationWord concat(std::vector<RelationWord> parts);

    int arity() const;  // number of distinct symbols = max symbol index + 1
    int eval(const FiniteGroup& G, const std::vector<int>& assignment) const;
    std::string str() const;
};

/// |{(g_1,...,g_k) in G^k : word(g_1,...,g_k) = 1}|.
/// Budget: |G|^k <= 2^26.
Integer count_word_solutions(const FiniteGroup& G, const RelationWord& word);

} // namespace zfilt

#endif
