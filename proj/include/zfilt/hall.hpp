#ifndef ZFILT_HALL_HPP
#define ZFILT_HALL_HPP

#include <memory>
#include <string>
#include <vector>

#include "zfilt/rational.hpp"

namespace zfilt {

/// A Hall commutator over generators x_1..x_d: either a generator leaf or a
/// bracket [left, right].  Admissibility: left > right in the total order,
/// and if left = [a, b] then right >= b.
///
/// Total order: commutators of larger weight are greater; generators are
/// ordered x_1 > x_2 > ... > x_d; brackets of equal weight compare
/// lexicographically by (left, right).
class HallTerm {
public:
    static HallTerm generator(int index);
    static HallTerm bracket(HallTerm left, HallTerm right);

    bool is_generator() const { return gen_ != 0; }
    int generator_index() const { return gen_; }
    const HallTerm& left() const { return *left_; }
    const HallTerm& right() const { return *right_; }
    int weight() const { return weight_; }

    // Structural admissibility re-check of the whole tree.
    bool is_admissible() const;

    std::string str() const;  // e.g. "[[x1,x2],x2]"

    // -1 / 0 / +1 in the Hall total order.
    static int compare(const HallTerm& a, const HallTerm& b);
    bool operator<(const HallTerm& other) const { return compare(*this, other) < 0; }
    bool operator==(const HallTerm& other) const { return compare(*this, other) == 0; }

private:
    HallTerm() = default;
    int gen_ = 0;  // 1..d for leaves, 0 for brackets
    std::shared_ptr<const HallTerm> left_, right_;
    int weight_ = 1;
};

/// All Hall commutators of weight n over d generators, sorted ascending.
std::vector<HallTerm> hall_basis(int d, int n);

/// |hall_basis(d, n)|.  Enumerates for small n, otherwise uses the Witt
/// necklace formula (the two routes agreeing is itself a tested invariant).
Integer hall_count(int d, int n);

/// Basis of S_(n)/S_(n+1) for the free pro-p group of rank d:
/// writing n = p^k m with (m,p)=1, the disjoint union
/// C_m^{p^k} | C_{pm}^{p^{k-1}} | ... | C_n, as (term, p-power exponent) pairs.
std::vector<std::pair<HallTerm, Integer>> zassenhaus_basis(int d, int p, int n);

} // namespace zfilt

#endif
