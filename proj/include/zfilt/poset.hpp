#ifndef ZFILT_POSET_HPP
#define ZFILT_POSET_HPP

#include <vector>

#include "zfilt/rational.hpp"

namespace zfilt {

/// Finite poset on elements 0..size-1 with a dense order relation.
/// Reflexivity, antisymmetry and transitivity are validated on construction.
class FinitePoset {
public:
    FinitePoset(int size, std::vector<bool> leq_matrix);

    int size() const { return size_; }
    bool leq(int x, int y) const {
        return leq_[static_cast<size_t>(x) * static_cast<size_t>(size_) +
                    static_cast<size_t>(y)];
    }

private:
    int size_;
    std::vector<bool> leq_;  // row-major size x size
};

/// Full Mobius table mu(x,y): mu(x,x)=1, mu(x,y) = -sum_{x<=z<y} mu(x,z).
/// Entries with x !<= y are 0.  The delta identity is re-checked on every pair.
std::vector<std::vector<Integer>> mobius_table(const FinitePoset& P);

/// Classical Mobius function on positive integers.
int classical_mobius(long n);

/// Gaussian binomial (n,k)_q: the number of k-dimensional subspaces of F_q^n.
/// Returns 0 when k > n or k < 0.
Integer gaussian_binomial(int n, int k, const Integer& q);

} // namespace zfilt

#endif
