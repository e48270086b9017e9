#ifndef ZFILT_LOCALQP_HPP
#define ZFILT_LOCALQP_HPP

#include <string>
#include <utility>
#include <vector>

#include "zfilt/rational.hpp"

namespace zfilt {

/// Square class of Q_p^x, stored in F_2 coordinates:
///   odd p:  class = p^val * u^unit_x, u = smallest positive non-residue mod p
///   p = 2:  class = 2^val * (-1)^unit_x * 5^unit_y
/// The class group is (Z/2)^2 for odd p and (Z/2)^3 for p = 2.
struct SquareClass {
    long p = 2;
    int val = 0;     // valuation mod 2
    int unit_x = 0;  // u-exponent (odd p) / sign bit (p = 2)
    int unit_y = 0;  // 5-exponent (p = 2 only)

    bool is_trivial() const { return val == 0 && unit_x == 0 && unit_y == 0; }
    SquareClass times(const SquareClass& other) const;
    long representative() const;  // e.g. -10 for val=1, unit=-5 at p=2
    std::string str() const;
    bool operator==(const SquareClass& other) const = default;
};

/// All square classes: 4 for odd p ({1, u, p, up}), 8 for p = 2
/// ({1, -1, 5, -5, 2, -2, 10, -10}).
std::vector<SquareClass> square_class_reps(long p);

/// Smallest positive quadratic non-residue mod an odd prime.
long smallest_nonresidue(long p);

/// Hilbert symbol (a, b)_{Q_p} as +1 / -1.  For odd p with a = p^A u^x,
/// b = p^B u^y: (-1)^{AB(p-1)/2 + Bx + Ay}.  For p = 2 with units u, v:
/// (-1)^{eps(u)eps(v) + A omega(v) + B omega(u)}, eps(u) = (u-1)/2 and
/// omega(u) = (u^2-1)/8 mod 2.
int hilbert_symbol(const SquareClass& a, const SquareClass& b);

/// Unordered pairs {a, b} of distinct nontrivial square classes with
/// (a, b) = +1; exactly the pairs admitting a D_4-extension of Q_p with
/// intermediate field Q_p(sqrt a, sqrt b).
std::vector<std::pair<SquareClass, SquareClass>> d4_admissible_pairs(long p);

/// Number of D_4-extensions of Q_p: |admissible pairs| x (|classes| / 4),
/// the second factor counting the quadratic classes f defining distinct
/// extensions over a fixed pair.
Integer d4_extension_count_qp(long p);

} // namespace zfilt

#endif
