#ifndef ZFILT_EXTCOUNT_HPP
#define ZFILT_EXTCOUNT_HPP

#include <optional>
#include <vector>

#include "zfilt/family.hpp"
#include "zfilt/group.hpp"
#include "zfilt/rational.hpp"

namespace zfilt {

/// Invariants of a p-adic field K of degree n over Q_p, as far as the Galois
/// group of its maximal p-extension is concerned: the maximal p-power q with
/// zeta_q in K (q = 0 when zeta_p is not in K, the "free" case), the relation
/// case of the one-relator presentation, and its f parameter where applicable.
struct LocalFieldParams {
    int p = 2;
    int n = 1;  // [K : Q_p]
    int q = 2;  // 0 <=> zeta_p not in K (free case)
    FExponent f = FExponent::of(2);
    std::optional<DemushkinCase> relation_case;  // nullopt <=> free

    bool is_free() const { return !relation_case.has_value(); }
    int rank() const { return n + 2; }  // generator count d in the one-relator cases
};

/// Case constraints: r1 needs q != 2 (a p-power) and d = n+2 even;
/// r2 needs q = 2 and d odd; r3/r4 need q = 2 and d even; r4 needs finite f;
/// free needs q = 0.  Throws contract_error on violation.
void validate_local_params(const LocalFieldParams& params);

/// The single defining relation as a word over d = n+2 symbols:
///   r1: x1^q [x1,x2][x3,x4]...[x_{d-1},x_d]
///   r2: x1^2 x2^{2^f} [x2,x3][x4,x5]...[x_{d-1},x_d]
///   r3: x1^{2+2^f} [x1,x2][x3,x4]...[x_{d-1},x_d]   (f = inf: exponent 2)
///   r4: x1^2 [x1,x2] x3^{2^f} [x3,x4][x5,x6]...[x_{d-1},x_d]
RelationWord demushkin_relation(const LocalFieldParams& params);

/// nu(K, G) = (1/|Aut G|) sum_{H <= G} mu_G(H) alpha(H), where alpha(H) counts
/// (n+2)-tuples in H killed by the defining relation (free case: alpha(H) =
/// |H|^{n+1}).  Abelian H use the closed form |H|^{n+1} * |{h : h^q = 1}|;
/// non-abelian H are brute-forced.  The final division must be exact.
Integer nu_yamagishi(const LocalFieldParams& params, const FiniteGroup& G);

/// nu(K, G) for zeta_p not in K:
/// (1/|Aut G|) (|G|/p^d)^{n+1} prod_{i=0}^{d-1} (p^{n+1} - p^i),
/// with d = dim G/Phi(G).
Integer nu_shafarevich(int p, int n, const FiniteGroup& G);

/// Closed-form count of ordered pairs (x, y) of linearly independent vectors
/// with (x, y) = 0 under a non-degenerate skew-symmetric form on F_p^d:
///   case q != 2:  (p^d - 1)(p^{d-1} - p)
///   case q  = 2:  (2^{d-1} - 1)(2^{d-1} - 2) + 2^{d-1}(2^{d-1} - 1)
Integer cp_pair_count(int p, int d, bool q_is_2);

/// Same count by exhaustion: Gram matrix = consecutive symplectic blocks
/// (skipping the first coordinate when d is odd) plus the given diagonal.
/// Throws contract_error when that form is degenerate (e.g. all-zero diagonal
/// with d odd: an alternating form of odd rank cannot be non-degenerate).
Integer cp_pair_count_bruteforce(int p, int d, const std::vector<int>& diagonal);

/// Number of U_3(F_p)-extensions of a degree-n p-adic field containing zeta_p:
///   p > 2:          p^n (p^{n+2}-1)(p^n-1) / ((p^2-1)(p-1))
///   p = 2, q > 2:   2^n (2^n-1)(2^{n+2}-1)
///   p = 2, q = 2:   2^n (2^{n+1}-1)^2
/// Cross-checked internally against cp_pair_count(p, n+2, q=2) * p^{n+2} /
/// |Aut(U_3(F_p))|; a mismatch or inexact division throws data_error.
Integer nu_u3(int p, int n, int q);

/// Ordered pairs (a, b) of square classes of a rigid field with |F*/F*^2| =
/// 2^n that support a D_4-extension: 3^n - 2^{n+1} + 1.  Requires n >= 2.
Integer sap_pair_count(int n);

/// Total D_4-extension count for such a field:
/// (sap_pair_count(n)/2) * 2^{n-2} = 2^{n-3} (3^n - 2^{n+1} + 1).
Integer sap_d4_count(int n);

} // namespace zfilt

#endif
