#ifndef ZFILT_FAMILY_HPP
#define ZFILT_FAMILY_HPP

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "zfilt/series.hpp"

namespace zfilt {

// One-relator classification cases for Demushkin groups.  The relation depends
// on the q-invariant and, in the r2/r3/r4 cases, the extra parameter f.
enum class DemushkinCase { r1, r2, r3, r4 };

// f = infinity is a legal value in cases r2/r3; by convention p^infinity = 0,
// so the exponent 2 + 2^f collapses to 2 when building relation words.
struct FExponent {
    bool infinite = false;
    int value = 2;  // ignored when infinite

    static FExponent inf() { return FExponent{true, 0}; }
    static FExponent of(int f) { return FExponent{false, f}; }
};

struct FreeProP {
    int rank = 0;  // d >= 0
};

struct Demushkin {
    int rank = 2;  // d >= 2
    DemushkinCase rcase = DemushkinCase::r1;
    int q = 3;           // p-power, maximal with zeta_q in the field
    FExponent f = FExponent::of(2);
};

struct FreeProdCyclicP {
    int p = 2;
    int copies = 2;  // number of C_p factors, >= 1
};

// Z_2^d semidirect C_2 with inversion action (superpythagorean Galois group).
struct SuperPyth {
    int d = 0;
};

struct MixedFreeProd {
    std::vector<int> demushkin_ranks;  // each >= 2
    int free_rank = 0;
};

struct CyclicPFree {
    int p = 2;
    int free_rank = 0;
};

using GroupFamily =
    std::variant<FreeProP, Demushkin, FreeProdCyclicP, SuperPyth, MixedFreeProd, CyclicPFree>;

std::string family_name(const GroupFamily& family);

// Throws contract_error if parameters violate the classification constraints
// or if p is inconsistent with the family (SuperPyth and C_2 products need p=2).
void validate_family(const GroupFamily& family, int p);

/// Hilbert-Poincare series of gr(F_p[[G]]) for the family, exact to `order`.
///
/// Closed forms used per family:
///   FreeProP{d}            1/(1-dt)
///   Demushkin{d}           1/(1-dt+t^2)        (independent of the relation case)
///   FreeProdCyclicP{p,k}   (1+t+...+t^{p-1})/(1-dt-...-dt^{p-1}),  d = k-1
///   SuperPyth{d}           (1+t)/(1-t)^d
///   MixedFreeProd          1/(1-(d_1+...+d_r+e)t+rt^2)
///   CyclicPFree{p,d}       (1+t+...+t^{p-1})/(1-dt-dt^2-...-dt^p)
///
/// The FreeProdCyclicP and CyclicPFree denominators look alike but differ in
/// degree (p-1 vs p); both drop out of the binary coproduct formula
/// (P1^-1 + P2^-1 - 1)^-1.  For k copies of C_p the fold gives
/// (1-t^p)/(1-kt+(k-1)t^p), whose (1-t) cofactor cancellation yields the
/// degree-(p-1) denominator; adjoining a free factor of rank d instead gives
/// the degree-p denominator.  The two printed forms describe different groups
/// and are both implemented as stated.
TruncatedSeries family_series(const GroupFamily& family, int p, int order);

/// n-ary coproduct of Hilbert-Poincare series:
/// fold of P -> (P1^-1 + P2^-1 - 1)^-1.  Needs >= 2 factors of equal order,
/// each with constant term 1.
TruncatedSeries free_product_series(const std::vector<TruncatedSeries>& factors);

/// prod_{n=1}^{N} ((1-t^{np})/(1-t^n))^{c_n}, exact to order N = c.size().
TruncatedSeries jennings_product(const std::vector<Integer>& c, int p);

/// prod_{n=1}^{N} 1/(1-t^n)^{w_n}; negative exponents expand via inverse.
TruncatedSeries witt_product(const std::vector<Integer>& w);

} // namespace zfilt

#endif
