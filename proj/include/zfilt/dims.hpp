#ifndef ZFILT_DIMS_HPP
#define ZFILT_DIMS_HPP

#include <optional>
#include <vector>

#include "zfilt/family.hpp"
#include "zfilt/series.hpp"

namespace zfilt {

/// The central pipeline from a Hilbert-Poincare series P(t):
///   b_n  coefficients of log P
///   w_n  = (1/n) sum_{m|n} mu(n/m) m b_m       (must be integral)
///   c_n  = w_m + w_{pm} + ... + w_{p^k m}       where n = p^k m, (m,p)=1

/// Log coefficients b_1..b_N of P (constant term must be 1).
std::vector<Rational> b_sequence(const TruncatedSeries& P, int order);

/// Mobius-inverted sequence w_1..w_N.  Throws data_error if any w_n is
/// non-integral (the input is then not a valid gr-algebra series).
std::vector<Integer> w_sequence(const TruncatedSeries& P, int order);

/// Zassenhaus subquotient dimensions c_1..c_N.  Throws data_error on a
/// negative entry.
std::vector<Integer> c_sequence(const TruncatedSeries& P, int p, int order);

struct DimensionTable {
    int p;
    int order;
    std::vector<Rational> b;
    std::vector<Integer> w;
    std::vector<Integer> c;
    std::optional<GroupFamily> family;
};

DimensionTable dimension_table(const TruncatedSeries& P, int p, int order,
                               std::optional<GroupFamily> family = std::nullopt);

/// Power sums s_1..s_N of the inverse roots a_i of a polynomial given as the
/// expanded product prod(1 - a_i t), via Newton's identities.  Exact integers.
std::vector<Integer> power_sums(const std::vector<Integer>& charpoly, int order);

/// c_n evaluated from integer power-sum recurrences, with no series expansion.
/// Irrational or complex roots are never materialized.
Integer c_closed(const GroupFamily& family, int p, int n);

/// w_n from the same closed route (exposed for the lower-central-rank checks).
Integer w_closed(const GroupFamily& family, int p, int n);

/// Minimal generator count of G_(n) for free (Schreier formula) and Demushkin
/// (Andozskii/Dummit-Labute formula) groups.  Other families are unsupported.
Integer generator_counts(const GroupFamily& family, int p, int n);

} // namespace zfilt

#endif
