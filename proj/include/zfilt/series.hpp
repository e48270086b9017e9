#ifndef ZFILT_SERIES_HPP
#define ZFILT_SERIES_HPP

#include <string>
#include <vector>

#include "zfilt/rational.hpp"

namespace zfilt {

/// A formal power series over Q, truncated at a fixed order (inclusive).
/// Values are immutable after construction; all operations are exact.
/// Binary operations require equal orders; mixed orders are a contract error.
class TruncatedSeries {
public:
    TruncatedSeries(std::vector<Rational> coeffs, int order);

    // Constant series c + 0t + ... at the given order.
    static TruncatedSeries constant(const Rational& c, int order);
    static TruncatedSeries one(int order) { return constant(Rational(1), order); }

    // Series of the polynomial with the given integer coefficients (index = degree).
    static TruncatedSeries polynomial(const std::vector<Integer>& coeffs, int order);

    int order() const { return order_; }
    const Rational& coeff(int n) const { return coeffs_.at(static_cast<size_t>(n)); }
    const std::vector<Rational>& coeffs() const { return coeffs_; }

    TruncatedSeries add(const TruncatedSeries& other) const;
    TruncatedSeries sub(const TruncatedSeries& other) const;
    TruncatedSeries multiply(const TruncatedSeries& other) const;
    TruncatedSeries inverse() const;
    TruncatedSeries log() const;
    TruncatedSeries pow(long e) const;  // negative e inverts first

    // Re-truncate to a smaller (or equal) order.
    TruncatedSeries truncate(int new_order) const;

    bool operator==(const TruncatedSeries& other) const = default;

    std::string str(const std::string& var = "t") const;

private:
    std::vector<Rational> coeffs_;  // size order_ + 1
    int order_;
};

/// Power-series expansion of num(t)/den(t) to the given order.
/// The denominator constant term must be a unit (nonzero).
TruncatedSeries from_rational_function(const std::vector<Integer>& num,
                                       const std::vector<Integer>& den, int order);

} // namespace zfilt

#endif
