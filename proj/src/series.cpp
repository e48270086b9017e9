#include "zfilt/series.hpp"

#include <sstream>

namespace zfilt {

TruncatedSeries::TruncatedSeries(std::vector<Rational> coeffs, int order)
    : coeffs_(std::move(coeffs)), order_(order) {
    if (order_ < 0) throw contract_error("series order must be >= 0");
    if (coeffs_.size() != static_cast<size_t>(order_) + 1)
        throw contract_error("coefficient list length must be order+1");
}

TruncatedSeries TruncatedSeries::constant(const Rational& c, int order) {
    std::vector<Rational> v(static_cast<size_t>(order) + 1, Rational(0));
    v[0] = c;
    return TruncatedSeries(std::move(v), order);
}

TruncatedSeries TruncatedSeries::polynomial(const std::vector<Integer>& coeffs, int order) {
    std::vector<Rational> v(static_cast<size_t>(order) + 1, Rational(0));
    for (size_t i = 0; i < coeffs.size() && i <= static_cast<size_t>(order); ++i)
        v[i] = Rational(coeffs[i]);
    return TruncatedSeries(std::move(v), order);
}

static void check_same_order(const TruncatedSeries& a, const TruncatedSeries& b) {
    if (a.order() != b.order())
        throw contract_error("series order mismatch: " + std::to_string(a.order()) +
                             " vs " + std::to_string(b.order()));
}

TruncatedSeries TruncatedSeries::add(const TruncatedSeries& other) const {
    check_same_order(*this, other);
    std::vector<Rational> v(coeffs_);
    for (int n = 0; n <= order_; ++n) v[n] += other.coeffs_[n];
    return TruncatedSeries(std::move(v), order_);
}

TruncatedSeries TruncatedSeries::sub(const TruncatedSeries& other) const {
    check_same_order(*this, other);
    std::vector<Rational> v(coeffs_);
    for (int n = 0; n <= order_; ++n) v[n] -= other.coeffs_[n];
    return TruncatedSeries(std::move(v), order_);
}

TruncatedSeries TruncatedSeries::multiply(const TruncatedSeries& other) const {
    check_same_order(*this, other);
    std::vector<Rational> v(static_cast<size_t>(order_) + 1, Rational(0));
    for (int i = 0; i <= order_; ++i) {
        if (coeffs_[i] == 0) continue;
        for (int j = 0; i + j <= order_; ++j)
            v[i + j] += coeffs_[i] * other.coeffs_[j];
    }
    return TruncatedSeries(std::move(v), order_);
}

TruncatedSeries TruncatedSeries::inverse() const {
    if (coeffs_[0] == 0) throw invertibility_error("series with zero constant term");
    std::vector<Rational> v(static_cast<size_t>(order_) + 1, Rational(0));
    v[0] = 1 / coeffs_[0];
    for (int n = 1; n <= order_; ++n) {
        Rational s(0);
        for (int k = 1; k <= n; ++k) s += coeffs_[k] * v[n - k];
        v[n] = -s / coeffs_[0];
    }
    return TruncatedSeries(std::move(v), order_);
}

TruncatedSeries TruncatedSeries::log() const {
    if (coeffs_[0] != 1) throw contract_error("log requires constant term 1");
    // (log a)' = a'/a, solved coefficient by coefficient:
    // n*l_n = n*a_n - sum_{k=1}^{n-1} k*l_k*a_{n-k}
    std::vector<Rational> l(static_cast<size_t>(order_) + 1, Rational(0));
    for (int n = 1; n <= order_; ++n) {
        Rational s = Rational(n) * coeffs_[n];
        for (int k = 1; k < n; ++k) s -= Rational(k) * l[k] * coeffs_[n - k];
        l[n] = s / n;
    }
    return TruncatedSeries(std::move(l), order_);
}

TruncatedSeries TruncatedSeries::pow(long e) const {
    TruncatedSeries base = e < 0 ? inverse() : *this;
    unsigned long k = e < 0 ? static_cast<unsigned long>(-e) : static_cast<unsigned long>(e);
    TruncatedSeries acc = one(order_);
    while (k > 0) {
        if (k & 1) acc = acc.multiply(base);
        base = base.multiply(base);
        k >>= 1;
    }
    return acc;
}

TruncatedSeries TruncatedSeries::truncate(int new_order) const {
    if (new_order > order_) throw contract_error("cannot truncate to a larger order");
    std::vector<Rational> v(coeffs_.begin(), coeffs_.begin() + new_order + 1);
    return TruncatedSeries(std::move(v), new_order);
}

std::string TruncatedSeries::str(const std::string& var) const {
    std::ostringstream os;
    bool first = true;
    for (int n = 0; n <= order_; ++n) {
        const Rational& c = coeffs_[n];
        if (c == 0) continue;
        if (!first) os << (c > 0 ? " + " : " - ");
        else if (c < 0) os << "-";
        Rational a = abs(c);
        if (n == 0 || a != 1) os << a.get_str();
        if (n > 0) {
            if (a != 1) os << "*";
            os << var;
            if (n > 1) os << "^" << n;
        }
        first = false;
    }
    if (first) os << "0";
    return os.str();
}

TruncatedSeries from_rational_function(const std::vector<Integer>& num,
                                       const std::vector<Integer>& den, int order) {
    if (den.empty() || den[0] == 0)
        throw invertibility_error("denominator constant term must be nonzero");
    auto n = TruncatedSeries::polynomial(num, order);
    auto d = TruncatedSeries::polynomial(den, order);
    return n.multiply(d.inverse());
}

} // namespace zfilt
