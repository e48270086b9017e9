#ifndef ZFILT_RATIONAL_HPP
#define ZFILT_RATIONAL_HPP

#include <gmpxx.h>
#include <string>

#include "zfilt/errors.hpp"

namespace zfilt {

// All arithmetic in the project is exact.  Integer/Rational are GMP types;
// mpq_class keeps values canonical (lowest terms, positive denominator) as
// long as they are built through these helpers.
using Integer = mpz_class;
using Rational = mpq_class;

inline Rational make_rational(const Integer& num, const Integer& den) {
    if (den == 0) throw contract_error("rational with zero denominator");
    Rational q(num, den);
    q.canonicalize();
    return q;
}

inline bool is_integer(const Rational& q) { return q.get_den() == 1; }

// Exact conversion; throws if q is not an integer.
inline Integer to_integer(const Rational& q) {
    if (!is_integer(q)) throw data_error("expected integral value, got " + q.get_str());
    return q.get_num();
}

inline Integer pow_int(const Integer& base, unsigned long e) {
    Integer r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
    return r;
}

inline Integer pow_int(long base, unsigned long e) { return pow_int(Integer(base), e); }

// Exact division; throws if b does not divide a.
inline Integer div_exact(const Integer& a, const Integer& b) {
    if (b == 0 || !mpz_divisible_p(a.get_mpz_t(), b.get_mpz_t()))
        throw data_error("non-exact division: " + a.get_str() + " / " + b.get_str());
    Integer r;
    mpz_divexact(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

} // namespace zfilt

#endif
