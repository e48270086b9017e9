#include "zfilt/dims.hpp"

#include "zfilt/poset.hpp"

namespace zfilt {

std::vector<Rational> b_sequence(const TruncatedSeries& P, int order) {
    if (P.order() < order) throw contract_error("series order too small");
    auto l = P.truncate(order).log();
    std::vector<Rational> b;
    b.reserve(static_cast<size_t>(order));
    for (int n = 1; n <= order; ++n) b.push_back(l.coeff(n));
    return b;
}

std::vector<Integer> w_sequence(const TruncatedSeries& P, int order) {
    auto b = b_sequence(P, order);
    std::vector<Integer> w;
    w.reserve(static_cast<size_t>(order));
    for (int n = 1; n <= order; ++n) {
        Rational s(0);
        for (int m = 1; m <= n; ++m)
            if (n % m == 0) s += Rational(classical_mobius(n / m) * m) * b[m - 1];
        w.push_back(to_integer(s / n));
    }
    return w;
}

std::vector<Integer> c_sequence(const TruncatedSeries& P, int p, int order) {
    auto w = w_sequence(P, order);
    std::vector<Integer> c;
    c.reserve(static_cast<size_t>(order));
    for (int n = 1; n <= order; ++n) {
        Integer s = 0;
        for (int m = n; m >= 1; m = (m % p == 0) ? m / p : 0) {
            s += w[m - 1];
            if (m % p != 0) break;
        }
        if (s < 0) throw data_error("negative c_" + std::to_string(n));
        c.push_back(s);
    }
    return c;
}

DimensionTable dimension_table(const TruncatedSeries& P, int p, int order,
                               std::optional<GroupFamily> family) {
    DimensionTable t;
    t.p = p;
    t.order = order;
    t.b = b_sequence(P, order);
    t.w = w_sequence(P, order);
    t.c = c_sequence(P, p, order);
    t.family = std::move(family);
    return t;
}

std::vector<Integer> power_sums(const std::vector<Integer>& charpoly, int order) {
    if (charpoly.empty() || charpoly[0] != 1)
        throw contract_error("charpoly must have constant term 1");
    const size_t k = charpoly.size() - 1;
    // prod(1 - a_i t) = sum (-1)^j e_j t^j, so e_j = (-1)^j * charpoly[j].
    std::vector<Integer> e(k + 1);
    for (size_t j = 0; j <= k; ++j)
        e[j] = (j % 2 == 0) ? charpoly[j] : -charpoly[j];
    std::vector<Integer> s(static_cast<size_t>(order) + 1);
    for (int m = 1; m <= order; ++m) {
        Integer acc = 0;
        for (int i = 1; i < m && static_cast<size_t>(i) <= k; ++i) {
            Integer term = e[static_cast<size_t>(i)] * s[static_cast<size_t>(m - i)];
            acc += (i % 2 == 1) ? term : -term;
        }
        if (static_cast<size_t>(m) <= k) {
            Integer term = Integer(m) * e[static_cast<size_t>(m)];
            acc += (m % 2 == 1) ? term : -term;
        }
        s[static_cast<size_t>(m)] = acc;
    }
    return std::vector<Integer>(s.begin() + 1, s.end());
}

namespace {

// n*b_n for a rational series num/den, both written as prod(1 - root*t):
// n*b_n = (den inverse-root power sums) - (num inverse-root power sums).
// For the cyclotomic numerator 1+t+...+t^{p-1} the power sums are
// -1 when (n,p)=1 and p-1 when p|n, used directly.
struct LogDerivData {
    std::vector<Integer> den_sums;
    bool cyclotomic_num = false;
    int p = 0;
};

Integer nb(const LogDerivData& d, int n) {
    Integer v = d.den_sums[static_cast<size_t>(n - 1)];
    if (d.cyclotomic_num) v -= (n % d.p == 0) ? Integer(d.p - 1) : Integer(-1);
    return v;
}

LogDerivData log_deriv_data(const GroupFamily& family, int p, int order) {
    LogDerivData out;
    std::visit(
        [&](const auto& f) {
            using T = std::decay_t<decltype(f)>;
            if constexpr (std::is_same_v<T, FreeProP>) {
                out.den_sums = power_sums({1, -f.rank}, order);
            } else if constexpr (std::is_same_v<T, Demushkin>) {
                out.den_sums = power_sums({1, -f.rank, 1}, order);
            } else if constexpr (std::is_same_v<T, FreeProdCyclicP>) {
                std::vector<Integer> den(static_cast<size_t>(p), -(f.copies - 1));
                den[0] = 1;
                out.den_sums = power_sums(den, order);
                out.cyclotomic_num = true;
                out.p = p;
            } else if constexpr (std::is_same_v<T, MixedFreeProd>) {
                long total = f.free_rank;
                for (int d : f.demushkin_ranks) total += d;
                out.den_sums =
                    power_sums({1, -total, static_cast<long>(f.demushkin_ranks.size())},
                               order);
            } else if constexpr (std::is_same_v<T, CyclicPFree>) {
                std::vector<Integer> den(static_cast<size_t>(p) + 1, -f.free_rank);
                den[0] = 1;
                out.den_sums = power_sums(den, order);
                out.cyclotomic_num = true;
                out.p = p;
            }
        },
        family);
    return out;
}

} // namespace

Integer w_closed(const GroupFamily& family, int p, int n) {
    validate_family(family, p);
    if (n < 1) throw contract_error("n must be >= 1");
    if (const auto* sp = std::get_if<SuperPyth>(&family)) {
        // log((1+t)/(1-t)^d) has b_n = (d - (-1)^n)/n, whose Mobius transform
        // vanishes for n >= 3 (same telescoping as the epsilon_n computation).
        if (n == 1) return sp->d + 1;
        if (n == 2) return -1;
        return 0;
    }
    auto data = log_deriv_data(family, p, n);
    Rational s(0);
    for (int m = 1; m <= n; ++m)
        if (n % m == 0) s += Rational(classical_mobius(n / m)) * Rational(nb(data, m));
    return to_integer(s / n);
}

Integer c_closed(const GroupFamily& family, int p, int n) {
    validate_family(family, p);
    if (n < 1) throw contract_error("n must be >= 1");
    if (const auto* sp = std::get_if<SuperPyth>(&family)) {
        // G_(n) = H^{2^s}, s = ceil(log2 n): the dimension drops to 0 except
        // when n is a power of 2 (where the filtration actually steps down).
        if (n == 1) return sp->d + 1;
        if ((n & (n - 1)) == 0) return sp->d;  // n = 2^s
        return 0;
    }
    Integer s = 0;
    for (int m = n;; m /= p) {
        s += w_closed(family, p, m);
        if (m % p != 0) break;
    }
    if (s < 0) throw data_error("negative c_" + std::to_string(n));
    return s;
}

Integer generator_counts(const GroupFamily& family, int p, int n) {
    validate_family(family, p);
    if (n < 1) throw contract_error("n must be >= 1");
    Integer csum = 0;
    for (int i = 1; i < n; ++i) csum += c_closed(family, p, i);
    unsigned long e = csum.get_ui();
    if (!csum.fits_ulong_p()) throw resource_error("index exponent too large");
    if (const auto* fp = std::get_if<FreeProP>(&family))
        return pow_int(p, e) * (fp->rank - 1) + 1;
    if (const auto* dm = std::get_if<Demushkin>(&family))
        return pow_int(p, e) * (dm->rank - 2) + 2;
    throw contract_error("generator counts supported only for free and Demushkin groups");
}

} // namespace zfilt
