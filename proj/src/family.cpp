#include "zfilt/family.hpp"

#include <numeric>

namespace zfilt {

std::string family_name(const GroupFamily& family) {
    return std::visit(
        [](const auto& f) -> std::string {
            using T = std::decay_t<decltype(f)>;
            if constexpr (std::is_same_v<T, FreeProP>)
                return "free(d=" + std::to_string(f.rank) + ")";
            else if constexpr (std::is_same_v<T, Demushkin>)
                return "demushkin(d=" + std::to_string(f.rank) + ")";
            else if constexpr (std::is_same_v<T, FreeProdCyclicP>)
                return "freeprod-C" + std::to_string(f.p) + "(copies=" +
                       std::to_string(f.copies) + ")";
            else if constexpr (std::is_same_v<T, SuperPyth>)
                return "superpyth(d=" + std::to_string(f.d) + ")";
            else if constexpr (std::is_same_v<T, MixedFreeProd>) {
                std::string s = "mixed(ranks=";
                for (size_t i = 0; i < f.demushkin_ranks.size(); ++i)
                    s += (i ? "," : "") + std::to_string(f.demushkin_ranks[i]);
                return s + ";e=" + std::to_string(f.free_rank) + ")";
            } else
                return "C" + std::to_string(f.p) + "*free(d=" +
                       std::to_string(f.free_rank) + ")";
        },
        family);
}

static bool is_prime(int n) {
    if (n < 2) return false;
    for (int d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

static bool is_power_of(int q, int p) {
    if (q < p) return false;
    while (q % p == 0) q /= p;
    return q == 1;
}

void validate_family(const GroupFamily& family, int p) {
    if (!is_prime(p)) throw contract_error("p must be prime");
    std::visit(
        [p](const auto& f) {
            using T = std::decay_t<decltype(f)>;
            if constexpr (std::is_same_v<T, FreeProP>) {
                if (f.rank < 0) throw contract_error("free rank must be >= 0");
            } else if constexpr (std::is_same_v<T, Demushkin>) {
                if (f.rank < 2) throw contract_error("Demushkin rank must be >= 2");
                if (!is_power_of(f.q, p))
                    throw contract_error("Demushkin q must be a power of p");
                switch (f.rcase) {
                    case DemushkinCase::r1:
                        if (f.q == 2) throw contract_error("case r1 requires q != 2");
                        if (f.rank % 2 != 0) throw contract_error("case r1 requires even rank");
                        break;
                    case DemushkinCase::r2:
                        if (f.q != 2) throw contract_error("case r2 requires q = 2");
                        if (f.rank % 2 == 0) throw contract_error("case r2 requires odd rank");
                        break;
                    case DemushkinCase::r3:
                        if (f.q != 2) throw contract_error("case r3 requires q = 2");
                        if (f.rank % 2 != 0) throw contract_error("case r3 requires even rank");
                        break;
                    case DemushkinCase::r4:
                        if (f.q != 2) throw contract_error("case r4 requires q = 2");
                        if (f.rank % 2 != 0) throw contract_error("case r4 requires even rank");
                        if (f.f.infinite) throw contract_error("case r4 requires finite f");
                        break;
                }
                if (!f.f.infinite && f.f.value < 2)
                    throw contract_error("Demushkin f must be >= 2 or infinity");
            } else if constexpr (std::is_same_v<T, FreeProdCyclicP>) {
                if (f.p != p) throw contract_error("family prime differs from p");
                if (f.copies < 1) throw contract_error("need >= 1 cyclic factor");
            } else if constexpr (std::is_same_v<T, SuperPyth>) {
                if (p != 2) throw contract_error("SuperPyth requires p = 2");
                if (f.d < 0) throw contract_error("SuperPyth d must be >= 0");
            } else if constexpr (std::is_same_v<T, MixedFreeProd>) {
                for (int d : f.demushkin_ranks)
                    if (d < 2) throw contract_error("Demushkin ranks must be >= 2");
                if (f.free_rank < 0) throw contract_error("free rank must be >= 0");
            } else {
                if (f.p != p) throw contract_error("family prime differs from p");
                if (f.free_rank < 0) throw contract_error("free rank must be >= 0");
            }
        },
        family);
}

TruncatedSeries family_series(const GroupFamily& family, int p, int order) {
    validate_family(family, p);
    if (order < 1) throw contract_error("order must be >= 1");
    return std::visit(
        [p, order](const auto& f) -> TruncatedSeries {
            using T = std::decay_t<decltype(f)>;
            if constexpr (std::is_same_v<T, FreeProP>) {
                return from_rational_function({1}, {1, -f.rank}, order);
            } else if constexpr (std::is_same_v<T, Demushkin>) {
                return from_rational_function({1}, {1, -f.rank, 1}, order);
            } else if constexpr (std::is_same_v<T, FreeProdCyclicP>) {
                long d = f.copies - 1;
                std::vector<Integer> num(static_cast<size_t>(p), 1);
                std::vector<Integer> den(static_cast<size_t>(p), -d);
                den[0] = 1;
                return from_rational_function(num, den, order);
            } else if constexpr (std::is_same_v<T, SuperPyth>) {
                // (1+t)/(1-t)^d.  The filtration Z_2^d x| C_2 has
                // G_(n) = (Z_2^d)^{2^s}, s = ceil(log2 n), so c_n is d+1 at
                // n = 1, d at n = 2^s and 0 otherwise; the telescoping
                // subquotient product then collapses to this closed form.
                // (It also matches C_2 * C_2 = Z_2 x| C_2 at d = 1.)
                if (f.d == 0) return from_rational_function({1, 1}, {1}, order);
                return from_rational_function({1, 1}, {1, -1}, order)
                    .multiply(from_rational_function({1}, {1, -1}, order).pow(f.d - 1));
            } else if constexpr (std::is_same_v<T, MixedFreeProd>) {
                long total = f.free_rank;
                for (int d : f.demushkin_ranks) total += d;
                long r = static_cast<long>(f.demushkin_ranks.size());
                return from_rational_function({1}, {1, -total, r}, order);
            } else {
                long d = f.free_rank;
                std::vector<Integer> num(static_cast<size_t>(p), 1);
                std::vector<Integer> den(static_cast<size_t>(p) + 1, -d);
                den[0] = 1;
                return from_rational_function(num, den, order);
            }
        },
        family);
}

TruncatedSeries free_product_series(const std::vector<TruncatedSeries>& factors) {
    if (factors.size() < 2)
        throw contract_error("free product needs at least two factors");
    const int order = factors[0].order();
    auto acc = factors[0];
    for (size_t i = 1; i < factors.size(); ++i) {
        if (factors[i].order() != order) throw contract_error("factor order mismatch");
        if (acc.coeff(0) != 1 || factors[i].coeff(0) != 1)
            throw contract_error("free product factors must have constant term 1");
        auto inv_sum = acc.inverse().add(factors[i].inverse())
                           .sub(TruncatedSeries::one(order));
        acc = inv_sum.inverse();
    }
    return acc;
}

TruncatedSeries jennings_product(const std::vector<Integer>& c, int p) {
    const int order = static_cast<int>(c.size());
    if (order < 1) throw contract_error("need at least c_1");
    auto acc = TruncatedSeries::one(order);
    for (int n = 1; n <= order; ++n) {
        const Integer& cn = c[static_cast<size_t>(n - 1)];
        if (cn < 0) throw contract_error("c_n must be nonnegative");
        if (cn == 0 || n > order) continue;
        // (1-t^{np})/(1-t^n) = 1 + t^n + ... + t^{n(p-1)}
        std::vector<Rational> factor(static_cast<size_t>(order) + 1, Rational(0));
        for (int j = 0; j < p && n * j <= order; ++j)
            factor[static_cast<size_t>(n * j)] = 1;
        acc = acc.multiply(TruncatedSeries(std::move(factor), order)
                               .pow(cn.get_si()));
    }
    return acc;
}

TruncatedSeries witt_product(const std::vector<Integer>& w) {
    const int order = static_cast<int>(w.size());
    if (order < 1) throw contract_error("need at least w_1");
    auto acc = TruncatedSeries::one(order);
    for (int n = 1; n <= order; ++n) {
        const Integer& wn = w[static_cast<size_t>(n - 1)];
        if (wn == 0) continue;
        std::vector<Integer> den(static_cast<size_t>(n) + 1, 0);
        den[0] = 1;
        den[static_cast<size_t>(n)] = -1;
        acc = acc.multiply(from_rational_function({1}, den, order).pow(wn.get_si()));
    }
    return acc;
}

} // namespace zfilt
