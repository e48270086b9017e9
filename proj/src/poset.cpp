#include "zfilt/poset.hpp"

#include <algorithm>
#include <numeric>

namespace zfilt {

FinitePoset::FinitePoset(int size, std::vector<bool> leq_matrix)
    : size_(size), leq_(std::move(leq_matrix)) {
    if (size_ < 0 || size_ > 10000) throw contract_error("poset size out of range");
    if (leq_.size() != static_cast<size_t>(size_) * static_cast<size_t>(size_))
        throw contract_error("relation matrix has wrong size");
    for (int x = 0; x < size_; ++x) {
        if (!leq(x, x)) throw contract_error("relation is not reflexive");
        for (int y = 0; y < size_; ++y) {
            if (x != y && leq(x, y) && leq(y, x))
                throw contract_error("relation is not antisymmetric");
            if (!leq(x, y)) continue;
            for (int z = 0; z < size_; ++z)
                if (leq(y, z) && !leq(x, z))
                    throw contract_error("relation is not transitive");
        }
    }
}

std::vector<std::vector<Integer>> mobius_table(const FinitePoset& P) {
    const int m = P.size();
    // Process targets in a linear extension so mu(x,z) is known for all z < y.
    // Sorting by down-set size is a valid extension: a < b implies the
    // down-set of a is strictly contained in that of b.
    std::vector<int> below(static_cast<size_t>(m), 0);
    for (int y = 0; y < m; ++y)
        for (int z = 0; z < m; ++z)
            if (P.leq(z, y)) ++below[static_cast<size_t>(y)];
    std::vector<int> topo(static_cast<size_t>(m));
    std::iota(topo.begin(), topo.end(), 0);
    std::stable_sort(topo.begin(), topo.end(), [&](int a, int b) {
        return below[static_cast<size_t>(a)] < below[static_cast<size_t>(b)];
    });

    std::vector<std::vector<Integer>> mu(static_cast<size_t>(m),
                                         std::vector<Integer>(static_cast<size_t>(m), 0));
    for (int x = 0; x < m; ++x) {
        for (int y : topo) {
            if (!P.leq(x, y)) continue;
            if (x == y) {
                mu[x][y] = 1;
                continue;
            }
            Integer s = 0;
            for (int z = 0; z < m; ++z)
                if (P.leq(x, z) && P.leq(z, y) && z != y) s += mu[x][static_cast<size_t>(z)];
            mu[x][static_cast<size_t>(y)] = -s;
        }
        // delta identity: sum_{x<=z<=y} mu(x,z) = [x==y]
        for (int y = 0; y < m; ++y) {
            if (!P.leq(x, y)) continue;
            Integer s = 0;
            for (int z = 0; z < m; ++z)
                if (P.leq(x, z) && P.leq(z, y)) s += mu[x][static_cast<size_t>(z)];
            if (s != (x == y ? 1 : 0)) throw data_error("Mobius delta identity failed");
        }
    }
    return mu;
}

int classical_mobius(long n) {
    if (n < 1) throw contract_error("classical Mobius needs n >= 1");
    int r = 0;
    for (long d = 2; d * d <= n; ++d) {
        if (n % d != 0) continue;
        n /= d;
        ++r;
        if (n % d == 0) return 0;
    }
    if (n > 1) ++r;
    return r % 2 == 0 ? 1 : -1;
}

Integer gaussian_binomial(int n, int k, const Integer& q) {
    if (q < 2) throw contract_error("gaussian binomial requires q >= 2");
    if (n < 0) throw contract_error("gaussian binomial requires n >= 0");
    if (k < 0 || k > n) return 0;
    Integer num = 1, den = 1;
    for (int i = 0; i < k; ++i) {
        num *= pow_int(q, static_cast<unsigned long>(n - i)) - 1;
        den *= pow_int(q, static_cast<unsigned long>(i + 1)) - 1;
    }
    return div_exact(num, den);
}

} // namespace zfilt
