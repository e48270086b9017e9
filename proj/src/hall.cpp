#include "zfilt/hall.hpp"

#include <algorithm>

#include "zfilt/poset.hpp"

namespace zfilt {

HallTerm HallTerm::generator(int index) {
    if (index < 1) throw contract_error("generator index must be >= 1");
    HallTerm t;
    t.gen_ = index;
    t.weight_ = 1;
    return t;
}

HallTerm HallTerm::bracket(HallTerm left, HallTerm right) {
    HallTerm t;
    t.weight_ = left.weight_ + right.weight_;
    t.left_ = std::make_shared<HallTerm>(std::move(left));
    t.right_ = std::make_shared<HallTerm>(std::move(right));
    return t;
}

int HallTerm::compare(const HallTerm& a, const HallTerm& b) {
    if (a.weight_ != b.weight_) return a.weight_ < b.weight_ ? -1 : 1;
    if (a.gen_ != 0 && b.gen_ != 0) {
        // x_1 > x_2 > ... : larger index is smaller.
        if (a.gen_ == b.gen_) return 0;
        return a.gen_ > b.gen_ ? -1 : 1;
    }
    if (int c = compare(*a.left_, *b.left_)) return c;
    return compare(*a.right_, *b.right_);
}

bool HallTerm::is_admissible() const {
    if (is_generator()) return true;
    if (!left_->is_admissible() || !right_->is_admissible()) return false;
    if (compare(*left_, *right_) <= 0) return false;
    if (!left_->is_generator() && compare(*right_, left_->right()) < 0) return false;
    return true;
}

std::string HallTerm::str() const {
    if (is_generator()) return "x" + std::to_string(gen_);
    return "[" + left_->str() + "," + right_->str() + "]";
}

std::vector<HallTerm> hall_basis(int d, int n) {
    if (d < 1 || n < 1) throw contract_error("hall_basis requires d >= 1, n >= 1");
    // layers[k-1] = sorted C_k
    std::vector<std::vector<HallTerm>> layers;
    std::vector<HallTerm> c1;
    for (int i = d; i >= 1; --i) c1.push_back(HallTerm::generator(i));
    layers.push_back(std::move(c1));
    for (int k = 2; k <= n; ++k) {
        std::vector<HallTerm> ck;
        for (int n1 = 1; n1 < k; ++n1) {
            int n2 = k - n1;
            for (const auto& c1t : layers[static_cast<size_t>(n1 - 1)]) {
                for (const auto& c2t : layers[static_cast<size_t>(n2 - 1)]) {
                    if (HallTerm::compare(c1t, c2t) <= 0) continue;
                    if (!c1t.is_generator() &&
                        HallTerm::compare(c2t, c1t.right()) < 0)
                        continue;
                    ck.push_back(HallTerm::bracket(c1t, c2t));
                }
            }
        }
        std::sort(ck.begin(), ck.end());
        layers.push_back(std::move(ck));
    }
    return layers[static_cast<size_t>(n - 1)];
}

Integer hall_count(int d, int n) {
    if (d < 1 || n < 1) throw contract_error("hall_count requires d >= 1, n >= 1");
    if (n <= 12) return Integer(static_cast<long>(hall_basis(d, n).size()));
    // Witt necklace formula: (1/n) sum_{m|n} mu(m) d^{n/m}
    Integer s = 0;
    for (int m = 1; m <= n; ++m)
        if (n % m == 0)
            s += Integer(classical_mobius(m)) * pow_int(d, static_cast<unsigned long>(n / m));
    return div_exact(s, n);
}

std::vector<std::pair<HallTerm, Integer>> zassenhaus_basis(int d, int p, int n) {
    if (d < 1 || p < 2 || n < 1) throw contract_error("bad zassenhaus_basis arguments");
    int m = n, k = 0;
    while (m % p == 0) {
        m /= p;
        ++k;
    }
    std::vector<std::pair<HallTerm, Integer>> out;
    for (int j = 0; j <= k; ++j) {
        int weight = m;
        for (int i = 0; i < j; ++i) weight *= p;
        Integer exponent = pow_int(p, static_cast<unsigned long>(k - j));
        for (auto& term : hall_basis(d, weight)) out.emplace_back(std::move(term), exponent);
    }
    return out;
}

} // namespace zfilt
