#include "zfilt/localqp.hpp"

#include "zfilt/errors.hpp"

namespace zfilt {

namespace {

bool is_prime(long p) {
    if (p < 2) return false;
    for (long d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

long pow_mod(long a, long e, long m) {
    long r = 1 % m;
    a %= m;
    while (e > 0) {
        if (e & 1) r = r * a % m;
        a = a * a % m;
        e >>= 1;
    }
    return r;
}

} // namespace

long smallest_nonresidue(long p) {
    if (!is_prime(p) || p == 2) throw contract_error("needs an odd prime");
    for (long a = 2; a < p; ++a)
        if (pow_mod(a, (p - 1) / 2, p) == p - 1) return a;
    throw data_error("no non-residue found");
}

SquareClass SquareClass::times(const SquareClass& other) const {
    if (p != other.p) throw contract_error("square classes over different primes");
    return SquareClass{p, (val + other.val) % 2, (unit_x + other.unit_x) % 2,
                       (unit_y + other.unit_y) % 2};
}

long SquareClass::representative() const {
    long r;
    if (p == 2) {
        r = (unit_y ? 5 : 1) * (unit_x ? -1 : 1);
        if (val) r *= 2;
    } else {
        r = unit_x ? smallest_nonresidue(p) : 1;
        if (val) r *= p;
    }
    return r;
}

std::string SquareClass::str() const { return std::to_string(representative()); }

std::vector<SquareClass> square_class_reps(long p) {
    if (!is_prime(p)) throw contract_error("p must be prime");
    std::vector<SquareClass> out;
    if (p == 2) {
        // {1, -1, 5, -5, 2, -2, 10, -10}
        for (int v = 0; v < 2; ++v)
            for (int x = 0; x < 2; ++x)
                for (int y = 0; y < 2; ++y)
                    out.push_back(SquareClass{2, v, x, y});
    } else {
        // {1, p, u, up}
        for (int x = 0; x < 2; ++x)
            for (int v = 0; v < 2; ++v)
                out.push_back(SquareClass{p, v, x, 0});
    }
    return out;
}

int hilbert_symbol(const SquareClass& a, const SquareClass& b) {
    if (a.p != b.p) throw contract_error("square classes over different primes");
    int e;
    if (a.p == 2) {
        // units u = (-1)^x 5^y: eps(u) = x, omega(u) = y
        e = a.unit_x * b.unit_x + a.val * b.unit_y + b.val * a.unit_y;
    } else {
        if (a.unit_y != 0 || b.unit_y != 0)
            throw contract_error("odd-p square class with a p=2 coordinate");
        e = a.val * b.val * static_cast<int>(((a.p - 1) / 2) % 2) +
            b.val * a.unit_x + a.val * b.unit_x;
    }
    return e % 2 == 0 ? 1 : -1;
}

std::vector<std::pair<SquareClass, SquareClass>> d4_admissible_pairs(long p) {
    std::vector<SquareClass> classes = square_class_reps(p);
    std::vector<std::pair<SquareClass, SquareClass>> pairs;
    for (size_t i = 0; i < classes.size(); ++i) {
        if (classes[i].is_trivial()) continue;
        for (size_t j = i + 1; j < classes.size(); ++j) {
            if (classes[j].is_trivial()) continue;
            if (hilbert_symbol(classes[i], classes[j]) == 1)
                pairs.emplace_back(classes[i], classes[j]);
        }
    }
    return pairs;
}

Integer d4_extension_count_qp(long p) {
    Integer n_pairs = static_cast<long>(d4_admissible_pairs(p).size());
    Integer n_classes = static_cast<long>(square_class_reps(p).size());
    return n_pairs * div_exact(n_classes, 4);
}

} // namespace zfilt
