#include "zfilt/group.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "zfilt/errors.hpp"

namespace zfilt {

namespace {

constexpr int kMaxGroupSize = 1 << 14;

// Closure over a raw multiplication table (used before a FiniteGroup exists).
std::vector<bool> table_closure(int n, const std::vector<uint16_t>& mult, int identity,
                                const std::vector<int>& seed) {
    std::vector<bool> in(static_cast<size_t>(n), false);
    std::vector<int> queue;
    auto push = [&](int g) {
        if (!in[static_cast<size_t>(g)]) {
            in[static_cast<size_t>(g)] = true;
            queue.push_back(g);
        }
    };
    push(identity);
    for (int g : seed) push(g);
    for (size_t head = 0; head < queue.size(); ++head) {
        int a = queue[head];
        size_t limit = queue.size();
        for (size_t i = 0; i < limit; ++i) {
            int b = queue[i];
            push(mult[static_cast<size_t>(a) * static_cast<size_t>(n) +
                      static_cast<size_t>(b)]);
            push(mult[static_cast<size_t>(b) * static_cast<size_t>(n) +
                      static_cast<size_t>(a)]);
        }
    }
    return in;
}

int popcount(const std::vector<bool>& v) {
    return static_cast<int>(std::count(v.begin(), v.end(), true));
}

} // namespace

FiniteGroup::FiniteGroup(int size, std::vector<uint16_t> mult_table,
                         std::vector<int> generators, std::vector<std::string> labels)
    : size_(size), mult_(std::move(mult_table)), generators_(std::move(generators)),
      labels_(std::move(labels)) {
    if (size_ < 1 || size_ > kMaxGroupSize) throw contract_error("group size out of range");
    if (mult_.size() != static_cast<size_t>(size_) * static_cast<size_t>(size_))
        throw contract_error("multiplication table has wrong size");
    for (uint16_t v : mult_)
        if (v >= size_) throw contract_error("multiplication table entry out of range");
    for (int g : generators_)
        if (g < 0 || g >= size_) throw contract_error("generator index out of range");

    // Identity.
    identity_ = -1;
    for (int e = 0; e < size_; ++e) {
        bool ok = true;
        for (int a = 0; a < size_ && ok; ++a)
            ok = mul(e, a) == a && mul(a, e) == a;
        if (ok) {
            identity_ = e;
            break;
        }
    }
    if (identity_ < 0) throw contract_error("multiplication table has no identity");

    // Inverses (two-sided).
    inv_.assign(static_cast<size_t>(size_), 0);
    for (int a = 0; a < size_; ++a) {
        int found = -1;
        for (int b = 0; b < size_; ++b)
            if (mul(a, b) == identity_ && mul(b, a) == identity_) {
                found = b;
                break;
            }
        if (found < 0) throw contract_error("element without two-sided inverse");
        inv_[static_cast<size_t>(a)] = static_cast<uint16_t>(found);
    }

    // Generating set for Light's associativity test: either the given one
    // (checked for coverage) or a greedy one.
    std::vector<int> gens = generators_;
    if (!gens.empty()) {
        if (popcount(table_closure(size_, mult_, identity_, gens)) != size_)
            throw contract_error("declared generators do not generate the group");
    } else {
        std::vector<bool> have = table_closure(size_, mult_, identity_, {});
        for (int g = 0; g < size_ && popcount(have) < size_; ++g) {
            if (have[static_cast<size_t>(g)]) continue;
            gens.push_back(g);
            have = table_closure(size_, mult_, identity_, gens);
        }
        generators_ = gens;
    }
    // Light's test: associativity for all triples follows from (ab)g = a(bg)
    // with g ranging over a generating set.
    for (int g : gens)
        for (int a = 0; a < size_; ++a)
            for (int b = 0; b < size_; ++b)
                if (mul(mul(a, b), g) != mul(a, mul(b, g)))
                    throw contract_error("multiplication table is not associative");

    if (labels_.empty()) {
        labels_.reserve(static_cast<size_t>(size_));
        for (int g = 0; g < size_; ++g) labels_.push_back("g" + std::to_string(g));
    } else if (labels_.size() != static_cast<size_t>(size_)) {
        throw contract_error("label list has wrong size");
    }
}

int FiniteGroup::pow(int a, long e) const {
    if (e < 0) {
        a = inv(a);
        e = -e;
    }
    int r = identity_;
    while (e > 0) {
        if (e & 1) r = mul(r, a);
        a = mul(a, a);
        e >>= 1;
    }
    return r;
}

int FiniteGroup::commutator(int a, int b) const {
    return mul(mul(inv(a), inv(b)), mul(a, b));
}

int FiniteGroup::element_order(int a) const {
    int r = a, n = 1;
    while (r != identity_) {
        r = mul(r, a);
        ++n;
    }
    return n;
}

bool FiniteGroup::is_abelian() const {
    for (int a = 0; a < size_; ++a)
        for (int b = a + 1; b < size_; ++b)
            if (mul(a, b) != mul(b, a)) return false;
    return true;
}

FiniteGroup FiniteGroup::from_permutations(const std::vector<std::vector<int>>& gens) {
    if (gens.empty()) throw contract_error("need at least one permutation");
    const size_t deg = gens[0].size();
    for (const auto& g : gens) {
        if (g.size() != deg) throw contract_error("permutations have mixed degrees");
        std::vector<bool> seen(deg, false);
        for (int v : g) {
            if (v < 0 || static_cast<size_t>(v) >= deg || seen[static_cast<size_t>(v)])
                throw contract_error("not a permutation");
            seen[static_cast<size_t>(v)] = true;
        }
    }
    std::vector<int> id(deg);
    std::iota(id.begin(), id.end(), 0);
    std::map<std::vector<int>, int> index;
    std::vector<std::vector<int>> elems;
    index[id] = 0;
    elems.push_back(id);
    std::vector<int> gen_idx;
    for (size_t head = 0; head < elems.size(); ++head) {
        for (const auto& g : gens) {
            std::vector<int> prod(deg);
            for (size_t i = 0; i < deg; ++i)
                prod[i] = g[static_cast<size_t>(elems[head][i])];
            if (index.emplace(prod, static_cast<int>(elems.size())).second) {
                elems.push_back(prod);
                if (elems.size() > kMaxGroupSize)
                    throw resource_error("permutation closure exceeds size budget");
            }
        }
    }
    for (const auto& g : gens) gen_idx.push_back(index.at(g));
    const int n = static_cast<int>(elems.size());
    std::vector<uint16_t> mult(static_cast<size_t>(n) * static_cast<size_t>(n));
    std::vector<int> prod(deg);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            for (size_t i = 0; i < deg; ++i)
                prod[i] = elems[static_cast<size_t>(b)]
                               [static_cast<size_t>(elems[static_cast<size_t>(a)][i])];
            mult[static_cast<size_t>(a) * static_cast<size_t>(n) + static_cast<size_t>(b)] =
                static_cast<uint16_t>(index.at(prod));
        }
    return FiniteGroup(n, std::move(mult), gen_idx);
}

FiniteGroup FiniteGroup::abelian(const std::vector<int>& orders) {
    if (orders.empty()) throw contract_error("need at least one cyclic factor");
    long n = 1;
    for (int o : orders) {
        if (o < 1) throw contract_error("cyclic factor order must be positive");
        n *= o;
        if (n > kMaxGroupSize) throw resource_error("abelian group exceeds size budget");
    }
    const int d = static_cast<int>(orders.size());
    auto decode = [&](int idx, std::vector<int>& v) {
        for (int i = 0; i < d; ++i) {
            v[static_cast<size_t>(i)] = idx % orders[static_cast<size_t>(i)];
            idx /= orders[static_cast<size_t>(i)];
        }
    };
    std::vector<uint16_t> mult(static_cast<size_t>(n) * static_cast<size_t>(n));
    std::vector<int> va(static_cast<size_t>(d)), vb(static_cast<size_t>(d));
    for (int a = 0; a < n; ++a) {
        decode(a, va);
        for (int b = 0; b < n; ++b) {
            decode(b, vb);
            int idx = 0, stride = 1;
            for (int i = 0; i < d; ++i) {
                idx += ((va[static_cast<size_t>(i)] + vb[static_cast<size_t>(i)]) %
                        orders[static_cast<size_t>(i)]) *
                       stride;
                stride *= orders[static_cast<size_t>(i)];
            }
            mult[static_cast<size_t>(a) * static_cast<size_t>(n) + static_cast<size_t>(b)] =
                static_cast<uint16_t>(idx);
        }
    }
    std::vector<int> gens;
    int stride = 1;
    for (int i = 0; i < d; ++i) {
        if (orders[static_cast<size_t>(i)] > 1) gens.push_back(stride);
        stride *= orders[static_cast<size_t>(i)];
    }
    std::vector<std::string> labels;
    std::vector<int> v(static_cast<size_t>(d));
    for (int a = 0; a < n; ++a) {
        decode(a, v);
        std::string s = "(";
        for (int i = 0; i < d; ++i)
            s += (i ? "," : "") + std::to_string(v[static_cast<size_t>(i)]);
        labels.push_back(s + ")");
    }
    return FiniteGroup(static_cast<int>(n), std::move(mult), gens, labels);
}

FiniteGroup FiniteGroup::generalized_dihedral(const std::vector<int>& orders) {
    if (orders.empty()) throw contract_error("need at least one cyclic factor");
    long A = 1;
    for (int o : orders) {
        if (o < 1) throw contract_error("cyclic factor order must be positive");
        A *= o;
        if (2 * A > kMaxGroupSize)
            throw resource_error("generalized dihedral group exceeds size budget");
    }
    const int d = static_cast<int>(orders.size());
    const long n = 2 * A;
    auto decode = [&](int idx, std::vector<int>& v) {
        for (int i = 0; i < d; ++i) {
            v[static_cast<size_t>(i)] = idx % orders[static_cast<size_t>(i)];
            idx /= orders[static_cast<size_t>(i)];
        }
    };
    auto encode = [&](const std::vector<int>& v) {
        int idx = 0, stride = 1;
        for (int i = 0; i < d; ++i) {
            idx += v[static_cast<size_t>(i)] * stride;
            stride *= orders[static_cast<size_t>(i)];
        }
        return idx;
    };
    // element s*A + a  <->  (a, s) with (a,s)(b,t) = (a + (-1)^s b, s+t)
    std::vector<uint16_t> mult(static_cast<size_t>(n) * static_cast<size_t>(n));
    std::vector<int> va(static_cast<size_t>(d)), vb(static_cast<size_t>(d)),
        vc(static_cast<size_t>(d));
    for (long x = 0; x < n; ++x) {
        int s = static_cast<int>(x / A);
        decode(static_cast<int>(x % A), va);
        for (long y = 0; y < n; ++y) {
            int t = static_cast<int>(y / A);
            decode(static_cast<int>(y % A), vb);
            for (int i = 0; i < d; ++i) {
                int o = orders[static_cast<size_t>(i)];
                int b = vb[static_cast<size_t>(i)];
                if (s) b = (o - b) % o;
                vc[static_cast<size_t>(i)] = (va[static_cast<size_t>(i)] + b) % o;
            }
            long z = encode(vc) + static_cast<long>((s + t) % 2) * A;
            mult[static_cast<size_t>(x) * static_cast<size_t>(n) + static_cast<size_t>(y)] =
                static_cast<uint16_t>(z);
        }
    }
    std::vector<int> gens;
    gens.push_back(static_cast<int>(A));  // the inverting involution
    int stride = 1;
    for (int i = 0; i < d; ++i) {
        if (orders[static_cast<size_t>(i)] > 1) gens.push_back(stride);
        stride *= orders[static_cast<size_t>(i)];
    }
    std::vector<std::string> labels;
    std::vector<int> v(static_cast<size_t>(d));
    for (long x = 0; x < n; ++x) {
        decode(static_cast<int>(x % A), v);
        std::string lab = "(";
        for (int i = 0; i < d; ++i)
            lab += (i ? "," : "") + std::to_string(v[static_cast<size_t>(i)]);
        lab += x / A ? ";s)" : ";1)";
        labels.push_back(lab);
    }
    return FiniteGroup(static_cast<int>(n), std::move(mult), gens, labels);
}

FiniteGroup FiniteGroup::unipotent(int n, int p) {
    if (n < 2 || n > 5) throw contract_error("unipotent dimension must be in [2,5]");
    if (p < 2) throw contract_error("p must be at least 2");
    const int m = n * (n - 1) / 2;  // strictly-upper entries
    long size = 1;
    for (int i = 0; i < m; ++i) {
        size *= p;
        if (size > kMaxGroupSize) throw resource_error("unipotent group exceeds size budget");
    }
    // Entry slots (i,j), i<j, in row-major order.
    std::vector<std::pair<int, int>> slots;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) slots.emplace_back(i, j);
    auto decode = [&](long idx, std::vector<int>& mat) {
        std::fill(mat.begin(), mat.end(), 0);
        for (int i = 0; i < n; ++i) mat[static_cast<size_t>(i * n + i)] = 1;
        for (const auto& [r, c] : slots) {
            mat[static_cast<size_t>(r * n + c)] = static_cast<int>(idx % p);
            idx /= p;
        }
    };
    auto encode = [&](const std::vector<int>& mat) {
        long idx = 0, stride = 1;
        for (const auto& [r, c] : slots) {
            idx += mat[static_cast<size_t>(r * n + c)] * stride;
            stride *= p;
        }
        return idx;
    };
    std::vector<uint16_t> mult(static_cast<size_t>(size) * static_cast<size_t>(size));
    std::vector<int> ma(static_cast<size_t>(n * n)), mb(static_cast<size_t>(n * n)),
        mc(static_cast<size_t>(n * n), 0);
    for (long a = 0; a < size; ++a) {
        decode(a, ma);
        for (long b = 0; b < size; ++b) {
            decode(b, mb);
            for (int i = 0; i < n; ++i)
                for (int j = i; j < n; ++j) {
                    int s = 0;
                    for (int k = i; k <= j; ++k)
                        s += ma[static_cast<size_t>(i * n + k)] *
                             mb[static_cast<size_t>(k * n + j)];
                    mc[static_cast<size_t>(i * n + j)] = s % p;
                }
            mult[static_cast<size_t>(a) * static_cast<size_t>(size) +
                 static_cast<size_t>(b)] = static_cast<uint16_t>(encode(mc));
        }
    }
    std::vector<int> gens;
    std::vector<int> mat(static_cast<size_t>(n * n));
    for (int i = 0; i + 1 < n; ++i) {
        decode(0, mat);
        mat[static_cast<size_t>(i * n + (i + 1))] = 1;
        gens.push_back(static_cast<int>(encode(mat)));
    }
    return FiniteGroup(static_cast<int>(size), std::move(mult), gens);
}

int Subgroup::order() const {
    return static_cast<int>(std::count(members.begin(), members.end(), true));
}

Subgroup subgroup_closure(const FiniteGroup& G, const std::vector<int>& seed) {
    const int n = G.size();
    Subgroup H;
    H.members.assign(static_cast<size_t>(n), false);
    std::vector<int> queue;
    auto push = [&](int g) {
        if (!H.members[static_cast<size_t>(g)]) {
            H.members[static_cast<size_t>(g)] = true;
            queue.push_back(g);
        }
    };
    push(G.identity());
    for (int g : seed) {
        if (g < 0 || g >= n) throw contract_error("seed element out of range");
        push(g);
    }
    for (size_t head = 0; head < queue.size(); ++head) {
        int a = queue[head];
        size_t limit = queue.size();
        for (size_t i = 0; i < limit; ++i) {
            push(G.mul(a, queue[i]));
            push(G.mul(queue[i], a));
        }
    }
    return H;
}

FiniteGroup subgroup_as_group(const FiniteGroup& G, const Subgroup& H) {
    const int n = G.size();
    if (H.members.size() != static_cast<size_t>(n))
        throw contract_error("subgroup bitmask has wrong size");
    std::vector<int> elems;
    std::vector<int> pos(static_cast<size_t>(n), -1);
    for (int g = 0; g < n; ++g)
        if (H.contains(g)) {
            pos[static_cast<size_t>(g)] = static_cast<int>(elems.size());
            elems.push_back(g);
        }
    const int h = static_cast<int>(elems.size());
    std::vector<uint16_t> mult(static_cast<size_t>(h) * static_cast<size_t>(h));
    std::vector<std::string> labels;
    for (int a = 0; a < h; ++a) {
        labels.push_back(G.label(elems[static_cast<size_t>(a)]));
        for (int b = 0; b < h; ++b) {
            int prod = G.mul(elems[static_cast<size_t>(a)], elems[static_cast<size_t>(b)]);
            if (pos[static_cast<size_t>(prod)] < 0)
                throw contract_error("bitmask is not closed under multiplication");
            mult[static_cast<size_t>(a) * static_cast<size_t>(h) + static_cast<size_t>(b)] =
                static_cast<uint16_t>(pos[static_cast<size_t>(prod)]);
        }
    }
    return FiniteGroup(h, std::move(mult), {}, labels);
}

SubgroupLattice subgroup_lattice(const FiniteGroup& G) {
    const int n = G.size();
    if (n > 512) throw resource_error("subgroup lattice budget is |G| <= 512");
    // Cyclic subgroups, then saturate under join-with-cyclic.
    std::set<Subgroup> found;
    found.insert(subgroup_closure(G, {}));
    std::vector<Subgroup> cyclic;
    for (int g = 0; g < n; ++g) {
        Subgroup c = subgroup_closure(G, {g});
        if (found.insert(c).second) cyclic.push_back(c);
    }
    std::vector<Subgroup> work(found.begin(), found.end());
    for (size_t head = 0; head < work.size(); ++head) {
        for (const Subgroup& c : cyclic) {
            std::vector<int> seed;
            for (int g = 0; g < n; ++g)
                if (work[head].contains(g) || c.contains(g)) seed.push_back(g);
            Subgroup j = subgroup_closure(G, seed);
            if (found.insert(j).second) work.push_back(j);
        }
    }
    SubgroupLattice lat{std::vector<Subgroup>(found.begin(), found.end()),
                        FinitePoset(1, {true})};
    std::sort(lat.subgroups.begin(), lat.subgroups.end(),
              [](const Subgroup& a, const Subgroup& b) {
                  int oa = a.order(), ob = b.order();
                  if (oa != ob) return oa < ob;
                  return a.members < b.members;
              });
    const int m = static_cast<int>(lat.subgroups.size());
    std::vector<bool> leq(static_cast<size_t>(m) * static_cast<size_t>(m), false);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) {
            bool sub = true;
            for (int g = 0; g < n && sub; ++g)
                if (lat.subgroups[static_cast<size_t>(i)].contains(g) &&
                    !lat.subgroups[static_cast<size_t>(j)].contains(g))
                    sub = false;
            leq[static_cast<size_t>(i) * static_cast<size_t>(m) + static_cast<size_t>(j)] =
                sub;
        }
    lat.order = FinitePoset(m, std::move(leq));
    return lat;
}

std::vector<Integer> subgroup_mobius(const SubgroupLattice& lat) {
    auto mu = mobius_table(lat.order);
    const size_t m = lat.subgroups.size();
    std::vector<Integer> out(m);
    for (size_t i = 0; i < m; ++i) out[i] = mu[i][m - 1];
    return out;
}

Subgroup frattini(const FiniteGroup& G, int p) {
    if (p < 2) throw contract_error("p must be at least 2");
    std::vector<int> seed;
    for (int g = 0; g < G.size(); ++g) seed.push_back(G.pow(g, p));
    for (int a = 0; a < G.size(); ++a)
        for (int b = 0; b < G.size(); ++b) seed.push_back(G.commutator(a, b));
    return subgroup_closure(G, seed);
}

std::vector<Subgroup> zassenhaus_chain(const FiniteGroup& G, int p, int max_n) {
    if (p < 2) throw contract_error("p must be at least 2");
    if (max_n < 1) throw contract_error("max_n must be at least 1");
    std::vector<Subgroup> chain;
    Subgroup whole;
    whole.members.assign(static_cast<size_t>(G.size()), true);
    chain.push_back(whole);
    for (int n = 2; n <= max_n; ++n) {
        const Subgroup& power_src = chain[static_cast<size_t>((n + p - 1) / p - 1)];
        std::vector<int> seed;
        for (int g = 0; g < G.size(); ++g)
            if (power_src.contains(g)) seed.push_back(G.pow(g, p));
        for (int i = 1; i < n; ++i) {
            int j = n - i;
            const Subgroup& Gi = chain[static_cast<size_t>(i - 1)];
            const Subgroup& Gj = chain[static_cast<size_t>(j - 1)];
            for (int a = 0; a < G.size(); ++a) {
                if (!Gi.contains(a)) continue;
                for (int b = 0; b < G.size(); ++b)
                    if (Gj.contains(b)) seed.push_back(G.commutator(a, b));
            }
        }
        chain.push_back(subgroup_closure(G, seed));
    }
    return chain;
}

std::vector<int> chain_dimensions(const FiniteGroup& G, const std::vector<Subgroup>& chain,
                                  int p) {
    std::vector<int> dims;
    for (size_t i = 0; i + 1 < chain.size(); ++i) {
        int a = chain[i].order(), b = chain[i + 1].order();
        if (a % b != 0) throw data_error("chain terms are not nested");
        int q = a / b, e = 0;
        while (q % p == 0) {
            q /= p;
            ++e;
        }
        if (q != 1) throw data_error("chain quotient is not a p-power");
        dims.push_back(e);
    }
    return dims;
}

std::vector<Subgroup> lower_central_chain(const FiniteGroup& G) {
    std::vector<Subgroup> chain;
    Subgroup whole;
    whole.members.assign(static_cast<size_t>(G.size()), true);
    chain.push_back(whole);
    for (;;) {
        const Subgroup& prev = chain.back();
        std::vector<int> seed;
        for (int a = 0; a < G.size(); ++a) {
            if (!prev.contains(a)) continue;
            for (int b = 0; b < G.size(); ++b) seed.push_back(G.commutator(a, b));
        }
        Subgroup next = subgroup_closure(G, seed);
        if (next == prev) break;
        chain.push_back(next);
    }
    return chain;
}

namespace {

// Smallest k and lexicographically-first k-tuple of elements generating G.
std::vector<int> minimal_generating_tuple(const FiniteGroup& G) {
    const int n = G.size();
    if (n == 1) return {};
    std::vector<int> tuple;
    std::vector<int> candidates;
    for (int g = 0; g < n; ++g)
        if (g != G.identity()) candidates.push_back(g);
    for (int k = 1; k <= 4; ++k) {
        double work = 1;
        for (int i = 0; i < k; ++i) work *= static_cast<double>(candidates.size());
        if (work > (1 << 22))
            throw resource_error("generating-tuple search exceeds budget");
        std::vector<int> idx(static_cast<size_t>(k), 0);
        std::vector<int> pick(static_cast<size_t>(k));
        // combinations idx[0] < idx[1] < ...
        for (int i = 0; i < k; ++i) idx[static_cast<size_t>(i)] = i;
        if (k > static_cast<int>(candidates.size())) continue;
        for (;;) {
            for (int i = 0; i < k; ++i)
                pick[static_cast<size_t>(i)] = candidates[static_cast<size_t>(
                    idx[static_cast<size_t>(i)])];
            if (subgroup_closure(G, pick).order() == n) return pick;
            int i = k - 1;
            while (i >= 0 &&
                   idx[static_cast<size_t>(i)] ==
                       static_cast<int>(candidates.size()) - k + i)
                --i;
            if (i < 0) break;
            ++idx[static_cast<size_t>(i)];
            for (int j = i + 1; j < k; ++j)
                idx[static_cast<size_t>(j)] = idx[static_cast<size_t>(j - 1)] + 1;
        }
    }
    throw resource_error("no generating tuple of size <= 4");
}

} // namespace

Integer automorphism_count(const FiniteGroup& G) {
    const int n = G.size();
    if (n > 1024) throw resource_error("automorphism count budget is |G| <= 1024");
    if (n == 1) return 1;
    std::vector<int> gens = minimal_generating_tuple(G);
    const int k = static_cast<int>(gens.size());

    // BFS word table: every element as (previous element) * (some generator).
    std::vector<int> parent(static_cast<size_t>(n), -1), via(static_cast<size_t>(n), -1);
    std::vector<int> order_bfs;
    parent[static_cast<size_t>(G.identity())] = G.identity();
    order_bfs.push_back(G.identity());
    for (size_t head = 0; head < order_bfs.size(); ++head)
        for (int gi = 0; gi < k; ++gi) {
            int next = G.mul(order_bfs[head], gens[static_cast<size_t>(gi)]);
            if (parent[static_cast<size_t>(next)] < 0) {
                parent[static_cast<size_t>(next)] = order_bfs[head];
                via[static_cast<size_t>(next)] = gi;
                order_bfs.push_back(next);
            }
        }
    if (order_bfs.size() != static_cast<size_t>(n))
        throw data_error("generating tuple failed to reach all elements");

    std::vector<int> gen_order(static_cast<size_t>(k));
    for (int i = 0; i < k; ++i)
        gen_order[static_cast<size_t>(i)] = G.element_order(gens[static_cast<size_t>(i)]);
    // Per-slot image candidates: same element order (a necessary condition).
    std::vector<std::vector<int>> candidates(static_cast<size_t>(k));
    for (int i = 0; i < k; ++i)
        for (int g = 0; g < n; ++g)
            if (G.element_order(g) == gen_order[static_cast<size_t>(i)])
                candidates[static_cast<size_t>(i)].push_back(g);

    Integer count = 0;
    std::vector<int> image(static_cast<size_t>(k));
    std::vector<int> phi(static_cast<size_t>(n));
    std::vector<bool> hit(static_cast<size_t>(n));
    std::vector<size_t> pos(static_cast<size_t>(k), 0);
    int depth = 0;
    while (depth >= 0) {
        if (depth == k) {
            // Build phi along the BFS word table, then verify.
            std::fill(hit.begin(), hit.end(), false);
            phi[static_cast<size_t>(G.identity())] = G.identity();
            hit[static_cast<size_t>(G.identity())] = true;
            bool ok = true;
            for (size_t i = 1; i < order_bfs.size() && ok; ++i) {
                int e = order_bfs[i];
                int img = G.mul(phi[static_cast<size_t>(parent[static_cast<size_t>(e)])],
                                image[static_cast<size_t>(via[static_cast<size_t>(e)])]);
                phi[static_cast<size_t>(e)] = img;
                if (hit[static_cast<size_t>(img)]) ok = false;  // not injective
                hit[static_cast<size_t>(img)] = true;
            }
            for (int a = 0; a < n && ok; ++a)
                for (int b = 0; b < n; ++b)
                    if (phi[static_cast<size_t>(G.mul(a, b))] !=
                        G.mul(phi[static_cast<size_t>(a)], phi[static_cast<size_t>(b)])) {
                        ok = false;
                        break;
                    }
            if (ok) ++count;
            --depth;
            continue;
        }
        auto& cand = candidates[static_cast<size_t>(depth)];
        if (pos[static_cast<size_t>(depth)] >= cand.size()) {
            pos[static_cast<size_t>(depth)] = 0;
            --depth;
            continue;
        }
        image[static_cast<size_t>(depth)] = cand[pos[static_cast<size_t>(depth)]++];
        ++depth;
    }
    return count;
}

RelationWord RelationWord::gen(int symbol, long exponent) {
    if (symbol < 0) throw contract_error("symbol index must be >= 0");
    RelationWord w;
    w.kind = Kind::Gen;
    w.symbol = symbol;
    w.exponent = exponent;
    return w;
}

RelationWord RelationWord::commutator(RelationWord a, RelationWord b) {
    RelationWord w;
    w.kind = Kind::Commutator;
    w.children.push_back(std::move(a));
    w.children.push_back(std::move(b));
    return w;
}

RelationWord RelationWord::concat(std::vector<RelationWord> parts) {
    RelationWord w;
    w.kind = Kind::Concat;
    w.children = std::move(parts);
    return w;
}

int RelationWord::arity() const {
    if (kind == Kind::Gen) return symbol + 1;
    int m = 0;
    for (const auto& c : children) m = std::max(m, c.arity());
    return m;
}

int RelationWord::eval(const FiniteGroup& G, const std::vector<int>& assignment) const {
    switch (kind) {
        case Kind::Gen: {
            if (static_cast<size_t>(symbol) >= assignment.size())
                throw contract_error("assignment too short for word");
            return G.pow(assignment[static_cast<size_t>(symbol)], exponent);
        }
        case Kind::Commutator: {
            int a = children[0].eval(G, assignment);
            int b = children[1].eval(G, assignment);
            return G.commutator(a, b);
        }
        case Kind::Concat: {
            int r = G.identity();
            for (const auto& c : children) r = G.mul(r, c.eval(G, assignment));
            return r;
        }
    }
    throw data_error("unreachable word kind");
}

std::string RelationWord::str() const {
    switch (kind) {
        case Kind::Gen: {
            std::string s = "x" + std::to_string(symbol + 1);
            if (exponent != 1) s += "^" + std::to_string(exponent);
            return s;
        }
        case Kind::Commutator:
            return "[" + children[0].str() + "," + children[1].str() + "]";
        case Kind::Concat: {
            std::string s;
            for (const auto& c : children) {
                if (!s.empty()) s += "*";
                s += c.str();
            }
            return s.empty() ? "1" : s;
        }
    }
    throw data_error("unreachable word kind");
}

Integer count_word_solutions(const FiniteGroup& G, const RelationWord& word) {
    const int k = word.arity();
    const int n = G.size();
    double budget = 1;
    for (int i = 0; i < k; ++i) {
        budget *= static_cast<double>(n);
        if (budget > static_cast<double>(1 << 26))
            throw resource_error("word-solution budget is |G|^arity <= 2^26");
    }
    Integer count = 0;
    std::vector<int> assign(static_cast<size_t>(k), 0);
    for (;;) {
        if (word.eval(G, assign) == G.identity()) ++count;
        int i = 0;
        while (i < k && ++assign[static_cast<size_t>(i)] == n) {
            assign[static_cast<size_t>(i)] = 0;
            ++i;
        }
        if (i == k) break;
    }
    return count;
}

} // namespace zfilt
