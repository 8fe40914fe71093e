#include "plactic/subset.hpp"

#include <algorithm>

namespace plactic {

int Subset::element(int i) const {
    if (i < 1 || i > card()) throw std::out_of_range("Subset::element: index out of range");
    uint32_t m = mask_;
    for (int j = 1; j < i; ++j) m &= m - 1;  // clear lowest set bit
    return __builtin_ctz(m) + 1;
}

std::vector<int> Subset::members() const {
    std::vector<int> out;
    out.reserve(card());
    for (int x = 1; x <= n_; ++x)
        if (contains(x)) out.push_back(x);
    return out;
}

std::string Subset::to_string() const {
    std::string s = "{";
    bool first = true;
    for (int x : members()) {
        if (!first) s += ",";
        s += std::to_string(x);
        first = false;
    }
    return s + "}";
}

Subset Subset::initial(int n, int k) {
    if (k < 0 || k > n) throw std::invalid_argument("Subset::initial: k out of range");
    return Subset::from_mask(n, k == 0 ? 0u : ((1u << k) - 1));
}

Subset Subset::final_of(int n, int k, int m) {
    if (k < 0 || k > m || m > n) throw std::invalid_argument("Subset::final_of: bad (k,m)");
    uint32_t mask = k == 0 ? 0u : (((1u << k) - 1) << (m - k));
    return Subset::from_mask(n, mask);
}

bool subset_leq(const Subset& S, const Subset& T) {
    if (S.n() != T.n()) throw std::invalid_argument("subset_leq: mismatched ambient rank");
    if (S.card() < T.card()) return false;
    for (int i = 1; i <= T.card(); ++i)
        if (S.element(i) > T.element(i)) return false;
    return true;
}

int row_number(int x, const Subset& S) {
    if (!S.contains(x)) throw std::invalid_argument("row_number: element not in set");
    int i = 0;
    for (int y = 1; y <= x; ++y)
        if (S.contains(y)) ++i;
    return i;
}

Subset interval_union(const Subset& P, const Subset& Q) {
    if (P.n() != Q.n()) throw std::invalid_argument("interval_union: mismatched ambient rank");
    if (P.card() != Q.card() || !subset_leq(P, Q))
        throw std::invalid_argument("interval_union: requires |P| = |Q| and P <= Q");
    uint32_t mask = 0;
    int k = P.card();
    for (int i = 1; i <= k; ++i) {
        int lo = P.element(i), hi = Q.element(i);
        for (int x = lo; x <= hi; ++x) mask |= (1u << (x - 1));
    }
    return Subset::from_mask(P.n(), mask);
}

std::vector<Subset> interval_members(const Subset& P, const Subset& Q) {
    if (P.n() != Q.n()) throw std::invalid_argument("interval_members: mismatched ambient rank");
    if (P.card() != Q.card() || !subset_leq(P, Q))
        throw std::invalid_argument("interval_members: requires |P| = |Q| and P <= Q");
    std::vector<Subset> out;
    int n = P.n(), k = P.card();
    // Any S with P <= S <= Q has cardinality exactly k.
    std::vector<int> cur(k);
    // Recursive enumeration of increasing sequences with P^i <= S^i <= Q^i,
    // then filter by the actual order relation.
    std::vector<int> stack;
    auto rec = [&](auto&& self, int i, int prev) -> void {
        if (i == k) {
            Subset S(n, cur);
            if (subset_leq(P, S) && subset_leq(S, Q)) out.push_back(S);
            return;
        }
        for (int x = std::max(prev + 1, P.element(i + 1)); x <= Q.element(i + 1); ++x) {
            cur[i] = x;
            self(self, i + 1, x);
        }
    };
    if (k == 0) {
        out.push_back(Subset::from_mask(n, 0u));
    } else {
        rec(rec, 0, 0);
    }
    return out;
}

Subset completion(const Subset& S, int k, int m) {
    int n = S.n();
    if (!(S.card() <= k && k <= m && m <= n))
        throw std::invalid_argument("completion: requires |S| <= k <= m <= n");
    for (int x : S.members())
        if (x > m) throw std::invalid_argument("completion: S not contained in [m]");
    uint32_t mask = S.mask();
    int need = k - S.card();
    for (int x = m; x >= 1 && need > 0; --x) {
        if (!(mask & (1u << (x - 1)))) {
            mask |= (1u << (x - 1));
            --need;
        }
    }
    return Subset::from_mask(n, mask);
}

BlockOrder::BlockOrder(int n, int k) : n_(n), k_(k) {
    if (k < 0 || k > n) throw std::invalid_argument("BlockOrder: k out of range");
    for (uint32_t mask = 0; mask < (1u << n); ++mask)
        if (__builtin_popcount(mask) == k) seq_.push_back(Subset::from_mask(n, mask));
    // Colexicographic: compare largest elements first. For bitmasks this is
    // simply numeric order, which the mask loop already produces.
}

long block_chain_length(int n, int k) {
    if (k < 0 || k > n) throw std::invalid_argument("block_chain_length: k out of range");
    return static_cast<long>(k) * (n - k) + 1;
}

long chain_length_bound(int n) {
    if (n < 1) throw std::invalid_argument("chain_length_bound: n must be positive");
    return static_cast<long>(n) * n / 4 + 1;
}

}  // namespace plactic
