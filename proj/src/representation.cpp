#include "plactic/representation.hpp"

#include <algorithm>
#include <unordered_map>

namespace plactic {

Representation::Representation(int n) : n_(n) {
    if (n < 1) throw std::invalid_argument("Representation: rank must be positive");
    if (n > 8) throw std::invalid_argument("Representation: rank capped at 8 (dimension 2^n)");
    for (int k = n; k >= 0; --k) {
        BlockOrder block(n, k);
        for (const Subset& S : block.sequence()) order_.push_back(S);
    }

    empty_ = TropMatrix(order_);
    int d = empty_.dim();
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) {
            const Subset& P = std::get<Subset>(order_[i]);
            const Subset& Q = std::get<Subset>(order_[j]);
            if (P.card() == Q.card() && subset_leq(P, Q)) empty_.at(i, j) = TropValue(0);
        }

    for (int x = 1; x <= n; ++x) {
        TropMatrix G(order_);
        for (int i = 0; i < d; ++i)
            for (int j = 0; j < d; ++j) {
                const Subset& P = std::get<Subset>(order_[i]);
                const Subset& Q = std::get<Subset>(order_[j]);
                if (P.card() != Q.card() || !subset_leq(P, Q)) continue;
                G.at(i, j) = TropValue(interval_union(P, Q).contains(x) ? 1 : 0);
            }
        gens_.push_back(std::move(G));
    }
}

const TropMatrix& Representation::generator(int x) const {
    if (x < 1 || x > n_) throw std::invalid_argument("generator: letter outside [n]");
    return gens_[x - 1];
}

TropMatrix Representation::represent(const Word& w) const {
    if (w.n != n_) throw std::invalid_argument("represent: rank mismatch");
    TropMatrix M = empty_;
    for (int x : w.letters) M = mat_mul(M, generator(x));
    return M;
}

Tableau Representation::decode(const TropMatrix& M) const {
    if (M.dim() != static_cast<int>(order_.size()))
        throw std::invalid_argument("decode: dimension mismatch");
    // position lookup by subset mask
    std::unordered_map<uint32_t, int> pos;
    for (size_t i = 0; i < order_.size(); ++i)
        pos[std::get<Subset>(order_[i]).mask()] = static_cast<int>(i);

    // N(k,m) = number of entries from [m] in the bottom k rows, read off the
    // matrix at position ([k], hat[k]_m); extended by N(k,m) = N(m,m) for
    // k > m and zero at k = 0 or m = 0.
    std::vector<std::vector<long>> N(n_ + 1, std::vector<long>(n_ + 1, 0));
    for (int m = 1; m <= n_; ++m) {
        for (int k = 1; k <= m; ++k) {
            int i = pos.at(Subset::initial(n_, k).mask());
            int j = pos.at(Subset::final_of(n_, k, m).mask());
            const TropValue& e = M.at(i, j);
            if (e.is_neg_inf()) throw not_in_image("decode: -inf at a row-count position");
            N[k][m] = e.value();
        }
        for (int k = m + 1; k <= n_; ++k) N[k][m] = N[m][m];
    }

    TabParams p;
    p.n = n_;
    for (int k = 1; k <= n_; ++k)
        for (int m = k; m <= n_; ++m) {
            long c = N[k][m] - N[k - 1][m] - N[k][m - 1] + N[k - 1][m - 1];
            if (c < 0) throw not_in_image("decode: negative multiplicity for symbol " +
                                          std::to_string(m) + " in row " + std::to_string(k));
            if (c > 0) p.set(k, m, c);
        }
    try {
        return from_parameters(p);
    } catch (const invalid_parameters& e) {
        throw not_in_image(std::string("decode: parameters do not form a tableau: ") + e.what());
    }
}

TropMatrix generator(int n, int x) { return Representation(n).generator(x); }
TropMatrix empty_word_matrix(int n) { return Representation(n).empty_word_matrix(); }
TropMatrix represent(int n, const Word& w) { return Representation(n).represent(w); }
Tableau decode(const TropMatrix& M, int n) { return Representation(n).decode(M); }

long max_readable(const Word& w, const Subset& P, const Subset& Q) {
    if (P.card() != Q.card() || !subset_leq(P, Q))
        throw std::invalid_argument("max_readable: requires |P| = |Q| and P <= Q");
    std::vector<Subset> interval = interval_members(P, Q);
    int m = static_cast<int>(interval.size());
    std::vector<std::vector<bool>> leq(m, std::vector<bool>(m));
    for (int a = 0; a < m; ++a)
        for (int b = 0; b < m; ++b) leq[a][b] = subset_leq(interval[a], interval[b]);

    // dp[b] = longest readable scattered subword of the processed prefix
    // whose witness chain ends at some set <= interval[b]
    std::vector<long> dp(m, 0);
    for (int x : w.letters) {
        std::vector<long> picked(m, -1);
        for (int b = 0; b < m; ++b)
            if (interval[b].contains(x)) picked[b] = dp[b] + 1;
        for (int b = 0; b < m; ++b) {
            long best = dp[b];
            for (int a = 0; a < m; ++a)
                if (leq[a][b] && picked[a] > best) best = picked[a];
            dp[b] = best;
        }
    }
    long best = 0;
    for (long v : dp) best = std::max(best, v);
    return best;
}

TropMatrix represent_singleton(int n, const Word& w) {
    if (w.n != n) throw std::invalid_argument("represent_singleton: rank mismatch");
    TropMatrix M = TropMatrix::square(n);
    for (int p = 1; p <= n; ++p)
        for (int q = p; q <= n; ++q) {
            // longest non-decreasing scattered subword with letters in [p,q]
            std::vector<long> ending(n + 1, 0);  // best length ending with letter v
            for (int c : w.letters) {
                if (c < p || c > q) continue;
                long best = 0;
                for (int v = p; v <= c; ++v) best = std::max(best, ending[v]);
                ending[c] = std::max(ending[c], best + 1);
            }
            long best = 0;
            for (int v = p; v <= q; ++v) best = std::max(best, ending[v]);
            M.at(p - 1, q - 1) = TropValue(best);
        }
    return M;
}

std::string ABCDReport::to_string() const {
    if (ok) return "ok";
    return std::string("condition (") + condition + ") fails at (i=" + std::to_string(i) +
           ", j=" + std::to_string(j) + ")";
}

static long entry_checked(const TropMatrix& X, int i, int j) {
    const TropValue& e = X.at(i - 1, j - 1);
    if (e.is_neg_inf())
        throw std::invalid_argument("check_ABCD: -inf entry on or above the diagonal");
    if (e.value() < 0)
        throw std::invalid_argument("check_ABCD: negative entry on or above the diagonal");
    return e.value();
}

ABCDReport check_ABCD(const TropMatrix& X) {
    int n = X.dim();
    if (!is_upper_triangular(X))
        throw std::invalid_argument("check_ABCD: matrix is not upper triangular");
    for (int i = 1; i <= n; ++i)
        for (int j = i; j <= n; ++j) entry_checked(X, i, j);

    ABCDReport r;
    long diag = 0, super = 0;
    for (int i = 1; i <= n; ++i) diag += entry_checked(X, i, i);
    for (int i = 1; i < n; ++i) super += entry_checked(X, i, i + 1);
    if (diag < super) {
        r = {false, 'A', 0, 0};
        return r;
    }
    for (int i = 1; i < n; ++i)
        for (int j = i; j < n; ++j)
            if (entry_checked(X, i, j + 1) < entry_checked(X, i, j)) return {false, 'B', i, j};
    for (int i = 2; i <= n; ++i)
        for (int j = i; j <= n; ++j)
            if (entry_checked(X, i - 1, j) < entry_checked(X, i, j)) return {false, 'C', i, j};
    for (int i = 1; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (entry_checked(X, i, j) + entry_checked(X, i + 1, j + 1) <
                entry_checked(X, i, j + 1) + entry_checked(X, i + 1, j))
                return {false, 'D', i, j};
    return r;
}

bool satisfies_ABCD(const TropMatrix& X) { return check_ABCD(X).ok; }

Tableau decode_triangular(const TropMatrix& X) {
    ABCDReport rep = check_ABCD(X);
    if (!rep.ok)
        throw std::invalid_argument("decode_triangular: " + rep.to_string());
    int n = X.dim();

    // f(x,y) = sum_{i=1}^{x} X_{i, y-x+i}
    auto f = [&](int x, int y) {
        long s = 0;
        for (int i = 1; i <= x; ++i) s += X.at(i - 1, y - x + i - 1).value();
        return s;
    };

    TabParams p;
    p.n = n;
    for (int x = 1; x <= n; ++x)
        for (int y = x; y <= n; ++y) {
            long v = (x == y) ? f(x, x) - f(x - 1, x)
                              : f(x, y) - f(x - 1, y) - f(x, y - 1) + f(x - 1, y - 1);
            if (v < 0)
                throw std::logic_error("decode_triangular: negative parameter despite (A)-(D)");
            if (v > 0) p.set(x, y, v);
        }
    for (int x = 1; x < n; ++x)
        for (int y = x + 1; y < n; ++y)
            if (p.get(x + 1, y + 1) < p.get(x, y))
                throw std::logic_error(
                    "decode_triangular: parameter monotonicity violated internally");
    try {
        return from_parameters(p);
    } catch (const invalid_parameters& e) {
        throw std::logic_error(std::string("decode_triangular: invalid parameters despite (A)-(D): ") +
                               e.what());
    }
}

long imentries_formula(const TabParams& p, int row, int col) {
    int n = p.n;
    if (row < 1 || row > col || col > n)
        throw std::invalid_argument("imentries_formula: bad (p,q)");
    for (int x = 1; x < n; ++x)
        for (int y = x + 1; y < n; ++y)
            if (p.get(x + 1, y + 1) < p.get(x, y))
                throw std::invalid_argument(
                    "imentries_formula: hypothesis i_{x+1,y+1} >= i_{x,y} fails at (x=" +
                    std::to_string(x) + ", y=" + std::to_string(y) + ")");
    long s = 0;
    for (int j = row; j <= col - 1; ++j) s += p.get(row, j);
    for (int j = 1; j <= row; ++j)
        if (j <= col) s += p.get(j, col);
    return s;
}

}  // namespace plactic
