#include "plactic/tableau.hpp"

#include <algorithm>

namespace plactic {

Word::Word(int rank, std::vector<int> ls) : n(rank), letters(std::move(ls)) {
    if (n < 1) throw std::invalid_argument("Word: rank must be positive");
    for (int x : letters)
        if (x < 1 || x > n) throw std::invalid_argument("Word: letter outside [n]");
}

Word Word::from_digits(int rank, const std::string& digits) {
    if (rank > 9) throw std::invalid_argument("Word::from_digits: digit form needs n <= 9");
    std::vector<int> ls;
    ls.reserve(digits.size());
    for (size_t pos = 0; pos < digits.size(); ++pos) {
        char c = digits[pos];
        if (c < '1' || c > '9')
            throw std::invalid_argument("Word::from_digits: bad character at position " +
                                        std::to_string(pos));
        ls.push_back(c - '0');
    }
    return Word(rank, std::move(ls));
}

std::string Word::to_string() const {
    std::string s;
    for (int x : letters) {
        if (n > 9 && !s.empty()) s += ' ';
        s += std::to_string(x);
    }
    return s;
}

std::vector<long> content(const Word& w) {
    std::vector<long> c(w.n, 0);
    for (int x : w.letters) ++c[x - 1];
    return c;
}

Tableau::Tableau(int n, std::vector<std::vector<int>> rows_bottom_up)
    : n_(n), rows_(std::move(rows_bottom_up)) {
    if (n < 1) throw std::invalid_argument("Tableau: rank must be positive");
    validate();
}

void Tableau::validate() const {
    for (size_t r = 0; r < rows_.size(); ++r) {
        const auto& row = rows_[r];
        if (row.empty()) throw std::invalid_argument("Tableau: empty row");
        if (r > 0 && row.size() > rows_[r - 1].size())
            throw std::invalid_argument("Tableau: row longer than the row below");
        for (size_t c = 0; c < row.size(); ++c) {
            if (row[c] < 1 || row[c] > n_)
                throw std::invalid_argument("Tableau: entry outside [n]");
            if (c > 0 && row[c] < row[c - 1])
                throw std::invalid_argument("Tableau: row not weakly increasing");
            if (r > 0 && row[c] <= rows_[r - 1][c])
                throw std::invalid_argument("Tableau: column not strictly increasing");
        }
    }
}

std::string Tableau::to_string() const {
    std::string s;
    for (auto it = rows_.rbegin(); it != rows_.rend(); ++it) {
        for (size_t c = 0; c < it->size(); ++c) {
            if (c > 0) s += ' ';
            s += std::to_string((*it)[c]);
        }
        s += '\n';
    }
    return s;
}

Tableau row_insert(const Tableau& T, int x) {
    if (x < 1 || x > T.n()) throw std::invalid_argument("row_insert: letter outside [n]");
    Tableau out = T;
    int carry = x;
    for (size_t r = 0; r < out.rows_.size(); ++r) {
        auto& row = out.rows_[r];
        // bump the leftmost entry strictly greater than carry
        auto it = std::upper_bound(row.begin(), row.end(), carry);
        if (it == row.end()) {
            row.push_back(carry);
            return out;
        }
        std::swap(carry, *it);
    }
    out.rows_.push_back({carry});
    return out;
}

Tableau from_word(const Word& w) {
    Tableau T(w.n);
    for (int x : w.letters) T = row_insert(T, x);
    return T;
}

Word column_reading(const Tableau& T) {
    std::vector<int> ls;
    size_t ncols = T.empty() ? 0 : T.rows()[0].size();
    for (size_t c = 0; c < ncols; ++c) {
        for (size_t r = T.num_rows(); r-- > 0;) {
            if (c < T.rows()[r].size()) ls.push_back(T.rows()[r][c]);
        }
    }
    return Word(T.n(), std::move(ls));
}

Word row_reading(const Tableau& T) {
    std::vector<int> ls;
    for (size_t r = T.num_rows(); r-- > 0;)
        for (int x : T.rows()[r]) ls.push_back(x);
    return Word(T.n(), std::move(ls));
}

Tableau multiply(const Tableau& T1, const Tableau& T2) {
    if (T1.n() != T2.n()) throw std::invalid_argument("multiply: rank mismatch");
    Tableau out = T1;
    for (int x : column_reading(T2).letters) out = row_insert(out, x);
    return out;
}

bool knuth_equivalent(const Word& u, const Word& v) {
    if (u.n != v.n) throw std::invalid_argument("knuth_equivalent: rank mismatch");
    return from_word(u) == from_word(v);
}

void TabParams::set(int x, int y, long v) {
    if (x < 1 || x > y || y > n) throw std::invalid_argument("TabParams: bad (x,y)");
    if (v < 0) throw std::invalid_argument("TabParams: negative count");
    if (v == 0)
        i.erase({x, y});
    else
        i[{x, y}] = v;
}

bool operator==(const TabParams& a, const TabParams& b) {
    return a.n == b.n && a.i == b.i;
}

TabParams parameters(const Tableau& T) {
    TabParams p;
    p.n = T.n();
    for (size_t r = 0; r < T.num_rows(); ++r)
        for (int y : T.rows()[r]) {
            int x = static_cast<int>(r) + 1;
            p.set(x, y, p.get(x, y) + 1);
        }
    return p;
}

Tableau from_parameters(const TabParams& p) {
    int n = p.n;
    if (n < 1) throw std::invalid_argument("from_parameters: rank must be positive");
    for (auto& [xy, v] : p.i) {
        auto [x, y] = xy;
        if (x < 1 || x > y || y > n || v < 0)
            throw std::invalid_argument("from_parameters: malformed parameter family");
    }
    for (int x = 1; x < n; ++x) {
        for (int t = 0; t < n - x; ++t) {
            long lhs = 0, rhs = 0;
            for (int y = x; y <= x + t; ++y) lhs += p.get(x, y);
            for (int y = x + 1; y <= x + t + 1; ++y) rhs += p.get(x + 1, y);
            if (lhs < rhs) throw invalid_parameters(x, t);
        }
    }
    std::vector<std::vector<int>> rows;
    for (int x = 1; x <= n; ++x) {
        std::vector<int> row;
        for (int y = x; y <= n; ++y)
            for (long c = 0; c < p.get(x, y); ++c) row.push_back(y);
        if (row.empty()) break;
        rows.push_back(std::move(row));
    }
    return Tableau(n, std::move(rows));
}

}  // namespace plactic
