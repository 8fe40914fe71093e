#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace plactic {

/// A word over the alphabet [n].
struct Word {
    int n = 0;
    std::vector<int> letters;

    Word() = default;
    Word(int rank, std::vector<int> ls);
    /// Parse a digit string ("542152153123"); requires n <= 9.
    static Word from_digits(int rank, const std::string& digits);

    size_t size() const { return letters.size(); }
    std::string to_string() const;

    friend bool operator==(const Word& a, const Word& b) {
        return a.n == b.n && a.letters == b.letters;
    }
};

/// Letter multiplicities of a word, index x-1 for letter x.
std::vector<long> content(const Word& w);

/// A semi-standard Young tableau over [n], rows stored bottom-up: rows[0]
/// is row 1 (the longest row at the bottom). Rows weakly increase left to
/// right; columns strictly increase upward; row lengths weakly decrease
/// upward.
class Tableau {
public:
    explicit Tableau(int n) : n_(n) {
        if (n < 1) throw std::invalid_argument("Tableau: rank must be positive");
    }
    Tableau(int n, std::vector<std::vector<int>> rows_bottom_up);

    int n() const { return n_; }
    const std::vector<std::vector<int>>& rows() const { return rows_; }
    bool empty() const { return rows_.empty(); }
    size_t num_rows() const { return rows_.size(); }

    friend bool operator==(const Tableau& a, const Tableau& b) {
        return a.n_ == b.n_ && a.rows_ == b.rows_;
    }
    friend bool operator!=(const Tableau& a, const Tableau& b) { return !(a == b); }

    std::string to_string() const;

private:
    void validate() const;
    friend Tableau row_insert(const Tableau& T, int x);

    int n_;
    std::vector<std::vector<int>> rows_;
};

/// Schensted row insertion of a single letter.
Tableau row_insert(const Tableau& T, int x);

/// Left fold of row_insert over the letters of w.
Tableau from_word(const Word& w);

Word column_reading(const Tableau& T);
Word row_reading(const Tableau& T);

/// Plactic product: insert the column reading of T2 into T1.
Tableau multiply(const Tableau& T1, const Tableau& T2);

/// True iff u and v have the same Schensted tableau.
bool knuth_equivalent(const Word& u, const Word& v);

/// The parameter family i_{x,y} = multiplicity of symbol y in row x,
/// for 1 <= x <= y <= n. A complete invariant of the tableau.
struct TabParams {
    int n = 0;
    std::map<std::pair<int, int>, long> i;  // keys (x,y) with x <= y, zero entries omitted

    long get(int x, int y) const {
        auto it = i.find({x, y});
        return it == i.end() ? 0 : it->second;
    }
    void set(int x, int y, long v);

    friend bool operator==(const TabParams& a, const TabParams& b);
};

struct invalid_parameters : std::invalid_argument {
    int x, t;
    invalid_parameters(int x_, int t_)
        : std::invalid_argument("tableau parameter inequality fails at (x=" +
                                std::to_string(x_) + ", t=" + std::to_string(t_) + ")"),
          x(x_), t(t_) {}
};

TabParams parameters(const Tableau& T);
/// Inverse of parameters; throws invalid_parameters naming the failing
/// inequality when the family does not define a tableau.
Tableau from_parameters(const TabParams& p);

}  // namespace plactic
