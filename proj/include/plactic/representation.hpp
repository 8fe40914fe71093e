#pragma once

#include <optional>
#include <string>

#include "plactic/subset.hpp"
#include "plactic/tableau.hpp"
#include "plactic/tropical.hpp"

namespace plactic {

struct not_in_image : std::runtime_error {
    explicit not_in_image(const std::string& what) : std::runtime_error(what) {}
};

/// The representation of the rank-n plactic monoid by matrices indexed by
/// 2^[n]. The global row/column order concatenates the colex block orders
/// for cardinalities n down to 0; generator matrices are cached.
class Representation {
public:
    explicit Representation(int n);

    int n() const { return n_; }
    const std::vector<Label>& global_order() const { return order_; }

    const TropMatrix& generator(int x) const;
    const TropMatrix& empty_word_matrix() const { return empty_; }
    TropMatrix represent(const Word& w) const;

    /// Rebuild the tableau from its image matrix. Throws not_in_image when
    /// the matrix is not the image of a word.
    Tableau decode(const TropMatrix& M) const;

private:
    int n_;
    std::vector<Label> order_;
    std::vector<TropMatrix> gens_;  // index x-1
    TropMatrix empty_;
};

/// Convenience wrappers building a Representation per call.
TropMatrix generator(int n, int x);
TropMatrix empty_word_matrix(int n);
TropMatrix represent(int n, const Word& w);
Tableau decode(const TropMatrix& M, int n);

/// The maximum length of a scattered subword of w readable from P to Q.
/// Independent dynamic program over the order interval [P,Q]; never calls
/// matrix code, so it can serve as an oracle for represent's entries.
long max_readable(const Word& w, const Subset& P, const Subset& Q);

/// The singleton-set block of the representation, reindexed by [n].
/// Entry (p,q) is the maximum length of a non-decreasing scattered subword
/// of w with letters in [p,q]; computed directly.
TropMatrix represent_singleton(int n, const Word& w);

/// Report of the first violated (A)-(D) condition of an upper triangular
/// matrix with non-negative integer entries on and above the diagonal.
struct ABCDReport {
    bool ok = true;
    char condition = 0;  // 'A', 'B', 'C' or 'D'
    int i = 0, j = 0;
    std::string to_string() const;
};

ABCDReport check_ABCD(const TropMatrix& X);
bool satisfies_ABCD(const TropMatrix& X);

/// Inverse of represent_singleton on matrices passing (A)-(D).
Tableau decode_triangular(const TropMatrix& X);

/// rho(T)_{p,q} = sum_{j=p}^{q-1} i_{p,j} + sum_{j=1}^{p} i_{j,q}, valid
/// when the parameters satisfy i_{x+1,y+1} >= i_{x,y} for 1 <= x < y < n.
long imentries_formula(const TabParams& p, int row, int col);

}  // namespace plactic
