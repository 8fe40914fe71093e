#pragma once

#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "plactic/subset.hpp"

namespace plactic {

struct arithmetic_overflow : std::runtime_error {
    arithmetic_overflow() : std::runtime_error("tropical arithmetic overflow") {}
};

/// An element of Z u {-inf} with exact checked arithmetic.
class TropValue {
public:
    TropValue() : finite_(false), v_(0) {}
    TropValue(int64_t v) : finite_(true), v_(v) {}  // NOLINT: implicit by design

    static TropValue neg_inf() { return TropValue(); }

    bool is_neg_inf() const { return !finite_; }
    bool finite() const { return finite_; }
    int64_t value() const {
        if (!finite_) throw std::logic_error("TropValue: value of -inf");
        return v_;
    }

    friend bool operator==(const TropValue& a, const TropValue& b) {
        if (a.finite_ != b.finite_) return false;
        return !a.finite_ || a.v_ == b.v_;
    }
    friend bool operator!=(const TropValue& a, const TropValue& b) { return !(a == b); }
    friend bool operator<(const TropValue& a, const TropValue& b) {
        if (!a.finite_) return b.finite_;
        if (!b.finite_) return false;
        return a.v_ < b.v_;
    }

    std::string to_string() const { return finite_ ? std::to_string(v_) : "-inf"; }

private:
    bool finite_;
    int64_t v_;
};

/// a (+) b = max(a, b)
inline TropValue trop_add(const TropValue& a, const TropValue& b) {
    return a < b ? b : a;
}

/// a (x) b = a + b, with -inf absorbing; overflow is a hard error.
inline TropValue trop_mul(const TropValue& a, const TropValue& b) {
    if (a.is_neg_inf() || b.is_neg_inf()) return TropValue::neg_inf();
    int64_t out;
    if (__builtin_add_overflow(a.value(), b.value(), &out)) throw arithmetic_overflow();
    return TropValue(out);
}

/// Row/column label of a tropical matrix: a plain integer or a subset of [n].
using Label = std::variant<int, Subset>;

bool label_eq(const Label& a, const Label& b);
std::string label_to_string(const Label& a);

/// A square matrix over Z u {-inf} with an explicit ordered label list.
class TropMatrix {
public:
    TropMatrix() = default;
    TropMatrix(std::vector<Label> labels, TropValue fill = TropValue::neg_inf());

    int dim() const { return static_cast<int>(labels_.size()); }
    const std::vector<Label>& labels() const { return labels_; }

    TropValue& at(int i, int j) { return entries_[idx(i, j)]; }
    const TropValue& at(int i, int j) const { return entries_[idx(i, j)]; }

    friend bool operator==(const TropMatrix& A, const TropMatrix& B);
    friend bool operator!=(const TropMatrix& A, const TropMatrix& B) { return !(A == B); }

    /// Tropical identity: 0 on the diagonal, -inf elsewhere.
    static TropMatrix identity(std::vector<Label> labels);
    /// Integer-labelled matrix with labels 1..n.
    static TropMatrix square(int n, TropValue fill = TropValue::neg_inf());

private:
    size_t idx(int i, int j) const {
        if (i < 0 || j < 0 || i >= dim() || j >= dim())
            throw std::out_of_range("TropMatrix: index out of range");
        return static_cast<size_t>(i) * labels_.size() + j;
    }

    std::vector<Label> labels_;
    std::vector<TropValue> entries_;
};

/// Max-plus matrix product. Parallelised over rows with OpenMP for large
/// dimensions; mat_mul_serial is the reference implementation the tests
/// compare against.
TropMatrix mat_mul(const TropMatrix& A, const TropMatrix& B);
TropMatrix mat_mul_serial(const TropMatrix& A, const TropMatrix& B);

/// True iff every finite entry sits at a position (P,Q) with leq(P,Q).
bool is_chain_structured(const TropMatrix& A,
                         const std::function<bool(const Label&, const Label&)>& leq);

/// True iff all below-diagonal entries (in label-list order) are -inf.
bool is_upper_triangular(const TropMatrix& A);

}  // namespace plactic
