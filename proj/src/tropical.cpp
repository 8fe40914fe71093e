#include "plactic/tropical.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace plactic {

bool label_eq(const Label& a, const Label& b) {
    if (a.index() != b.index()) return false;
    if (std::holds_alternative<int>(a))
        return std::get<int>(a) == std::get<int>(b);
    return std::get<Subset>(a) == std::get<Subset>(b);
}

std::string label_to_string(const Label& a) {
    if (std::holds_alternative<int>(a)) return std::to_string(std::get<int>(a));
    return std::get<Subset>(a).to_string();
}

TropMatrix::TropMatrix(std::vector<Label> labels, TropValue fill)
    : labels_(std::move(labels)),
      entries_(labels_.size() * labels_.size(), fill) {
    for (size_t i = 0; i < labels_.size(); ++i)
        for (size_t j = i + 1; j < labels_.size(); ++j)
            if (label_eq(labels_[i], labels_[j]))
                throw std::invalid_argument("TropMatrix: duplicate label");
}

bool operator==(const TropMatrix& A, const TropMatrix& B) {
    if (A.dim() != B.dim()) return false;
    for (int i = 0; i < A.dim(); ++i)
        if (!label_eq(A.labels_[i], B.labels_[i])) return false;
    return A.entries_ == B.entries_;
}

TropMatrix TropMatrix::identity(std::vector<Label> labels) {
    TropMatrix M(std::move(labels));
    for (int i = 0; i < M.dim(); ++i) M.at(i, i) = TropValue(0);
    return M;
}

TropMatrix TropMatrix::square(int n, TropValue fill) {
    std::vector<Label> labels;
    for (int i = 1; i <= n; ++i) labels.push_back(i);
    return TropMatrix(std::move(labels), fill);
}

static void check_same_index(const TropMatrix& A, const TropMatrix& B) {
    if (A.dim() != B.dim())
        throw std::invalid_argument("mat_mul: dimension mismatch");
    for (int i = 0; i < A.dim(); ++i)
        if (!label_eq(A.labels()[i], B.labels()[i]))
            throw std::invalid_argument("mat_mul: label mismatch");
}

static inline void mul_row(const TropMatrix& A, const TropMatrix& B, TropMatrix& C, int i) {
    int d = A.dim();
    for (int j = 0; j < d; ++j) {
        TropValue acc = TropValue::neg_inf();
        for (int k = 0; k < d; ++k)
            acc = trop_add(acc, trop_mul(A.at(i, k), B.at(k, j)));
        C.at(i, j) = acc;
    }
}

TropMatrix mat_mul_serial(const TropMatrix& A, const TropMatrix& B) {
    check_same_index(A, B);
    TropMatrix C(A.labels());
    for (int i = 0; i < A.dim(); ++i) mul_row(A, B, C, i);
    return C;
}

TropMatrix mat_mul(const TropMatrix& A, const TropMatrix& B) {
    check_same_index(A, B);
    TropMatrix C(A.labels());
    int d = A.dim();
#ifdef _OPENMP
    if (d >= 64) {
        bool overflowed = false;
#pragma omp parallel for schedule(static)
        for (int i = 0; i < d; ++i) {
            try {
                mul_row(A, B, C, i);
            } catch (const arithmetic_overflow&) {
#pragma omp atomic write
                overflowed = true;
            }
        }
        if (overflowed) throw arithmetic_overflow();
        return C;
    }
#endif
    for (int i = 0; i < d; ++i) mul_row(A, B, C, i);
    return C;
}

bool is_chain_structured(const TropMatrix& A,
                         const std::function<bool(const Label&, const Label&)>& leq) {
    for (int i = 0; i < A.dim(); ++i)
        for (int j = 0; j < A.dim(); ++j)
            if (!A.at(i, j).is_neg_inf() && !leq(A.labels()[i], A.labels()[j]))
                return false;
    return true;
}

bool is_upper_triangular(const TropMatrix& A) {
    for (int i = 0; i < A.dim(); ++i)
        for (int j = 0; j < i; ++j)
            if (!A.at(i, j).is_neg_inf()) return false;
    return true;
}

}  // namespace plactic
