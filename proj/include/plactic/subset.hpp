#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace plactic {

/// A subset of [n] = {1,...,n}, carried together with its ambient rank n.
/// Stored as a bitmask; bit (x-1) set means x is a member.
class Subset {
public:
    Subset() : n_(0), mask_(0) {}
    static Subset from_mask(int n, uint32_t mask) {
        if (n < 0 || n > 30) throw std::invalid_argument("Subset: rank out of range");
        if (n < 30 && (mask >> n) != 0)
            throw std::invalid_argument("Subset: member outside [n]");
        Subset s;
        s.n_ = n;
        s.mask_ = mask;
        return s;
    }
    Subset(int n, const std::vector<int>& members) : n_(n), mask_(0) {
        if (n < 0 || n > 30) throw std::invalid_argument("Subset: rank out of range");
        for (int x : members) {
            if (x < 1 || x > n) throw std::invalid_argument("Subset: member outside [n]");
            mask_ |= (1u << (x - 1));
        }
    }

    int n() const { return n_; }
    uint32_t mask() const { return mask_; }
    int card() const { return __builtin_popcount(mask_); }
    bool empty() const { return mask_ == 0; }
    bool contains(int x) const {
        return x >= 1 && x <= n_ && (mask_ & (1u << (x - 1)));
    }

    /// S^i, the i-th smallest element (1-based). Throws if i out of range.
    int element(int i) const;

    std::vector<int> members() const;
    std::string to_string() const;

    friend bool operator==(const Subset& a, const Subset& b) {
        return a.n_ == b.n_ && a.mask_ == b.mask_;
    }
    friend bool operator!=(const Subset& a, const Subset& b) { return !(a == b); }

    /// [k] = {1,...,k} inside ambient n.
    static Subset initial(int n, int k);
    /// hat[k]_m = {m-k+1,...,m}, the k largest elements of [m], inside ambient n.
    static Subset final_of(int n, int k, int m);

private:
    int n_;
    uint32_t mask_;
};

/// The partial order: S <= T iff |S| >= |T| and S^i <= T^i for all i in [|T|].
bool subset_leq(const Subset& S, const Subset& T);

/// The row number of x in S, i.e. the i with S^i = x.
int row_number(int x, const Subset& S);

/// Union of all sets in the order interval [P, Q], for |P| = |Q|, P <= Q.
/// Closed form {x : exists i with P^i <= x <= Q^i}, cross-checked against
/// interval enumeration in the tests.
Subset interval_union(const Subset& P, const Subset& Q);

/// All S with P <= S <= Q (so |S| = |P| = |Q|). Enumeration oracle for
/// interval_union and the readability DP.
std::vector<Subset> interval_members(const Subset& P, const Subset& Q);

/// The (k,m)-completion of S: add the k-|S| largest values of [m] \ S.
Subset completion(const Subset& S, int k, int m);

/// All cardinality-k subsets of [n] in colexicographic order (largest
/// elements compared first). This is the row/column order of the size-k
/// block of the representation.
class BlockOrder {
public:
    BlockOrder(int n, int k);
    int n() const { return n_; }
    int k() const { return k_; }
    const std::vector<Subset>& sequence() const { return seq_; }

private:
    int n_, k_;
    std::vector<Subset> seq_;
};

/// k(n-k)+1, the longest chain among cardinality-k subsets of [n].
long block_chain_length(int n, int k);

/// floor(n^2/4 + 1) = max_k block_chain_length(n, k).
long chain_length_bound(int n);

}  // namespace plactic
