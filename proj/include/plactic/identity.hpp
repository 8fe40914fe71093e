#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "plactic/representation.hpp"
#include "plactic/tableau.hpp"
#include "plactic/tropical.hpp"

namespace plactic {

/// A semigroup identity lhs = rhs over single-character variables.
struct Identity {
    std::vector<char> alphabet;  // sorted, deduplicated
    std::string lhs, rhs;

    /// Parse "xyyxxyxyyx=xyyxyxxyyx".
    static Identity parse(const std::string& text);
    std::string to_string() const { return lhs + "=" + rhs; }
};

/// A point assigning a positive integer to each variable x(s,i), s a letter
/// of the identity alphabet, i a vertex in [n].
struct PolyPoint {
    std::map<std::pair<char, int>, long> values;

    long get(char s, int i) const {
        auto it = values.find({s, i});
        if (it == values.end()) throw std::invalid_argument("PolyPoint: missing coordinate");
        return it->second;
    }
    void set(char s, int i, long v) {
        if (v <= 0) throw std::invalid_argument("PolyPoint: values must be positive");
        values[{s, i}] = v;
    }
};

/// Number of occurrences of s strictly between positions p and q of w
/// (0 <= p < q <= |w|+1).
long beta(const std::string& w, char s, int p, int q);

/// The tropical polynomial f_{u,pi}^w evaluated at x: maximum over all
/// embeddings of u into w of the linear form with exponents beta. Returns
/// -inf when u is not a scattered subword of w.
TropValue f_eval(const std::string& w, const std::string& u, const std::vector<int>& pi,
                 const PolyPoint& x);

/// f_u^w = f_{u,pi}^w with pi = (1, ..., |u|+1).
TropValue f_eval_std(const std::string& w, const std::string& u, const PolyPoint& x);

struct EvalResult {
    bool equal;
};

struct MatrixEval : EvalResult {
    TropMatrix lhs, rhs;
};
struct TableauEval : EvalResult {
    Tableau lhs, rhs;
    TableauEval(Tableau l, Tableau r) : lhs(std::move(l)), rhs(std::move(r)) {
        equal = lhs == rhs;
    }
};

MatrixEval eval_identity_ut(const Identity& id, const std::map<char, TropMatrix>& assign);
TableauEval eval_identity_plactic(const Identity& id, const std::map<char, Tableau>& assign);

struct SearchBudget {
    long points_per_range = 200;  // random points tried per (u, range) pair
    int max_range_exponent = 4;   // coordinate ranges 1, 10, ..., 10^max
};

/// Search for a separating word u (longer u preferred) and a positive
/// integer point where f_u^lhs and f_u^rhs differ. nullopt = budget
/// exhausted, which is not a proof of validity.
std::optional<std::pair<std::string, PolyPoint>> find_separating(
    const Identity& id, int n, const SearchBudget& budget, uint64_t seed);

struct constants_too_small : std::runtime_error {
    constants_too_small() : std::runtime_error("witness constants too small for dominance") {}
};

struct WitnessMatrices {
    std::vector<TropMatrix> matrices;  // one per alphabet letter, in alphabet order
    long S, L, G;
};

/// Build the n x n matrices A_i and constants (S, L, G) realising the
/// separation (u, x); asserts the dominant-entry identity numerically and
/// escalates the constants if the first schedule is too small.
WitnessMatrices build_witness_matrices(const Identity& id, int n, const std::string& u,
                                       const PolyPoint& x);

/// Full certificate that an identity fails in UT_n and in P_n.
struct IdentityWitness {
    Identity id;
    int n;
    std::string kind;  // "content" or "separating"
    std::string u;
    PolyPoint x;
    long S = 0, L = 0, G = 0;
    std::map<char, TropMatrix> matrices;
    std::map<char, Tableau> tableaux;
    uint64_t seed = 0;
};

/// End-to-end falsification: content check, separating-polynomial search,
/// witness matrices, tableau decoding, and double evaluation. nullopt =
/// budget exhausted.
std::optional<IdentityWitness> falsify(const Identity& id, int n, const SearchBudget& budget,
                                       uint64_t seed);

/// Re-verify a witness from scratch; throws std::runtime_error describing
/// the first failed check.
void verify_witness(const IdentityWitness& w);

enum class Monoid { UTn, Plactic };

struct SampleReport {
    bool held;
    long trials_run;
    long counterexample_trial = -1;  // -1 when held
    uint64_t seed;
};

/// Randomized identity check over seeded random assignments. The reported
/// counterexample trial is the smallest failing index regardless of the
/// number of threads.
SampleReport sample_check(const Identity& id, Monoid monoid, int n, long trials, uint64_t seed,
                          int max_word_len = 10, int jobs = 1);

/// The assignment used by sample_check in a given trial (for reporting and
/// reproducing counterexamples).
std::map<char, Tableau> sample_plactic_assignment(const Identity& id, int n, int max_word_len,
                                                  uint64_t seed, long trial);
std::map<char, TropMatrix> sample_ut_assignment(const Identity& id, int n, uint64_t seed,
                                                long trial);

}  // namespace plactic
