#include "plactic/identity.hpp"

#include <algorithm>
#include <set>

#include "plactic/rng.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace plactic {

Identity Identity::parse(const std::string& text) {
    auto eq = text.find('=');
    if (eq == std::string::npos) throw std::invalid_argument("Identity: missing '='");
    Identity id;
    id.lhs = text.substr(0, eq);
    id.rhs = text.substr(eq + 1);
    if (id.lhs.empty() || id.rhs.empty())
        throw std::invalid_argument("Identity: both sides must be nonempty");
    if (id.rhs.find('=') != std::string::npos)
        throw std::invalid_argument("Identity: more than one '='");
    std::set<char> vars;
    for (char c : id.lhs + id.rhs) {
        if (!isalpha(static_cast<unsigned char>(c)))
            throw std::invalid_argument("Identity: variables must be letters");
        vars.insert(c);
    }
    id.alphabet.assign(vars.begin(), vars.end());
    return id;
}

long beta(const std::string& w, char s, int p, int q) {
    if (!(0 <= p && p < q && q <= static_cast<int>(w.size()) + 1))
        throw std::invalid_argument("beta: requires 0 <= p < q <= |w|+1");
    long c = 0;
    for (int i = p + 1; i < q; ++i)
        if (w[i - 1] == s) ++c;
    return c;
}

TropValue f_eval(const std::string& w, const std::string& u, const std::vector<int>& pi,
                 const PolyPoint& x) {
    if (pi.size() != u.size() + 1)
        throw std::invalid_argument("f_eval: |pi| must be |u|+1");
    for (size_t k = 0; k < pi.size(); ++k) {
        if (pi[k] < 1 || (k > 0 && pi[k] <= pi[k - 1]))
            throw std::invalid_argument("f_eval: pi must be strictly increasing and positive");
    }
    std::set<char> letters(w.begin(), w.end());
    letters.insert(u.begin(), u.end());

    int W = static_cast<int>(w.size());
    int U = static_cast<int>(u.size());
    std::vector<int> alpha(U + 2);
    alpha[0] = 0;
    alpha[U + 1] = W + 1;
    TropValue best = TropValue::neg_inf();

    auto monomial = [&]() {
        long v = 0;
        for (char s : letters)
            for (int k = 0; k <= U; ++k) v += x.get(s, pi[k]) * beta(w, s, alpha[k], alpha[k + 1]);
        return TropValue(v);
    };
    auto rec = [&](auto&& self, int k) -> void {
        if (k > U) {
            best = trop_add(best, monomial());
            return;
        }
        for (int pos = alpha[k - 1] + 1; pos <= W - (U - k); ++pos) {
            if (w[pos - 1] != u[k - 1]) continue;
            alpha[k] = pos;
            self(self, k + 1);
        }
    };
    rec(rec, 1);
    return best;
}

TropValue f_eval_std(const std::string& w, const std::string& u, const PolyPoint& x) {
    std::vector<int> pi(u.size() + 1);
    for (size_t k = 0; k < pi.size(); ++k) pi[k] = static_cast<int>(k) + 1;
    return f_eval(w, u, pi, x);
}

static TropMatrix fold_side(const std::string& side, const std::map<char, TropMatrix>& assign) {
    TropMatrix acc = assign.at(side[0]);
    for (size_t i = 1; i < side.size(); ++i) acc = mat_mul(acc, assign.at(side[i]));
    return acc;
}

MatrixEval eval_identity_ut(const Identity& id, const std::map<char, TropMatrix>& assign) {
    for (char c : id.alphabet)
        if (!assign.count(c))
            throw std::invalid_argument("eval_identity: assignment missing variable");
    MatrixEval r{{}, fold_side(id.lhs, assign), fold_side(id.rhs, assign)};
    r.equal = (r.lhs == r.rhs);
    return r;
}

TableauEval eval_identity_plactic(const Identity& id, const std::map<char, Tableau>& assign) {
    for (char c : id.alphabet)
        if (!assign.count(c))
            throw std::invalid_argument("eval_identity: assignment missing variable");
    int n = assign.begin()->second.n();
    auto fold = [&](const std::string& side) {
        Tableau acc(n);
        for (char c : side) acc = multiply(acc, assign.at(c));
        return acc;
    };
    return TableauEval(fold(id.lhs), fold(id.rhs));
}

static bool is_scattered_subword(const std::string& u, const std::string& w) {
    size_t i = 0;
    for (char c : w)
        if (i < u.size() && c == u[i]) ++i;
    return i == u.size();
}

std::optional<std::pair<std::string, PolyPoint>> find_separating(
    const Identity& id, int n, const SearchBudget& budget, uint64_t seed) {
    // words over the alphabet, longest first
    std::vector<std::string> candidates;
    for (int len = n - 1; len >= 0; --len) {
        std::vector<std::string> level{""};
        for (int i = 0; i < len; ++i) {
            std::vector<std::string> next;
            for (const auto& pre : level)
                for (char c : id.alphabet) next.push_back(pre + c);
            level = std::move(next);
        }
        for (auto& u : level) candidates.push_back(u);
    }

    uint64_t trial = 0;
    for (const auto& u : candidates) {
        if (!is_scattered_subword(u, id.lhs) && !is_scattered_subword(u, id.rhs)) continue;
        for (int e = 0; e <= budget.max_range_exponent; ++e) {
            long hi = 1;
            for (int t = 0; t < e; ++t) hi *= 10;
            long tries = (e == 0) ? 1 : budget.points_per_range;
            for (long t = 0; t < tries; ++t) {
                auto rng = trial_rng(seed, trial++);
                std::uniform_int_distribution<long> dist(1, hi);
                PolyPoint x;
                for (char s : id.alphabet)
                    for (int i = 1; i <= n; ++i) x.set(s, i, dist(rng));
                if (f_eval_std(id.lhs, u, x) != f_eval_std(id.rhs, u, x))
                    return std::make_pair(u, x);
            }
        }
    }
    return std::nullopt;
}

static std::vector<TropMatrix> make_matrices(const Identity& id, int n, const std::string& u,
                                             const PolyPoint& x, long S, long L, long G) {
    std::vector<TropMatrix> out;
    for (char a : id.alphabet) {
        TropMatrix A = TropMatrix::square(n);
        for (int p = 1; p <= n; ++p)
            for (int q = p; q <= n; ++q) {
                if (p == q) {
                    A.at(p - 1, q - 1) = TropValue(G + x.get(a, p));
                    continue;
                }
                bool hit = false;
                for (int k = p; k < q && !hit; ++k)
                    if (k >= 1 && k <= static_cast<int>(u.size()) && u[k - 1] == a) hit = true;
                A.at(p - 1, q - 1) = TropValue(hit ? G + L : G + S);
            }
        out.push_back(std::move(A));
    }
    return out;
}

WitnessMatrices build_witness_matrices(const Identity& id, int n, const std::string& u,
                                       const PolyPoint& x) {
    TropValue fu_l = f_eval_std(id.lhs, u, x);
    TropValue fu_r = f_eval_std(id.rhs, u, x);
    if (fu_l == fu_r)
        throw std::invalid_argument("build_witness_matrices: (u, x) does not separate the sides");
    const std::string& dominant_side = fu_r < fu_l ? id.lhs : id.rhs;
    if (!is_scattered_subword(u, dominant_side) &&
        !(is_scattered_subword(u, id.lhs) || is_scattered_subword(u, id.rhs)))
        throw std::invalid_argument("build_witness_matrices: u occurs in neither side");

    // F bounds every |f_{z,pi}| value that can appear in an entry expansion.
    long F = 1;
    std::vector<std::string> zs{""};
    for (int len = 1; len <= n - 1; ++len) {
        std::vector<std::string> level{""};
        for (int i = 0; i < len; ++i) {
            std::vector<std::string> next;
            for (const auto& pre : level)
                for (char c : id.alphabet) next.push_back(pre + c);
            level = std::move(next);
        }
        zs.insert(zs.end(), level.begin(), level.end());
    }
    std::vector<int> pi;
    auto all_pi = [&](auto&& self, int start, int need, auto&& visit) -> void {
        if (need == 0) {
            visit();
            return;
        }
        for (int v = start; v <= n - need + 1; ++v) {
            pi.push_back(v);
            self(self, v + 1, need - 1, visit);
            pi.pop_back();
        }
    };
    for (const auto& z : zs) {
        all_pi(all_pi, 1, static_cast<int>(z.size()) + 1, [&]() {
            for (const std::string* side : {&id.lhs, &id.rhs}) {
                TropValue v = f_eval(*side, z, pi, x);
                if (v.finite()) F = std::max(F, std::abs(v.value()) + 1);
            }
        });
    }

    long S = 1;
    for (auto& [k, v] : x.values) S = std::max(S, v + 1);
    long L = static_cast<long>(n + 1) * (S + F);
    long G = static_cast<long>(n + 1) * (L + F);

    int ulen = static_cast<int>(u.size());
    for (int attempt = 0; attempt < 8; ++attempt) {
        auto mats = make_matrices(id, n, u, x, S, L, G);
        std::map<char, TropMatrix> assign;
        for (size_t i = 0; i < id.alphabet.size(); ++i)
            assign.emplace(id.alphabet[i], mats[i]);
        MatrixEval ev = eval_identity_ut(id, assign);
        const TropValue& el = ev.lhs.at(0, ulen);
        const TropValue& er = ev.rhs.at(0, ulen);

        bool ok = (el != er);
        // dominant-entry identity on each side containing u
        for (auto [side, entry] : {std::pair{&id.lhs, &el}, std::pair{&id.rhs, &er}}) {
            if (!is_scattered_subword(u, *side)) continue;
            // every length-|side| path carries one G per factor; the dominant
            // path takes an L edge at each of the |u| embedding steps
            TropValue want =
                TropValue(static_cast<long>(side->size()) * G + static_cast<long>(ulen) * L +
                          f_eval_std(*side, u, x).value());
            if (*entry != want) ok = false;
        }
        if (ok) return WitnessMatrices{std::move(mats), S, L, G};
        L *= 2;
        G = static_cast<long>(n + 1) * (L + F);
    }
    throw constants_too_small();
}

std::optional<IdentityWitness> falsify(const Identity& id, int n, const SearchBudget& budget,
                                       uint64_t seed) {
    IdentityWitness w;
    w.id = id;
    w.n = n;
    w.seed = seed;

    // content mismatch has a trivial plactic counterexample
    std::map<char, long> cl, cr;
    for (char c : id.lhs) ++cl[c];
    for (char c : id.rhs) ++cr[c];
    std::optional<char> unbalanced;
    for (char c : id.alphabet)
        if (cl[c] != cr[c]) {
            unbalanced = c;
            break;
        }
    if (unbalanced) {
        w.kind = "content";
        for (char c : id.alphabet) {
            Tableau t = (c == *unbalanced) ? from_word(Word(n, {1})) : Tableau(n);
            w.matrices.emplace(c, represent_singleton(n, column_reading(t)));
            w.tableaux.emplace(c, std::move(t));
        }
        TableauEval te = eval_identity_plactic(id, w.tableaux);
        MatrixEval me = eval_identity_ut(id, w.matrices);
        if (te.equal || me.equal)
            throw std::logic_error("falsify: content witness failed to separate");
        return w;
    }

    auto sep = find_separating(id, n, budget, seed);
    if (!sep) return std::nullopt;
    w.kind = "separating";
    w.u = sep->first;
    w.x = sep->second;

    WitnessMatrices wm = build_witness_matrices(id, n, w.u, w.x);
    w.S = wm.S;
    w.L = wm.L;
    w.G = wm.G;
    for (size_t i = 0; i < id.alphabet.size(); ++i) {
        const TropMatrix& A = wm.matrices[i];
        if (!satisfies_ABCD(A))
            throw std::logic_error("falsify: witness matrix violates (A)-(D)");
        Tableau T = decode_triangular(A);
        if (represent_singleton(n, column_reading(T)) != A)
            throw std::logic_error("falsify: decoded tableau does not reproduce its matrix");
        w.matrices.emplace(id.alphabet[i], A);
        w.tableaux.emplace(id.alphabet[i], std::move(T));
    }
    MatrixEval me = eval_identity_ut(id, w.matrices);
    TableauEval te = eval_identity_plactic(id, w.tableaux);
    if (me.equal)
        throw std::logic_error("falsify: matrix evaluations agree despite separation");
    if (te.equal)
        throw std::logic_error("falsify: matrices differ but tableaux agree");
    return w;
}

void verify_witness(const IdentityWitness& w) {
    const Identity& id = w.id;
    auto fail = [](const std::string& msg) { throw std::runtime_error("witness: " + msg); };

    for (char c : id.alphabet) {
        if (!w.matrices.count(c) || !w.tableaux.count(c)) fail("missing assignment for a variable");
        if (represent_singleton(w.n, column_reading(w.tableaux.at(c))) != w.matrices.at(c))
            fail("matrix is not the singleton image of its tableau");
    }
    MatrixEval me = eval_identity_ut(id, w.matrices);
    TableauEval te = eval_identity_plactic(id, w.tableaux);
    if (me.equal) fail("matrix evaluations agree");
    if (te.equal) fail("tableau evaluations agree");

    if (w.kind == "content") {
        std::map<char, long> cl, cr;
        for (char c : id.lhs) ++cl[c];
        for (char c : id.rhs) ++cr[c];
        if (cl == cr) fail("claimed content mismatch but contents agree");
        return;
    }
    if (w.kind != "separating") fail("unknown witness kind");
    if (f_eval_std(id.lhs, w.u, w.x) == f_eval_std(id.rhs, w.u, w.x))
        fail("(u, x) does not separate the polynomials");
    auto rebuilt = make_matrices(id, w.n, w.u, w.x, w.S, w.L, w.G);
    for (size_t i = 0; i < id.alphabet.size(); ++i) {
        if (!satisfies_ABCD(rebuilt[i])) fail("rebuilt matrix violates (A)-(D)");
        if (rebuilt[i] != w.matrices.at(id.alphabet[i]))
            fail("stored matrix does not match the (u, x, S, L, G) construction");
        if (decode_triangular(rebuilt[i]) != w.tableaux.at(id.alphabet[i]))
            fail("stored tableau does not match the decoded matrix");
    }
    int ulen = static_cast<int>(w.u.size());
    if (me.lhs.at(0, ulen) == me.rhs.at(0, ulen)) fail("sides agree at entry (1, |u|+1)");
}

std::map<char, Tableau> sample_plactic_assignment(const Identity& id, int n, int max_word_len,
                                                  uint64_t seed, long trial) {
    auto rng = trial_rng(seed, static_cast<uint64_t>(trial));
    std::uniform_int_distribution<int> len_dist(0, max_word_len);
    std::uniform_int_distribution<int> letter(1, n);
    std::map<char, Tableau> out;
    for (char c : id.alphabet) {
        int len = len_dist(rng);
        std::vector<int> ls(len);
        for (int& l : ls) l = letter(rng);
        out.emplace(c, from_word(Word(n, std::move(ls))));
    }
    return out;
}

std::map<char, TropMatrix> sample_ut_assignment(const Identity& id, int n, uint64_t seed,
                                                long trial) {
    auto rng = trial_rng(seed, static_cast<uint64_t>(trial));
    std::uniform_int_distribution<int> val(-3, 3);
    std::uniform_int_distribution<int> inf(0, 4);  // 1 in 5 entries is -inf
    std::map<char, TropMatrix> out;
    for (char c : id.alphabet) {
        TropMatrix A = TropMatrix::square(n);
        for (int i = 0; i < n; ++i)
            for (int j = i; j < n; ++j)
                if (inf(rng) != 0) A.at(i, j) = TropValue(val(rng));
        out.emplace(c, std::move(A));
    }
    return out;
}

SampleReport sample_check(const Identity& id, Monoid monoid, int n, long trials, uint64_t seed,
                          int max_word_len, int jobs) {
    long first_fail = trials;  // sentinel: no failure
    auto run_trial = [&](long t) -> bool {
        if (monoid == Monoid::Plactic) {
            auto assign = sample_plactic_assignment(id, n, max_word_len, seed, t);
            return eval_identity_plactic(id, assign).equal;
        }
        auto assign = sample_ut_assignment(id, n, seed, t);
        return eval_identity_ut(id, assign).equal;
    };
#ifdef _OPENMP
    if (jobs > 1) {
#pragma omp parallel for num_threads(jobs) schedule(dynamic, 16) reduction(min : first_fail)
        for (long t = 0; t < trials; ++t)
            if (!run_trial(t)) first_fail = std::min(first_fail, t);
    } else
#endif
    {
        for (long t = 0; t < trials; ++t)
            if (!run_trial(t)) {
                first_fail = t;
                break;
            }
    }
    SampleReport r;
    r.trials_run = trials;
    r.seed = seed;
    r.held = (first_fail == trials);
    r.counterexample_trial = r.held ? -1 : first_fail;
    return r;
}

}  // namespace plactic
