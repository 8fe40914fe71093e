#include "plactic/json_io.hpp"

namespace plactic {

json subset_to_json(const Subset& S) {
    json a = json::array();
    for (int x : S.members()) a.push_back(x);
    return a;
}

Subset subset_from_json(const json& j, int n) {
    if (!j.is_array()) throw std::invalid_argument("subset JSON must be an array");
    std::vector<int> members;
    for (const auto& e : j) members.push_back(e.get<int>());
    if (!std::is_sorted(members.begin(), members.end()))
        throw std::invalid_argument("subset JSON must be ascending");
    return Subset(n, members);
}

static json entry_to_json(const TropValue& v) {
    if (v.is_neg_inf()) return nullptr;
    return v.value();
}

static TropValue entry_from_json(const json& j) {
    if (j.is_null()) return TropValue::neg_inf();
    return TropValue(j.get<int64_t>());
}

json matrix_to_json(const TropMatrix& M) {
    json labels = json::array();
    for (const Label& l : M.labels()) {
        if (std::holds_alternative<int>(l))
            labels.push_back(std::get<int>(l));
        else
            labels.push_back(subset_to_json(std::get<Subset>(l)));
    }
    json rows = json::array();
    for (int i = 0; i < M.dim(); ++i) {
        json row = json::array();
        for (int j = 0; j < M.dim(); ++j) row.push_back(entry_to_json(M.at(i, j)));
        rows.push_back(std::move(row));
    }
    return json{{"labels", std::move(labels)}, {"rows", std::move(rows)}};
}

TropMatrix matrix_from_json(const json& j, int n) {
    std::vector<Label> labels;
    for (const auto& l : j.at("labels")) {
        if (l.is_number())
            labels.push_back(l.get<int>());
        else
            labels.push_back(subset_from_json(l, n));
    }
    TropMatrix M(labels);
    const auto& rows = j.at("rows");
    if (rows.size() != labels.size()) throw std::invalid_argument("matrix JSON: row count mismatch");
    for (int i = 0; i < M.dim(); ++i) {
        const auto& row = rows.at(i);
        if (row.size() != labels.size())
            throw std::invalid_argument("matrix JSON: column count mismatch");
        for (int k = 0; k < M.dim(); ++k) M.at(i, k) = entry_from_json(row.at(k));
    }
    return M;
}

json tableau_to_json(const Tableau& T) {
    json rows = json::array();
    for (const auto& row : T.rows()) rows.push_back(row);
    return json{{"n", T.n()}, {"rows_bottom_up", std::move(rows)}};
}

Tableau tableau_from_json(const json& j) {
    int n = j.at("n").get<int>();
    std::vector<std::vector<int>> rows;
    for (const auto& row : j.at("rows_bottom_up")) rows.push_back(row.get<std::vector<int>>());
    return Tableau(n, std::move(rows));
}

json word_to_json(const Word& w) {
    if (w.n <= 9) return w.to_string();
    return json(w.letters);
}

Word word_from_json(const json& j, int n) {
    if (j.is_string()) return Word::from_digits(n, j.get<std::string>());
    return Word(n, j.get<std::vector<int>>());
}

json witness_to_json(const IdentityWitness& w) {
    json x = json::array();
    for (const auto& [key, v] : w.x.values)
        x.push_back(json{{"var", std::string(1, key.first)}, {"vertex", key.second}, {"value", v}});
    json mats = json::object();
    for (const auto& [c, M] : w.matrices) mats[std::string(1, c)] = matrix_to_json(M);
    json tabs = json::object();
    for (const auto& [c, T] : w.tableaux) tabs[std::string(1, c)] = tableau_to_json(T);

    std::map<char, TropMatrix> massign(w.matrices.begin(), w.matrices.end());
    MatrixEval me = eval_identity_ut(w.id, massign);
    TableauEval te = eval_identity_plactic(w.id, w.tableaux);

    return json{{"identity", w.id.to_string()},
                {"n", w.n},
                {"kind", w.kind},
                {"u", w.u},
                {"x", std::move(x)},
                {"S", w.S},
                {"L", w.L},
                {"G", w.G},
                {"matrices", std::move(mats)},
                {"tableaux", std::move(tabs)},
                {"evaluations",
                 {{"lhs_matrix", matrix_to_json(me.lhs)},
                  {"rhs_matrix", matrix_to_json(me.rhs)},
                  {"lhs_tableau", tableau_to_json(te.lhs)},
                  {"rhs_tableau", tableau_to_json(te.rhs)}}},
                {"seed", w.seed}};
}

IdentityWitness witness_from_json(const json& j) {
    IdentityWitness w;
    w.id = Identity::parse(j.at("identity").get<std::string>());
    w.n = j.at("n").get<int>();
    w.kind = j.at("kind").get<std::string>();
    w.u = j.at("u").get<std::string>();
    for (const auto& e : j.at("x"))
        w.x.set(e.at("var").get<std::string>().at(0), e.at("vertex").get<int>(),
                e.at("value").get<long>());
    w.S = j.at("S").get<long>();
    w.L = j.at("L").get<long>();
    w.G = j.at("G").get<long>();
    for (const auto& [k, v] : j.at("matrices").items())
        w.matrices.emplace(k.at(0), matrix_from_json(v, w.n));
    for (const auto& [k, v] : j.at("tableaux").items())
        w.tableaux.emplace(k.at(0), tableau_from_json(v));
    w.seed = j.at("seed").get<uint64_t>();
    return w;
}

json sample_report_to_json(const SampleReport& r) {
    return json{{"held", r.held},
                {"trials", r.trials_run},
                {"counterexample_trial", r.counterexample_trial},
                {"seed", r.seed}};
}

}  // namespace plactic
