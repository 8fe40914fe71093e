#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "plactic/identity.hpp"
#include "plactic/json_io.hpp"
#include "plactic/representation.hpp"
#include "plactic/subset.hpp"
#include "plactic/tableau.hpp"

using namespace plactic;

namespace {

constexpr int kExitHeld = 0;
constexpr int kExitFalsified = 1;
constexpr int kExitBudget = 2;

struct RunConfig {
    uint64_t seed = 0;
    long trials = 1000;
    int max_word_len = 10;
    std::string output = "text";
    int jobs = 1;
};

json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open file: " + path);
    json j;
    in >> j;
    return j;
}

int infer_rank(const std::string& digits) {
    int n = 1;
    for (char c : digits) {
        if (c < '1' || c > '9') throw std::runtime_error("word must consist of digits 1-9");
        n = std::max(n, c - '0');
    }
    return n;
}

void check_rank(int n) {
    if (n < 1) throw std::runtime_error("rank must be positive");
    if (n > 8)
        throw std::runtime_error("rank " + std::to_string(n) +
                                 " exceeds the supported cap of 8 (matrix dimension 2^n)");
}

std::string render_matrix(const TropMatrix& M) {
    std::ostringstream out;
    size_t width = 1;
    for (int i = 0; i < M.dim(); ++i)
        for (int j = 0; j < M.dim(); ++j)
            width = std::max(width, (M.at(i, j).finite() ? M.at(i, j).to_string() : ".").size());
    for (int i = 0; i < M.dim(); ++i) {
        for (int j = 0; j < M.dim(); ++j) {
            std::string cell = M.at(i, j).finite() ? M.at(i, j).to_string() : ".";
            out << std::string(width + 1 - cell.size(), ' ') << cell;
        }
        out << "\n";
    }
    return out.str();
}

void emit_matrix(const TropMatrix& M, const std::string& output) {
    if (output == "json")
        std::cout << matrix_to_json(M).dump(2) << "\n";
    else
        std::cout << render_matrix(M);
}

void emit_tableau(const Tableau& T, const std::string& output) {
    if (output == "json")
        std::cout << tableau_to_json(T).dump(2) << "\n";
    else
        std::cout << T.to_string() << "\n";
}

int run(int argc, char** argv) {
    CLI::App app{"Tropical matrix representation of finite-rank plactic monoids"};
    app.require_subcommand(1);
    app.fallthrough();  // allow the global --seed/--output after a subcommand

    RunConfig cfg;
    app.add_option("--seed", cfg.seed, "Seed for all randomized operations")
        ->envname("PLACTIC_SEED")
        ->capture_default_str();
    app.add_option("--output", cfg.output, "Output format")
        ->check(CLI::IsMember({"text", "json"}))
        ->capture_default_str();

    // ---- tableau ----------------------------------------------------------
    auto* tab = app.add_subcommand("tableau", "Tableau construction and readings");
    tab->require_subcommand(1);

    std::string word_digits;
    std::optional<int> rank_opt;
    auto* tab_insert = tab->add_subcommand("insert", "Insert a word, print its tableau");
    tab_insert->add_option("word", word_digits, "Word as a digit string (may be empty)");
    tab_insert->add_option("-n,--rank", rank_opt, "Alphabet rank (default: largest letter)");

    std::string tab_file;
    bool read_row = false, read_col = false;
    auto* tab_reading = tab->add_subcommand("reading", "Print a reading of a tableau");
    tab_reading->add_option("file", tab_file, "Tableau JSON file")->required();
    tab_reading->add_flag("--row", read_row, "Row reading (rows top to bottom)");
    tab_reading->add_flag("--column", read_col, "Column reading (default)");

    std::string params_file;
    auto* tab_params = tab->add_subcommand("params", "Print the multiplicity parameters");
    tab_params->add_option("file", params_file, "Tableau JSON file")->required();

    // ---- rep --------------------------------------------------------------
    auto* rep = app.add_subcommand("rep", "Matrix representation and decoding");
    rep->require_subcommand(1);

    int rep_n = 0;
    std::string rep_word;
    auto* rep_matrix = rep->add_subcommand("matrix", "Image matrix of a word");
    rep_matrix->add_option("-n,--rank", rep_n, "Rank")->required();
    rep_matrix->add_option("-w,--word", rep_word, "Word as a digit string (default: empty word)");

    int dec_n = 0;
    std::string dec_file;
    auto* rep_decode = rep->add_subcommand("decode", "Recover the tableau of an image matrix");
    rep_decode->add_option("-n,--rank", dec_n, "Rank")->required();
    rep_decode->add_option("-f,--file", dec_file, "Matrix JSON file")->required();

    int blk_n = 0, blk_k = 0;
    std::string blk_word;
    auto* rep_block = rep->add_subcommand("block", "One cardinality block of an image matrix");
    rep_block->add_option("-n,--rank", blk_n, "Rank")->required();
    rep_block->add_option("-k,--card", blk_k, "Block cardinality")->required();
    rep_block->add_option("-w,--word", blk_word, "Word as a digit string (default: empty word)");

    // ---- identity ---------------------------------------------------------
    auto* ident = app.add_subcommand("identity", "Check or falsify semigroup identities");
    ident->require_subcommand(1);

    std::string chk_text, chk_monoid = "plactic";
    int chk_n = 0;
    auto* id_check = ident->add_subcommand("check", "Randomized identity check");
    id_check->add_option("identity", chk_text, "Identity, e.g. \"xyx=xxy\"")->required();
    id_check->add_option("-n,--rank", chk_n, "Rank")->required();
    id_check->add_option("--monoid", chk_monoid, "Monoid to sample in")
        ->check(CLI::IsMember({"plactic", "utn"}))
        ->capture_default_str();
    id_check->add_option("--trials", cfg.trials, "Number of random assignments")
        ->capture_default_str();
    id_check->add_option("--max-word-len", cfg.max_word_len, "Max word length per variable")
        ->capture_default_str();
    id_check->add_option("--jobs", cfg.jobs, "Concurrent trial threads")->capture_default_str();

    std::string fal_text;
    int fal_n = 0;
    SearchBudget budget;
    auto* id_falsify = ident->add_subcommand("falsify", "Construct a counterexample witness");
    id_falsify->add_option("identity", fal_text, "Identity, e.g. \"xyx=xxy\"")->required();
    id_falsify->add_option("-n,--rank", fal_n, "Rank")->required();
    id_falsify->add_option("--points-per-range", budget.points_per_range,
                           "Random points per (word, range) pair")
        ->capture_default_str();
    id_falsify->add_option("--max-range-exponent", budget.max_range_exponent,
                           "Largest coordinate range 10^e")
        ->capture_default_str();

    std::string wit_file;
    auto* id_verify = ident->add_subcommand("verify-witness", "Re-verify a witness from JSON");
    id_verify->add_option("file", wit_file, "Witness JSON file")->required();

    // ---- chain ------------------------------------------------------------
    int chain_n = 0;
    auto* chain = app.add_subcommand("chain", "Longest chain bound for the subset order");
    chain->add_option("-n,--rank", chain_n, "Rank")->required();

    CLI11_PARSE(app, argc, argv);

    if (tab_insert->parsed()) {
        int n = rank_opt ? *rank_opt : infer_rank(word_digits);
        check_rank(n);
        emit_tableau(from_word(Word::from_digits(n, word_digits)), cfg.output);
        return 0;
    }
    if (tab_reading->parsed()) {
        if (read_row && read_col) throw std::runtime_error("choose one of --row / --column");
        Tableau T = tableau_from_json(read_json_file(tab_file));
        Word w = read_row ? row_reading(T) : column_reading(T);
        if (cfg.output == "json")
            std::cout << word_to_json(w).dump() << "\n";
        else
            std::cout << w.to_string() << "\n";
        return 0;
    }
    if (tab_params->parsed()) {
        Tableau T = tableau_from_json(read_json_file(params_file));
        TabParams p = parameters(T);
        if (cfg.output == "json") {
            json j = json::array();
            for (const auto& [xy, c] : p.i)
                j.push_back({{"row", xy.first}, {"symbol", xy.second}, {"count", c}});
            std::cout << json{{"n", p.n}, {"params", j}}.dump(2) << "\n";
        } else {
            for (const auto& [xy, c] : p.i)
                std::cout << "i(" << xy.first << "," << xy.second << ") = " << c << "\n";
        }
        return 0;
    }

    if (rep_matrix->parsed()) {
        check_rank(rep_n);
        emit_matrix(represent(rep_n, Word::from_digits(rep_n, rep_word)), cfg.output);
        return 0;
    }
    if (rep_decode->parsed()) {
        check_rank(dec_n);
        TropMatrix M = matrix_from_json(read_json_file(dec_file), dec_n);
        emit_tableau(decode(M, dec_n), cfg.output);
        return 0;
    }
    if (rep_block->parsed()) {
        check_rank(blk_n);
        if (blk_k < 0 || blk_k > blk_n) throw std::runtime_error("block cardinality out of range");
        TropMatrix M = represent(blk_n, Word::from_digits(blk_n, blk_word));
        BlockOrder order(blk_n, blk_k);
        std::vector<Label> labels(order.sequence().begin(), order.sequence().end());
        // locate the block inside the global order
        int off = 0;
        while (off < M.dim() && !label_eq(M.labels()[off], labels[0])) ++off;
        TropMatrix B(labels);
        for (int i = 0; i < B.dim(); ++i)
            for (int j = 0; j < B.dim(); ++j) B.at(i, j) = M.at(off + i, off + j);
        emit_matrix(B, cfg.output);
        return 0;
    }

    if (id_check->parsed()) {
        check_rank(chk_n);
        Identity id = Identity::parse(chk_text);
        Monoid m = (chk_monoid == "plactic") ? Monoid::Plactic : Monoid::UTn;
        SampleReport r =
            sample_check(id, m, chk_n, cfg.trials, cfg.seed, cfg.max_word_len, cfg.jobs);
        if (cfg.output == "json") {
            std::cout << sample_report_to_json(r).dump(2) << "\n";
        } else if (r.held) {
            std::cout << "held over " << r.trials_run << " random assignments (seed " << r.seed
                      << ")\n";
        } else {
            std::cout << "falsified at trial " << r.counterexample_trial << " (seed " << r.seed
                      << ")\n";
        }
        return r.held ? kExitHeld : kExitFalsified;
    }
    if (id_falsify->parsed()) {
        check_rank(fal_n);
        Identity id = Identity::parse(fal_text);
        auto w = falsify(id, fal_n, budget, cfg.seed);
        if (!w) {
            std::cout << (cfg.output == "json" ? json{{"result", "budget-exhausted"}}.dump(2)
                                               : std::string("budget exhausted (not a proof of "
                                                             "validity)"))
                      << "\n";
            return kExitBudget;
        }
        if (cfg.output == "text")
            std::cout << "falsified (" << w->kind << " witness); witness JSON follows\n";
        std::cout << witness_to_json(*w).dump(2) << "\n";
        return kExitFalsified;
    }
    if (id_verify->parsed()) {
        IdentityWitness w = witness_from_json(read_json_file(wit_file));
        verify_witness(w);
        std::cout << (cfg.output == "json" ? json{{"result", "verified"}}.dump(2)
                                           : std::string("witness verified"))
                  << "\n";
        return kExitHeld;
    }

    if (chain->parsed()) {
        std::cout << chain_length_bound(chain_n) << "\n";
        return 0;
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const not_in_image& e) {
        std::cerr << "not in image: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
