#include <CLI11.hpp>
#include <fstream>
#include <iostream>

#include "prehom/corpus.hpp"
#include "prehom/report.hpp"

using namespace prehom;

namespace {

constexpr int kExitPass = 0;
constexpr int kExitCheckFailure = 1;
constexpr int kExitInputError = 2;

int run_analyze(const std::string& file, const AnalysisOptions& overrides, bool has_seed,
                bool has_maxdeg, bool has_maxden, const std::string& json_out) {
    InputTask task;
    try {
        task = load_input(file);
    } catch (const InputError& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kExitInputError;
    }
    if (has_seed) task.options.seed = overrides.seed;
    if (has_maxdeg) task.options.max_degree = overrides.max_degree;
    if (has_maxden) task.options.max_denominator_degree = overrides.max_denominator_degree;

    AnalysisReport rep = run_analysis(task);
    std::cout << rep.text();
    if (!json_out.empty()) {
        std::ofstream out(json_out);
        if (!out) {
            std::cerr << "cannot write " << json_out << "\n";
            return kExitInputError;
        }
        out << rep.to_json().dump(2) << "\n";
    }
    return rep.all_executed_checks_pass() ? kExitPass : kExitCheckFailure;
}

int run_check_lfd(const std::string& file) {
    InputTask task;
    try {
        task = load_input(file);
    } catch (const InputError& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kExitInputError;
    }
    const LieAlgebraVF* g = nullptr;
    std::optional<LieAlgebraVF> computed;
    if (task.algebra) {
        g = &*task.algebra;
    } else {
        try {
            computed = linear_logarithmic_fields(*task.poly);
            g = &*computed;
        } catch (const std::exception& e) {
            std::cerr << "error: " << e.what() << "\n";
            return kExitInputError;
        }
    }
    LfdCertificate cert = is_linear_free_divisor(*g, task.options.reduced_trials, task.options.seed);
    if (cert.is_lfd) {
        std::cout << "linear free divisor: yes\n";
        std::cout << "saito determinant: " << cert.determinant->str(task.variables) << "\n";
        return kExitPass;
    }
    std::cout << "linear free divisor: no (" << cert.reason << ")\n";
    if (cert.determinant)
        std::cout << "saito determinant: " << cert.determinant->str(task.variables) << "\n";
    return kExitCheckFailure;
}

int run_derlog(const std::string& file) {
    InputTask task;
    try {
        task = load_input(file);
    } catch (const InputError& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kExitInputError;
    }
    if (!task.poly) {
        std::cerr << "input error: derlog requires a polynomial task\n";
        return kExitInputError;
    }
    LieAlgebraVF g;
    try {
        g = linear_logarithmic_fields(*task.poly);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInputError;
    }
    nlohmann::ordered_json out;
    out["n"] = g.n;
    out["variables"] = task.variables;
    nlohmann::ordered_json basis = nlohmann::ordered_json::array();
    for (const auto& b : g.basis) {
        nlohmann::ordered_json rows = nlohmann::ordered_json::array();
        for (int i = 0; i < g.n; ++i) {
            nlohmann::ordered_json row = nlohmann::ordered_json::array();
            for (int j = 0; j < g.n; ++j) row.push_back(b.A.at(i, j).str());
            rows.push_back(std::move(row));
        }
        basis.push_back(std::move(rows));
    }
    out["basis"] = std::move(basis);
    std::cout << out.dump(2) << "\n";
    return kExitPass;
}

int run_corpus_list() {
    for (const auto& e : corpus()) std::cout << e.name << "  -  " << e.description << "\n";
    return kExitPass;
}

int run_corpus(const std::string& name, bool all) {
    std::vector<const CorpusEntry*> todo;
    if (all) {
        for (const auto& e : corpus()) todo.push_back(&e);
    } else {
        const CorpusEntry* e = corpus_find(name);
        if (!e) {
            std::cerr << "input error: unknown corpus entry \"" << name << "\"\n";
            return kExitInputError;
        }
        todo.push_back(e);
    }
    bool ok = true;
    for (const CorpusEntry* e : todo) {
        CorpusResult r = corpus_run_entry(*e);
        std::cout << (r.pass ? "PASS" : "FAIL") << "  " << r.name << "\n";
        for (const auto& f : r.failures) std::cout << "      " << f << "\n";
        ok = ok && r.pass;
    }
    return ok ? kExitPass : kExitCheckFailure;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact analysis of prehomogeneous vector spaces, linear free divisors, and "
                 "their relative invariants"};
    app.require_subcommand(1);

    std::string file, json_out, corpus_name;
    AnalysisOptions overrides;
    unsigned maxdeg = 0, maxden = 0;
    bool all = false;

    CLI::App* analyze = app.add_subcommand("analyze", "run the full analysis pipeline on an input file");
    analyze->add_option("file", file, "JSON input file")->required();
    CLI::Option* oseed = analyze->add_option("--seed", overrides.seed, "random seed");
    CLI::Option* omaxdeg = analyze->add_option("--max-degree", maxdeg, "degree bound for basic invariants");
    CLI::Option* omaxden =
        analyze->add_option("--max-denominator-degree", maxden, "denominator degree bound");
    analyze->add_option("--json", json_out, "write the JSON report to this file");

    CLI::App* checklfd = app.add_subcommand("check-lfd", "decide the linear-free-divisor property");
    checklfd->add_option("file", file, "JSON input file")->required();

    CLI::App* derlog = app.add_subcommand("derlog", "compute the linear logarithmic vector fields of a polynomial");
    derlog->add_option("--poly", file, "JSON input file with a \"poly\" task")->required();

    CLI::App* corpus_cmd = app.add_subcommand("corpus", "built-in example catalog");
    CLI::App* clist = corpus_cmd->add_subcommand("list", "list corpus entries");
    CLI::App* crun = corpus_cmd->add_subcommand("run", "run corpus entries against their expectations");
    crun->add_option("name", corpus_name, "entry name");
    crun->add_flag("--all", all, "run every entry");
    corpus_cmd->require_subcommand(1);

    CLI11_PARSE(app, argc, argv);

    if (*analyze) {
        if (*omaxdeg) overrides.max_degree = maxdeg;
        if (*omaxden) overrides.max_denominator_degree = maxden;
        return run_analyze(file, overrides, static_cast<bool>(*oseed), static_cast<bool>(*omaxdeg),
                           static_cast<bool>(*omaxden), json_out);
    }
    if (*checklfd) return run_check_lfd(file);
    if (*derlog) return run_derlog(file);
    if (*clist) return run_corpus_list();
    if (*crun) {
        if (!all && corpus_name.empty()) {
            std::cerr << "input error: give an entry name or --all\n";
            return kExitInputError;
        }
        return run_corpus(corpus_name, all);
    }
    return kExitInputError;
}
