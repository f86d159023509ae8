#ifndef PREHOM_REPORT_HPP
#define PREHOM_REPORT_HPP

#include <json.hpp>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "prehom/verifier.hpp"

namespace prehom {

/// Input file or schema violations; the message carries the field path.
class InputError : public std::runtime_error {
public:
    explicit InputError(const std::string& msg) : std::runtime_error(msg) {}
};

struct AnalysisOptions {
    std::uint64_t seed = 1;
    std::optional<unsigned> max_degree;              // default n (LFD) or 2n
    std::optional<unsigned> max_denominator_degree;  // default n
    int reduced_trials = 3;
    int generic_tries = 400;
};

/// A validated task: exactly one of algebra or poly is set.
struct InputTask {
    int n = 0;
    std::vector<std::string> variables;
    std::optional<LieAlgebraVF> algebra;
    std::optional<MultiPoly> poly;
    std::map<std::string, std::vector<Rat>> points;  // "generic", "component:1", ...
    AnalysisOptions options;
};

InputTask parse_input(const nlohmann::json& j);
InputTask load_input(const std::string& path);

struct AnalysisReport {
    InputTask input;
    unsigned max_degree_used = 0;
    unsigned max_denominator_degree_used = 0;

    bool prehomogeneous = false;
    std::optional<std::vector<Rat>> generic_point;
    std::optional<LieAlgebraVF> derived_algebra;  // for polynomial tasks

    bool lfd = false;
    std::string lfd_reason;
    std::optional<MultiPoly> saito_det;
    ReducednessResult reduced;

    std::vector<SemiInvariant> basics;
    std::vector<unsigned> multiplicities;
    std::vector<AdditiveInvariant> additive;
    std::optional<Dims> dims;

    std::vector<Verdict> checks;
    std::vector<std::string> warnings;
    std::vector<std::string> errors;

    bool all_executed_checks_pass() const;
    nlohmann::ordered_json to_json() const;
    std::string text() const;
};

/// The full pipeline: (poly -> logarithmic fields) -> generic point ->
/// LFD check -> basic invariants -> additive invariants -> theorem
/// checks.  Deterministic given (input, options.seed).  Stage failures
/// are recorded without aborting later independent stages.
AnalysisReport run_analysis(const InputTask& input);

/// h == s*target + t*den for some scalars s != 0, t (den may be any
/// polynomial; used for "up to scalar and multiples of the denominator"
/// comparisons).
bool matches_mod_denominator(const MultiPoly& h, const MultiPoly& target, const MultiPoly& den);

}  // namespace prehom

#endif
