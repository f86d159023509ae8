#include "prehom/report.hpp"

#include <fstream>
#include <sstream>

#include "prehom/parser.hpp"

namespace prehom {

namespace {

std::vector<Rat> parse_point(const nlohmann::json& arr, int n, const std::string& path) {
    if (!arr.is_array() || static_cast<int>(arr.size()) != n)
        throw InputError(path + ": expected an array of " + std::to_string(n) + " rational strings");
    std::vector<Rat> v;
    v.reserve(arr.size());
    for (size_t i = 0; i < arr.size(); ++i) {
        if (!arr[i].is_string())
            throw InputError(path + "[" + std::to_string(i) + "]: expected a rational string");
        try {
            v.push_back(Rat::from_string(arr[i].get<std::string>()));
        } catch (const std::invalid_argument& e) {
            throw InputError(path + "[" + std::to_string(i) + "]: " + e.what());
        }
    }
    return v;
}

}  // namespace

InputTask parse_input(const nlohmann::json& j) {
    if (!j.is_object()) throw InputError("input: expected a JSON object");
    InputTask t;
    if (!j.contains("n") || !j["n"].is_number_integer())
        throw InputError("n: required integer field");
    t.n = j["n"].get<int>();
    if (t.n < 1) throw InputError("n: must be positive");

    if (j.contains("variables")) {
        if (!j["variables"].is_array() || static_cast<int>(j["variables"].size()) != t.n)
            throw InputError("variables: expected an array of n strings");
        for (const auto& v : j["variables"]) {
            if (!v.is_string()) throw InputError("variables: expected strings");
            t.variables.push_back(v.get<std::string>());
        }
    } else {
        for (int i = 1; i <= t.n; ++i) t.variables.push_back("x" + std::to_string(i));
    }

    bool has_basis = j.contains("basis"), has_poly = j.contains("poly");
    if (has_basis == has_poly)
        throw InputError("input: exactly one of \"basis\" or \"poly\" is required");

    if (has_basis) {
        const auto& basis = j["basis"];
        if (!basis.is_array() || basis.empty())
            throw InputError("basis: expected a non-empty array of n x n matrices");
        std::vector<RatMatrix> mats;
        for (size_t bi = 0; bi < basis.size(); ++bi) {
            std::string where = "basis[" + std::to_string(bi) + "]";
            const auto& mat = basis[bi];
            if (!mat.is_array() || static_cast<int>(mat.size()) != t.n)
                throw InputError(where + ": expected " + std::to_string(t.n) + " rows");
            RatMatrix m(t.n, t.n);
            for (int r = 0; r < t.n; ++r) {
                const auto& row = mat[static_cast<size_t>(r)];
                if (!row.is_array() || static_cast<int>(row.size()) != t.n)
                    throw InputError(where + "[" + std::to_string(r) + "]: expected " +
                                     std::to_string(t.n) + " entries");
                for (int c = 0; c < t.n; ++c) {
                    const auto& e = row[static_cast<size_t>(c)];
                    if (!e.is_string())
                        throw InputError(where + "[" + std::to_string(r) + "][" + std::to_string(c) +
                                         "]: expected a rational string");
                    try {
                        m.at(r, c) = Rat::from_string(e.get<std::string>());
                    } catch (const std::invalid_argument& ex) {
                        throw InputError(where + "[" + std::to_string(r) + "][" + std::to_string(c) +
                                         "]: " + ex.what());
                    }
                }
            }
            mats.push_back(std::move(m));
        }
        try {
            t.algebra = make_algebra(std::move(mats), /*check_closed=*/true);
        } catch (const std::invalid_argument& e) {
            throw InputError(std::string("basis: ") + e.what());
        }
    } else {
        if (!j["poly"].is_string()) throw InputError("poly: expected a string");
        try {
            t.poly = parse_poly(j["poly"].get<std::string>(), t.variables);
        } catch (const ParseError& e) {
            throw InputError(std::string("poly: ") + e.what());
        }
        Homogeneity h = homogeneous_degree(*t.poly);
        if (h.kind != Homogeneity::Homogeneous)
            throw InputError("poly: must be a nonzero homogeneous polynomial");
    }

    if (j.contains("points")) {
        if (!j["points"].is_object()) throw InputError("points: expected an object");
        for (const auto& [role, arr] : j["points"].items())
            t.points.emplace(role, parse_point(arr, t.n, "points." + role));
    }

    if (j.contains("options")) {
        const auto& o = j["options"];
        if (!o.is_object()) throw InputError("options: expected an object");
        if (o.contains("seed")) t.options.seed = o["seed"].get<std::uint64_t>();
        if (o.contains("max_degree")) t.options.max_degree = o["max_degree"].get<unsigned>();
        if (o.contains("max_denominator_degree"))
            t.options.max_denominator_degree = o["max_denominator_degree"].get<unsigned>();
        if (o.contains("reduced_trials")) t.options.reduced_trials = o["reduced_trials"].get<int>();
        if (o.contains("generic_tries")) t.options.generic_tries = o["generic_tries"].get<int>();
    }
    return t;
}

InputTask load_input(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open input file: " + path);
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw InputError("invalid JSON in " + path + ": " + e.what());
    }
    return parse_input(j);
}

bool matches_mod_denominator(const MultiPoly& h, const MultiPoly& target, const MultiPoly& den) {
    // solve h = s*target + t*den over the union support
    std::vector<MultiPoly> gens{target, den};
    std::vector<MultiPoly> all = gens;
    all.push_back(h);
    std::map<Monomial, int, MonoOrder> idx;
    for (const auto& p : all)
        for (const auto& [m, c] : p.terms()) idx.emplace(m, 0);
    int row = 0;
    for (auto& [m, i] : idx) i = row++;
    RatMatrix sys(row, 2);
    std::vector<Rat> rhs(static_cast<size_t>(row));
    for (const auto& [m, c] : target.terms()) sys.at(idx.at(m), 0) = c;
    for (const auto& [m, c] : den.terms()) sys.at(idx.at(m), 1) = c;
    for (const auto& [m, c] : h.terms()) rhs[static_cast<size_t>(idx.at(m))] = c;
    auto sol = solve(sys, rhs);
    return sol && !(*sol)[0].is_zero();
}

bool AnalysisReport::all_executed_checks_pass() const {
    if (!errors.empty()) return false;
    for (const auto& v : checks)
        if (v.status == Verdict::Fail) return false;
    return true;
}

AnalysisReport run_analysis(const InputTask& input) {
    AnalysisReport rep;
    rep.input = input;

    const LieAlgebraVF* g = nullptr;
    if (input.algebra) {
        g = &*input.algebra;
    } else {
        try {
            rep.derived_algebra = linear_logarithmic_fields(*input.poly);
            g = &*rep.derived_algebra;
        } catch (const std::exception& e) {
            rep.errors.push_back(std::string("logarithmic fields: ") + e.what());
            return rep;
        }
    }

    // prehomogeneity certificate
    std::optional<std::vector<Rat>> v0;
    if (auto it = input.points.find("generic"); it != input.points.end()) {
        if (orbit_tangent_dim(*g, it->second) == g->n) v0 = it->second;
        else rep.warnings.push_back("provided generic point is not generic; searching instead");
    }
    if (!v0) v0 = find_generic_point(*g, input.options.seed, input.options.generic_tries);
    if (!v0) {
        rep.errors.push_back("no generic point found: prehomogeneity not certified (dim g = " +
                             std::to_string(g->dim()) + ", n = " + std::to_string(g->n) + ")");
        return rep;
    }
    rep.prehomogeneous = true;
    rep.generic_point = v0;
    PVSpace p{*g, *v0, std::nullopt};

    // linear free divisor certificate
    if (g->dim() == g->n) {
        LfdCertificate cert =
            is_linear_free_divisor(*g, input.options.reduced_trials, input.options.seed);
        rep.lfd = cert.is_lfd;
        rep.lfd_reason = cert.reason;
        rep.saito_det = cert.determinant;
        rep.reduced = cert.reduced;
        p.saito_det = cert.determinant;
        if (rep.lfd && input.poly) {
            auto q = exact_divide(*cert.determinant, *input.poly);
            if (q && q->is_constant() && !q->is_zero())
                rep.checks.push_back(Verdict::pass("divisor-match",
                                                   "Saito determinant is a constant multiple of the input polynomial"));
            else
                rep.checks.push_back(Verdict::fail("divisor-match",
                                                   "Saito determinant does not define the input polynomial"));
        }
    } else {
        rep.lfd = false;
        rep.lfd_reason = "dim g = " + std::to_string(g->dim()) + " != n = " + std::to_string(g->n);
    }

    rep.max_degree_used = input.options.max_degree.value_or(
        rep.lfd ? static_cast<unsigned>(g->n) : 2u * static_cast<unsigned>(g->n));
    if (!input.options.max_degree && !rep.lfd)
        rep.warnings.push_back("no general degree bound exists for basic invariants; scanning up to 2n = " +
                               std::to_string(rep.max_degree_used));
    rep.max_denominator_degree_used =
        input.options.max_denominator_degree.value_or(static_cast<unsigned>(g->n));

    // basic relative invariants
    try {
        BasicInvariants b = basic_relative_invariants(p, rep.max_degree_used, rep.lfd);
        rep.basics = std::move(b.basics);
        rep.multiplicities = std::move(b.multiplicities);
        for (auto& w : b.warnings) rep.warnings.push_back(std::move(w));
    } catch (const std::exception& e) {
        rep.errors.push_back(std::string("basic invariants: ") + e.what());
        return rep;
    }

    // additive relative invariants
    try {
        rep.additive = additive_invariants(p, rep.basics, rep.max_denominator_degree_used);
        for (const auto& a : rep.additive) {
            std::string why;
            if (!verify_additive(p, rep.basics, a, &why))
                rep.errors.push_back("additive invariant failed verification: " + why);
        }
    } catch (const std::exception& e) {
        rep.errors.push_back(std::string("additive invariants: ") + e.what());
    }

    rep.dims = compute_dims(p, static_cast<int>(rep.basics.size()),
                            static_cast<int>(rep.additive.size()));

    // theorem checks
    rep.checks.push_back(check_component_count(p, rep.basics, rep.lfd));
    rep.checks.push_back(check_numcomponents_identity(*rep.dims, rep.max_degree_used,
                                                      rep.max_denominator_degree_used));
    rep.checks.push_back(check_no_additive(p, rep.lfd, rep.additive, rep.max_denominator_degree_used));
    rep.checks.push_back(check_euler(p, rep.basics, rep.lfd));
    rep.checks.push_back(check_jacobian_independence(p, rep.basics, rep.additive));

    // component points: provided or searched
    std::vector<std::optional<std::vector<Rat>>> pts(rep.basics.size());
    for (size_t i = 0; i < rep.basics.size(); ++i) {
        auto it = input.points.find("component:" + std::to_string(i + 1));
        if (it != input.points.end()) {
            pts[i] = it->second;
        } else {
            pts[i] = find_component_point(rep.basics, i, input.options.seed + 17 * (i + 1));
        }
    }
    try {
        for (auto& v : check_vanishing(p, rep.basics, rep.lfd, pts)) rep.checks.push_back(std::move(v));
    } catch (const std::invalid_argument& e) {
        rep.errors.push_back(std::string("vanishing check: ") + e.what());
    }
    for (auto& v : check_special_cases(p, rep.lfd, rep.basics, *rep.dims, rep.max_degree_used))
        rep.checks.push_back(std::move(v));
    return rep;
}

namespace {

nlohmann::ordered_json rat_vec_json(std::span<const Rat> v) {
    nlohmann::ordered_json a = nlohmann::ordered_json::array();
    for (const Rat& x : v) a.push_back(x.str());
    return a;
}

nlohmann::ordered_json matrix_json(const RatMatrix& m) {
    nlohmann::ordered_json rows = nlohmann::ordered_json::array();
    for (int i = 0; i < m.rows(); ++i) {
        nlohmann::ordered_json row = nlohmann::ordered_json::array();
        for (int j = 0; j < m.cols(); ++j) row.push_back(m.at(i, j).str());
        rows.push_back(std::move(row));
    }
    return rows;
}

std::string denominator_string(const std::vector<SemiInvariant>& basics,
                               std::span<const unsigned> k,
                               std::span<const std::string> vars) {
    std::ostringstream os;
    bool first = true;
    for (size_t i = 0; i < basics.size(); ++i) {
        if (k[i] == 0) continue;
        if (!first) os << "*";
        first = false;
        os << "(" << basics[i].f.str(vars) << ")";
        if (k[i] > 1) os << "^" << k[i];
    }
    if (first) os << "1";
    return os.str();
}

const char* status_str(Verdict::Status s) {
    switch (s) {
        case Verdict::Pass: return "pass";
        case Verdict::Fail: return "fail";
        default: return "skipped";
    }
}

}  // namespace

nlohmann::ordered_json AnalysisReport::to_json() const {
    nlohmann::ordered_json j;
    j["version"] = 1;

    nlohmann::ordered_json in;
    in["n"] = input.n;
    in["variables"] = input.variables;
    if (input.algebra) {
        nlohmann::ordered_json basis = nlohmann::ordered_json::array();
        for (const auto& b : input.algebra->basis) basis.push_back(matrix_json(b.A));
        in["basis"] = std::move(basis);
    }
    if (input.poly) in["poly"] = input.poly->str(input.variables);
    if (!input.points.empty()) {
        nlohmann::ordered_json pts;
        for (const auto& [role, v] : input.points) pts[role] = rat_vec_json(v);
        in["points"] = std::move(pts);
    }
    j["input"] = std::move(in);

    nlohmann::ordered_json opts;
    opts["seed"] = input.options.seed;
    opts["max_degree"] = max_degree_used;
    opts["max_denominator_degree"] = max_denominator_degree_used;
    opts["reduced_trials"] = input.options.reduced_trials;
    j["options"] = std::move(opts);

    j["prehomogeneous"] = prehomogeneous;
    j["generic_point"] = generic_point ? rat_vec_json(*generic_point) : nlohmann::ordered_json();
    if (derived_algebra) {
        nlohmann::ordered_json basis = nlohmann::ordered_json::array();
        for (const auto& b : derived_algebra->basis) basis.push_back(matrix_json(b.A));
        j["logarithmic_fields"] = std::move(basis);
    }

    nlohmann::ordered_json lfdj;
    lfdj["verdict"] = lfd;
    if (!lfd_reason.empty()) lfdj["reason"] = lfd_reason;
    if (saito_det) lfdj["saito_determinant"] = saito_det->str(input.variables);
    if (reduced.verdict == Reducedness::Reduced) {
        lfdj["witness_line"] = nlohmann::ordered_json{{"p", rat_vec_json(reduced.witness_p)},
                                                      {"q", rat_vec_json(reduced.witness_q)}};
    }
    j["lfd"] = std::move(lfdj);

    nlohmann::ordered_json bj = nlohmann::ordered_json::array();
    for (size_t i = 0; i < basics.size(); ++i) {
        nlohmann::ordered_json b;
        b["poly"] = basics[i].f.str(input.variables);
        b["degree"] = basics[i].degree();
        b["lambda"] = rat_vec_json(basics[i].lambda);
        if (i < multiplicities.size()) b["multiplicity"] = multiplicities[i];
        bj.push_back(std::move(b));
    }
    j["basics"] = std::move(bj);

    nlohmann::ordered_json aj = nlohmann::ordered_json::array();
    for (const auto& a : additive) {
        nlohmann::ordered_json e;
        e["numerator"] = a.h1.str(input.variables);
        e["denominator_exponents"] = a.k;
        e["denominator"] = denominator_string(basics, a.k, input.variables);
        e["dphi"] = rat_vec_json(a.dphi);
        aj.push_back(std::move(e));
    }
    j["additive"] = std::move(aj);

    if (dims) {
        nlohmann::ordered_json d;
        d["dim_g"] = dims->dim_g;
        d["dim_derived"] = dims->dim_derived;
        d["dim_isotropy_v0"] = dims->dim_isotropy_v0;
        d["dim_H"] = dims->dim_H;
        d["k"] = dims->k;
        d["l"] = dims->l;
        d["r"] = dims->r;
        j["dims"] = std::move(d);
    } else {
        j["dims"] = nlohmann::ordered_json();
    }

    nlohmann::ordered_json cj = nlohmann::ordered_json::array();
    for (const auto& v : checks) {
        nlohmann::ordered_json c;
        c["check"] = v.check;
        c["status"] = status_str(v.status);
        if (!v.detail.empty()) c["detail"] = v.detail;
        cj.push_back(std::move(c));
    }
    j["checks"] = std::move(cj);
    j["warnings"] = warnings;
    j["errors"] = errors;
    return j;
}

std::string AnalysisReport::text() const {
    std::ostringstream os;
    os << "prehomogeneous: " << (prehomogeneous ? "yes" : "no");
    if (generic_point) os << "  (generic point " << rat_vec_json(*generic_point).dump() << ")";
    os << "\n";
    os << "linear free divisor: " << (lfd ? "yes" : "no");
    if (!lfd && !lfd_reason.empty()) os << "  (" << lfd_reason << ")";
    os << "\n";
    if (saito_det) os << "saito determinant: " << saito_det->str(input.variables) << "\n";
    if (dims)
        os << "dims: dim g = " << dims->dim_g << ", dim [g,g] = " << dims->dim_derived
           << ", dim g_v0 = " << dims->dim_isotropy_v0 << ", dim H = " << dims->dim_H
           << ", k = " << dims->k << ", l = " << dims->l << ", r = " << dims->r << "\n";
    os << "basic relative invariants (" << basics.size() << "):\n";
    for (size_t i = 0; i < basics.size(); ++i) {
        os << "  f" << i + 1 << " = " << basics[i].f.str(input.variables)
           << "   lambda = " << rat_vec_json(basics[i].lambda).dump();
        if (i < multiplicities.size()) os << "   multiplicity " << multiplicities[i];
        os << "\n";
    }
    os << "additive relative invariants (" << additive.size() << "):\n";
    for (const auto& a : additive)
        os << "  (" << a.h1.str(input.variables) << ") / "
           << denominator_string(basics, a.k, input.variables)
           << "   dphi = " << rat_vec_json(a.dphi).dump() << "\n";
    os << "checks:\n";
    for (const auto& v : checks)
        os << "  [" << status_str(v.status) << "] " << v.check
           << (v.detail.empty() ? "" : ": " + v.detail) << "\n";
    for (const auto& w : warnings) os << "warning: " << w << "\n";
    for (const auto& e : errors) os << "error: " << e << "\n";
    return os.str();
}

}  // namespace prehom
