#include "prehom/verifier.hpp"

#include <algorithm>
#include <random>
#include <sstream>

namespace prehom {

namespace {

Subspace isotropy_in_matrix_space(const PVSpace& p, const Subspace& iso_coords) {
    std::vector<std::vector<Rat>> rows;
    for (int r = 0; r < iso_coords.dim(); ++r)
        rows.push_back(flatten(combine(p.g, iso_coords.basis.row(r))));
    return Subspace::span_of_vectors(rows, p.g.n * p.g.n);
}

Rat pair_covector(std::span<const Rat> lambda, std::span<const Rat> coords) {
    Rat s;
    for (size_t i = 0; i < lambda.size() && i < coords.size(); ++i) s += lambda[i] * coords[i];
    return s;
}

}  // namespace

Dims compute_dims(const PVSpace& p, int r, int dim_a1) {
    Dims d;
    d.dim_g = p.g.dim();
    Subspace derived = derived_subalgebra(p.g);
    d.dim_derived = derived.dim();
    Subspace iso = isotropy_subalgebra(p.g, p.v0);
    d.dim_isotropy_v0 = iso.dim();
    Subspace combined = subspace_sum(derived, isotropy_in_matrix_space(p, iso));
    d.dim_H = d.dim_g - combined.dim();
    d.r = r;
    d.k = r;
    d.l = dim_a1;
    return d;
}

EulerDecomposition euler_decomposition(const PVSpace& p, const std::vector<SemiInvariant>& basics) {
    const LieAlgebraVF& g = p.g;
    size_t r = basics.size();
    auto coords_i = coordinates_in(g, RatMatrix::identity(g.n));
    if (!coords_i)
        throw std::runtime_error("euler_decomposition: the identity matrix is not in g");
    EulerDecomposition e;
    e.lambda_of_identity.reserve(r);
    e.degrees_match = true;
    for (const auto& b : basics) {
        Rat li = pair_covector(b.lambda, *coords_i);
        if (li != Rat(static_cast<long>(b.degree()))) e.degrees_match = false;
        e.lambda_of_identity.push_back(li);
    }
    // lambda_i(X_j) = delta_ij, canonical solution with free variables 0
    RatMatrix lam(static_cast<int>(r), g.dim());
    for (size_t i = 0; i < r; ++i)
        for (int t = 0; t < g.dim(); ++t) lam.at(static_cast<int>(i), t) = basics[i].lambda[static_cast<size_t>(t)];
    e.kronecker_property = true;
    for (size_t j = 0; j < r; ++j) {
        std::vector<Rat> rhs(r);
        rhs[j] = Rat(1);
        auto x = solve(lam, rhs);
        if (!x) throw std::runtime_error("euler_decomposition: inconsistent character system (broken invariant basis)");
        LinVectorField xj{combine(g, *x)};
        for (size_t i = 0; i < r; ++i) {
            MultiPoly expect = (i == j) ? basics[i].f : MultiPoly::zero(g.n);
            if (apply_derivation(xj, basics[i].f) != expect) e.kronecker_property = false;
        }
        e.xj.push_back(std::move(*x));
    }
    e.residual = *coords_i;
    for (size_t j = 0; j < r; ++j) {
        Rat deg(static_cast<long>(basics[j].degree()));
        for (size_t t = 0; t < e.residual.size(); ++t) e.residual[t] -= deg * e.xj[j][t];
    }
    Subspace derived = derived_subalgebra(g);
    e.residual_in_derived = contains(derived, flatten(combine(g, e.residual)));
    return e;
}

Verdict check_component_count(const PVSpace& p, const std::vector<SemiInvariant>& basics,
                              bool lfd) {
    if (!lfd) return Verdict::skipped("component-count", "not a certified linear free divisor");
    int r = static_cast<int>(basics.size());
    int expect = p.g.dim() - derived_subalgebra(p.g).dim();
    std::ostringstream os;
    os << "r = " << r << ", dim g - dim [g,g] = " << expect;
    return r == expect ? Verdict::pass("component-count", os.str())
                       : Verdict::fail("component-count", os.str());
}

Verdict check_numcomponents_identity(const Dims& dims, unsigned max_degree,
                                     unsigned max_denominator_degree) {
    std::ostringstream os;
    os << "r = " << dims.r << ", dim H - dim A1 = " << dims.dim_H - dims.l
       << " (bounds: degree " << max_degree << ", denominator degree " << max_denominator_degree
       << ")";
    return dims.r == dims.dim_H - dims.l ? Verdict::pass("numcomponents-identity", os.str())
                                         : Verdict::fail("numcomponents-identity", os.str());
}

Verdict check_no_additive(const PVSpace& p, bool lfd,
                          const std::vector<AdditiveInvariant>& additive, unsigned bound) {
    (void)p;
    if (!lfd) return Verdict::skipped("no-additive", "not a certified linear free divisor");
    std::ostringstream os;
    os << additive.size() << " additive invariants up to denominator degree " << bound
       << " (bounded claim)";
    return additive.empty() ? Verdict::pass("no-additive", os.str())
                            : Verdict::fail("no-additive", os.str());
}

Verdict check_euler(const PVSpace& p, const std::vector<SemiInvariant>& basics, bool lfd) {
    if (!lfd) return Verdict::skipped("euler-decomposition", "not a certified linear free divisor");
    try {
        EulerDecomposition e = euler_decomposition(p, basics);
        std::ostringstream os;
        os << "lambda_i(I) = (";
        for (size_t i = 0; i < e.lambda_of_identity.size(); ++i)
            os << (i ? "," : "") << e.lambda_of_identity[i].str();
        os << "), residual in [g,g]: " << (e.residual_in_derived ? "yes" : "no");
        bool ok = e.degrees_match && e.residual_in_derived && e.kronecker_property;
        return ok ? Verdict::pass("euler-decomposition", os.str())
                  : Verdict::fail("euler-decomposition", os.str());
    } catch (const std::exception& ex) {
        return Verdict::fail("euler-decomposition", ex.what());
    }
}

std::vector<Verdict> check_vanishing(const PVSpace& p, const std::vector<SemiInvariant>& basics,
                                     bool lfd,
                                     const std::vector<std::optional<std::vector<Rat>>>& points) {
    std::vector<Verdict> out;
    for (size_t i = 0; i < basics.size(); ++i) {
        std::string name = "vanishing:f" + std::to_string(i + 1);
        if (i >= points.size() || !points[i]) {
            out.push_back(Verdict::skipped(name, "no component point available"));
            continue;
        }
        const std::vector<Rat>& v = *points[i];
        if (!evaluate(basics[i].f, v).is_zero())
            throw std::invalid_argument(name + ": point does not lie on the component");
        for (size_t j = 0; j < basics.size(); ++j)
            if (j != i && evaluate(basics[j].f, v).is_zero())
                throw std::invalid_argument(name + ": point lies on another component");
        Subspace iso = isotropy_subalgebra(p.g, v);
        std::ostringstream os;
        os << "dim isotropy = " << iso.dim();
        bool ok = true;
        for (size_t j = 0; j < basics.size() && ok; ++j) {
            if (j == i) continue;
            for (int t = 0; t < iso.dim(); ++t)
                if (!pair_covector(basics[j].lambda, iso.basis.row(t)).is_zero()) {
                    ok = false;
                    os << "; lambda_" << j + 1 << " does not vanish on the isotropy algebra";
                    break;
                }
        }
        if (lfd && ok) {
            if (iso.dim() != 1) {
                ok = false;
                os << "; expected a 1-dimensional isotropy algebra on an LFD component";
            } else if (pair_covector(basics[i].lambda, iso.basis.row(0)).is_zero()) {
                ok = false;
                os << "; own character vanishes on the isotropy algebra";
            }
        }
        out.push_back(ok ? Verdict::pass(name, os.str()) : Verdict::fail(name, os.str()));
    }
    return out;
}

std::vector<Verdict> check_special_cases(const PVSpace& p, bool lfd,
                                         const std::vector<SemiInvariant>& basics,
                                         const Dims& dims, unsigned max_degree) {
    std::vector<Verdict> out;

    // abelian: an abelian LFD is the normal crossings divisor
    if (dims.dim_derived != 0) {
        out.push_back(Verdict::skipped("abelian", "algebra is not abelian"));
    } else if (!lfd) {
        out.push_back(Verdict::skipped("abelian", "abelian but not a certified linear free divisor"));
    } else {
        bool ok = static_cast<int>(basics.size()) == p.g.n;
        for (const auto& b : basics) ok = ok && b.degree() == 1;
        out.push_back(ok ? Verdict::pass("abelian", "r == n with all degrees 1")
                         : Verdict::fail("abelian", "abelian LFD must have n degree-1 components"));
    }

    // solvable: lower-triangular basis implies r == rank of the diagonal
    // projection of g
    bool lower = true;
    for (const auto& b : p.g.basis)
        for (int i = 0; i < p.g.n && lower; ++i)
            for (int j = i + 1; j < p.g.n; ++j)
                if (!b.A.at(i, j).is_zero()) { lower = false; break; }
    if (!lower) {
        out.push_back(Verdict::skipped("solvable", "basis is not lower-triangular as given"));
    } else if (!lfd) {
        out.push_back(Verdict::skipped("solvable", "triangular but not a certified linear free divisor"));
    } else {
        RatMatrix proj(p.g.dim(), p.g.n);
        for (int t = 0; t < p.g.dim(); ++t)
            for (int i = 0; i < p.g.n; ++i) proj.at(t, i) = p.g.basis[static_cast<size_t>(t)].A.at(i, i);
        int rank = rref(proj).second;
        std::ostringstream os;
        os << "r = " << basics.size() << ", diagonal projection rank = " << rank;
        out.push_back(static_cast<int>(basics.size()) == rank
                          ? Verdict::pass("solvable", os.str())
                          : Verdict::fail("solvable", os.str()));
    }

    // no hypersurface components if and only if H is trivial
    if (!basics.empty()) {
        out.push_back(Verdict::skipped("no-components", "invariants were found"));
    } else {
        std::ostringstream os;
        os << "no invariants up to degree " << max_degree << ", dim H = " << dims.dim_H;
        out.push_back(dims.dim_H == 0
                          ? Verdict::pass("no-components", os.str())
                          : Verdict::fail("no-components", os.str() + " (bound too small or missing invariants)"));
    }
    return out;
}

Verdict check_jacobian_independence(const PVSpace& p, const std::vector<SemiInvariant>& basics,
                                    const std::vector<AdditiveInvariant>& additive) {
    size_t rows = basics.size() + additive.size();
    if (rows == 0) return Verdict::skipped("jacobian-independence", "nothing to check");
    RatMatrix jac(static_cast<int>(rows), p.g.n);
    int rr = 0;
    for (const auto& b : basics) {
        for (int i = 0; i < p.g.n; ++i)
            jac.at(rr, i) = evaluate(partial_derivative(b.f, i), p.v0);
        ++rr;
    }
    for (const auto& a : additive) {
        for (int i = 0; i < p.g.n; ++i)
            jac.at(rr, i) = evaluate(partial_derivative(a.h1, i), p.v0);
        ++rr;
    }
    int rank = rref(jac).second;
    std::ostringstream os;
    os << "rank " << rank << " of " << rows << " gradients at the generic point";
    return rank == static_cast<int>(rows) ? Verdict::pass("jacobian-independence", os.str())
                                          : Verdict::fail("jacobian-independence", os.str());
}

std::optional<std::vector<Rat>> find_component_point(const std::vector<SemiInvariant>& basics,
                                                     size_t index, std::uint64_t seed,
                                                     int max_tries) {
    if (index >= basics.size()) throw std::invalid_argument("find_component_point: index out of range");
    const MultiPoly& f = basics[index].f;
    int n = f.n();
    std::mt19937_64 rng(seed);
    auto valid = [&](const std::vector<Rat>& v) {
        if (!evaluate(f, v).is_zero()) return false;
        for (size_t j = 0; j < basics.size(); ++j)
            if (j != index && evaluate(basics[j].f, v).is_zero()) return false;
        return true;
    };
    // prefer solving for a variable that appears only to the first power
    int lin = -1;
    for (int t = 0; t < n && lin < 0; ++t) {
        unsigned maxe = 0;
        for (const auto& [m, c] : f.terms()) maxe = std::max(maxe, m.e[static_cast<size_t>(t)]);
        if (maxe == 1) lin = t;
    }
    long box = 2;
    for (int it = 0; it < max_tries; ++it) {
        if (it > 0 && it % 32 == 0) box *= 2;
        std::uniform_int_distribution<long> dist(-box, box);
        std::vector<Rat> v(static_cast<size_t>(n));
        for (auto& x : v) x = Rat(dist(rng));
        if (lin >= 0) {
            // f = A x_t + B with A, B free of x_t
            MultiPoly a = partial_derivative(f, lin);
            v[static_cast<size_t>(lin)] = Rat(0);
            Rat av = evaluate(a, v);
            if (av.is_zero()) continue;
            Rat bv = evaluate(f, v);
            v[static_cast<size_t>(lin)] = -bv / av;
        }
        if (valid(v)) return v;
    }
    return std::nullopt;
}

}  // namespace prehom
