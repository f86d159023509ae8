#include "prehom/liealg.hpp"

#include <stdexcept>

namespace prehom {

std::vector<Rat> flatten(const RatMatrix& m) {
    std::vector<Rat> v;
    v.reserve(static_cast<size_t>(m.rows()) * m.cols());
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) v.push_back(m.at(i, j));
    return v;
}

RatMatrix unflatten(std::span<const Rat> v, int n) {
    if (static_cast<int>(v.size()) != n * n) throw std::invalid_argument("unflatten: length mismatch");
    RatMatrix m(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) m.at(i, j) = v[static_cast<size_t>(i * n + j)];
    return m;
}

Subspace algebra_span(const LieAlgebraVF& g) {
    std::vector<std::vector<Rat>> rows;
    rows.reserve(g.basis.size());
    for (const auto& b : g.basis) rows.push_back(flatten(b.A));
    return Subspace::span_of_vectors(rows, g.n * g.n);
}

std::optional<std::vector<Rat>> coordinates_in(const LieAlgebraVF& g, const RatMatrix& m) {
    // Solve sum_j c_j B_j = m as a linear system in the c_j.
    int nn = g.n * g.n;
    RatMatrix sys(nn, g.dim());
    for (int j = 0; j < g.dim(); ++j) {
        std::vector<Rat> f = flatten(g.basis[static_cast<size_t>(j)].A);
        for (int i = 0; i < nn; ++i) sys.at(i, j) = f[static_cast<size_t>(i)];
    }
    return solve(sys, flatten(m));
}

RatMatrix combine(const LieAlgebraVF& g, std::span<const Rat> coords) {
    if (static_cast<int>(coords.size()) != g.dim())
        throw std::invalid_argument("combine: coordinate length mismatch");
    RatMatrix m(g.n, g.n);
    for (int j = 0; j < g.dim(); ++j)
        if (!coords[static_cast<size_t>(j)].is_zero())
            m = m + g.basis[static_cast<size_t>(j)].A.scaled(coords[static_cast<size_t>(j)]);
    return m;
}

LinVectorField vf_bracket(const LinVectorField& a, const LinVectorField& b) {
    if (a.n() != b.n()) throw std::invalid_argument("vf_bracket: size mismatch");
    return LinVectorField{b.A * a.A - a.A * b.A};
}

MultiPoly apply_derivation(const LinVectorField& a, const MultiPoly& f) {
    if (a.n() != f.n()) throw std::invalid_argument("apply_derivation: size mismatch");
    int n = f.n();
    MultiPoly out(n);
    // sum_i (A x)_i * df/dx_i  ==  sum_{i,j} A_ij x_j df/dx_i
    for (const auto& [m, c] : f.terms()) {
        for (int i = 0; i < n; ++i) {
            unsigned k = m.e[static_cast<size_t>(i)];
            if (k == 0) continue;
            for (int j = 0; j < n; ++j) {
                const Rat& aij = a.A.at(i, j);
                if (aij.is_zero()) continue;
                Monomial t = m;
                t.e[static_cast<size_t>(i)] = k - 1;
                ++t.e[static_cast<size_t>(j)];
                out.add_term(t, c * Rat(static_cast<long>(k)) * aij);
            }
        }
    }
    return out;
}

Subspace derived_subalgebra(const LieAlgebraVF& g) {
    if (!g.closed) throw std::invalid_argument("derived_subalgebra: algebra not verified closed");
    std::vector<std::vector<Rat>> rows;
    for (size_t i = 0; i < g.basis.size(); ++i)
        for (size_t j = i + 1; j < g.basis.size(); ++j)
            rows.push_back(flatten(vf_bracket(g.basis[i], g.basis[j]).A));
    return Subspace::span_of_vectors(rows, g.n * g.n);
}

RatMatrix orbit_map_matrix(const LieAlgebraVF& g, std::span<const Rat> v) {
    if (static_cast<int>(v.size()) != g.n)
        throw std::invalid_argument("orbit map: point length mismatch");
    RatMatrix m(g.n, g.dim());
    for (int j = 0; j < g.dim(); ++j) {
        std::vector<Rat> av = g.basis[static_cast<size_t>(j)].A.apply(v);
        for (int i = 0; i < g.n; ++i) m.at(i, j) = av[static_cast<size_t>(i)];
    }
    return m;
}

Subspace isotropy_subalgebra(const LieAlgebraVF& g, std::span<const Rat> v) {
    return kernel(orbit_map_matrix(g, v));
}

int orbit_tangent_dim(const LieAlgebraVF& g, std::span<const Rat> v) {
    return rref(orbit_map_matrix(g, v)).second;
}

ClosureResult verify_closure(const LieAlgebraVF& g) {
    Subspace span = algebra_span(g);
    for (size_t i = 0; i < g.basis.size(); ++i)
        for (size_t j = i + 1; j < g.basis.size(); ++j) {
            RatMatrix br = vf_bracket(g.basis[i], g.basis[j]).A;
            std::vector<Rat> fl = flatten(br);
            auto [rem, coords] = reduce_against(span, fl);
            bool ok = true;
            for (const Rat& x : rem)
                if (!x.is_zero()) { ok = false; break; }
            if (!ok)
                return ClosureResult{false, static_cast<int>(i), static_cast<int>(j),
                                     unflatten(rem, g.n)};
        }
    return ClosureResult{true, -1, -1, RatMatrix(0, 0)};
}

LieAlgebraVF make_algebra(std::vector<RatMatrix> mats, bool check_closed) {
    if (mats.empty()) throw std::invalid_argument("make_algebra: empty basis");
    int n = mats[0].rows();
    LieAlgebraVF g;
    g.n = n;
    for (auto& m : mats) {
        if (m.rows() != n || m.cols() != n)
            throw std::invalid_argument("make_algebra: basis matrices must be n x n");
        g.basis.push_back(LinVectorField{std::move(m)});
    }
    if (algebra_span(g).dim() != g.dim())
        throw std::invalid_argument("make_algebra: basis matrices are linearly dependent");
    if (check_closed) {
        ClosureResult c = verify_closure(g);
        if (!c.closed)
            throw std::invalid_argument("make_algebra: not closed under bracket (pair " +
                                        std::to_string(c.bad_i) + "," + std::to_string(c.bad_j) + ")");
        g.closed = true;
    }
    return g;
}

}  // namespace prehom
