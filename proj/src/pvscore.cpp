#include "prehom/pvscore.hpp"

#include <map>
#include <random>
#include <stdexcept>

namespace prehom {

std::optional<std::vector<Rat>> find_generic_point(const LieAlgebraVF& g, std::uint64_t seed,
                                                   int max_tries) {
    if (g.dim() < g.n) return std::nullopt;  // rank can never reach n
    std::mt19937_64 rng(seed);
    long box = 2;
    for (int t = 0; t < max_tries; ++t) {
        if (t > 0 && t % 16 == 0) box *= 2;
        std::uniform_int_distribution<long> d(-box, box);
        std::vector<Rat> v(static_cast<size_t>(g.n));
        for (auto& x : v) x = Rat(d(rng));
        if (orbit_tangent_dim(g, v) == g.n) return v;
    }
    return std::nullopt;
}

std::optional<PVSpace> certify_prehomogeneous(const LieAlgebraVF& g, std::uint64_t seed,
                                              int max_tries) {
    auto v0 = find_generic_point(g, seed, max_tries);
    if (!v0) return std::nullopt;
    PVSpace p{g, *v0, std::nullopt};
    if (g.dim() == g.n) p.saito_det = saito_determinant(saito_matrix(g));
    return p;
}

SaitoMatrix saito_matrix(const LieAlgebraVF& g) {
    if (g.dim() != g.n)
        throw std::invalid_argument("saito_matrix: requires dim g == n");
    int n = g.n;
    SaitoMatrix s;
    s.entries.assign(static_cast<size_t>(n), std::vector<MultiPoly>());
    for (int i = 0; i < n; ++i) {
        auto& row = s.entries[static_cast<size_t>(i)];
        row.reserve(static_cast<size_t>(n));
        for (int j = 0; j < n; ++j) {
            // (A_j x)_i = sum_k (A_j)_{ik} x_k
            MultiPoly e(n);
            const RatMatrix& a = g.basis[static_cast<size_t>(j)].A;
            for (int k = 0; k < n; ++k)
                if (!a.at(i, k).is_zero()) e += MultiPoly::variable(n, k).scaled(a.at(i, k));
            row.push_back(std::move(e));
        }
    }
    return s;
}

MultiPoly poly_det(const std::vector<std::vector<MultiPoly>>& m) {
    int n = static_cast<int>(m.size());
    if (n == 0) throw std::invalid_argument("poly_det: empty matrix");
    int nv = m[0][0].n();
    for (const auto& row : m)
        if (static_cast<int>(row.size()) != n)
            throw std::invalid_argument("poly_det: matrix is not square");
    if (n > 25) throw std::invalid_argument("poly_det: dimension too large");
    // Expansion along rows with memoization on the set of unused columns;
    // row index is determined by the popcount of the mask.
    std::map<std::uint32_t, MultiPoly> memo;
    auto rec = [&](auto&& self, std::uint32_t mask) -> const MultiPoly& {
        auto it = memo.find(mask);
        if (it != memo.end()) return it->second;
        int r = __builtin_popcount(mask);  // rows 0..r-1 already expanded
        MultiPoly det(nv);
        if (r == n) {
            det = MultiPoly::constant(nv, Rat(1));
        } else {
            int pos = 0;
            for (int j = 0; j < n; ++j) {
                if (mask & (1u << j)) continue;
                const MultiPoly& entry = m[static_cast<size_t>(r)][static_cast<size_t>(j)];
                if (!entry.is_zero()) {
                    const MultiPoly& sub = self(self, mask | (1u << j));
                    MultiPoly term = entry * sub;
                    if (pos % 2 == 0) det += term;
                    else det -= term;
                }
                ++pos;
            }
        }
        return memo.emplace(mask, std::move(det)).first->second;
    };
    return rec(rec, 0);
}

MultiPoly saito_determinant(const SaitoMatrix& s) { return poly_det(s.entries); }

ReducednessResult is_reduced(const MultiPoly& f, int trials, std::uint64_t seed) {
    if (f.is_zero()) throw std::invalid_argument("is_reduced: zero polynomial");
    ReducednessResult res;
    int d = f.degree();
    if (d == 0) {
        res.verdict = Reducedness::Reduced;
        res.note = "nonzero constant";
        return res;
    }
    std::mt19937_64 rng(seed);
    long box = 3;
    int degenerate_cap = 64 * trials;
    int degenerate = 0;
    while (res.trials_used < trials) {
        std::uniform_int_distribution<long> dist(-box, box);
        std::vector<Rat> p(static_cast<size_t>(f.n())), q(static_cast<size_t>(f.n()));
        for (auto& x : p) x = Rat(dist(rng));
        for (auto& x : q) x = Rat(dist(rng));
        UniPoly g = restrict_to_line(f, p, q);
        if (g.degree() != d) {
            // degenerate section; resample with a growing box
            if (++degenerate > degenerate_cap) {
                res.verdict = Reducedness::Inconclusive;
                res.note = "could not sample a full-degree line section";
                return res;
            }
            if (degenerate % 8 == 0) box *= 2;
            continue;
        }
        ++res.trials_used;
        UniPoly gcd = uni_gcd(g, g.derivative());
        if (gcd.degree() == 0) {
            // A squarefree full-degree section certifies f squarefree: any
            // repeated factor of f restricts to a repeated factor on every
            // line that preserves the total degree.
            res.verdict = Reducedness::Reduced;
            res.witness_p = p;
            res.witness_q = q;
            return res;
        }
    }
    res.verdict = Reducedness::NotReduced;
    res.note = "no squarefree section in " + std::to_string(res.trials_used) +
               " full-degree line trials (one-sided evidence)";
    return res;
}

LfdCertificate is_linear_free_divisor(const LieAlgebraVF& g, int trials, std::uint64_t seed) {
    LfdCertificate cert;
    if (!g.closed) throw std::invalid_argument("is_linear_free_divisor: algebra not verified closed");
    if (g.dim() != g.n) {
        cert.reason = "dim g == " + std::to_string(g.dim()) + " != ambient dimension " +
                      std::to_string(g.n);
        return cert;
    }
    MultiPoly det = saito_determinant(saito_matrix(g));
    cert.determinant = det;
    if (det.is_zero()) {
        cert.reason = "Saito determinant is identically zero";
        return cert;
    }
    cert.reduced = is_reduced(det, trials, seed);
    if (cert.reduced.verdict == Reducedness::Reduced) {
        cert.is_lfd = true;
    } else {
        cert.reason = "Saito determinant not certified reduced: " + cert.reduced.note;
    }
    return cert;
}

LieAlgebraVF linear_logarithmic_fields(const MultiPoly& f) {
    Homogeneity h = homogeneous_degree(f);
    if (h.kind != Homogeneity::Homogeneous)
        throw std::invalid_argument("linear_logarithmic_fields: polynomial must be nonzero homogeneous");
    int n = f.n();
    unsigned d = h.degree;
    // Unknowns: the n^2 entries of A, then the eigenvalue constant c.
    // One equation per degree-d monomial of xi_A(f) - c f.
    std::vector<Monomial> monos = monomials_of_degree(n, d);
    std::map<Monomial, int, MonoOrder> mono_index;
    for (size_t i = 0; i < monos.size(); ++i) mono_index.emplace(monos[i], static_cast<int>(i));
    RatMatrix sys(static_cast<int>(monos.size()), n * n + 1);
    for (int i = 0; i < n; ++i) {
        MultiPoly dfi = partial_derivative(f, i);
        for (int j = 0; j < n; ++j) {
            MultiPoly coefpoly = MultiPoly::variable(n, j) * dfi;  // coefficient of A_ij
            for (const auto& [m, c] : coefpoly.terms())
                sys.at(mono_index.at(m), i * n + j) += c;
        }
    }
    for (const auto& [m, c] : f.terms()) sys.at(mono_index.at(m), n * n) -= c;
    Subspace sol = kernel(sys);
    std::vector<RatMatrix> mats;
    for (int r = 0; r < sol.dim(); ++r) {
        std::vector<Rat> row = sol.basis.row(r);
        mats.push_back(unflatten(std::span<const Rat>(row).subspan(0, static_cast<size_t>(n * n)), n));
    }
    if (mats.empty())
        throw std::runtime_error("linear_logarithmic_fields: empty solution space (unexpected: the Euler field is always a solution)");
    return make_algebra(std::move(mats), /*check_closed=*/true);
}

std::vector<MultiPoly> exceptional_ideal_generators(const PVSpace& p) {
    const LieAlgebraVF& g = p.g;
    int n = g.n, m = g.dim();
    if (m < n) throw std::invalid_argument("exceptional_ideal_generators: requires dim g >= n");
    // Rectangular coefficient matrix: entry (i,j) = (A_j x)_i.
    std::vector<std::vector<MultiPoly>> full(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < m; ++j) {
            MultiPoly e(n);
            const RatMatrix& a = g.basis[static_cast<size_t>(j)].A;
            for (int k = 0; k < n; ++k)
                if (!a.at(i, k).is_zero()) e += MultiPoly::variable(n, k).scaled(a.at(i, k));
            full[static_cast<size_t>(i)].push_back(std::move(e));
        }
    }
    // all n x n column selections, lexicographic
    std::vector<MultiPoly> minors;
    std::vector<int> cols(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) cols[static_cast<size_t>(i)] = i;
    for (;;) {
        std::vector<std::vector<MultiPoly>> sub(static_cast<size_t>(n));
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                sub[static_cast<size_t>(i)].push_back(full[static_cast<size_t>(i)][static_cast<size_t>(cols[static_cast<size_t>(j)])]);
        minors.push_back(poly_det(sub));
        int k = n - 1;
        while (k >= 0 && cols[static_cast<size_t>(k)] == m - n + k) --k;
        if (k < 0) break;
        ++cols[static_cast<size_t>(k)];
        for (int i = k + 1; i < n; ++i) cols[static_cast<size_t>(i)] = cols[static_cast<size_t>(i - 1)] + 1;
    }
    return minors;
}

}  // namespace prehom
