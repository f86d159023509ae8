#include "prehom/invariants.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace prehom {

namespace {

std::vector<Monomial> union_support(const std::vector<MultiPoly>& polys) {
    std::map<Monomial, bool, MonoOrder> seen;
    for (const auto& p : polys)
        for (const auto& [m, c] : p.terms()) seen.emplace(m, true);
    std::vector<Monomial> cols;
    cols.reserve(seen.size());
    for (auto it = seen.rbegin(); it != seen.rend(); ++it) cols.push_back(it->first);  // descending
    return cols;
}

RatMatrix poly_matrix(const std::vector<MultiPoly>& polys, const std::vector<Monomial>& cols) {
    std::map<Monomial, int, MonoOrder> idx;
    for (size_t j = 0; j < cols.size(); ++j) idx.emplace(cols[j], static_cast<int>(j));
    RatMatrix m(static_cast<int>(polys.size()), static_cast<int>(cols.size()));
    for (size_t i = 0; i < polys.size(); ++i)
        for (const auto& [mono, c] : polys[i].terms()) m.at(static_cast<int>(i), idx.at(mono)) = c;
    return m;
}

MultiPoly combine_polys(const std::vector<MultiPoly>& basis, std::span<const Rat> coeffs, int n) {
    MultiPoly out(n);
    for (size_t i = 0; i < basis.size(); ++i)
        if (!coeffs[i].is_zero()) out += basis[i].scaled(coeffs[i]);
    return out;
}

/// Basis of {v in span(basis) : sum of its combination's images == 0}.
std::vector<MultiPoly> kernel_of_map(const std::vector<MultiPoly>& basis,
                                     const std::vector<MultiPoly>& images, int n) {
    std::vector<Monomial> cols = union_support(images);
    // matrix M (support x k) with column i = coefficients of images[i]
    RatMatrix m(static_cast<int>(cols.size()), static_cast<int>(images.size()));
    std::map<Monomial, int, MonoOrder> idx;
    for (size_t j = 0; j < cols.size(); ++j) idx.emplace(cols[j], static_cast<int>(j));
    for (size_t i = 0; i < images.size(); ++i)
        for (const auto& [mono, c] : images[i].terms())
            m.at(idx.at(mono), static_cast<int>(i)) = c;
    Subspace k = kernel(m);
    std::vector<MultiPoly> out;
    out.reserve(static_cast<size_t>(k.dim()));
    for (int r = 0; r < k.dim(); ++r) out.push_back(combine_polys(basis, k.basis.row(r), n));
    return canonical_poly_basis(out, n);
}

/// Matrix R of the operator with images[i] == sum_j R(j,i) basis[j];
/// throws if an image is outside the span.
RatMatrix restriction_matrix(const std::vector<MultiPoly>& basis,
                             const std::vector<MultiPoly>& images, int n) {
    std::vector<MultiPoly> all = basis;
    for (const auto& p : images) all.push_back(p);
    std::vector<Monomial> cols = union_support(all);
    RatMatrix bmat = poly_matrix(basis, cols).transposed();  // support x k
    int k = static_cast<int>(basis.size());
    RatMatrix r(k, k);
    for (int i = 0; i < k; ++i) {
        std::vector<Rat> rhs(cols.size());
        for (size_t j = 0; j < cols.size(); ++j) rhs[j] = images[static_cast<size_t>(i)].coeff(cols[j]);
        auto sol = solve(bmat, rhs);
        if (!sol)
            throw std::runtime_error("restriction_matrix: operator does not preserve the subspace");
        for (int j = 0; j < k; ++j) r.at(j, i) = (*sol)[static_cast<size_t>(j)];
    }
    (void)n;
    return r;
}

Subspace diagonal_subspace(int n) {
    std::vector<std::vector<Rat>> rows;
    for (int i = 0; i < n; ++i) {
        std::vector<Rat> v(static_cast<size_t>(n) * n);
        v[static_cast<size_t>(i * n + i)] = Rat(1);
        rows.push_back(std::move(v));
    }
    return Subspace::span_of_vectors(rows, n * n);
}

/// Indices of candidate vectors that extend the rank of `base`.
std::vector<int> extend_rank(Subspace base, const std::vector<std::vector<Rat>>& candidates) {
    std::vector<int> chosen;
    for (size_t i = 0; i < candidates.size(); ++i) {
        if (contains(base, candidates[i])) continue;
        chosen.push_back(static_cast<int>(i));
        base = subspace_sum(base, Subspace::span_of_vectors({candidates[i]}, base.ambient));
    }
    return chosen;
}

std::vector<Rat> diag_entries(std::span<const Rat> flat, int n) {
    std::vector<Rat> w(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) w[static_cast<size_t>(i)] = flat[static_cast<size_t>(i * n + i)];
    return w;
}

Rat monomial_weight(const Monomial& m, std::span<const Rat> w) {
    Rat s;
    for (size_t i = 0; i < m.e.size(); ++i)
        if (m.e[i]) s += w[i] * Rat(static_cast<long>(m.e[i]));
    return s;
}

struct DerivedData {
    Subspace derived;                       // in Q^{n^2}
    std::vector<RatMatrix> delta_diag;      // diagonal elements of [g,g]
    std::vector<RatMatrix> rest;            // completes delta_diag to a basis of [g,g]
    std::vector<int> rep_indices;           // basis elements of g extending [g,g]
};

DerivedData derived_data(const LieAlgebraVF& g) {
    DerivedData d;
    d.derived = derived_subalgebra(g);
    Subspace deltap = subspace_intersect(d.derived, diagonal_subspace(g.n));
    for (int r = 0; r < deltap.dim(); ++r) d.delta_diag.push_back(unflatten(deltap.basis.row(r), g.n));
    std::vector<std::vector<Rat>> derived_rows;
    for (int r = 0; r < d.derived.dim(); ++r) derived_rows.push_back(d.derived.basis.row(r));
    for (int i : extend_rank(deltap, derived_rows)) d.rest.push_back(unflatten(derived_rows[static_cast<size_t>(i)], g.n));
    std::vector<std::vector<Rat>> basis_rows;
    for (const auto& b : g.basis) basis_rows.push_back(flatten(b.A));
    d.rep_indices = extend_rank(d.derived, basis_rows);
    return d;
}

/// Monomial basis of degree d restricted to prescribed diagonal weights,
/// then intersected with the kernels of the remaining [g,g] directions.
std::vector<MultiPoly> sliced_joint_kernel(const LieAlgebraVF& g, const DerivedData& dd,
                                           unsigned d,
                                           const std::vector<std::pair<std::vector<Rat>, Rat>>& slices) {
    std::vector<MultiPoly> space;
    for (const Monomial& m : monomials_of_degree(g.n, d)) {
        bool ok = true;
        for (const auto& [w, target] : slices)
            if (monomial_weight(m, w) != target) { ok = false; break; }
        if (ok) space.push_back(MultiPoly::monomial(m, Rat(1)));
    }
    for (const RatMatrix& y : dd.rest) {
        if (space.empty()) break;
        LinVectorField fy{y};
        std::vector<MultiPoly> images;
        images.reserve(space.size());
        for (const auto& b : space) images.push_back(apply_derivation(fy, b));
        space = kernel_of_map(space, images, g.n);
    }
    return space;
}

bool lambda_less(const std::vector<Rat>& a, const std::vector<Rat>& b) {
    for (size_t i = 0; i < a.size() && i < b.size(); ++i) {
        if (a[i] < b[i]) return true;
        if (b[i] < a[i]) return false;
    }
    return a.size() < b.size();
}

/// Express lambda known on the coset representatives (zero on [g,g]) as
/// a covector on the original basis of g.
std::vector<Rat> lambda_on_basis(const LieAlgebraVF& g, const DerivedData& dd,
                                 std::span<const Rat> rep_values) {
    int nn = g.n * g.n;
    int q = static_cast<int>(dd.rep_indices.size());
    int p = dd.derived.dim();
    RatMatrix sys(nn, q + p);
    for (int j = 0; j < q; ++j) {
        std::vector<Rat> f = flatten(g.basis[static_cast<size_t>(dd.rep_indices[static_cast<size_t>(j)])].A);
        for (int i = 0; i < nn; ++i) sys.at(i, j) = f[static_cast<size_t>(i)];
    }
    for (int j = 0; j < p; ++j)
        for (int i = 0; i < nn; ++i) sys.at(i, q + j) = dd.derived.basis.at(j, i);
    std::vector<Rat> lam(g.basis.size());
    for (size_t t = 0; t < g.basis.size(); ++t) {
        auto sol = solve(sys, flatten(g.basis[t].A));
        if (!sol) throw std::runtime_error("lambda_on_basis: basis element outside reps + derived span");
        Rat v;
        for (int j = 0; j < q; ++j) v += (*sol)[static_cast<size_t>(j)] * rep_values[static_cast<size_t>(j)];
        lam[t] = v;
    }
    return lam;
}

}  // namespace

std::vector<MultiPoly> canonical_poly_basis(const std::vector<MultiPoly>& polys, int n) {
    std::vector<MultiPoly> nonzero;
    for (const auto& p : polys)
        if (!p.is_zero()) nonzero.push_back(p);
    if (nonzero.empty()) return {};
    std::vector<Monomial> cols = union_support(nonzero);
    auto [r, rank] = rref(poly_matrix(nonzero, cols));
    std::vector<MultiPoly> out;
    for (int i = 0; i < rank; ++i) {
        MultiPoly p(n);
        for (size_t j = 0; j < cols.size(); ++j)
            if (!r.at(i, static_cast<int>(j)).is_zero()) p.add_term(cols[j], r.at(i, static_cast<int>(j)));
        out.push_back(std::move(p));
    }
    return out;
}

RatMatrix derivation_matrix(const LinVectorField& a, unsigned d) {
    int n = a.n();
    std::vector<Monomial> monos = monomials_of_degree(n, d);
    std::map<Monomial, int, MonoOrder> idx;
    for (size_t i = 0; i < monos.size(); ++i) idx.emplace(monos[i], static_cast<int>(i));
    RatMatrix m(static_cast<int>(monos.size()), static_cast<int>(monos.size()));
    for (size_t j = 0; j < monos.size(); ++j) {
        MultiPoly img = apply_derivation(a, MultiPoly::monomial(monos[j], Rat(1)));
        for (const auto& [mono, c] : img.terms()) m.at(idx.at(mono), static_cast<int>(j)) = c;
    }
    return m;
}

std::vector<SemiInvariantSpace> semiinvariants_of_degree(const LieAlgebraVF& g, unsigned d) {
    if (!g.closed) throw std::invalid_argument("semiinvariants_of_degree: algebra not verified closed");
    if (d < 1) throw std::invalid_argument("semiinvariants_of_degree: degree must be >= 1");
    DerivedData dd = derived_data(g);

    // lambda vanishes on [g,g], so diagonal derived elements force weight 0.
    std::vector<std::pair<std::vector<Rat>, Rat>> slices;
    for (const auto& dm : dd.delta_diag) slices.emplace_back(diag_entries(flatten(dm), g.n), Rat(0));
    std::vector<MultiPoly> k = sliced_joint_kernel(g, dd, d, slices);
    if (k.empty()) return {};

    struct Group {
        std::vector<MultiPoly> basis;
        std::vector<Rat> rep_values;
    };
    std::vector<Group> groups{{std::move(k), {}}};
    for (int rep : dd.rep_indices) {
        const LinVectorField& x = g.basis[static_cast<size_t>(rep)];
        std::vector<Group> next;
        for (auto& grp : groups) {
            std::vector<MultiPoly> images;
            images.reserve(grp.basis.size());
            for (const auto& b : grp.basis) images.push_back(apply_derivation(x, b));
            RatMatrix r = restriction_matrix(grp.basis, images, g.n);
            std::vector<Rat> evs = rational_eigenvalues(r);
            evs.erase(std::unique(evs.begin(), evs.end()), evs.end());
            for (const Rat& mu : evs) {
                Subspace es = eigenspace(r, mu);
                std::vector<MultiPoly> sub;
                for (int t = 0; t < es.dim(); ++t)
                    sub.push_back(combine_polys(grp.basis, es.basis.row(t), g.n));
                Group ng;
                ng.basis = canonical_poly_basis(sub, g.n);
                ng.rep_values = grp.rep_values;
                ng.rep_values.push_back(mu);
                next.push_back(std::move(ng));
            }
        }
        groups = std::move(next);
    }

    std::vector<SemiInvariantSpace> out;
    for (auto& grp : groups) {
        if (grp.basis.empty()) continue;
        SemiInvariantSpace s;
        s.basis = std::move(grp.basis);
        s.lambda = lambda_on_basis(g, dd, grp.rep_values);
        out.push_back(std::move(s));
    }
    std::sort(out.begin(), out.end(),
              [](const SemiInvariantSpace& a, const SemiInvariantSpace& b) {
                  return lambda_less(a.lambda, b.lambda);
              });
    return out;
}

std::vector<SemiInvariantSpace> semiinvariants_bruteforce(const LieAlgebraVF& g, unsigned d) {
    int n = g.n;
    std::vector<RatMatrix> ops;
    std::vector<std::vector<Rat>> evs;
    size_t grid = 1;
    for (const auto& b : g.basis) {
        ops.push_back(derivation_matrix(b, d));
        std::vector<Rat> e = rational_eigenvalues(ops.back());
        e.erase(std::unique(e.begin(), e.end()), e.end());
        evs.push_back(e);
        grid *= std::max<size_t>(e.size(), 1);
        if (grid > 200000) throw std::runtime_error("semiinvariants_bruteforce: grid too large");
    }
    int nm = ops.empty() ? 0 : ops[0].rows();
    std::vector<SemiInvariantSpace> out;
    std::vector<size_t> pick(g.basis.size(), 0);
    std::vector<Monomial> monos = monomials_of_degree(n, d);
    for (;;) {
        bool feasible = true;
        for (size_t i = 0; i < evs.size(); ++i)
            if (evs[i].empty()) feasible = false;
        if (!feasible) break;
        // stacked system (T_i - lambda_i I) f = 0
        RatMatrix big(static_cast<int>(g.basis.size()) * nm, nm);
        for (size_t i = 0; i < ops.size(); ++i) {
            const Rat& mu = evs[i][pick[i]];
            for (int r = 0; r < nm; ++r)
                for (int c = 0; c < nm; ++c) {
                    Rat v = ops[i].at(r, c);
                    if (r == c) v -= mu;
                    big.at(static_cast<int>(i) * nm + r, c) = v;
                }
        }
        Subspace k = kernel(big);
        if (k.dim() > 0) {
            SemiInvariantSpace s;
            for (int r = 0; r < k.dim(); ++r) {
                MultiPoly p(n);
                for (int c = 0; c < nm; ++c)
                    if (!k.basis.at(r, c).is_zero()) p.add_term(monos[static_cast<size_t>(c)], k.basis.at(r, c));
                s.basis.push_back(std::move(p));
            }
            s.basis = canonical_poly_basis(s.basis, n);
            for (size_t i = 0; i < evs.size(); ++i) s.lambda.push_back(evs[i][pick[i]]);
            out.push_back(std::move(s));
        }
        // advance the grid odometer
        size_t i = 0;
        while (i < pick.size()) {
            if (++pick[i] < evs[i].size()) break;
            pick[i] = 0;
            ++i;
        }
        if (i == pick.size()) break;
    }
    std::sort(out.begin(), out.end(),
              [](const SemiInvariantSpace& a, const SemiInvariantSpace& b) {
                  return lambda_less(a.lambda, b.lambda);
              });
    return out;
}

namespace {

/// Divide f by the found invariants as often as possible.
MultiPoly reduce_by_basics(MultiPoly f, const std::vector<SemiInvariant>& basics) {
    bool progress = true;
    while (progress && !f.is_constant()) {
        progress = false;
        for (const auto& b : basics) {
            if (auto q = exact_divide(f, b.f)) {
                f = *q;
                progress = true;
                break;
            }
        }
    }
    return f;
}

std::optional<std::vector<Rat>> lambda_of(const LieAlgebraVF& g, const MultiPoly& f) {
    std::vector<Rat> lam(g.basis.size());
    for (size_t i = 0; i < g.basis.size(); ++i) {
        MultiPoly img = apply_derivation(g.basis[i], f);
        if (img.is_zero()) continue;
        auto q = exact_divide(img, f);
        if (!q || !q->is_constant()) return std::nullopt;
        lam[i] = q->coeff(Monomial(f.n()));
    }
    return lam;
}

struct Reconstruction {
    bool ok = false;
    std::vector<unsigned> multiplicities;
};

Reconstruction try_reconstruct(const MultiPoly& det, const std::vector<SemiInvariant>& basics,
                               int n) {
    Reconstruction r;
    if (basics.empty()) return r;
    MultiPoly q = det;
    r.multiplicities.assign(basics.size(), 0);
    for (size_t i = 0; i < basics.size(); ++i) {
        while (auto d = exact_divide(q, basics[i].f)) {
            q = *d;
            ++r.multiplicities[i];
        }
    }
    if (!q.is_constant() || q.is_zero()) return r;
    unsigned total = 0;
    for (size_t i = 0; i < basics.size(); ++i)
        total += r.multiplicities[i] * basics[i].degree();
    r.ok = total == static_cast<unsigned>(n);
    return r;
}

}  // namespace

BasicInvariants basic_relative_invariants(const PVSpace& p, unsigned max_degree, bool lfd) {
    const LieAlgebraVF& g = p.g;
    if (lfd && !p.saito_det)
        throw std::invalid_argument("basic_relative_invariants: LFD mode requires a cached Saito determinant");
    BasicInvariants out;
    for (unsigned d = 1; d <= max_degree; ++d) {
        for (const auto& space : semiinvariants_of_degree(g, d)) {
            if (space.basis.size() > 1) {
                out.warnings.push_back("degree " + std::to_string(d) + ": joint eigenspace of dimension " +
                                       std::to_string(space.basis.size()) +
                                       " flagged for manual resolution; not used for basic invariants");
                continue;
            }
            MultiPoly f = monic(space.basis[0]);
            MultiPoly red = reduce_by_basics(f, out.basics);
            if (red.is_constant()) continue;
            if (red == f) {
                out.basics.push_back(SemiInvariant{f, space.lambda});
            } else {
                // a quotient survived: a lower-degree factor was never seen
                // on its own (e.g. hidden in a flagged space)
                red = monic(red);
                auto lam = lambda_of(g, red);
                if (!lam) {
                    out.warnings.push_back("degree " + std::to_string(d) +
                                           ": partial reduction left a non-semiinvariant; skipped");
                    continue;
                }
                out.basics.push_back(SemiInvariant{red, *lam});
            }
        }
        if (lfd) {
            Reconstruction r = try_reconstruct(*p.saito_det, out.basics, g.n);
            if (r.ok) {
                out.multiplicities = r.multiplicities;
                out.lfd_reconstructed = true;
                break;  // the divisor is fully accounted for
            }
        }
    }
    if (lfd && !out.lfd_reconstructed)
        throw std::runtime_error(
            "basic_relative_invariants: found invariants do not reconstruct the Saito determinant "
            "(max_degree too small or an eigenspace anomaly)");
    // canonical output order: by degree, then descending leading monomial
    std::vector<unsigned> mult = out.multiplicities;
    std::vector<size_t> perm(out.basics.size());
    for (size_t i = 0; i < perm.size(); ++i) perm[i] = i;
    MonoOrder lt;
    std::stable_sort(perm.begin(), perm.end(), [&](size_t a, size_t b) {
        const SemiInvariant &fa = out.basics[a], &fb = out.basics[b];
        if (fa.degree() != fb.degree()) return fa.degree() < fb.degree();
        return lt(fb.f.leading_monomial(), fa.f.leading_monomial());
    });
    std::vector<SemiInvariant> sorted;
    std::vector<unsigned> sorted_mult;
    for (size_t i : perm) {
        sorted.push_back(std::move(out.basics[i]));
        if (!mult.empty()) sorted_mult.push_back(mult[i]);
    }
    out.basics = std::move(sorted);
    out.multiplicities = std::move(sorted_mult);
    return out;
}

namespace {

MultiPoly denominator_poly(const std::vector<SemiInvariant>& basics, std::span<const unsigned> k,
                           int n) {
    MultiPoly g1 = MultiPoly::constant(n, Rat(1));
    for (size_t i = 0; i < basics.size(); ++i)
        if (k[i] > 0) g1 = g1 * pow(basics[i].f, k[i]);
    return g1;
}

std::vector<Rat> combined_lambda(const std::vector<SemiInvariant>& basics,
                                 std::span<const unsigned> k, size_t m) {
    std::vector<Rat> lp(m);
    for (size_t i = 0; i < basics.size(); ++i)
        if (k[i] > 0)
            for (size_t t = 0; t < m; ++t) lp[t] += basics[i].lambda[t] * Rat(static_cast<long>(k[i]));
    return lp;
}

/// Strip common basic-invariant factors from h1 and the denominator.
void reduce_lowest_terms(MultiPoly& h1, std::vector<unsigned>& k,
                         const std::vector<SemiInvariant>& basics) {
    if (h1.is_zero()) return;
    for (size_t i = 0; i < basics.size(); ++i) {
        while (k[i] > 0) {
            auto q = exact_divide(h1, basics[i].f);
            if (!q) break;
            h1 = *q;
            --k[i];
        }
    }
}

}  // namespace

std::vector<AdditiveInvariant> additive_invariants(const PVSpace& p,
                                                   const std::vector<SemiInvariant>& basics,
                                                   unsigned max_denominator_degree) {
    const LieAlgebraVF& g = p.g;
    int n = g.n;
    size_t m = g.basis.size();
    DerivedData dd = derived_data(g);

    // diagonal subalgebra of g (not just of [g,g]) for the weight slice
    Subspace delta = subspace_intersect(algebra_span(g), diagonal_subspace(n));
    std::vector<std::vector<Rat>> delta_weights;      // diagonal entries
    std::vector<std::vector<Rat>> delta_coords;       // coordinates in the basis of g
    for (int r = 0; r < delta.dim(); ++r) {
        RatMatrix dm = unflatten(delta.basis.row(r), n);
        auto coords = coordinates_in(g, dm);
        if (!coords) throw std::runtime_error("additive_invariants: diagonal element outside g");
        delta_weights.push_back(diag_entries(flatten(dm), n));
        delta_coords.push_back(*coords);
    }

    // constraints on c from Delta (c vanishes there), expressed over the
    // representative coordinates: write each Delta element over
    // [reps | derived]; the rep part must pair to zero with c.
    int q = static_cast<int>(dd.rep_indices.size());
    int nn = n * n;
    RatMatrix repsys(nn, q + dd.derived.dim());
    for (int j = 0; j < q; ++j) {
        std::vector<Rat> f = flatten(g.basis[static_cast<size_t>(dd.rep_indices[static_cast<size_t>(j)])].A);
        for (int i = 0; i < nn; ++i) repsys.at(i, j) = f[static_cast<size_t>(i)];
    }
    for (int j = 0; j < dd.derived.dim(); ++j)
        for (int i = 0; i < nn; ++i) repsys.at(i, q + j) = dd.derived.basis.at(j, i);
    std::vector<std::vector<Rat>> c_constraints;  // rows over c_rep coordinates
    for (int r = 0; r < delta.dim(); ++r) {
        auto sol = solve(repsys, delta.basis.row(r));
        if (!sol) throw std::runtime_error("additive_invariants: Delta outside reps + derived span");
        std::vector<Rat> row(sol->begin(), sol->begin() + q);
        bool zero = true;
        for (const Rat& x : row)
            if (!x.is_zero()) zero = false;
        if (!zero) c_constraints.push_back(std::move(row));
    }

    // enumerate denominator exponent vectors with 0 < sum k_i deg_i <= B
    std::vector<std::vector<unsigned>> kvecs;
    std::vector<unsigned> cur(basics.size(), 0);
    auto enumerate = [&](auto&& self, size_t i, unsigned used) -> void {
        if (i == basics.size()) {
            if (used > 0) kvecs.push_back(cur);
            return;
        }
        unsigned deg = basics[i].degree();
        for (unsigned c = 0; used + c * deg <= max_denominator_degree; ++c) {
            cur[i] = c;
            self(self, i + 1, used + c * deg);
        }
        cur[i] = 0;
    };
    enumerate(enumerate, 0, 0);
    std::sort(kvecs.begin(), kvecs.end(), [&](const auto& a, const auto& b) {
        unsigned da = 0, db = 0;
        for (size_t i = 0; i < a.size(); ++i) {
            da += a[i] * basics[i].degree();
            db += b[i] * basics[i].degree();
        }
        if (da != db) return da < db;
        return a < b;
    });

    std::vector<AdditiveInvariant> result;
    Subspace dphi_span = Subspace::zero(static_cast<int>(m));

    for (const auto& kvec : kvecs) {
        unsigned D = 0;
        for (size_t i = 0; i < kvec.size(); ++i) D += kvec[i] * basics[i].degree();
        MultiPoly g1 = denominator_poly(basics, kvec, n);
        std::vector<Rat> lp = combined_lambda(basics, kvec, m);

        // weight slice from the diagonal subalgebra
        std::vector<std::pair<std::vector<Rat>, Rat>> slices;
        for (size_t r = 0; r < delta_weights.size(); ++r) {
            Rat target;
            for (size_t t = 0; t < m; ++t) target += lp[t] * delta_coords[r][t];
            slices.emplace_back(delta_weights[r], target);
        }
        std::vector<MultiPoly> k = sliced_joint_kernel(g, dd, D, slices);
        if (k.empty()) continue;

        // solution space over (h in span k, c on reps); basis vectors are
        // (poly, c-vector) pairs, intersected against one rep at a time
        struct Vec {
            MultiPoly h;
            std::vector<Rat> c;
        };
        std::vector<Vec> space;
        for (const auto& b : k) space.push_back(Vec{b, std::vector<Rat>(static_cast<size_t>(q))});
        for (int j = 0; j < q; ++j) {
            std::vector<Rat> c(static_cast<size_t>(q));
            c[static_cast<size_t>(j)] = Rat(1);
            space.push_back(Vec{MultiPoly::zero(n), std::move(c)});
        }

        for (int j = 0; j < q && !space.empty(); ++j) {
            const LinVectorField& x = g.basis[static_cast<size_t>(dd.rep_indices[static_cast<size_t>(j)])];
            Rat lx = lp[static_cast<size_t>(dd.rep_indices[static_cast<size_t>(j)])];
            std::vector<MultiPoly> images;
            images.reserve(space.size());
            for (const auto& v : space) {
                MultiPoly img = apply_derivation(x, v.h) - v.h.scaled(lx) - g1.scaled(v.c[static_cast<size_t>(j)]);
                images.push_back(std::move(img));
            }
            // kernel over the coefficient matrix of the images
            std::vector<Monomial> cols = union_support(images);
            RatMatrix mm(static_cast<int>(cols.size()), static_cast<int>(images.size()));
            std::map<Monomial, int, MonoOrder> idx;
            for (size_t t = 0; t < cols.size(); ++t) idx.emplace(cols[t], static_cast<int>(t));
            for (size_t t = 0; t < images.size(); ++t)
                for (const auto& [mono, cc] : images[t].terms()) mm.at(idx.at(mono), static_cast<int>(t)) = cc;
            Subspace ker = kernel(mm);
            std::vector<Vec> next;
            for (int r = 0; r < ker.dim(); ++r) {
                Vec v{MultiPoly::zero(n), std::vector<Rat>(static_cast<size_t>(q))};
                std::vector<Rat> co = ker.basis.row(r);
                for (size_t t = 0; t < space.size(); ++t) {
                    if (co[t].is_zero()) continue;
                    v.h += space[t].h.scaled(co[t]);
                    for (int s = 0; s < q; ++s) v.c[static_cast<size_t>(s)] += space[t].c[static_cast<size_t>(s)] * co[t];
                }
                next.push_back(std::move(v));
            }
            space = std::move(next);
        }

        // hard constraints: c vanishes on Delta combinations
        for (const auto& row : c_constraints) {
            if (space.empty()) break;
            std::vector<Vec> next;
            RatMatrix mm(1, static_cast<int>(space.size()));
            for (size_t t = 0; t < space.size(); ++t) {
                Rat s;
                for (int j = 0; j < q; ++j) s += row[static_cast<size_t>(j)] * space[t].c[static_cast<size_t>(j)];
                mm.at(0, static_cast<int>(t)) = s;
            }
            Subspace ker = kernel(mm);
            for (int r = 0; r < ker.dim(); ++r) {
                Vec v{MultiPoly::zero(n), std::vector<Rat>(static_cast<size_t>(q))};
                std::vector<Rat> co = ker.basis.row(r);
                for (size_t t = 0; t < space.size(); ++t) {
                    if (co[t].is_zero()) continue;
                    v.h += space[t].h.scaled(co[t]);
                    for (int s = 0; s < q; ++s) v.c[static_cast<size_t>(s)] += space[t].c[static_cast<size_t>(s)] * co[t];
                }
                next.push_back(std::move(v));
            }
            space = std::move(next);
        }
        if (space.empty()) continue;

        // project onto the c-part: rref with c columns first keeps exactly
        // one representative per independent dphi direction
        size_t dim = space.size();
        std::vector<Monomial> hcols;
        {
            std::vector<MultiPoly> hs;
            for (const auto& v : space) hs.push_back(v.h);
            hcols = union_support(hs);
        }
        RatMatrix sol(static_cast<int>(dim), q + static_cast<int>(hcols.size()));
        for (size_t t = 0; t < dim; ++t) {
            for (int j = 0; j < q; ++j) sol.at(static_cast<int>(t), j) = space[t].c[static_cast<size_t>(j)];
            for (size_t u = 0; u < hcols.size(); ++u)
                sol.at(static_cast<int>(t), q + static_cast<int>(u)) = space[t].h.coeff(hcols[u]);
        }
        auto [rr, rank] = rref(sol);
        for (int r = 0; r < rank; ++r) {
            // keep rows whose pivot lies in the c block
            int pcol = 0;
            while (pcol < rr.cols() && rr.at(r, pcol).is_zero()) ++pcol;
            if (pcol >= q) continue;
            MultiPoly h1(n);
            for (size_t u = 0; u < hcols.size(); ++u)
                if (!rr.at(r, q + static_cast<int>(u)).is_zero()) h1.add_term(hcols[u], rr.at(r, q + static_cast<int>(u)));
            // c on reps -> dphi on the original basis (zero on [g,g])
            std::vector<Rat> reps_c(static_cast<size_t>(q));
            for (int j = 0; j < q; ++j) reps_c[static_cast<size_t>(j)] = rr.at(r, j);
            std::vector<Rat> dphi(m);
            for (size_t t = 0; t < m; ++t) {
                auto sol2 = solve(repsys, flatten(g.basis[t].A));
                Rat v;
                for (int j = 0; j < q; ++j) v += (*sol2)[static_cast<size_t>(j)] * reps_c[static_cast<size_t>(j)];
                dphi[t] = v;
            }

            AdditiveInvariant inv{std::move(h1), kvec, std::move(dphi)};
            reduce_lowest_terms(inv.h1, inv.k, basics);
            // normalize: leading dphi entry 1, then cancel the reduced
            // denominator's leading monomial out of h1
            Rat scale;
            for (const Rat& x : inv.dphi)
                if (!x.is_zero()) { scale = x; break; }
            if (scale.is_zero()) continue;
            Rat inv_scale = Rat(1) / scale;
            for (auto& x : inv.dphi) x *= inv_scale;
            inv.h1 = inv.h1.scaled(inv_scale);
            MultiPoly gred = denominator_poly(basics, inv.k, n);
            if (!inv.h1.is_zero() && !gred.is_constant()) {
                const Rat& c0 = inv.h1.coeff(gred.leading_monomial());
                if (!c0.is_zero()) inv.h1 -= gred.scaled(c0 / gred.leading_coeff());
            }

            std::vector<Rat> d = inv.dphi;
            if (!contains(dphi_span, d)) {
                dphi_span = subspace_sum(dphi_span, Subspace::span_of_vectors({d}, static_cast<int>(m)));
                result.push_back(std::move(inv));
            }
        }
    }
    return result;
}

bool verify_additive(const PVSpace& p, const std::vector<SemiInvariant>& basics,
                     const AdditiveInvariant& a, std::string* why) {
    auto fail = [&](const std::string& msg) {
        if (why) *why = msg;
        return false;
    };
    const LieAlgebraVF& g = p.g;
    int n = g.n;
    if (a.k.size() != basics.size()) return fail("exponent vector length mismatch");
    if (a.dphi.size() != g.basis.size()) return fail("dphi length mismatch");
    MultiPoly g1 = denominator_poly(basics, a.k, n);
    unsigned D = 0;
    for (size_t i = 0; i < a.k.size(); ++i) D += a.k[i] * basics[i].degree();
    if (!a.h1.is_zero()) {
        Homogeneity h = homogeneous_degree(a.h1);
        if (h.kind != Homogeneity::Homogeneous || h.degree != D)
            return fail("numerator is not homogeneous of the denominator degree");
    }
    // dphi vanishes on [g,g]
    Subspace derived = derived_subalgebra(g);
    for (int r = 0; r < derived.dim(); ++r) {
        auto coords = coordinates_in(g, unflatten(derived.basis.row(r), n));
        if (!coords) return fail("derived element outside g");
        Rat v;
        for (size_t t = 0; t < coords->size(); ++t) v += (*coords)[t] * a.dphi[t];
        if (!v.is_zero()) return fail("dphi does not vanish on [g,g]");
    }
    // defining identity
    std::vector<Rat> lp = combined_lambda(basics, a.k, g.basis.size());
    for (size_t t = 0; t < g.basis.size(); ++t) {
        MultiPoly lhs = apply_derivation(g.basis[t], a.h1) - a.h1.scaled(lp[t]) - g1.scaled(a.dphi[t]);
        if (!lhs.is_zero()) return fail("defining identity fails on basis element " + std::to_string(t));
    }
    // lowest terms unless the invariant is the trivial constant one
    bool trivial = true;
    for (const Rat& x : a.dphi)
        if (!x.is_zero()) trivial = false;
    if (!trivial) {
        for (size_t i = 0; i < basics.size(); ++i)
            if (a.k[i] > 0 && exact_divide(a.h1, basics[i].f))
                return fail("fraction is not in lowest terms");
    }
    return true;
}

std::optional<std::pair<AdditiveInvariant, AdditiveInvariant>> partial_fraction_split(
    const PVSpace& p, const std::vector<SemiInvariant>& basics, const AdditiveInvariant& a,
    const std::vector<int>& split_indices) {
    const LieAlgebraVF& g = p.g;
    int n = g.n;
    std::vector<bool> in_left(basics.size(), false);
    for (int i : split_indices) {
        if (i < 0 || static_cast<size_t>(i) >= basics.size() || a.k[static_cast<size_t>(i)] == 0)
            throw std::invalid_argument("partial_fraction_split: index outside the denominator support");
        if (in_left[static_cast<size_t>(i)])
            throw std::invalid_argument("partial_fraction_split: denominator parts share a basic invariant");
        in_left[static_cast<size_t>(i)] = true;
    }
    std::vector<unsigned> kl(basics.size(), 0), kr(basics.size(), 0);
    for (size_t i = 0; i < basics.size(); ++i) {
        if (a.k[i] == 0) continue;
        if (in_left[i]) kl[i] = a.k[i];
        else kr[i] = a.k[i];
    }
    unsigned dl = 0, dr = 0;
    for (size_t i = 0; i < basics.size(); ++i) {
        dl += kl[i] * basics[i].degree();
        dr += kr[i] * basics[i].degree();
    }
    if (dl == 0 || dr == 0) {
        // vacuous split: one side carries the whole fraction
        AdditiveInvariant zero{MultiPoly::zero(n), std::vector<unsigned>(basics.size(), 0),
                               std::vector<Rat>(g.basis.size())};
        return std::make_pair(a, zero);
    }
    MultiPoly f = denominator_poly(basics, kl, n);
    MultiPoly fp = denominator_poly(basics, kr, n);

    // solve h1 = alpha fp + beta f with alpha, beta homogeneous of
    // degrees deg f and deg fp
    std::vector<Monomial> am = monomials_of_degree(n, dl), bm = monomials_of_degree(n, dr);
    std::vector<MultiPoly> gens;
    for (const auto& mo : am) gens.push_back(MultiPoly::monomial(mo, Rat(1)) * fp);
    for (const auto& mo : bm) gens.push_back(MultiPoly::monomial(mo, Rat(1)) * f);
    std::vector<MultiPoly> all = gens;
    all.push_back(a.h1);
    std::vector<Monomial> cols = union_support(all);
    RatMatrix sys = poly_matrix(gens, cols).transposed();
    std::vector<Rat> rhs(cols.size());
    for (size_t j = 0; j < cols.size(); ++j) rhs[j] = a.h1.coeff(cols[j]);
    auto sol = solve(sys, rhs);
    if (!sol) return std::nullopt;

    MultiPoly alpha(n), beta(n);
    for (size_t i = 0; i < am.size(); ++i)
        if (!(*sol)[i].is_zero()) alpha.add_term(am[i], (*sol)[i]);
    for (size_t i = 0; i < bm.size(); ++i)
        if (!(*sol)[am.size() + i].is_zero()) beta.add_term(bm[i], (*sol)[am.size() + i]);

    auto make_part = [&](MultiPoly num, const std::vector<unsigned>& kk,
                         const MultiPoly& den) -> AdditiveInvariant {
        std::vector<Rat> lam = combined_lambda(basics, kk, g.basis.size());
        std::vector<Rat> dphi(g.basis.size());
        for (size_t t = 0; t < g.basis.size(); ++t) {
            MultiPoly img = apply_derivation(g.basis[t], num) - num.scaled(lam[t]);
            if (img.is_zero()) continue;
            auto q = exact_divide(img, den);
            if (!q || !q->is_constant())
                throw std::runtime_error("partial_fraction_split: part is not an additive invariant");
            dphi[t] = q->coeff(Monomial(n));
        }
        return AdditiveInvariant{std::move(num), kk, std::move(dphi)};
    };
    AdditiveInvariant left = make_part(std::move(alpha), kl, f);
    AdditiveInvariant right = make_part(std::move(beta), kr, fp);
    return std::make_pair(std::move(left), std::move(right));
}

}  // namespace prehom
