#ifndef PREHOM_LIEALG_HPP
#define PREHOM_LIEALG_HPP

#include <optional>
#include <vector>

#include "prehom/linalg.hpp"
#include "prehom/multipoly.hpp"

namespace prehom {

/// A linear vector field on C^n given by an n x n matrix A; it acts on
/// polynomials as the derivation xi_A(f)(v) = grad f(v) . (A v).
struct LinVectorField {
    RatMatrix A;

    int n() const { return A.rows(); }
};

/// A Lie algebra of linear vector fields, represented by a linearly
/// independent basis of matrices.  `closed` records whether closure
/// under the bracket has been verified.
struct LieAlgebraVF {
    int n = 0;
    std::vector<LinVectorField> basis;
    bool closed = false;

    int dim() const { return static_cast<int>(basis.size()); }
};

/// Flatten an n x n matrix to a row vector of length n^2 (row-major).
std::vector<Rat> flatten(const RatMatrix& m);
RatMatrix unflatten(std::span<const Rat> v, int n);

/// The span of the basis matrices inside Q^{n^2}.
Subspace algebra_span(const LieAlgebraVF& g);

/// Coordinates of a matrix with respect to g's basis; nullopt if the
/// matrix is not in the span.
std::optional<std::vector<Rat>> coordinates_in(const LieAlgebraVF& g, const RatMatrix& m);

/// Rebuild a matrix from basis coordinates.
RatMatrix combine(const LieAlgebraVF& g, std::span<const Rat> coords);

/// The matrix C with xi_C == [xi_a, xi_b] as derivations; with the
/// convention above this is C = b.A * a.A - a.A * b.A (the derivation
/// identity test pins the sign).
LinVectorField vf_bracket(const LinVectorField& a, const LinVectorField& b);

/// xi_a(f) = sum_i (A x)_i * df/dx_i, exact.
MultiPoly apply_derivation(const LinVectorField& a, const MultiPoly& f);

/// Span of all pairwise brackets of basis elements, as a subspace of
/// Q^{n^2}.  Equals [g,g]; precondition: g closed.
Subspace derived_subalgebra(const LieAlgebraVF& g);

/// Kernel of the evaluation map g -> V, X -> A_X v, in basis coordinates.
Subspace isotropy_subalgebra(const LieAlgebraVF& g, std::span<const Rat> v);

/// Rank of the n x dim(g) matrix [A_1 v | ... | A_m v].
int orbit_tangent_dim(const LieAlgebraVF& g, std::span<const Rat> v);

struct ClosureResult {
    bool closed;
    int bad_i = -1, bad_j = -1;     // offending pair on failure
    RatMatrix residual;             // bracket reduced against the span
};

/// True iff every pairwise bracket of basis elements lies in the span.
ClosureResult verify_closure(const LieAlgebraVF& g);

/// Constructs a LieAlgebraVF from matrices, checking linear independence
/// and (optionally) closure.  Throws on dependence.
LieAlgebraVF make_algebra(std::vector<RatMatrix> mats, bool check_closed = true);

/// The evaluation matrix [A_1 v | ... | A_m v] (n x dim g).
RatMatrix orbit_map_matrix(const LieAlgebraVF& g, std::span<const Rat> v);

}  // namespace prehom

#endif
