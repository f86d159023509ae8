#ifndef PREHOM_PVSCORE_HPP
#define PREHOM_PVSCORE_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "prehom/liealg.hpp"
#include "prehom/multipoly.hpp"

namespace prehom {

/// A prehomogeneous vector space certified by a rational point with open
/// orbit: orbit_tangent_dim(g, v0) == n.  When dim g == n the Saito
/// determinant is cached.
struct PVSpace {
    LieAlgebraVF g;
    std::vector<Rat> v0;
    std::optional<MultiPoly> saito_det;
};

/// n x n matrix of linear forms; column j is the coefficient vector of
/// xi_{A_j}, i.e. entry (i,j) = (A_j x)_i.  Requires dim g == n.
struct SaitoMatrix {
    std::vector<std::vector<MultiPoly>> entries;
};

/// Samples rational points from integer boxes [-B,B]^n with B doubling
/// until one certifies an open orbit.  Failure means "no certificate
/// found", not "not prehomogeneous".
std::optional<std::vector<Rat>> find_generic_point(const LieAlgebraVF& g, std::uint64_t seed,
                                                   int max_tries);

/// Builds a PVSpace if a generic point is found.
std::optional<PVSpace> certify_prehomogeneous(const LieAlgebraVF& g, std::uint64_t seed,
                                              int max_tries = 200);

SaitoMatrix saito_matrix(const LieAlgebraVF& g);

/// Exact determinant over the polynomial ring (cofactor expansion with
/// memoization on column subsets); zero or homogeneous of degree n.
MultiPoly saito_determinant(const SaitoMatrix& s);

/// General polynomial determinant used by saito_determinant and the
/// corpus checks.
MultiPoly poly_det(const std::vector<std::vector<MultiPoly>>& m);

enum class Reducedness { Reduced, NotReduced, Inconclusive };

struct ReducednessResult {
    Reducedness verdict = Reducedness::Inconclusive;
    int trials_used = 0;
    // certifying line when verdict == Reduced
    std::vector<Rat> witness_p, witness_q;
    std::string note;
};

/// Probabilistic squarefreeness test by generic line sections.  A single
/// full-degree squarefree section certifies "reduced"; "not_reduced"
/// after all trials is a bounded-confidence report, never a proof.
ReducednessResult is_reduced(const MultiPoly& f, int trials, std::uint64_t seed);

struct LfdCertificate {
    bool is_lfd = false;
    std::string reason;  // set when not an LFD
    std::optional<MultiPoly> determinant;
    ReducednessResult reduced;
};

/// dim g == n, Saito determinant nonzero, and the determinant reduced.
LfdCertificate is_linear_free_divisor(const LieAlgebraVF& g, int trials = 3,
                                      std::uint64_t seed = 1);

/// All linear vector fields tangent to V(f): the solution space of
/// xi_A(f) = c f projected to A, verified closed under bracket.
/// Precondition: f homogeneous and nonzero.
LieAlgebraVF linear_logarithmic_fields(const MultiPoly& f);

/// All n x n minors of the n x dim(g) coefficient matrix; each is zero
/// or homogeneous of degree n.  Precondition: dim g >= n.
std::vector<MultiPoly> exceptional_ideal_generators(const PVSpace& p);

}  // namespace prehom

#endif
