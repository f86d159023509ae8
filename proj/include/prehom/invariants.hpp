#ifndef PREHOM_INVARIANTS_HPP
#define PREHOM_INVARIANTS_HPP

#include <optional>
#include <string>
#include <vector>

#include "prehom/pvscore.hpp"

namespace prehom {

/// A homogeneous polynomial f with the covector lambda on the basis of
/// g: xi_X(f) == lambda(X) f for every basis element X.
struct SemiInvariant {
    MultiPoly f;
    std::vector<Rat> lambda;
    unsigned degree() const { return static_cast<unsigned>(f.degree()); }
};

/// A joint eigenspace of the derivation operators on Sym^d(V*) whose
/// eigenvalue covector vanishes on [g,g].
struct SemiInvariantSpace {
    std::vector<MultiPoly> basis;  // canonical (reduced echelon over the monomial basis)
    std::vector<Rat> lambda;       // on the basis of g
};

/// Numerator h1 and denominator Prod f_i^{k_i} over the basic
/// invariants, with the covector dphi of the additive function.
struct AdditiveInvariant {
    MultiPoly h1;
    std::vector<unsigned> k;
    std::vector<Rat> dphi;
};

/// Matrix of the derivation xi_a on the monomial basis of Sym^d(V*)
/// (monomials in descending global order; column = image of a monomial).
RatMatrix derivation_matrix(const LinVectorField& a, unsigned d);

/// All joint rational eigenspaces of g on Sym^d(V*): first the joint
/// kernel K of a basis of [g,g], then iterative rational-eigenspace
/// splitting of K under coset representatives of g mod [g,g] (their
/// restrictions to K commute).  Sorted by lambda.
std::vector<SemiInvariantSpace> semiinvariants_of_degree(const LieAlgebraVF& g, unsigned d);

struct BasicInvariants {
    std::vector<SemiInvariant> basics;       // sorted by degree then polynomial order
    std::vector<unsigned> multiplicities;    // LFD only: det == c * prod f_i^{m_i}
    bool lfd_reconstructed = false;
    std::vector<std::string> warnings;       // e.g. flagged multi-dimensional eigenspaces
};

/// Scans degrees 1..max_degree, keeps one monic generator per
/// 1-dimensional joint eigenspace, and discards polynomials divisible by
/// previously found invariants.  When `lfd` is set, verifies that the
/// cached Saito determinant factors exactly as prod f_i^{m_i} with
/// sum m_i deg f_i == n (and stops the scan as soon as it does).
/// Throws on reconstruction failure.
BasicInvariants basic_relative_invariants(const PVSpace& p, unsigned max_degree, bool lfd);

/// Solves, for every denominator exponent vector k with
/// 0 < sum k_i deg f_i <= max_denominator_degree, the linear system
///   xi_X h1 - lambda'(X) h1 - c_X g1 = 0   for all basis X,
///   c_Y = 0                               for Y spanning [g,g],
/// where g1 = prod f_i^{k_i} and lambda' = sum k_i lambda_i; reduces the
/// representatives to lowest terms and returns a subset whose dphi
/// covectors form a basis of the span.
std::vector<AdditiveInvariant> additive_invariants(const PVSpace& p,
                                                   const std::vector<SemiInvariant>& basics,
                                                   unsigned max_denominator_degree);

/// Exact check of the defining identity for every basis element, plus
/// the homogeneity/lowest-terms invariants of the type.
bool verify_additive(const PVSpace& p, const std::vector<SemiInvariant>& basics,
                     const AdditiveInvariant& a, std::string* why = nullptr);

/// If h1/(f f') with coprime denominator parts splits as alpha/f +
/// beta/f' with homogeneous alpha, beta of matching degrees, returns the
/// two parts (each an additive invariant); "no split" otherwise.
/// split_indices selects the basic invariants forming the first part.
std::optional<std::pair<AdditiveInvariant, AdditiveInvariant>> partial_fraction_split(
    const PVSpace& p, const std::vector<SemiInvariant>& basics, const AdditiveInvariant& a,
    const std::vector<int>& split_indices);

/// Test-support oracle: brute-force joint eigenspace search that solves
/// {xi_X f = lambda(X) f for all basis X} directly for every lambda on
/// the grid of per-operator rational eigenvalues.  Exponential in
/// dim(g); intended for small randomized cross-checks only.
std::vector<SemiInvariantSpace> semiinvariants_bruteforce(const LieAlgebraVF& g, unsigned d);

/// Shared helper: canonicalize a list of polynomials to the reduced
/// echelon basis of their span (columns ordered by descending monomial).
std::vector<MultiPoly> canonical_poly_basis(const std::vector<MultiPoly>& polys, int n);

}  // namespace prehom

#endif
