#ifndef PREHOM_LINALG_HPP
#define PREHOM_LINALG_HPP

#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "prehom/rational.hpp"
#include "prehom/unipoly.hpp"

namespace prehom {

/// Dense rational matrix, row-major.
class RatMatrix {
public:
    RatMatrix() : rows_(0), cols_(0) {}
    RatMatrix(int rows, int cols) : rows_(rows), cols_(cols), a_(static_cast<size_t>(rows) * cols) {}
    static RatMatrix identity(int n);
    static RatMatrix from_rows(const std::vector<std::vector<Rat>>& rows);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    Rat& at(int i, int j) { return a_[static_cast<size_t>(i) * cols_ + j]; }
    const Rat& at(int i, int j) const { return a_[static_cast<size_t>(i) * cols_ + j]; }

    std::vector<Rat> row(int i) const;
    std::vector<Rat> col(int j) const;

    friend bool operator==(const RatMatrix& a, const RatMatrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.a_ == b.a_;
    }

    RatMatrix operator-() const;
    friend RatMatrix operator+(const RatMatrix& a, const RatMatrix& b);
    friend RatMatrix operator-(const RatMatrix& a, const RatMatrix& b);
    friend RatMatrix operator*(const RatMatrix& a, const RatMatrix& b);
    RatMatrix scaled(const Rat& s) const;
    RatMatrix transposed() const;
    std::vector<Rat> apply(std::span<const Rat> v) const;  // matrix * column vector

    bool is_zero() const;
    std::string str() const;

private:
    int rows_, cols_;
    std::vector<Rat> a_;
};

/// Reduced row-echelon form with exact pivots; returns (rref, rank).
std::pair<RatMatrix, int> rref(const RatMatrix& m);

/// A linear subspace of Q^ambient in canonical form: the basis matrix is
/// in RREF with no zero rows, so equal subspaces have identical
/// representations.
struct Subspace {
    int ambient = 0;
    RatMatrix basis;  // rows are basis vectors, RREF

    static Subspace zero(int ambient) { return Subspace{ambient, RatMatrix(0, ambient)}; }
    static Subspace full(int ambient) { return Subspace{ambient, RatMatrix::identity(ambient)}; }
    static Subspace span_of(const RatMatrix& rows);
    static Subspace span_of_vectors(const std::vector<std::vector<Rat>>& vecs, int ambient);

    int dim() const { return basis.rows(); }

    friend bool operator==(const Subspace& a, const Subspace& b) {
        return a.ambient == b.ambient && a.basis == b.basis;
    }
};

/// Canonical basis of the right null space {v : m v = 0}.
Subspace kernel(const RatMatrix& m);

Subspace subspace_sum(const Subspace& a, const Subspace& b);
Subspace subspace_intersect(const Subspace& a, const Subspace& b);
bool contains(const Subspace& a, std::span<const Rat> v);
bool subspace_leq(const Subspace& a, const Subspace& b);  // a <= b

/// Reduce v against the RREF basis of a; the remainder is zero iff v is
/// in the subspace.  Also returns the coordinates used.
std::pair<std::vector<Rat>, std::vector<Rat>> reduce_against(const Subspace& a,
                                                             std::span<const Rat> v);

/// Characteristic polynomial det(t I - m) by the Faddeev-LeVerrier
/// recurrence (division only by the integers 1..n).
UniPoly char_poly(const RatMatrix& m);

/// All rational eigenvalues with multiplicity, via the rational-root
/// theorem on the denominator-cleared characteristic polynomial.
/// Irrational and complex eigenvalues are silently absent.
std::vector<Rat> rational_eigenvalues(const RatMatrix& m);

Subspace eigenspace(const RatMatrix& m, const Rat& lambda);

/// Exact determinant by fraction-free (Bareiss) elimination.
Rat det_rat(const RatMatrix& m);

/// Solve m x = b; nullopt if inconsistent.  When underdetermined returns
/// the canonical particular solution with free variables set to zero.
std::optional<std::vector<Rat>> solve(const RatMatrix& m, std::span<const Rat> b);

/// All integer roots (with multiplicity) of a monic integer polynomial,
/// low-degree-first coefficients.  Used by rational_eigenvalues; exposed
/// for tests.
std::vector<mpz_class> monic_integer_roots(const std::vector<mpz_class>& coeffs);

}  // namespace prehom

#endif
