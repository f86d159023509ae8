#ifndef PREHOM_MULTIPOLY_HPP
#define PREHOM_MULTIPOLY_HPP

#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "prehom/rational.hpp"
#include "prehom/unipoly.hpp"

namespace prehom {

/// Exponent vector of length n (the ambient variable count).
struct Monomial {
    std::vector<unsigned> e;

    Monomial() = default;
    explicit Monomial(int n) : e(static_cast<size_t>(n), 0u) {}
    explicit Monomial(std::vector<unsigned> exps) : e(std::move(exps)) {}

    int size() const { return static_cast<int>(e.size()); }
    unsigned total_degree() const;

    friend bool operator==(const Monomial& a, const Monomial& b) { return a.e == b.e; }

    /// a | b componentwise.
    static bool divides(const Monomial& a, const Monomial& b);
    static Monomial quotient(const Monomial& b, const Monomial& a);  // b / a
    static Monomial product(const Monomial& a, const Monomial& b);
};

/// The fixed global monomial order: total degree first, then
/// lexicographic with earlier variables ranked higher (grlex).
/// operator() is "strictly less".
struct MonoOrder {
    bool operator()(const Monomial& a, const Monomial& b) const;
};

struct Homogeneity {
    enum Kind { Zero, Homogeneous, Inhomogeneous } kind;
    unsigned degree = 0;  // meaningful only when kind == Homogeneous
};

/// Sparse multivariate polynomial over Q with a fixed ambient variable
/// count.  No zero coefficients are ever stored; terms are kept sorted
/// in the global monomial order.
class MultiPoly {
public:
    using TermMap = std::map<Monomial, Rat, MonoOrder>;

    explicit MultiPoly(int n) : n_(n) {}

    static MultiPoly zero(int n) { return MultiPoly(n); }
    static MultiPoly constant(int n, const Rat& c);
    static MultiPoly variable(int n, int i);
    static MultiPoly monomial(Monomial m, const Rat& c);

    int n() const { return n_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    size_t term_count() const { return terms_.size(); }
    const TermMap& terms() const { return terms_; }

    /// Total degree; -1 for the zero polynomial.
    int degree() const;

    const Rat& coeff(const Monomial& m) const;
    void add_term(const Monomial& m, const Rat& c);  // accumulates, drops zeros

    /// Leading term in the global order.  Precondition: not zero.
    const Monomial& leading_monomial() const;
    const Rat& leading_coeff() const;

    MultiPoly operator-() const;
    MultiPoly& operator+=(const MultiPoly& o);
    MultiPoly& operator-=(const MultiPoly& o);
    friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
    friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
    friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
    MultiPoly scaled(const Rat& c) const;

    friend bool operator==(const MultiPoly& a, const MultiPoly& b) {
        return a.n_ == b.n_ && a.terms_ == b.terms_;
    }

    /// Canonical text: terms in descending order, coefficients "p" or "p/q".
    std::string str(std::span<const std::string> vars) const;
    std::string str() const;  // default names x1..xn

private:
    int n_;
    TermMap terms_;
};

MultiPoly partial_derivative(const MultiPoly& f, int i);
Rat evaluate(const MultiPoly& f, std::span<const Rat> p);
Homogeneity homogeneous_degree(const MultiPoly& f);

/// Exact division via leading-term cancellation in the global order.
/// Returns the quotient iff den divides num exactly.
std::optional<MultiPoly> exact_divide(const MultiPoly& num, const MultiPoly& den);

/// The univariate polynomial t -> f(p + t q).
UniPoly restrict_to_line(const MultiPoly& f, std::span<const Rat> p, std::span<const Rat> q);

/// Scale so the leading coefficient is 1.  Precondition: not zero.
MultiPoly monic(const MultiPoly& f);

MultiPoly pow(const MultiPoly& f, unsigned k);

/// All monomials of total degree d in n variables, descending in the
/// global order.
std::vector<Monomial> monomials_of_degree(int n, unsigned d);

}  // namespace prehom

#endif
