#ifndef PREHOM_UNIPOLY_HPP
#define PREHOM_UNIPOLY_HPP

#include <string>
#include <vector>

#include "prehom/rational.hpp"

namespace prehom {

/// Dense univariate polynomial over Q, coefficients stored low degree
/// first; the leading coefficient is nonzero unless the polynomial is
/// zero (empty coefficient vector).
class UniPoly {
public:
    UniPoly() = default;
    explicit UniPoly(std::vector<Rat> coeffs) : c_(std::move(coeffs)) { trim(); }
    static UniPoly constant(const Rat& c);

    bool is_zero() const { return c_.empty(); }
    int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for zero
    const std::vector<Rat>& coeffs() const { return c_; }
    const Rat& coeff(size_t i) const;
    const Rat& leading() const { return c_.back(); }

    void set_coeff(size_t i, const Rat& v);

    UniPoly operator-() const;
    UniPoly& operator+=(const UniPoly& o);
    UniPoly& operator-=(const UniPoly& o);
    friend UniPoly operator+(UniPoly a, const UniPoly& b) { return a += b; }
    friend UniPoly operator-(UniPoly a, const UniPoly& b) { return a -= b; }
    friend UniPoly operator*(const UniPoly& a, const UniPoly& b);
    UniPoly scaled(const Rat& s) const;

    friend bool operator==(const UniPoly& a, const UniPoly& b) { return a.c_ == b.c_; }

    Rat eval(const Rat& t) const;
    UniPoly derivative() const;
    std::string str(const std::string& var = "t") const;

private:
    void trim();
    std::vector<Rat> c_;
};

/// Euclidean long division: a = q*b + r with deg r < deg b.
std::pair<UniPoly, UniPoly> uni_divmod(const UniPoly& a, const UniPoly& b);

/// Monic gcd via the Euclidean algorithm.  Throws if both are zero.
UniPoly uni_gcd(const UniPoly& a, const UniPoly& b);

}  // namespace prehom

#endif
