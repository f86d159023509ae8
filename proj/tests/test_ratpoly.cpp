#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "prehom/multipoly.hpp"
#include "prehom/parser.hpp"
#include "prehom/unipoly.hpp"
#include "test_util.hpp"

using namespace prehom;
using namespace prehom::testutil;

namespace {

MultiPoly P(const std::string& src) {
    auto vars = xyz();
    return parse_poly(src, vars);
}

}  // namespace

TEST_CASE("Rat canonical form") {
    CHECK(Rat(2, 6) == Rat(1, 3));
    CHECK(Rat(-2, -6) == Rat(1, 3));
    CHECK(Rat(2, -6) == Rat(-1, 3));
    CHECK(Rat(0, 7).str() == "0");
    CHECK(Rat::from_string("-7/21").str() == "-1/3");
    CHECK(Rat::from_string("42").str() == "42");
    CHECK_THROWS_AS(Rat::from_string("1/0"), std::invalid_argument);
    CHECK_THROWS_AS(Rat::from_string("1.5"), std::invalid_argument);
    CHECK((Rat(1, 3) + Rat(2, 6)).str() == "2/3");
}

TEST_CASE("poly_add examples") {
    CHECK(P("x + y") + P("x - y") == P("2*x"));
    CHECK(P("x*z - y^2") + MultiPoly::zero(3) == P("x*z - y^2"));
    // hand oracle: (xz - y^2) + y^2 has the y^2 terms cancel, leaving xz
    CHECK(P("x*z - y^2") + P("y^2") == P("x*z"));
    CHECK_THROWS_AS(P("x") += MultiPoly::zero(2), std::invalid_argument);
}

TEST_CASE("poly_mul examples") {
    CHECK(P("x") * P("x*z - y^2") == P("x^2*z - x*y^2"));
    CHECK(P("x*z - y^2") * P("1") == P("x*z - y^2"));
    CHECK(P("(x + y)^2") == P("x^2 + 2*x*y + y^2"));
    MultiPoly f = P("x + 2*y"), g = P("x*z - y^2");
    CHECK((f * g).degree() == f.degree() + g.degree());
}

TEST_CASE("partial_derivative examples") {
    CHECK(partial_derivative(P("x*z - y^2"), 1) == P("-2*y"));
    CHECK(partial_derivative(P("5"), 0).is_zero());
    CHECK(partial_derivative(P("x^2*z"), 0) == P("2*x*z"));
    CHECK_THROWS_AS(partial_derivative(P("x"), 3), std::invalid_argument);
}

TEST_CASE("evaluate examples") {
    std::vector<Rat> v0{Rat(1), Rat(0), Rat(1)};
    CHECK(evaluate(P("x*z - y^2"), v0) == Rat(1));
    std::vector<Rat> v1{Rat(0), Rat(1), Rat(0)};
    CHECK(evaluate(P("x"), v1) == Rat(0));
    std::vector<Rat> zero{Rat(0), Rat(0), Rat(0)};
    CHECK(evaluate(P("x*(x*z - y^2)"), zero) == Rat(0));
    std::vector<Rat> tooshort{Rat(1)};
    CHECK_THROWS_AS(evaluate(P("x"), tooshort), std::invalid_argument);
}

TEST_CASE("homogeneous_degree examples") {
    Homogeneity h = homogeneous_degree(P("x*z - y^2"));
    CHECK(h.kind == Homogeneity::Homogeneous);
    CHECK(h.degree == 2);
    CHECK(homogeneous_degree(P("x + 1")).kind == Homogeneity::Inhomogeneous);
    CHECK(homogeneous_degree(MultiPoly::zero(3)).kind == Homogeneity::Zero);
}

TEST_CASE("exact_divide examples") {
    auto q = exact_divide(P("x^2*z - x*y^2"), P("x"));
    REQUIRE(q.has_value());
    CHECK(*q == P("x*z - y^2"));
    CHECK(*q * P("x") == P("x^2*z - x*y^2"));  // multiply-back oracle

    auto self = exact_divide(P("x*z - y^2"), P("x*z - y^2"));
    REQUIRE(self.has_value());
    CHECK(*self == P("1"));

    CHECK(!exact_divide(P("x"), P("y")).has_value());
    CHECK_THROWS_AS(exact_divide(P("x"), MultiPoly::zero(3)), std::invalid_argument);
}

TEST_CASE("restrict_to_line examples") {
    std::vector<std::string> xy{"x", "y"};
    MultiPoly f = parse_poly("x*y", xy);
    std::vector<Rat> p{Rat(0), Rat(0)}, q{Rat(1), Rat(1)};
    CHECK(restrict_to_line(f, p, q) == UniPoly({Rat(0), Rat(0), Rat(1)}));

    std::vector<Rat> p3{Rat(1), Rat(0), Rat(0)}, q3{Rat(0), Rat(1), Rat(0)};
    CHECK(restrict_to_line(P("x"), p3, q3) == UniPoly::constant(Rat(1)));

    // hand substitution: f(t,t,t) = t*t - t^2 = 0
    std::vector<Rat> o{Rat(0), Rat(0), Rat(0)}, d{Rat(1), Rat(1), Rat(1)};
    CHECK(restrict_to_line(P("x*z - y^2"), o, d).is_zero());
}

TEST_CASE("uni_gcd examples") {
    UniPoly t2({Rat(0), Rat(0), Rat(1)});
    UniPoly two_t({Rat(0), Rat(2)});
    CHECK(uni_gcd(t2, two_t) == UniPoly({Rat(0), Rat(1)}));

    UniPoly t2m1({Rat(-1), Rat(0), Rat(1)});
    UniPoly tm1({Rat(-1), Rat(1)});
    CHECK(uni_gcd(t2m1, tm1) == tm1);

    UniPoly t2p1({Rat(1), Rat(0), Rat(1)});
    UniPoly t({Rat(0), Rat(1)});
    CHECK(uni_gcd(t2p1, t) == UniPoly::constant(Rat(1)));

    CHECK_THROWS_AS(uni_gcd(UniPoly(), UniPoly()), std::invalid_argument);
}

TEST_CASE("parse_poly examples and errors") {
    CHECK(P("x*(x*z - y^2)") == P("x^2*z - x*y^2"));
    CHECK(P("0").is_zero());
    std::vector<std::string> xy{"x", "y"};
    CHECK_THROWS_AS(parse_poly("x + q", xy), ParseError);
    CHECK_THROWS_AS(parse_poly("2x", xy), ParseError);    // implicit multiplication
    CHECK_THROWS_AS(parse_poly("x y", xy), ParseError);   // implicit multiplication
    CHECK_THROWS_AS(parse_poly("1.5*x", xy), ParseError); // float literal
    CHECK_THROWS_AS(parse_poly("x^-1", xy), ParseError);  // negative exponent
    CHECK(parse_poly("1/2*x - 3/4*y", xy) ==
          MultiPoly::variable(2, 0).scaled(Rat(1, 2)) - MultiPoly::variable(2, 1).scaled(Rat(3, 4)));
    // unary minus
    CHECK(parse_poly("-x^2 + - y", xy) == -parse_poly("x^2 + y", xy));
}

TEST_CASE("printing round-trips through the parser") {
    std::mt19937_64 rng(12345);
    auto vars = xyz();
    for (int it = 0; it < 50; ++it) {
        MultiPoly f = random_poly(rng, 3, 4, 6);
        std::string s = f.str(vars);
        MultiPoly g = parse_poly(s, vars);
        CHECK(f == g);
        CHECK(g.str(vars) == s);
    }
}

TEST_CASE("ring axioms on random polynomials") {
    std::mt19937_64 rng(99);
    for (int it = 0; it < 40; ++it) {
        MultiPoly a = random_poly(rng, 3, 3, 4);
        MultiPoly b = random_poly(rng, 3, 3, 4);
        MultiPoly c = random_poly(rng, 3, 3, 4);
        CHECK(a + b == b + a);
        CHECK(a * b == b * a);
        CHECK((a + b) + c == a + (b + c));
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
    }
}

TEST_CASE("exact_divide(a*b, b) == a") {
    std::mt19937_64 rng(7);
    int done = 0;
    while (done < 40) {
        MultiPoly a = random_poly(rng, 3, 3, 4);
        MultiPoly b = random_poly(rng, 3, 3, 3);
        if (b.is_zero()) continue;
        auto q = exact_divide(a * b, b);
        REQUIRE(q.has_value());
        CHECK(*q == a);
        ++done;
    }
}

TEST_CASE("restrict_to_line commutes with evaluation") {
    std::mt19937_64 rng(41);
    for (int it = 0; it < 40; ++it) {
        MultiPoly f = random_poly(rng, 3, 4, 5);
        std::vector<Rat> p = random_point(rng, 3), q = random_point(rng, 3);
        Rat t0 = random_rat(rng);
        UniPoly g = restrict_to_line(f, p, q);
        std::vector<Rat> pt(3);
        for (int i = 0; i < 3; ++i) pt[static_cast<size_t>(i)] = p[static_cast<size_t>(i)] + t0 * q[static_cast<size_t>(i)];
        CHECK(g.eval(t0) == evaluate(f, pt));
    }
}

TEST_CASE("Euler relation on homogeneous polynomials") {
    std::mt19937_64 rng(4242);
    for (int it = 0; it < 100; ++it) {
        unsigned d = 1 + static_cast<unsigned>(it % 5);
        MultiPoly f = random_homogeneous_poly(rng, 3, d, 5);
        MultiPoly euler(3);
        for (int i = 0; i < 3; ++i) euler += MultiPoly::variable(3, i) * partial_derivative(f, i);
        CHECK(euler == f.scaled(Rat(static_cast<long>(d))));
    }
}

TEST_CASE("monomial order is a total order compatible with multiplication") {
    std::mt19937_64 rng(5150);
    MonoOrder lt;
    for (int it = 0; it < 200; ++it) {
        MultiPoly a = random_poly(rng, 3, 4, 2);
        MultiPoly b = random_poly(rng, 3, 4, 2);
        MultiPoly c = random_poly(rng, 3, 3, 2);
        if (a.is_zero() || b.is_zero() || c.is_zero()) continue;
        const Monomial &ma = a.leading_monomial(), &mb = b.leading_monomial(),
                       &mc = c.leading_monomial();
        if (lt(ma, mb)) {
            CHECK(lt(Monomial::product(ma, mc), Monomial::product(mb, mc)));
            CHECK(!lt(mb, ma));
        }
    }
}
