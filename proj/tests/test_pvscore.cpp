#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "prehom/parser.hpp"
#include "prehom/pvscore.hpp"
#include "test_util.hpp"

using namespace prehom;
using namespace prehom::testutil;

namespace {

RatMatrix unit(int n, int i, int j) {
    RatMatrix m(n, n);
    m.at(i, j) = Rat(1);
    return m;
}

RatMatrix diag(const std::vector<long>& d) {
    RatMatrix m(static_cast<int>(d.size()), static_cast<int>(d.size()));
    for (size_t i = 0; i < d.size(); ++i) m.at(static_cast<int>(i), static_cast<int>(i)) = Rat(d[i]);
    return m;
}

LieAlgebraVF torus(int n) {
    std::vector<RatMatrix> b;
    for (int i = 0; i < n; ++i) b.push_back(unit(n, i, i));
    return make_algebra(b);
}

// basis (I, E21, E31): equal diagonal with free first column
LieAlgebraVF firstcol3() {
    return make_algebra({RatMatrix::identity(3), unit(3, 1, 0), unit(3, 2, 0)});
}

LieAlgebraVF solvable3() {
    RatMatrix x2 = unit(3, 1, 0) + unit(3, 2, 1).scaled(Rat(2));
    return make_algebra({diag({1, 0, -1}), x2, diag({0, 1, 2})});
}

MultiPoly P(const std::string& src) {
    auto vars = xyz();
    return parse_poly(src, vars);
}

}  // namespace

TEST_CASE("find_generic_point") {
    // the certified point for the solvable algebra has full orbit rank
    LieAlgebraVF g = solvable3();
    auto v = find_generic_point(g, 42, 200);
    REQUIRE(v.has_value());
    CHECK(orbit_tangent_dim(g, *v) == 3);
    // the specific point (1,0,1) is accepted if offered
    std::vector<Rat> v0{Rat(1), Rat(0), Rat(1)};
    CHECK(orbit_tangent_dim(g, v0) == 3);

    // zero algebra cannot certify
    LieAlgebraVF tiny = make_algebra({unit(2, 0, 1)});
    CHECK(!find_generic_point(tiny, 1, 50).has_value());

    // diagonal torus: any all-nonzero point works
    LieAlgebraVF t = torus(3);
    auto tv = find_generic_point(t, 7, 200);
    REQUIRE(tv.has_value());
    for (const Rat& x : *tv) CHECK(!x.is_zero());
}

TEST_CASE("saito_matrix examples") {
    auto vars = xyz();
    // diagonal torus: diag(x, y, z)
    SaitoMatrix st = saito_matrix(torus(3));
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            if (i == j) CHECK(st.entries[i][j] == MultiPoly::variable(3, i));
            else CHECK(st.entries[i][j].is_zero());
        }

    // first-column family: columns (x,y,z), (0,x,0), (0,0,x)
    SaitoMatrix sf = saito_matrix(firstcol3());
    CHECK(sf.entries[0][0] == P("x"));
    CHECK(sf.entries[1][0] == P("y"));
    CHECK(sf.entries[2][0] == P("z"));
    CHECK(sf.entries[1][1] == P("x"));
    CHECK(sf.entries[2][2] == P("x"));
    CHECK(sf.entries[0][1].is_zero());
    CHECK(sf.entries[2][1].is_zero());

    // solvable example: columns (x,0,-z), (0,x,2y), (0,y,2z)
    SaitoMatrix ss = saito_matrix(solvable3());
    CHECK(ss.entries[0][0] == P("x"));
    CHECK(ss.entries[2][0] == P("-z"));
    CHECK(ss.entries[1][1] == P("x"));
    CHECK(ss.entries[2][1] == P("2*y"));
    CHECK(ss.entries[1][2] == P("y"));
    CHECK(ss.entries[2][2] == P("2*z"));
}

TEST_CASE("saito_determinant examples") {
    CHECK(saito_determinant(saito_matrix(torus(4))) == parse_poly(
              "x1*x2*x3*x4", std::vector<std::string>{"x1", "x2", "x3", "x4"}));

    // solvable example: constant multiple of x(xz - y^2)
    MultiPoly det = saito_determinant(saito_matrix(solvable3()));
    MultiPoly target = P("x*(x*z - y^2)");
    auto q = exact_divide(det, target);
    REQUIRE(q.has_value());
    CHECK(q->is_constant());
    CHECK(!q->is_zero());

    // first-column family: constant multiple of x^3 (non-reduced)
    MultiPoly det2 = saito_determinant(saito_matrix(firstcol3()));
    auto q2 = exact_divide(det2, P("x^3"));
    REQUIRE(q2.has_value());
    CHECK(q2->is_constant());
}

TEST_CASE("saito determinant commutes with evaluation") {
    std::mt19937_64 rng(13);
    LieAlgebraVF g = solvable3();
    MultiPoly det = saito_determinant(saito_matrix(g));
    for (int it = 0; it < 20; ++it) {
        std::vector<Rat> v = random_point(rng, 3);
        RatMatrix ev(3, 3);
        for (int j = 0; j < 3; ++j) {
            std::vector<Rat> col = g.basis[static_cast<size_t>(j)].A.apply(v);
            for (int i = 0; i < 3; ++i) ev.at(i, j) = col[static_cast<size_t>(i)];
        }
        CHECK(evaluate(det, v) == det_rat(ev));
    }
}

TEST_CASE("is_reduced examples") {
    CHECK(is_reduced(P("x*(x*z - y^2)"), 3, 1).verdict == Reducedness::Reduced);
    CHECK(is_reduced(P("x^3"), 3, 1).verdict == Reducedness::NotReduced);
    std::vector<std::string> v4{"x1", "x2", "x3", "x4"};
    CHECK(is_reduced(parse_poly("x1*x2*x3*x4", v4), 3, 1).verdict == Reducedness::Reduced);
    CHECK_THROWS_AS(is_reduced(MultiPoly::zero(2), 3, 1), std::invalid_argument);
}

TEST_CASE("is_linear_free_divisor examples") {
    LfdCertificate a = is_linear_free_divisor(solvable3());
    CHECK(a.is_lfd);
    REQUIRE(a.determinant.has_value());
    CHECK(a.reduced.verdict == Reducedness::Reduced);

    LfdCertificate b = is_linear_free_divisor(firstcol3());
    CHECK(!b.is_lfd);

    LfdCertificate c = is_linear_free_divisor(torus(3));
    CHECK(c.is_lfd);
}

TEST_CASE("linear_logarithmic_fields examples") {
    // normal crossings: the diagonal algebra
    std::vector<std::string> v4{"x1", "x2", "x3", "x4"};
    LieAlgebraVF g = linear_logarithmic_fields(parse_poly("x1*x2*x3*x4", v4));
    CHECK(g.dim() == 4);
    CHECK(derived_subalgebra(g).dim() == 0);
    for (const auto& b : g.basis) {
        for (int i = 0; i < 4; ++i)
            for (int j = 0; j < 4; ++j)
                if (i != j) CHECK(b.A.at(i, j).is_zero());
    }

    // the solvable divisor: 3-dimensional with 1-dimensional derived algebra
    LieAlgebraVF s = linear_logarithmic_fields(P("x*(x*z - y^2)"));
    CHECK(s.dim() == 3);
    CHECK(derived_subalgebra(s).dim() == 1);

    // non-reduced input is still well-defined
    LieAlgebraVF nr = linear_logarithmic_fields(P("x^2*z"));
    CHECK(nr.dim() >= 1);

    CHECK_THROWS_AS(linear_logarithmic_fields(P("x + 1")), std::invalid_argument);
}

TEST_CASE("tangency holds exactly for every derlog field") {
    MultiPoly f = P("x*(x*z - y^2)");
    LieAlgebraVF g = linear_logarithmic_fields(f);
    for (const auto& b : g.basis) {
        MultiPoly img = apply_derivation(b, f);
        if (img.is_zero()) continue;
        auto q = exact_divide(img, f);
        REQUIRE(q.has_value());
        CHECK(q->is_constant());
    }
}

TEST_CASE("lfd determinant is divisible by the defining polynomial") {
    MultiPoly f = P("x*(x*z - y^2)");
    LieAlgebraVF g = linear_logarithmic_fields(f);
    LfdCertificate cert = is_linear_free_divisor(g);
    REQUIRE(cert.is_lfd);
    auto q = exact_divide(*cert.determinant, f);
    REQUIRE(q.has_value());
    CHECK(q->is_constant());
}

TEST_CASE("exceptional_ideal_generators") {
    // dim g == n: the single Saito determinant
    LieAlgebraVF g = solvable3();
    PVSpace p = *certify_prehomogeneous(g, 3);
    auto minors = exceptional_ideal_generators(p);
    REQUIRE(minors.size() == 1);
    CHECK(minors[0] == *p.saito_det);

    // three fields in C^2 (lower-triangular algebra): columns (x,0),
    // (0,y), (0,x), so the 2x2 minors are xy, x^2, 0 by hand.
    LieAlgebraVF borel = make_algebra({unit(2, 0, 0), unit(2, 1, 1), unit(2, 1, 0)});
    PVSpace p2 = *certify_prehomogeneous(borel, 3);
    auto m2 = exceptional_ideal_generators(p2);
    REQUIRE(m2.size() == 3);
    std::vector<std::string> v2{"x1", "x2"};
    CHECK(m2[0] == parse_poly("x1*x2", v2));
    CHECK(m2[1] == parse_poly("x1^2", v2));
    CHECK(m2[2].is_zero());

    // full gl_2 in C^2: minors span x^2, xy, y^2 (and zeros); every
    // nonzero minor is homogeneous of degree 2
    LieAlgebraVF gl2 =
        make_algebra({unit(2, 0, 0), unit(2, 0, 1), unit(2, 1, 0), unit(2, 1, 1)});
    PVSpace p3 = *certify_prehomogeneous(gl2, 3);
    auto m3 = exceptional_ideal_generators(p3);
    REQUIRE(m3.size() == 6);
    for (const auto& mm : m3) {
        if (mm.is_zero()) continue;
        Homogeneity h = homogeneous_degree(mm);
        CHECK(h.kind == Homogeneity::Homogeneous);
        CHECK(h.degree == 2);
    }

    // dim g < n: precondition error
    LieAlgebraVF small = make_algebra({unit(3, 0, 0)});
    PVSpace fake{small, {Rat(1), Rat(1), Rat(1)}, std::nullopt};
    CHECK_THROWS_AS(exceptional_ideal_generators(fake), std::invalid_argument);
}

TEST_CASE("reducedness tester against constructed ground truth") {
    // products of pairwise distinct linear forms, with and without a
    // deliberately repeated factor; distinctness is checked exactly by
    // non-proportionality, which is ground truth for squarefreeness.
    std::mt19937_64 rng(909);
    int built = 0;
    while (built < 100) {
        int n = 3;
        int nf = 2 + static_cast<int>(built % 3);
        std::vector<MultiPoly> forms;
        bool degenerate = false;
        for (int k = 0; k < nf; ++k) {
            MultiPoly l(n);
            for (int i = 0; i < n; ++i) l += MultiPoly::variable(n, i).scaled(random_rat(rng, -3, 3, 1));
            if (l.is_zero()) { degenerate = true; break; }
            forms.push_back(monic(l));
        }
        if (degenerate) continue;
        bool distinct = true;
        for (size_t a = 0; a < forms.size() && distinct; ++a)
            for (size_t b = a + 1; b < forms.size() && distinct; ++b)
                if (forms[a] == forms[b]) distinct = false;
        if (!distinct) continue;  // monic linear forms are equal iff proportional

        bool repeat = built % 2 == 1;
        MultiPoly f = MultiPoly::constant(n, Rat(1));
        for (const auto& l : forms) f = f * l;
        if (repeat) f = f * forms[0];

        ReducednessResult r = is_reduced(f, 3, 1000 + static_cast<std::uint64_t>(built));
        if (repeat) {
            // no false "reduced" verdicts are permitted, ever
            CHECK(r.verdict == Reducedness::NotReduced);
        } else {
            CHECK(r.verdict == Reducedness::Reduced);
        }
        ++built;
    }
}
