#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "prehom/liealg.hpp"
#include "prehom/parser.hpp"
#include "test_util.hpp"

using namespace prehom;
using namespace prehom::testutil;

namespace {

RatMatrix M(const std::vector<std::vector<long>>& rows) {
    std::vector<std::vector<Rat>> r;
    for (const auto& row : rows) {
        std::vector<Rat> rr;
        for (long v : row) rr.emplace_back(v);
        r.push_back(std::move(rr));
    }
    return RatMatrix::from_rows(r);
}

RatMatrix unit(int n, int i, int j) {
    RatMatrix m(n, n);
    m.at(i, j) = Rat(1);
    return m;
}

MultiPoly P(const std::string& src) {
    auto vars = xyz();
    return parse_poly(src, vars);
}

// Basis X1=diag(1,0,-1), X2=E21+2E32, X3=diag(0,1,2): the 3-dimensional
// solvable algebra whose Saito determinant is x(xz-y^2).
LieAlgebraVF solvable3() {
    RatMatrix x1 = M({{1, 0, 0}, {0, 0, 0}, {0, 0, -1}});
    RatMatrix x2 = unit(3, 1, 0) + unit(3, 2, 1).scaled(Rat(2));
    RatMatrix x3 = M({{0, 0, 0}, {0, 1, 0}, {0, 0, 2}});
    return make_algebra({x1, x2, x3});
}

}  // namespace

TEST_CASE("vf_bracket examples") {
    // The Euler field is central among linear fields.
    std::mt19937_64 rng(8);
    for (int it = 0; it < 5; ++it) {
        LinVectorField a{random_matrix(rng, 3, 3)};
        LinVectorField e{RatMatrix::identity(3)};
        CHECK(vf_bracket(e, a).A.is_zero());
    }

    // diagonal matrices commute
    LinVectorField d1{M({{1, 0}, {0, 5}})}, d2{M({{-2, 0}, {0, 3}})};
    CHECK(vf_bracket(d1, d2).A.is_zero());

    // [X1, X2] stays in span{X2}: check by applying both sides to x, y, z
    LieAlgebraVF g = solvable3();
    LinVectorField br = vf_bracket(g.basis[0], g.basis[1]);
    auto coords = coordinates_in(g, br.A);
    REQUIRE(coords.has_value());
    CHECK((*coords)[0].is_zero());
    CHECK((*coords)[2].is_zero());
    CHECK(!(*coords)[1].is_zero());
    for (int v = 0; v < 3; ++v) {
        MultiPoly coord = MultiPoly::variable(3, v);
        MultiPoly lhs = apply_derivation(br, coord);
        MultiPoly rhs = apply_derivation(g.basis[0], apply_derivation(g.basis[1], coord)) -
                        apply_derivation(g.basis[1], apply_derivation(g.basis[0], coord));
        CHECK(lhs == rhs);
    }

    CHECK_THROWS_AS(vf_bracket(LinVectorField{RatMatrix::identity(2)},
                               LinVectorField{RatMatrix::identity(3)}),
                    std::invalid_argument);
}

TEST_CASE("derivation identity pins the bracket convention") {
    std::mt19937_64 rng(2024);
    for (int it = 0; it < 200; ++it) {
        int n = 2 + static_cast<int>(it % 3);
        LinVectorField a{random_matrix(rng, n, n)}, b{random_matrix(rng, n, n)};
        MultiPoly f = random_poly(rng, n, 3, 4);
        MultiPoly lhs = apply_derivation(vf_bracket(a, b), f);
        MultiPoly rhs =
            apply_derivation(a, apply_derivation(b, f)) - apply_derivation(b, apply_derivation(a, f));
        CHECK(lhs == rhs);
    }
}

TEST_CASE("Leibniz rule") {
    std::mt19937_64 rng(55);
    for (int it = 0; it < 50; ++it) {
        LinVectorField a{random_matrix(rng, 3, 3)};
        MultiPoly f = random_poly(rng, 3, 3, 3), g = random_poly(rng, 3, 3, 3);
        CHECK(apply_derivation(a, f * g) ==
              apply_derivation(a, f) * g + f * apply_derivation(a, g));
    }
}

TEST_CASE("apply_derivation examples") {
    // Euler field scales homogeneous polynomials by their degree
    std::mt19937_64 rng(66);
    LinVectorField e{RatMatrix::identity(3)};
    for (unsigned d = 1; d <= 4; ++d) {
        MultiPoly f = random_homogeneous_poly(rng, 3, d, 4);
        CHECK(apply_derivation(e, f) == f.scaled(Rat(static_cast<long>(d))));
    }

    // A=E21 acts as x d/dy
    LinVectorField shear{unit(3, 1, 0)};
    CHECK(apply_derivation(shear, P("y")) == P("x"));
    CHECK(apply_derivation(shear, P("5")).is_zero());
}

TEST_CASE("derived_subalgebra examples") {
    // abelian: I, E21, E31 (equal diagonal, free first column)
    LieAlgebraVF ab = make_algebra({RatMatrix::identity(3), unit(3, 1, 0), unit(3, 2, 0)});
    CHECK(derived_subalgebra(ab).dim() == 0);

    // the solvable example: derived algebra is the line through X2
    LieAlgebraVF g = solvable3();
    Subspace der = derived_subalgebra(g);
    CHECK(der.dim() == 1);
    CHECK(contains(der, flatten(g.basis[1].A)));

    // diagonal torus
    LieAlgebraVF torus = make_algebra({unit(3, 0, 0), unit(3, 1, 1), unit(3, 2, 2)});
    CHECK(derived_subalgebra(torus).dim() == 0);
}

TEST_CASE("derived subalgebra is bracket-convention independent") {
    std::mt19937_64 rng(3131);
    LieAlgebraVF g = solvable3();
    std::vector<std::vector<Rat>> flipped;
    for (size_t i = 0; i < g.basis.size(); ++i)
        for (size_t j = i + 1; j < g.basis.size(); ++j)
            flipped.push_back(flatten((g.basis[i].A * g.basis[j].A - g.basis[j].A * g.basis[i].A)));
    CHECK(Subspace::span_of_vectors(flipped, 9) == derived_subalgebra(g));
}

TEST_CASE("isotropy_subalgebra examples") {
    // abelian example: trivial isotropy at (1,0,0)
    LieAlgebraVF ab = make_algebra({RatMatrix::identity(3), unit(3, 1, 0), unit(3, 2, 0)});
    std::vector<Rat> v0{Rat(1), Rat(0), Rat(0)};
    CHECK(isotropy_subalgebra(ab, v0).dim() == 0);

    // solvable example at (0,1,0): 1-dimensional
    LieAlgebraVF g = solvable3();
    std::vector<Rat> v1{Rat(0), Rat(1), Rat(0)};
    Subspace iso = isotropy_subalgebra(g, v1);
    CHECK(iso.dim() == 1);
    // hand oracle: a X1 + b X2 + c X3 kills (0,1,0) iff b = 0 (first row),
    // c = 0 (second row), 2b = 0 (third row); so the kernel is span{X1}.
    std::vector<Rat> x1coord{Rat(1), Rat(0), Rat(0)};
    CHECK(contains(iso, x1coord));

    // v = 0: everything
    std::vector<Rat> zero{Rat(0), Rat(0), Rat(0)};
    CHECK(isotropy_subalgebra(g, zero).dim() == g.dim());
}

TEST_CASE("orbit_tangent_dim examples") {
    LieAlgebraVF g = solvable3();
    std::vector<Rat> v0{Rat(1), Rat(0), Rat(1)};
    CHECK(orbit_tangent_dim(g, v0) == 3);
    std::vector<Rat> zero{Rat(0), Rat(0), Rat(0)};
    CHECK(orbit_tangent_dim(g, zero) == 0);
    std::vector<Rat> v1{Rat(0), Rat(1), Rat(0)};
    CHECK(orbit_tangent_dim(g, v1) == 2);
}

TEST_CASE("isotropy dim + orbit dim == dim g") {
    std::mt19937_64 rng(10101);
    LieAlgebraVF g = solvable3();
    for (int it = 0; it < 30; ++it) {
        std::vector<Rat> v = random_point(rng, 3);
        CHECK(isotropy_subalgebra(g, v).dim() + orbit_tangent_dim(g, v) == g.dim());
    }
}

TEST_CASE("verify_closure examples") {
    LieAlgebraVF torus = make_algebra({unit(2, 0, 0), unit(2, 1, 1)}, false);
    CHECK(verify_closure(torus).closed);

    LieAlgebraVF tiny = make_algebra({unit(2, 0, 1)}, false);
    CHECK(verify_closure(tiny).closed);

    // [E12, E21] = E11 - E22 is outside span{E12, E21}
    LieAlgebraVF open_pair = make_algebra({unit(2, 0, 1), unit(2, 1, 0)}, false);
    ClosureResult c = verify_closure(open_pair);
    CHECK(!c.closed);
    CHECK(c.bad_i == 0);
    CHECK(c.bad_j == 1);
    CHECK(!c.residual.is_zero());
    CHECK_THROWS_AS(make_algebra({unit(2, 0, 1), unit(2, 1, 0)}), std::invalid_argument);
    CHECK_THROWS_AS(derived_subalgebra(open_pair), std::invalid_argument);
}
