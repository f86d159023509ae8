#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "prehom/linalg.hpp"
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

}  // namespace

TEST_CASE("rref basics") {
    auto [r1, k1] = rref(RatMatrix::identity(3));
    CHECK(r1 == RatMatrix::identity(3));
    CHECK(k1 == 3);

    auto [r2, k2] = rref(RatMatrix(2, 2));
    CHECK(r2.is_zero());
    CHECK(k2 == 0);

    auto [r3, k3] = rref(M({{1, 2}, {2, 4}}));
    CHECK(k3 == 1);
    CHECK(r3 == M({{1, 2}, {0, 0}}));
}

TEST_CASE("kernel basics") {
    CHECK(kernel(RatMatrix::identity(3)).dim() == 0);
    Subspace full = kernel(RatMatrix(3, 3));
    CHECK(full == Subspace::full(3));
    Subspace k = kernel(M({{1, 0, 0}}));
    CHECK(k.dim() == 2);
    std::vector<Rat> e2{Rat(0), Rat(1), Rat(0)}, e3{Rat(0), Rat(0), Rat(1)}, e1{Rat(1), Rat(0), Rat(0)};
    CHECK(contains(k, e2));
    CHECK(contains(k, e3));
    CHECK(!contains(k, e1));
}

TEST_CASE("kernel vectors satisfy m v == 0 exactly") {
    std::mt19937_64 rng(321);
    for (int it = 0; it < 30; ++it) {
        RatMatrix m = random_matrix(rng, 3 + static_cast<int>(it % 3), 4);
        Subspace k = kernel(m);
        for (int i = 0; i < k.dim(); ++i) {
            std::vector<Rat> mv = m.apply(k.basis.row(i));
            for (const Rat& x : mv) CHECK(x.is_zero());
        }
        CHECK(k.dim() + rref(m).second == m.cols());
    }
}

TEST_CASE("subspace sum and intersection") {
    std::vector<std::vector<Rat>> e1{{Rat(1), Rat(0), Rat(0)}};
    std::vector<std::vector<Rat>> e2{{Rat(0), Rat(1), Rat(0)}};
    Subspace s1 = Subspace::span_of_vectors(e1, 3), s2 = Subspace::span_of_vectors(e2, 3);
    Subspace sum = subspace_sum(s1, s2);
    CHECK(sum.dim() == 2);

    std::vector<std::vector<Rat>> e12{{Rat(1), Rat(0), Rat(0)}, {Rat(0), Rat(1), Rat(0)}};
    std::vector<std::vector<Rat>> e23{{Rat(0), Rat(1), Rat(0)}, {Rat(0), Rat(0), Rat(1)}};
    Subspace inter = subspace_intersect(Subspace::span_of_vectors(e12, 3),
                                        Subspace::span_of_vectors(e23, 3));
    CHECK(inter.dim() == 1);
    std::vector<Rat> e2v{Rat(0), Rat(1), Rat(0)};
    CHECK(contains(inter, e2v));

    CHECK_THROWS_AS(subspace_sum(s1, Subspace::full(2)), std::invalid_argument);
}

TEST_CASE("dimension formula on random subspaces") {
    std::mt19937_64 rng(777);
    for (int it = 0; it < 100; ++it) {
        int n = 4 + static_cast<int>(it % 3);
        Subspace a = Subspace::span_of(random_matrix(rng, 1 + static_cast<int>(it % 4), n));
        Subspace b = Subspace::span_of(random_matrix(rng, 1 + static_cast<int>((it + 1) % 4), n));
        Subspace s = subspace_sum(a, b), i = subspace_intersect(a, b);
        CHECK(a.dim() + b.dim() == s.dim() + i.dim());
        CHECK(subspace_leq(i, a));
        CHECK(subspace_leq(i, b));
        CHECK(subspace_leq(a, s));
    }
}

TEST_CASE("subspace canonical form makes equality structural") {
    std::mt19937_64 rng(31);
    for (int it = 0; it < 30; ++it) {
        RatMatrix m = random_matrix(rng, 3, 5);
        Subspace a = Subspace::span_of(m);
        // same span, different generating set: shuffle rows and mix
        RatMatrix m2(3, 5);
        for (int j = 0; j < 5; ++j) {
            m2.at(0, j) = m.at(1, j) + m.at(0, j);
            m2.at(1, j) = m.at(0, j);
            m2.at(2, j) = m.at(2, j) - m.at(0, j) * Rat(3);
        }
        Subspace b = Subspace::span_of(m2);
        CHECK(a == b);
    }
}

TEST_CASE("char_poly examples") {
    // (t-1)(t-2) = t^2 - 3t + 2
    CHECK(char_poly(M({{1, 0}, {0, 2}})) == UniPoly({Rat(2), Rat(-3), Rat(1)}));
    // nilpotent: t^2
    CHECK(char_poly(M({{0, 1}, {0, 0}})) == UniPoly({Rat(0), Rat(0), Rat(1)}));
    // (t-1)^3 = t^3 - 3t^2 + 3t - 1
    CHECK(char_poly(RatMatrix::identity(3)) == UniPoly({Rat(-1), Rat(3), Rat(-3), Rat(1)}));
    CHECK_THROWS_AS(char_poly(RatMatrix(2, 3)), std::invalid_argument);
}

TEST_CASE("char_poly vanishes at every returned eigenvalue") {
    std::mt19937_64 rng(5);
    for (int it = 0; it < 30; ++it) {
        RatMatrix m = random_matrix(rng, 4, 4);
        UniPoly cp = char_poly(m);
        for (const Rat& ev : rational_eigenvalues(m)) CHECK(cp.eval(ev).is_zero());
    }
}

TEST_CASE("rational_eigenvalues examples") {
    auto ev = rational_eigenvalues(M({{1, 0, 0}, {0, 1, 0}, {0, 0, 2}}));
    REQUIRE(ev.size() == 3);
    CHECK(ev[0] == Rat(1));
    CHECK(ev[1] == Rat(1));
    CHECK(ev[2] == Rat(2));

    CHECK(rational_eigenvalues(M({{0, -1}, {1, 0}})).empty());

    auto ev2 = rational_eigenvalues(M({{0, 1}, {0, 0}}));
    REQUIRE(ev2.size() == 2);
    CHECK(ev2[0] == Rat(0));
    CHECK(ev2[1] == Rat(0));

    // fractional eigenvalues: diag(1/2, -3/5)
    RatMatrix f(2, 2);
    f.at(0, 0) = Rat(1, 2);
    f.at(1, 1) = Rat(-3, 5);
    auto ev3 = rational_eigenvalues(f);
    REQUIRE(ev3.size() == 2);
    CHECK(ev3[0] == Rat(-3, 5));
    CHECK(ev3[1] == Rat(1, 2));
}

TEST_CASE("monic integer root finding") {
    // (t-2)(t+3)(t-2) = t^3 - t^2 - 8t + 12
    std::vector<mpz_class> c{12, -8, -1, 1};
    auto roots = monic_integer_roots(c);
    REQUIRE(roots.size() == 3);
    // contains 2 twice and -3 once
    int twos = 0, neg3 = 0;
    for (const auto& r : roots) {
        if (r == 2) ++twos;
        if (r == -3) ++neg3;
    }
    CHECK(twos == 2);
    CHECK(neg3 == 1);
    // large prime constant term still works (Pollard rho path)
    // (t - 1000003)(t + 1) = t^2 - 1000002 t - 1000003
    std::vector<mpz_class> big{-1000003, -1000002, 1};
    auto r2 = monic_integer_roots(big);
    REQUIRE(r2.size() == 2);
}

TEST_CASE("eigenspace examples") {
    Subspace e1 = eigenspace(M({{1, 0}, {0, 2}}), Rat(1));
    CHECK(e1.dim() == 1);
    std::vector<Rat> v{Rat(1), Rat(0)};
    CHECK(contains(e1, v));

    CHECK(eigenspace(RatMatrix::identity(3), Rat(1)) == Subspace::full(3));
    CHECK(eigenspace(M({{1, 0}, {0, 2}}), Rat(7)).dim() == 0);
}

TEST_CASE("det examples") {
    CHECK(det_rat(RatMatrix::identity(4)) == Rat(1));
    CHECK(det_rat(M({{1, 2}, {2, 4}})) == Rat(0));
    CHECK(det_rat(M({{1, 2}, {3, 4}})) == Rat(-2));
    RatMatrix f(2, 2);
    f.at(0, 0) = Rat(1, 2);
    f.at(0, 1) = Rat(1, 3);
    f.at(1, 0) = Rat(1, 5);
    f.at(1, 1) = Rat(1, 7);
    CHECK(det_rat(f) == Rat(1, 2) * Rat(1, 7) - Rat(1, 3) * Rat(1, 5));
}

TEST_CASE("det agrees with char_poly constant term") {
    std::mt19937_64 rng(17);
    for (int it = 0; it < 25; ++it) {
        int n = 2 + static_cast<int>(it % 4);
        RatMatrix m = random_matrix(rng, n, n);
        Rat c0 = char_poly(m).coeff(0);
        Rat expect = (n % 2 == 0) ? c0 : -c0;  // det(tI-m) at t=0 is (-1)^n det m
        CHECK(det_rat(m) == expect);
    }
}

TEST_CASE("solve") {
    auto x = solve(M({{1, 1}, {1, -1}}), std::vector<Rat>{Rat(3), Rat(1)});
    REQUIRE(x.has_value());
    CHECK((*x)[0] == Rat(2));
    CHECK((*x)[1] == Rat(1));
    CHECK(!solve(M({{1, 1}, {1, 1}}), std::vector<Rat>{Rat(0), Rat(1)}).has_value());
}
