#include "prehom/corpus.hpp"

#include <algorithm>
#include <sstream>

#include "prehom/parser.hpp"

namespace prehom {

namespace {

RatMatrix unit(int n, int i, int j) {
    RatMatrix m(n, n);
    m.at(i, j) = Rat(1);
    return m;
}

std::vector<std::string> default_vars(int n) {
    std::vector<std::string> v;
    for (int i = 1; i <= n; ++i) v.push_back("x" + std::to_string(i));
    return v;
}

std::vector<Rat> rats(const std::vector<long>& v) {
    std::vector<Rat> r;
    r.reserve(v.size());
    for (long x : v) r.emplace_back(x);
    return r;
}

}  // namespace

LieAlgebraVF torus_algebra(int n) {
    std::vector<RatMatrix> b;
    for (int i = 0; i < n; ++i) b.push_back(unit(n, i, i));
    return make_algebra(b);
}

LieAlgebraVF firstcol_algebra(int n) {
    std::vector<RatMatrix> b{RatMatrix::identity(n)};
    for (int i = 1; i < n; ++i) b.push_back(unit(n, i, 0));
    return make_algebra(b);
}

LieAlgebraVF toeplitz_algebra(int n) {
    RatMatrix shift(n, n);
    for (int i = 1; i < n; ++i) shift.at(i, i - 1) = Rat(1);
    std::vector<RatMatrix> b{RatMatrix::identity(n)};
    RatMatrix p = shift;
    for (int k = 1; k < n; ++k) {
        b.push_back(p);
        p = p * shift;
    }
    return make_algebra(b);
}

LieAlgebraVF lu_algebra(int n, int m) {
    // coordinates x_{rc} flattened row-major; lower-triangular n x n part
    // acts by M -> E_{ab} M, strictly-upper m x m part by M -> -M E_{ab}
    int nm = n * m;
    auto coord = [m](int r, int c) { return r * m + c; };
    std::vector<RatMatrix> basis;
    for (int a = 0; a < n; ++a)
        for (int b = 0; b <= a; ++b) {
            RatMatrix act(nm, nm);
            for (int c = 0; c < m; ++c) act.at(coord(a, c), coord(b, c)) = Rat(1);
            basis.push_back(std::move(act));
        }
    for (int a = 0; a < m; ++a)
        for (int b = a + 1; b < m; ++b) {
            RatMatrix act(nm, nm);
            for (int r = 0; r < n; ++r) act.at(coord(r, b), coord(r, a)) = Rat(-1);
            basis.push_back(std::move(act));
        }
    return make_algebra(basis);
}

namespace {

const std::vector<std::pair<int, int>>& sym4_coords() {
    static const std::vector<std::pair<int, int>> c{{0, 1}, {0, 2}, {0, 3}, {1, 1}, {1, 2},
                                                    {1, 3}, {2, 2}, {2, 3}, {3, 3}};
    return c;
}

std::vector<std::string> sym4_vars() {
    std::vector<std::string> v;
    for (const auto& [i, j] : sym4_coords())
        v.push_back("x" + std::to_string(i + 1) + std::to_string(j + 1));
    return v;
}

std::vector<Rat> sym4_point(const std::vector<std::vector<long>>& sym) {
    std::vector<Rat> v;
    for (const auto& [i, j] : sym4_coords()) v.emplace_back(sym[static_cast<size_t>(i)][static_cast<size_t>(j)]);
    return v;
}

}  // namespace

LieAlgebraVF sym4_bordered_algebra() {
    // the block group acting on symmetric 4x4 matrices with zero (1,1)
    // entry by X(M) = X M + M X^T, on the nine coordinates x12..x44
    const std::vector<std::pair<int, int>> gens{{0, 0}, {1, 1}, {1, 2}, {2, 1}, {2, 2},
                                                {3, 0}, {3, 1}, {3, 2}, {3, 3}};
    const auto& coords = sym4_coords();
    std::vector<RatMatrix> basis;
    for (const auto& [a, b] : gens) {
        RatMatrix act(9, 9);
        for (size_t src = 0; src < coords.size(); ++src) {
            auto [k, l] = coords[src];
            // M = E_kl + E_lk (or E_kk); S = E_ab M + M E_ba
            RatMatrix mm(4, 4);
            mm.at(k, l) = Rat(1);
            mm.at(l, k) = Rat(1);
            RatMatrix s(4, 4);
            for (int c = 0; c < 4; ++c) {
                s.at(a, c) += mm.at(b, c);
                s.at(c, a) += mm.at(c, b);
            }
            if (!s.at(0, 0).is_zero())
                throw std::logic_error("sym4_bordered_algebra: subspace x11 = 0 not preserved");
            for (size_t dst = 0; dst < coords.size(); ++dst)
                act.at(static_cast<int>(dst), static_cast<int>(src)) =
                    s.at(coords[dst].first, coords[dst].second);
        }
        basis.push_back(std::move(act));
    }
    return make_algebra(basis);
}

namespace {

/// The i x i matrix behind the i-th Toeplitz additive function: first
/// column (r/i) c_{r+1}, later columns the shifted entries c_{r-j+2}.
std::vector<std::vector<MultiPoly>> toeplitz_phi_matrix(int i, const std::vector<MultiPoly>& c) {
    int nv = c.empty() ? 0 : c[0].n();
    std::vector<std::vector<MultiPoly>> m(static_cast<size_t>(i));
    for (int r = 1; r <= i; ++r) {
        auto& row = m[static_cast<size_t>(r - 1)];
        for (int j = 1; j <= i; ++j) {
            if (j == 1) {
                row.push_back(c[static_cast<size_t>(r)].scaled(Rat(r, i)));  // c is 0-based: c_{r+1}
            } else {
                int idx = r - j + 2;  // 1-based entry index
                if (idx >= 1 && idx <= static_cast<int>(c.size()))
                    row.push_back(c[static_cast<size_t>(idx - 1)]);
                else
                    row.push_back(MultiPoly::zero(nv));
            }
        }
    }
    return m;
}

}  // namespace

MultiPoly toeplitz_phi_numerator(int n, int i) {
    if (i < 1 || i >= n) throw std::invalid_argument("toeplitz_phi_numerator: need 1 <= i < n");
    std::vector<MultiPoly> c;
    for (int k = 0; k < n; ++k) c.push_back(MultiPoly::variable(n, k));
    return poly_det(toeplitz_phi_matrix(i, c));
}

bool toeplitz_homomorphism_identity(int n, int i) {
    if (i < 1 || i >= n) throw std::invalid_argument("toeplitz_homomorphism_identity: need 1 <= i < n");
    // 2n symbolic entries a_1..a_n, b_1..b_n; the product of two
    // lower-triangular Toeplitz matrices has entries c_k = sum a_p b_q
    // over p + q = k + 1
    int nv = 2 * n;
    std::vector<MultiPoly> a, b, c;
    for (int k = 0; k < n; ++k) a.push_back(MultiPoly::variable(nv, k));
    for (int k = 0; k < n; ++k) b.push_back(MultiPoly::variable(nv, n + k));
    for (int k = 1; k <= n; ++k) {
        MultiPoly ck(nv);
        for (int p = 1; p <= k; ++p) ck += a[static_cast<size_t>(p - 1)] * b[static_cast<size_t>(k - p)];
        c.push_back(std::move(ck));
    }
    MultiPoly lhs = poly_det(toeplitz_phi_matrix(i, c));
    MultiPoly a1i = pow(a[0], static_cast<unsigned>(i));
    MultiPoly b1i = pow(b[0], static_cast<unsigned>(i));
    lhs -= poly_det(toeplitz_phi_matrix(i, a)) * b1i;
    lhs -= poly_det(toeplitz_phi_matrix(i, b)) * a1i;
    return lhs.is_zero();
}

MultiPoly lu_leading_minor(int n, int m, int i) {
    if (i < 1 || i > n) throw std::invalid_argument("lu_leading_minor: need 1 <= i <= n");
    int nm = n * m;
    std::vector<std::vector<MultiPoly>> sub(static_cast<size_t>(i));
    for (int r = 0; r < i; ++r)
        for (int c = 0; c < i; ++c) sub[static_cast<size_t>(r)].push_back(MultiPoly::variable(nm, r * m + c));
    return poly_det(sub);
}

MultiPoly lu_deleted_minor(int n, int m, int i) {
    if (i < 1 || i > m - 1 || i > n)
        throw std::invalid_argument("lu_deleted_minor: need 1 <= i <= min(n, m-1)");
    int nm = n * m;
    std::vector<std::vector<MultiPoly>> sub(static_cast<size_t>(i));
    for (int r = 0; r < i; ++r) {
        for (int c = 0; c <= i; ++c) {
            if (c == i - 1) continue;  // delete column i (1-based)
            sub[static_cast<size_t>(r)].push_back(MultiPoly::variable(nm, r * m + c));
        }
    }
    return poly_det(sub);
}

namespace {

InputTask algebra_task(LieAlgebraVF g, AnalysisOptions opts,
                       std::map<std::string, std::vector<Rat>> points = {},
                       std::vector<std::string> vars = {}) {
    InputTask t;
    t.n = g.n;
    t.variables = vars.empty() ? default_vars(g.n) : std::move(vars);
    t.algebra = std::move(g);
    t.points = std::move(points);
    t.options = opts;
    return t;
}

InputTask poly_task(const std::string& poly, int n, AnalysisOptions opts,
                    std::map<std::string, std::vector<Rat>> points = {},
                    std::vector<std::string> vars = {}) {
    InputTask t;
    t.n = n;
    t.variables = vars.empty() ? default_vars(n) : std::move(vars);
    t.poly = parse_poly(poly, t.variables);
    t.points = std::move(points);
    t.options = opts;
    return t;
}

std::vector<unsigned> ones(int n) { return std::vector<unsigned>(static_cast<size_t>(n), 1u); }

void check_toeplitz_extras(int n, const AnalysisReport& rep, std::vector<std::string>& fails) {
    // representatives for k = 2, 3 match the displayed formulas up to a
    // scalar and multiples of the denominator power
    for (int i = 2; i <= std::min(n - 1, 3); ++i) {
        MultiPoly target = toeplitz_phi_numerator(n, i);
        MultiPoly den = pow(MultiPoly::variable(n, 0), static_cast<unsigned>(i));
        bool found = false;
        for (const auto& a : rep.additive) {
            if (a.k != std::vector<unsigned>{static_cast<unsigned>(i)}) continue;
            if (matches_mod_denominator(a.h1, target, den)) found = true;
        }
        if (!found)
            fails.push_back("k=" + std::to_string(i) +
                            " representative does not match the closed-form numerator");
    }
    for (int i = 1; i < n; ++i)
        if (!toeplitz_homomorphism_identity(n, i))
            fails.push_back("homomorphism identity fails for phi_" + std::to_string(i));
}

void check_lu_extras(int n, int m, const AnalysisReport& rep, std::vector<std::string>& fails) {
    if (!rep.generic_point || !rep.input.algebra) {
        fails.push_back("missing generic point for the closed-form check");
        return;
    }
    PVSpace p{*rep.input.algebra, *rep.generic_point, rep.saito_det};
    Subspace span = Subspace::zero(static_cast<int>(rep.input.algebra->basis.size()));
    for (int i = 1; i <= m - 1; ++i) {
        // locate the basic of degree i
        int which = -1;
        for (size_t b = 0; b < rep.basics.size(); ++b)
            if (static_cast<int>(rep.basics[b].degree()) == i) which = static_cast<int>(b);
        if (which < 0) {
            fails.push_back("no basic invariant of degree " + std::to_string(i));
            continue;
        }
        MultiPoly h = lu_deleted_minor(n, m, i);
        std::vector<unsigned> k(rep.basics.size(), 0);
        k[static_cast<size_t>(which)] = 1;
        // solve the additive function's differential from the identity
        std::vector<Rat> dphi(rep.input.algebra->basis.size());
        bool ok = true;
        const auto& lam = rep.basics[static_cast<size_t>(which)].lambda;
        for (size_t t = 0; t < dphi.size() && ok; ++t) {
            MultiPoly img = apply_derivation(rep.input.algebra->basis[t], h) - h.scaled(lam[t]);
            if (img.is_zero()) continue;
            auto quot = exact_divide(img, rep.basics[static_cast<size_t>(which)].f);
            if (!quot || !quot->is_constant()) ok = false;
            else dphi[t] = quot->coeff(Monomial(p.g.n));
        }
        if (!ok) {
            fails.push_back("closed-form h_" + std::to_string(i) + " is not an additive invariant");
            continue;
        }
        AdditiveInvariant inv{h, k, dphi};
        std::string why;
        if (!verify_additive(p, rep.basics, inv, &why)) {
            fails.push_back("closed-form h_" + std::to_string(i) + " fails verify_additive: " + why);
            continue;
        }
        std::vector<Rat> d = inv.dphi;
        bool nonzero = false;
        for (const Rat& x : d)
            if (!x.is_zero()) nonzero = true;
        if (!nonzero) {
            fails.push_back("closed-form h_" + std::to_string(i) + " has zero differential");
            continue;
        }
        span = subspace_sum(span, Subspace::span_of_vectors({d}, span.ambient));
    }
    if (span.dim() != m - 1)
        fails.push_back("closed-form additive functions do not span a space of dimension " +
                        std::to_string(m - 1));
}

std::vector<CorpusEntry> build_corpus() {
    std::vector<CorpusEntry> entries;

    // normal crossings
    for (int n = 2; n <= 5; ++n) {
        CorpusEntry e;
        e.name = "nc" + std::to_string(n);
        e.description = "normal crossings divisor x1...x" + std::to_string(n) +
                        " (diagonal torus, abelian LFD)";
        e.build = [n]() { return algebra_task(torus_algebra(n), AnalysisOptions{}); };
        e.expect.lfd = true;
        e.expect.r = n;
        e.expect.degrees = ones(n);
        e.expect.dim_a1 = 0;
        e.expect.dim_g = n;
        e.expect.dim_derived = 0;
        entries.push_back(std::move(e));
    }

    // constant diagonal with a free first column: one hyperplane, n-1
    // additive invariants x_{i+1}/x1
    for (int n = 3; n <= 5; ++n) {
        CorpusEntry e;
        e.name = "firstcol-n" + std::to_string(n);
        e.description = "equal-diagonal group with free first column on C^" + std::to_string(n) +
                        " (abelian, divisor x1 with multiplicity)";
        e.build = [n]() {
            AnalysisOptions o;
            o.max_degree = 2;
            o.max_denominator_degree = 2;
            return algebra_task(firstcol_algebra(n), o);
        };
        e.expect.lfd = false;
        e.expect.r = 1;
        e.expect.degrees = std::vector<unsigned>{1};
        e.expect.dim_a1 = n - 1;
        e.expect.dim_g = n;
        e.expect.dim_derived = 0;
        e.expect.dim_h = n;
        for (int i = 2; i <= n; ++i)
            e.expect.fractions.push_back(ExpectedFraction{"x" + std::to_string(i), {1}});
        entries.push_back(std::move(e));
    }

    // two 2x2-style blocks: two hyperplane components, one additive
    {
        CorpusEntry e;
        e.name = "two-blocks";
        e.description = "block group diag(a,a,c) with one shear: divisor x*z with x^2 z Saito "
                        "determinant, one additive invariant y/x";
        e.build = []() {
            RatMatrix b1(3, 3), b3(3, 3);
            b1.at(0, 0) = Rat(1);
            b1.at(1, 1) = Rat(1);
            b3.at(2, 2) = Rat(1);
            AnalysisOptions o;
            o.max_degree = 2;
            o.max_denominator_degree = 2;
            return algebra_task(make_algebra({b1, unit(3, 1, 0), b3}), o, {},
                                {"x", "y", "z"});
        };
        e.expect.lfd = false;
        e.expect.r = 2;
        e.expect.dim_a1 = 1;
        e.expect.dim_g = 3;
        e.expect.dim_derived = 0;
        e.expect.dim_h = 3;
        e.expect.fractions.push_back(ExpectedFraction{"y", {1, 0}});
        entries.push_back(std::move(e));
    }

    // the twisted variant: same orbit structure, no additive invariants
    {
        CorpusEntry e;
        e.name = "twisted-two-blocks";
        e.description = "block group diag(a,a/c,c) with one shear: same orbits as two-blocks but "
                        "[g,g] is nontrivial and no additive invariants exist";
        e.build = []() {
            RatMatrix b1(3, 3), b3(3, 3);
            b1.at(0, 0) = Rat(1);
            b1.at(1, 1) = Rat(1);
            b3.at(1, 1) = Rat(-1);
            b3.at(2, 2) = Rat(1);
            AnalysisOptions o;
            o.max_degree = 2;
            o.max_denominator_degree = 2;
            return algebra_task(make_algebra({b1, unit(3, 1, 0), b3}), o, {},
                                {"x", "y", "z"});
        };
        e.expect.lfd = false;
        e.expect.r = 2;
        e.expect.dim_a1 = 0;
        e.expect.dim_g = 3;
        e.expect.dim_derived = 1;
        e.expect.dim_h = 2;
        entries.push_back(std::move(e));
    }

    // lower-triangular Toeplitz groups: additive invariants with
    // denominator powers
    for (int n = 3; n <= 6; ++n) {
        CorpusEntry e;
        e.name = "toeplitz-n" + std::to_string(n);
        e.description = "lower-triangular Toeplitz group on C^" + std::to_string(n) +
                        ": additive invariants need denominator powers x1^i";
        e.build = [n]() {
            AnalysisOptions o;
            o.max_degree = 2;
            o.max_denominator_degree = static_cast<unsigned>(n - 1);
            return algebra_task(toeplitz_algebra(n), o);
        };
        e.expect.lfd = false;
        e.expect.r = 1;
        e.expect.degrees = std::vector<unsigned>{1};
        e.expect.dim_a1 = n - 1;
        e.expect.dim_g = n;
        e.expect.dim_derived = 0;
        e.expect.dim_h = n;
        e.extra = [n](const AnalysisReport& rep, std::vector<std::string>& fails) {
            check_toeplitz_extras(n, rep, fails);
        };
        entries.push_back(std::move(e));
    }

    // LU factorization representations
    for (auto [n, m] : std::vector<std::pair<int, int>>{{2, 2}, {2, 3}, {3, 3}, {3, 4}}) {
        CorpusEntry e;
        e.name = "lu-n" + std::to_string(n) + "-m" + std::to_string(m);
        e.description = "lower-triangular times unipotent-upper action on " + std::to_string(n) +
                        "x" + std::to_string(m) + " matrices (LU factorization)";
        int nn = n, mm = m;
        e.build = [nn, mm]() {
            AnalysisOptions o;
            o.max_degree = static_cast<unsigned>(nn);
            o.max_denominator_degree = static_cast<unsigned>(std::min(nn, mm - 1));
            if (o.max_denominator_degree == 0u) o.max_denominator_degree = 1u;
            std::vector<std::string> vars;
            for (int r = 1; r <= nn; ++r)
                for (int c = 1; c <= mm; ++c) vars.push_back("m" + std::to_string(r) + std::to_string(c));
            std::vector<Rat> v0(static_cast<size_t>(nn * mm), Rat(0));
            for (int i = 0; i < nn; ++i) v0[static_cast<size_t>(i * mm + i)] = Rat(1);
            return algebra_task(lu_algebra(nn, mm), o, {{"generic", v0}}, vars);
        };
        e.expect.lfd = false;
        e.expect.r = n;
        std::vector<unsigned> degs;
        for (int i = 1; i <= n; ++i) degs.push_back(static_cast<unsigned>(i));
        e.expect.degrees = degs;
        e.expect.dim_a1 = m - 1;
        e.expect.dim_g = n * m;
        e.expect.dim_derived = n * (n - 1) / 2 + (m - 1) * (m - 2) / 2;
        e.expect.dim_h = n + m - 1;
        e.extra = [nn, mm](const AnalysisReport& rep, std::vector<std::string>& fails) {
            check_lu_extras(nn, mm, rep, fails);
        };
        entries.push_back(std::move(e));
    }

    // plane plus quadric cone: the solvable 3-dimensional LFD
    {
        CorpusEntry e;
        e.name = "plane-cone";
        e.description = "linear free divisor x(xz - y^2): plane plus tangent quadric cone, "
                        "solvable defining group";
        e.build = []() {
            AnalysisOptions o;
            o.max_denominator_degree = 6;
            std::map<std::string, std::vector<Rat>> pts;
            pts["generic"] = rats({1, 0, 1});
            pts["component:1"] = rats({0, 1, 0});
            pts["component:2"] = rats({1, 0, 0});
            return poly_task("x*(x*z - y^2)", 3, o, std::move(pts), {"x", "y", "z"});
        };
        e.expect.lfd = true;
        e.expect.r = 2;
        e.expect.degrees = std::vector<unsigned>{1, 2};
        e.expect.dim_a1 = 0;
        e.expect.dim_g = 3;
        e.expect.dim_derived = 1;
        e.expect.dim_h = 2;
        e.extra = [](const AnalysisReport& rep, std::vector<std::string>& fails) {
            std::vector<std::string> vars{"x", "y", "z"};
            if (rep.basics.size() == 2) {
                if (rep.basics[0].f != parse_poly("x", vars))
                    fails.push_back("f1 is not x");
                if (rep.basics[1].f != parse_poly("x*z - y^2", vars))
                    fails.push_back("f2 is not xz - y^2");
            }
        };
        entries.push_back(std::move(e));
    }

    // bordered symmetric 4x4 representation on C^9
    {
        CorpusEntry e;
        e.name = "sym4-bordered";
        e.description = "block group acting on symmetric 4x4 matrices with zero corner entry: "
                        "LFD on C^9 with components of degree 2, 3, 4";
        e.build = []() {
            AnalysisOptions o;
            o.max_denominator_degree = 9;
            std::map<std::string, std::vector<Rat>> pts;
            pts["generic"] = sym4_point({{0, 1, 0, 0}, {1, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}});
            pts["component:1"] = sym4_point({{0, 1, 0, 0}, {1, 0, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}});
            pts["component:2"] = sym4_point({{0, 0, 1, 1}, {0, 0, 1, 0}, {1, 1, 0, 0}, {1, 0, 0, 0}});
            pts["component:3"] = sym4_point({{0, 1, 0, 0}, {1, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 0}});
            return algebra_task(sym4_bordered_algebra(), o, std::move(pts), sym4_vars());
        };
        e.expect.lfd = true;
        e.expect.r = 3;
        e.expect.degrees = std::vector<unsigned>{2, 3, 4};
        e.expect.dim_a1 = 0;
        e.expect.dim_g = 9;
        e.expect.dim_derived = 6;
        e.expect.dim_h = 3;
        entries.push_back(std::move(e));
    }

    // a pair of linear free divisors in C^5 whose defining groups share
    // the abstract Lie algebra but whose component degrees differ
    {
        CorpusEntry e;
        e.name = "d1";
        e.description = "quadric-cubic linear free divisor in C^5 (degrees {2,3})";
        e.build = []() {
            return poly_task("(x3*x5 - x4^2)*(2*x1*x2*x4 - x1^2*x5 - x2^2*x3)", 5,
                             AnalysisOptions{});
        };
        e.expect.lfd = true;
        e.expect.r = 2;
        e.expect.degrees = std::vector<unsigned>{2, 3};
        e.expect.dim_a1 = 0;
        e.expect.dim_g = 5;
        e.expect.dim_derived = 3;
        entries.push_back(std::move(e));
    }
    {
        CorpusEntry e;
        e.name = "d2";
        e.description = "binary-cubic discriminant times a hyperplane in C^5 (degrees {1,4})";
        e.build = []() {
            return poly_task(
                "(x2^2*x3^2 - 4*x1*x3^3 - 4*x2^3*x4 + 18*x1*x2*x3*x4 - 27*x4^2*x1^2)*x5", 5,
                AnalysisOptions{});
        };
        e.expect.lfd = true;
        e.expect.r = 2;
        e.expect.degrees = std::vector<unsigned>{1, 4};
        e.expect.dim_a1 = 0;
        e.expect.dim_g = 5;
        e.expect.dim_derived = 3;
        entries.push_back(std::move(e));
    }
    {
        CorpusEntry e;
        e.name = "d1-vs-d2";
        e.description = "comparison: d1 and d2 share Lie algebra dimensions but differ in "
                        "component degrees";
        e.pair = {"d1", "d2"};
        entries.push_back(std::move(e));
    }

    return entries;
}

std::vector<unsigned> degree_multiset(const AnalysisReport& rep) {
    std::vector<unsigned> d;
    for (const auto& b : rep.basics) d.push_back(b.degree());
    std::sort(d.begin(), d.end());
    return d;
}

}  // namespace

const std::vector<CorpusEntry>& corpus() {
    static const std::vector<CorpusEntry> entries = build_corpus();
    return entries;
}

const CorpusEntry* corpus_find(const std::string& name) {
    for (const auto& e : corpus())
        if (e.name == name) return &e;
    return nullptr;
}

CorpusResult corpus_run_entry(const CorpusEntry& entry) {
    CorpusResult res;
    res.name = entry.name;

    if (!entry.pair.empty()) {
        const CorpusEntry* a = corpus_find(entry.pair[0]);
        const CorpusEntry* b = corpus_find(entry.pair[1]);
        if (!a || !b) {
            res.failures.push_back("pair entry references unknown entries");
            return res;
        }
        AnalysisReport ra = run_analysis(a->build());
        AnalysisReport rb = run_analysis(b->build());
        if (!ra.dims || !rb.dims) {
            res.failures.push_back("pair entries did not produce dimension data");
            return res;
        }
        if (ra.dims->dim_g != rb.dims->dim_g)
            res.failures.push_back("dim g differs between the pair");
        if (ra.dims->dim_derived != rb.dims->dim_derived)
            res.failures.push_back("dim [g,g] differs between the pair");
        if (static_cast<int>(ra.basics.size()) != static_cast<int>(rb.basics.size()))
            res.failures.push_back("component counts differ between the pair");
        if (degree_multiset(ra) == degree_multiset(rb))
            res.failures.push_back("degree multisets coincide; they must differ");
        res.pass = res.failures.empty();
        return res;
    }

    AnalysisReport rep = run_analysis(entry.build());
    for (const auto& err : rep.errors) res.failures.push_back("error: " + err);
    for (const auto& v : rep.checks)
        if (v.status == Verdict::Fail)
            res.failures.push_back("check failed: " + v.check + " (" + v.detail + ")");

    const CorpusExpectation& x = entry.expect;
    if (x.lfd && rep.lfd != *x.lfd)
        res.failures.push_back("lfd verdict: expected " + std::string(*x.lfd ? "true" : "false") +
                               ", got " + (rep.lfd ? "true" : "false"));
    if (x.r && static_cast<int>(rep.basics.size()) != *x.r)
        res.failures.push_back("r: expected " + std::to_string(*x.r) + ", got " +
                               std::to_string(rep.basics.size()));
    if (x.degrees && degree_multiset(rep) != *x.degrees) {
        std::ostringstream os;
        os << "degree multiset mismatch: got {";
        for (unsigned d : degree_multiset(rep)) os << d << ",";
        os << "}";
        res.failures.push_back(os.str());
    }
    if (x.dim_a1 && static_cast<int>(rep.additive.size()) != *x.dim_a1)
        res.failures.push_back("dim A1: expected " + std::to_string(*x.dim_a1) + ", got " +
                               std::to_string(rep.additive.size()));
    if (rep.dims) {
        if (x.dim_g && rep.dims->dim_g != *x.dim_g)
            res.failures.push_back("dim g: expected " + std::to_string(*x.dim_g) + ", got " +
                                   std::to_string(rep.dims->dim_g));
        if (x.dim_derived && rep.dims->dim_derived != *x.dim_derived)
            res.failures.push_back("dim [g,g]: expected " + std::to_string(*x.dim_derived) +
                                   ", got " + std::to_string(rep.dims->dim_derived));
        if (x.dim_h && rep.dims->dim_H != *x.dim_h)
            res.failures.push_back("dim H: expected " + std::to_string(*x.dim_h) + ", got " +
                                   std::to_string(rep.dims->dim_H));
    } else if (x.dim_g || x.dim_derived || x.dim_h) {
        res.failures.push_back("no dimension data produced");
    }

    for (const auto& frac : x.fractions) {
        MultiPoly num = parse_poly(frac.numerator, rep.input.variables);
        MultiPoly den = MultiPoly::constant(rep.input.n, Rat(1));
        for (size_t i = 0; i < frac.k.size() && i < rep.basics.size(); ++i)
            if (frac.k[i] > 0) den = den * pow(rep.basics[i].f, frac.k[i]);
        bool found = false;
        for (const auto& a : rep.additive)
            if (a.k == frac.k && matches_mod_denominator(a.h1, num, den)) found = true;
        if (!found)
            res.failures.push_back("expected additive fraction (" + frac.numerator +
                                   ")/denominator not found");
    }

    if (entry.extra) entry.extra(rep, res.failures);
    res.pass = res.failures.empty();
    res.report = std::move(rep);
    return res;
}

}  // namespace prehom
