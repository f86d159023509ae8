#include "prehom/linalg.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>

namespace prehom {

namespace {

void check_square(const RatMatrix& m, const char* op) {
    if (m.rows() != m.cols())
        throw std::invalid_argument(std::string(op) + ": matrix is not square");
}

void check_same_shape(const RatMatrix& a, const RatMatrix& b, const char* op) {
    if (a.rows() != b.rows() || a.cols() != b.cols())
        throw std::invalid_argument(std::string(op) + ": shape mismatch");
}

}  // namespace

RatMatrix RatMatrix::identity(int n) {
    RatMatrix m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = Rat(1);
    return m;
}

RatMatrix RatMatrix::from_rows(const std::vector<std::vector<Rat>>& rows) {
    int r = static_cast<int>(rows.size());
    int c = r == 0 ? 0 : static_cast<int>(rows[0].size());
    RatMatrix m(r, c);
    for (int i = 0; i < r; ++i) {
        if (static_cast<int>(rows[static_cast<size_t>(i)].size()) != c)
            throw std::invalid_argument("from_rows: ragged rows");
        for (int j = 0; j < c; ++j) m.at(i, j) = rows[static_cast<size_t>(i)][static_cast<size_t>(j)];
    }
    return m;
}

std::vector<Rat> RatMatrix::row(int i) const {
    std::vector<Rat> r(static_cast<size_t>(cols_));
    for (int j = 0; j < cols_; ++j) r[static_cast<size_t>(j)] = at(i, j);
    return r;
}

std::vector<Rat> RatMatrix::col(int j) const {
    std::vector<Rat> c(static_cast<size_t>(rows_));
    for (int i = 0; i < rows_; ++i) c[static_cast<size_t>(i)] = at(i, j);
    return c;
}

RatMatrix RatMatrix::operator-() const {
    RatMatrix r(rows_, cols_);
    for (size_t i = 0; i < a_.size(); ++i) r.a_[i] = -a_[i];
    return r;
}

RatMatrix operator+(const RatMatrix& a, const RatMatrix& b) {
    check_same_shape(a, b, "matrix add");
    RatMatrix r(a.rows_, a.cols_);
    for (size_t i = 0; i < a.a_.size(); ++i) r.a_[i] = a.a_[i] + b.a_[i];
    return r;
}

RatMatrix operator-(const RatMatrix& a, const RatMatrix& b) {
    check_same_shape(a, b, "matrix sub");
    RatMatrix r(a.rows_, a.cols_);
    for (size_t i = 0; i < a.a_.size(); ++i) r.a_[i] = a.a_[i] - b.a_[i];
    return r;
}

RatMatrix operator*(const RatMatrix& a, const RatMatrix& b) {
    if (a.cols_ != b.rows_) throw std::invalid_argument("matrix mul: inner dimension mismatch");
    RatMatrix r(a.rows_, b.cols_);
    for (int i = 0; i < a.rows_; ++i)
        for (int k = 0; k < a.cols_; ++k) {
            const Rat& aik = a.at(i, k);
            if (aik.is_zero()) continue;
            for (int j = 0; j < b.cols_; ++j) {
                const Rat& bkj = b.at(k, j);
                if (!bkj.is_zero()) r.at(i, j) += aik * bkj;
            }
        }
    return r;
}

RatMatrix RatMatrix::scaled(const Rat& s) const {
    RatMatrix r(rows_, cols_);
    for (size_t i = 0; i < a_.size(); ++i) r.a_[i] = a_[i] * s;
    return r;
}

RatMatrix RatMatrix::transposed() const {
    RatMatrix r(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
    return r;
}

std::vector<Rat> RatMatrix::apply(std::span<const Rat> v) const {
    if (static_cast<int>(v.size()) != cols_)
        throw std::invalid_argument("matrix apply: vector length mismatch");
    std::vector<Rat> r(static_cast<size_t>(rows_));
    for (int i = 0; i < rows_; ++i) {
        Rat s;
        for (int j = 0; j < cols_; ++j) {
            const Rat& a = at(i, j);
            if (!a.is_zero()) s += a * v[static_cast<size_t>(j)];
        }
        r[static_cast<size_t>(i)] = s;
    }
    return r;
}

bool RatMatrix::is_zero() const {
    for (const Rat& x : a_)
        if (!x.is_zero()) return false;
    return true;
}

std::string RatMatrix::str() const {
    std::ostringstream os;
    for (int i = 0; i < rows_; ++i) {
        os << "[";
        for (int j = 0; j < cols_; ++j) os << (j ? " " : "") << at(i, j).str();
        os << "]";
        if (i + 1 < rows_) os << "\n";
    }
    return os.str();
}

std::pair<RatMatrix, int> rref(const RatMatrix& m) {
    RatMatrix a = m;
    int rank = 0;
    for (int col = 0; col < a.cols() && rank < a.rows(); ++col) {
        int pivot = -1;
        for (int i = rank; i < a.rows(); ++i)
            if (!a.at(i, col).is_zero()) { pivot = i; break; }
        if (pivot < 0) continue;
        if (pivot != rank)
            for (int j = 0; j < a.cols(); ++j) std::swap(a.at(pivot, j), a.at(rank, j));
        Rat inv = Rat(1) / a.at(rank, col);
        for (int j = col; j < a.cols(); ++j) a.at(rank, j) *= inv;
        for (int i = 0; i < a.rows(); ++i) {
            if (i == rank) continue;
            Rat f = a.at(i, col);
            if (f.is_zero()) continue;
            for (int j = col; j < a.cols(); ++j) a.at(i, j) -= f * a.at(rank, j);
        }
        ++rank;
    }
    return {a, rank};
}

Subspace Subspace::span_of(const RatMatrix& rows) {
    auto [r, rank] = rref(rows);
    RatMatrix basis(rank, rows.cols());
    for (int i = 0; i < rank; ++i)
        for (int j = 0; j < rows.cols(); ++j) basis.at(i, j) = r.at(i, j);
    return Subspace{rows.cols(), basis};
}

Subspace Subspace::span_of_vectors(const std::vector<std::vector<Rat>>& vecs, int ambient) {
    if (vecs.empty()) return Subspace::zero(ambient);
    RatMatrix m(static_cast<int>(vecs.size()), ambient);
    for (size_t i = 0; i < vecs.size(); ++i) {
        if (static_cast<int>(vecs[i].size()) != ambient)
            throw std::invalid_argument("span_of_vectors: ambient mismatch");
        for (int j = 0; j < ambient; ++j) m.at(static_cast<int>(i), j) = vecs[i][static_cast<size_t>(j)];
    }
    return span_of(m);
}

Subspace kernel(const RatMatrix& m) {
    auto [r, rank] = rref(m);
    std::vector<int> pivot_col(static_cast<size_t>(rank));
    std::vector<bool> is_pivot(static_cast<size_t>(m.cols()), false);
    for (int i = 0; i < rank; ++i) {
        int j = 0;
        while (j < m.cols() && r.at(i, j).is_zero()) ++j;
        pivot_col[static_cast<size_t>(i)] = j;
        is_pivot[static_cast<size_t>(j)] = true;
    }
    std::vector<std::vector<Rat>> basis;
    for (int j = 0; j < m.cols(); ++j) {
        if (is_pivot[static_cast<size_t>(j)]) continue;
        std::vector<Rat> v(static_cast<size_t>(m.cols()));
        v[static_cast<size_t>(j)] = Rat(1);
        for (int i = 0; i < rank; ++i) v[static_cast<size_t>(pivot_col[static_cast<size_t>(i)])] = -r.at(i, j);
        basis.push_back(std::move(v));
    }
    return Subspace::span_of_vectors(basis, m.cols());
}

Subspace subspace_sum(const Subspace& a, const Subspace& b) {
    if (a.ambient != b.ambient) throw std::invalid_argument("subspace_sum: ambient mismatch");
    RatMatrix stacked(a.dim() + b.dim(), a.ambient);
    for (int i = 0; i < a.dim(); ++i)
        for (int j = 0; j < a.ambient; ++j) stacked.at(i, j) = a.basis.at(i, j);
    for (int i = 0; i < b.dim(); ++i)
        for (int j = 0; j < a.ambient; ++j) stacked.at(a.dim() + i, j) = b.basis.at(i, j);
    return Subspace::span_of(stacked);
}

Subspace subspace_intersect(const Subspace& a, const Subspace& b) {
    if (a.ambient != b.ambient) throw std::invalid_argument("subspace_intersect: ambient mismatch");
    int n = a.ambient;
    // Zassenhaus block trick: rref of [A A; B 0]; rows whose left half is
    // zero carry the intersection in their right half.
    RatMatrix block(a.dim() + b.dim(), 2 * n);
    for (int i = 0; i < a.dim(); ++i)
        for (int j = 0; j < n; ++j) {
            block.at(i, j) = a.basis.at(i, j);
            block.at(i, n + j) = a.basis.at(i, j);
        }
    for (int i = 0; i < b.dim(); ++i)
        for (int j = 0; j < n; ++j) block.at(a.dim() + i, j) = b.basis.at(i, j);
    auto [r, rank] = rref(block);
    std::vector<std::vector<Rat>> inter;
    for (int i = 0; i < rank; ++i) {
        bool left_zero = true;
        for (int j = 0; j < n && left_zero; ++j)
            if (!r.at(i, j).is_zero()) left_zero = false;
        if (!left_zero) continue;
        std::vector<Rat> v(static_cast<size_t>(n));
        for (int j = 0; j < n; ++j) v[static_cast<size_t>(j)] = r.at(i, n + j);
        inter.push_back(std::move(v));
    }
    return Subspace::span_of_vectors(inter, n);
}

std::pair<std::vector<Rat>, std::vector<Rat>> reduce_against(const Subspace& a,
                                                             std::span<const Rat> v) {
    if (static_cast<int>(v.size()) != a.ambient)
        throw std::invalid_argument("reduce_against: ambient mismatch");
    std::vector<Rat> rem(v.begin(), v.end());
    std::vector<Rat> coords(static_cast<size_t>(a.dim()));
    for (int i = 0; i < a.dim(); ++i) {
        int p = 0;
        while (p < a.ambient && a.basis.at(i, p).is_zero()) ++p;
        if (p == a.ambient) continue;
        Rat f = rem[static_cast<size_t>(p)] / a.basis.at(i, p);
        if (f.is_zero()) continue;
        coords[static_cast<size_t>(i)] = f;
        for (int j = p; j < a.ambient; ++j) rem[static_cast<size_t>(j)] -= f * a.basis.at(i, j);
    }
    return {rem, coords};
}

bool contains(const Subspace& a, std::span<const Rat> v) {
    auto [rem, coords] = reduce_against(a, v);
    for (const Rat& x : rem)
        if (!x.is_zero()) return false;
    return true;
}

bool subspace_leq(const Subspace& a, const Subspace& b) {
    for (int i = 0; i < a.dim(); ++i)
        if (!contains(b, a.basis.row(i))) return false;
    return true;
}

UniPoly char_poly(const RatMatrix& m) {
    check_square(m, "char_poly");
    int n = m.rows();
    // Faddeev-LeVerrier: M_1 = m, c_{n-k} = -tr(M_k)/k,
    // M_{k+1} = m (M_k + c_{n-k} I).  Divisions only by the step index.
    std::vector<Rat> c(static_cast<size_t>(n) + 1);
    c[static_cast<size_t>(n)] = Rat(1);
    RatMatrix mk = m;
    for (int k = 1; k <= n; ++k) {
        Rat tr;
        for (int i = 0; i < n; ++i) tr += mk.at(i, i);
        c[static_cast<size_t>(n - k)] = -(tr / Rat(k));
        if (k < n) mk = m * (mk + RatMatrix::identity(n).scaled(c[static_cast<size_t>(n - k)]));
    }
    return UniPoly(std::move(c));
}

Rat det_rat(const RatMatrix& m) {
    check_square(m, "det_rat");
    int n = m.rows();
    if (n == 0) return Rat(1);
    // Clear denominators row by row, then run integer Bareiss.
    std::vector<std::vector<mpz_class>> a(static_cast<size_t>(n),
                                          std::vector<mpz_class>(static_cast<size_t>(n)));
    mpz_class scale = 1;
    for (int i = 0; i < n; ++i) {
        mpz_class l = 1;
        for (int j = 0; j < n; ++j) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m.at(i, j).den().get_mpz_t());
        for (int j = 0; j < n; ++j)
            a[static_cast<size_t>(i)][static_cast<size_t>(j)] =
                m.at(i, j).num() * (l / m.at(i, j).den());
        scale *= l;
    }
    int sign = 1;
    mpz_class prev = 1;
    for (int k = 0; k < n - 1; ++k) {
        int pivot = -1;
        for (int i = k; i < n; ++i)
            if (a[static_cast<size_t>(i)][static_cast<size_t>(k)] != 0) { pivot = i; break; }
        if (pivot < 0) return Rat(0);
        if (pivot != k) {
            std::swap(a[static_cast<size_t>(pivot)], a[static_cast<size_t>(k)]);
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i) {
            for (int j = k + 1; j < n; ++j) {
                mpz_class num = a[static_cast<size_t>(i)][static_cast<size_t>(j)] *
                                    a[static_cast<size_t>(k)][static_cast<size_t>(k)] -
                                a[static_cast<size_t>(i)][static_cast<size_t>(k)] *
                                    a[static_cast<size_t>(k)][static_cast<size_t>(j)];
                mpz_divexact(a[static_cast<size_t>(i)][static_cast<size_t>(j)].get_mpz_t(),
                             num.get_mpz_t(), prev.get_mpz_t());
            }
            a[static_cast<size_t>(i)][static_cast<size_t>(k)] = 0;
        }
        prev = a[static_cast<size_t>(k)][static_cast<size_t>(k)];
    }
    mpz_class det = a[static_cast<size_t>(n - 1)][static_cast<size_t>(n - 1)];
    if (sign < 0) det = -det;
    return Rat(det, scale);
}

namespace {

bool miller_rabin(const mpz_class& n) {
    if (n < 2) return false;
    for (long p : {2L, 3L, 5L, 7L, 11L, 13L, 17L, 19L, 23L, 29L, 31L, 37L}) {
        if (n == p) return true;
        if (mpz_divisible_ui_p(n.get_mpz_t(), static_cast<unsigned long>(p))) return false;
    }
    mpz_class d = n - 1;
    unsigned long r = 0;
    while (mpz_even_p(d.get_mpz_t())) { d >>= 1; ++r; }
    for (long a : {2L, 3L, 5L, 7L, 11L, 13L, 17L, 19L, 23L, 29L, 31L, 37L}) {
        mpz_class x, base(a);
        mpz_powm(x.get_mpz_t(), base.get_mpz_t(), d.get_mpz_t(), n.get_mpz_t());
        if (x == 1 || x == n - 1) continue;
        bool witness = true;
        for (unsigned long i = 1; i < r && witness; ++i) {
            x = (x * x) % n;
            if (x == n - 1) witness = false;
        }
        if (witness) return false;
    }
    return true;
}

mpz_class pollard_rho(const mpz_class& n) {
    if (mpz_even_p(n.get_mpz_t())) return 2;
    for (unsigned long c = 1;; ++c) {
        mpz_class x = 2, y = 2, d = 1;
        while (d == 1) {
            x = (x * x + c) % n;
            y = (y * y + c) % n;
            y = (y * y + c) % n;
            mpz_class diff = x > y ? x - y : y - x;
            if (diff == 0) break;
            mpz_gcd(d.get_mpz_t(), diff.get_mpz_t(), n.get_mpz_t());
        }
        if (d != 1 && d != n) return d;
    }
}

void factorize(mpz_class n, std::map<mpz_class, unsigned>& out) {
    if (n <= 1) return;
    if (miller_rabin(n)) {
        ++out[n];
        return;
    }
    for (unsigned long p = 2; p < 100000ul && n > 1; p += (p == 2 ? 1 : 2)) {
        while (mpz_divisible_ui_p(n.get_mpz_t(), p)) {
            ++out[mpz_class(static_cast<long>(p))];
            mpz_divexact_ui(n.get_mpz_t(), n.get_mpz_t(), p);
        }
        if (miller_rabin(n)) { ++out[n]; return; }
    }
    if (n == 1) return;
    mpz_class d = pollard_rho(n);
    factorize(d, out);
    factorize(n / d, out);
}

std::vector<mpz_class> all_divisors(const mpz_class& n) {
    std::map<mpz_class, unsigned> f;
    factorize(n, f);
    std::vector<mpz_class> divs{1};
    for (const auto& [p, e] : f) {
        size_t old = divs.size();
        mpz_class pk = 1;
        for (unsigned k = 1; k <= e; ++k) {
            pk *= p;
            for (size_t i = 0; i < old; ++i) divs.push_back(divs[i] * pk);
        }
        if (divs.size() > (1u << 22))
            throw std::runtime_error("rational_eigenvalues: divisor enumeration bound exceeded");
    }
    return divs;
}

mpz_class eval_int_poly(const std::vector<mpz_class>& c, const mpz_class& x) {
    mpz_class v = 0;
    for (size_t i = c.size(); i-- > 0;) v = v * x + c[i];
    return v;
}

}  // namespace

std::vector<mpz_class> monic_integer_roots(const std::vector<mpz_class>& coeffs) {
    std::vector<mpz_class> c = coeffs;
    if (c.empty() || c.back() != 1)
        throw std::invalid_argument("monic_integer_roots: polynomial is not monic");
    std::vector<mpz_class> roots;
    // Strip powers of the variable: each gives a root 0.
    size_t z = 0;
    while (z < c.size() - 1 && c[z] == 0) ++z;
    for (size_t i = 0; i < z; ++i) roots.push_back(0);
    c.erase(c.begin(), c.begin() + static_cast<long>(z));
    if (c.size() == 1) return roots;  // was a pure power of t

    mpz_class a0 = abs(c[0]);
    std::vector<mpz_class> divs = all_divisors(a0);
    std::sort(divs.begin(), divs.end());
    for (const mpz_class& d : divs) {
        for (int s : {1, -1}) {
            mpz_class cand = s > 0 ? d : mpz_class(-d);
            while (c.size() > 1 && eval_int_poly(c, cand) == 0) {
                roots.push_back(cand);
                // synthetic division by (t - cand), exact since monic
                std::vector<mpz_class> q(c.size() - 1);
                mpz_class carry = 0;
                for (size_t i = c.size(); i-- > 1;) {
                    q[i - 1] = c[i] + carry;
                    carry = q[i - 1] * cand;
                }
                c = std::move(q);
            }
            if (c.size() == 1) return roots;
        }
    }
    return roots;
}

std::vector<Rat> rational_eigenvalues(const RatMatrix& m) {
    check_square(m, "rational_eigenvalues");
    int n = m.rows();
    if (n == 0) return {};
    mpz_class l = 1;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m.at(i, j).den().get_mpz_t());
    RatMatrix scaled = m.scaled(Rat(l));
    UniPoly cp = char_poly(scaled);  // monic with integer coefficients
    std::vector<mpz_class> c(cp.coeffs().size());
    for (size_t i = 0; i < c.size(); ++i) {
        if (!cp.coeffs()[i].is_integer())
            throw std::runtime_error("rational_eigenvalues: non-integer characteristic coefficient");
        c[i] = cp.coeffs()[i].num();
    }
    std::vector<mpz_class> int_roots = monic_integer_roots(c);
    std::vector<Rat> out;
    out.reserve(int_roots.size());
    for (const mpz_class& r : int_roots) out.emplace_back(r, l);
    std::sort(out.begin(), out.end());
    return out;
}

Subspace eigenspace(const RatMatrix& m, const Rat& lambda) {
    check_square(m, "eigenspace");
    return kernel(m - RatMatrix::identity(m.rows()).scaled(lambda));
}

std::optional<std::vector<Rat>> solve(const RatMatrix& m, std::span<const Rat> b) {
    if (static_cast<int>(b.size()) != m.rows()) throw std::invalid_argument("solve: rhs length mismatch");
    RatMatrix aug(m.rows(), m.cols() + 1);
    for (int i = 0; i < m.rows(); ++i) {
        for (int j = 0; j < m.cols(); ++j) aug.at(i, j) = m.at(i, j);
        aug.at(i, m.cols()) = b[static_cast<size_t>(i)];
    }
    auto [r, rank] = rref(aug);
    std::vector<Rat> x(static_cast<size_t>(m.cols()));
    for (int i = 0; i < rank; ++i) {
        int p = 0;
        while (p <= m.cols() && r.at(i, p).is_zero()) ++p;
        if (p == m.cols()) return std::nullopt;  // 0 = 1 row
        x[static_cast<size_t>(p)] = r.at(i, m.cols());
    }
    return x;
}

}  // namespace prehom
