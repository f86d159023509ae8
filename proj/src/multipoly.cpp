#include "prehom/multipoly.hpp"

#include <sstream>
#include <stdexcept>

namespace prehom {

namespace {
const Rat kZero{};

void check_same_n(const MultiPoly& a, const MultiPoly& b, const char* op) {
    if (a.n() != b.n())
        throw std::invalid_argument(std::string(op) + ": ambient dimension mismatch (" +
                                    std::to_string(a.n()) + " vs " + std::to_string(b.n()) + ")");
}
}  // namespace

unsigned Monomial::total_degree() const {
    unsigned d = 0;
    for (unsigned x : e) d += x;
    return d;
}

bool Monomial::divides(const Monomial& a, const Monomial& b) {
    if (a.e.size() != b.e.size()) return false;
    for (size_t i = 0; i < a.e.size(); ++i)
        if (a.e[i] > b.e[i]) return false;
    return true;
}

Monomial Monomial::quotient(const Monomial& b, const Monomial& a) {
    Monomial q(static_cast<int>(b.e.size()));
    for (size_t i = 0; i < b.e.size(); ++i) q.e[i] = b.e[i] - a.e[i];
    return q;
}

Monomial Monomial::product(const Monomial& a, const Monomial& b) {
    Monomial p(static_cast<int>(a.e.size()));
    for (size_t i = 0; i < a.e.size(); ++i) p.e[i] = a.e[i] + b.e[i];
    return p;
}

bool MonoOrder::operator()(const Monomial& a, const Monomial& b) const {
    unsigned da = a.total_degree(), db = b.total_degree();
    if (da != db) return da < db;
    for (size_t i = 0; i < a.e.size() && i < b.e.size(); ++i)
        if (a.e[i] != b.e[i]) return a.e[i] < b.e[i];
    return a.e.size() < b.e.size();
}

MultiPoly MultiPoly::constant(int n, const Rat& c) {
    MultiPoly p(n);
    if (!c.is_zero()) p.terms_.emplace(Monomial(n), c);
    return p;
}

MultiPoly MultiPoly::variable(int n, int i) {
    if (i < 0 || i >= n) throw std::invalid_argument("MultiPoly::variable: index out of range");
    Monomial m(n);
    m.e[static_cast<size_t>(i)] = 1;
    return monomial(std::move(m), Rat(1));
}

MultiPoly MultiPoly::monomial(Monomial m, const Rat& c) {
    MultiPoly p(m.size());
    if (!c.is_zero()) p.terms_.emplace(std::move(m), c);
    return p;
}

bool MultiPoly::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.total_degree() == 0);
}

int MultiPoly::degree() const {
    if (terms_.empty()) return -1;
    return static_cast<int>(terms_.rbegin()->first.total_degree());
}

const Rat& MultiPoly::coeff(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? kZero : it->second;
}

void MultiPoly::add_term(const Monomial& m, const Rat& c) {
    if (c.is_zero()) return;
    if (m.size() != n_) throw std::invalid_argument("MultiPoly::add_term: monomial length mismatch");
    auto [it, inserted] = terms_.emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

const Monomial& MultiPoly::leading_monomial() const {
    if (terms_.empty()) throw std::invalid_argument("leading_monomial of zero polynomial");
    return terms_.rbegin()->first;
}

const Rat& MultiPoly::leading_coeff() const {
    if (terms_.empty()) throw std::invalid_argument("leading_coeff of zero polynomial");
    return terms_.rbegin()->second;
}

MultiPoly MultiPoly::operator-() const {
    MultiPoly r(*this);
    for (auto& [m, c] : r.terms_) c = -c;
    return r;
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
    check_same_n(*this, o, "poly_add");
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o) {
    check_same_n(*this, o, "poly_sub");
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
    check_same_n(a, b, "poly_mul");
    MultiPoly r(a.n());
    for (const auto& [ma, ca] : a.terms_)
        for (const auto& [mb, cb] : b.terms_) r.add_term(Monomial::product(ma, mb), ca * cb);
    return r;
}

MultiPoly MultiPoly::scaled(const Rat& c) const {
    MultiPoly r(n_);
    if (c.is_zero()) return r;
    for (const auto& [m, v] : terms_) r.terms_.emplace(m, v * c);
    return r;
}

std::string MultiPoly::str(std::span<const std::string> vars) const {
    if (static_cast<int>(vars.size()) != n_)
        throw std::invalid_argument("MultiPoly::str: variable name count mismatch");
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        Rat c = it->second;
        if (first) {
            if (c.sign() < 0) { os << "-"; c = -c; }
        } else {
            os << (c.sign() < 0 ? " - " : " + ");
            if (c.sign() < 0) c = -c;
        }
        first = false;
        const Monomial& m = it->first;
        bool constant_term = m.total_degree() == 0;
        if (constant_term || !c.is_one()) os << c.str();
        bool printed = !constant_term && !c.is_one();
        for (size_t i = 0; i < m.e.size(); ++i) {
            if (m.e[i] == 0) continue;
            if (printed || !c.is_one() || false) {
                if (printed || !c.is_one()) os << "*";
            }
            os << vars[i];
            if (m.e[i] > 1) os << "^" << m.e[i];
            printed = true;
        }
    }
    return os.str();
}

std::string MultiPoly::str() const {
    std::vector<std::string> vars;
    vars.reserve(static_cast<size_t>(n_));
    for (int i = 1; i <= n_; ++i) vars.push_back("x" + std::to_string(i));
    return str(vars);
}

MultiPoly partial_derivative(const MultiPoly& f, int i) {
    if (i < 0 || i >= f.n())
        throw std::invalid_argument("partial_derivative: variable index out of range");
    MultiPoly r(f.n());
    for (const auto& [m, c] : f.terms()) {
        unsigned k = m.e[static_cast<size_t>(i)];
        if (k == 0) continue;
        Monomial d = m;
        d.e[static_cast<size_t>(i)] = k - 1;
        r.add_term(d, c * Rat(static_cast<long>(k)));
    }
    return r;
}

Rat evaluate(const MultiPoly& f, std::span<const Rat> p) {
    if (static_cast<int>(p.size()) != f.n())
        throw std::invalid_argument("evaluate: point length mismatch");
    Rat total;
    for (const auto& [m, c] : f.terms()) {
        Rat v = c;
        for (size_t i = 0; i < m.e.size(); ++i)
            for (unsigned k = 0; k < m.e[i]; ++k) v *= p[i];
        total += v;
    }
    return total;
}

Homogeneity homogeneous_degree(const MultiPoly& f) {
    if (f.is_zero()) return {Homogeneity::Zero, 0u};
    unsigned d = f.terms().begin()->first.total_degree();
    for (const auto& [m, c] : f.terms())
        if (m.total_degree() != d) return {Homogeneity::Inhomogeneous, 0u};
    return {Homogeneity::Homogeneous, d};
}

std::optional<MultiPoly> exact_divide(const MultiPoly& num, const MultiPoly& den) {
    check_same_n(num, den, "exact_divide");
    if (den.is_zero()) throw std::invalid_argument("exact_divide: zero divisor");
    MultiPoly q(num.n());
    MultiPoly cur = num;
    // If den | num, every intermediate remainder is a multiple of den, so
    // the leading terms always cancel; the first failure certifies
    // non-divisibility.
    while (!cur.is_zero()) {
        if (!Monomial::divides(den.leading_monomial(), cur.leading_monomial())) return std::nullopt;
        Monomial mq = Monomial::quotient(cur.leading_monomial(), den.leading_monomial());
        Rat cq = cur.leading_coeff() / den.leading_coeff();
        MultiPoly t = MultiPoly::monomial(mq, cq);
        q += t;
        cur -= t * den;
    }
    return q;
}

UniPoly restrict_to_line(const MultiPoly& f, std::span<const Rat> p, std::span<const Rat> q) {
    if (static_cast<int>(p.size()) != f.n() || static_cast<int>(q.size()) != f.n())
        throw std::invalid_argument("restrict_to_line: point/direction length mismatch");
    UniPoly total;
    for (const auto& [m, c] : f.terms()) {
        UniPoly term = UniPoly::constant(c);
        for (size_t i = 0; i < m.e.size(); ++i) {
            if (m.e[i] == 0) continue;
            UniPoly lin(std::vector<Rat>{p[i], q[i]});
            for (unsigned k = 0; k < m.e[i]; ++k) term = term * lin;
        }
        total += term;
    }
    return total;
}

MultiPoly monic(const MultiPoly& f) {
    if (f.is_zero()) throw std::invalid_argument("monic: zero polynomial");
    return f.scaled(Rat(1) / f.leading_coeff());
}

MultiPoly pow(const MultiPoly& f, unsigned k) {
    MultiPoly r = MultiPoly::constant(f.n(), Rat(1));
    for (unsigned i = 0; i < k; ++i) r = r * f;
    return r;
}

std::vector<Monomial> monomials_of_degree(int n, unsigned d) {
    std::vector<Monomial> out;
    Monomial m(n);
    // Recursive enumeration, first variable gets the largest exponent
    // first so the list is descending in the global order.
    auto rec = [&](auto&& self, int i, unsigned rem) -> void {
        if (i == n - 1) {
            m.e[static_cast<size_t>(i)] = rem;
            out.push_back(m);
            return;
        }
        for (int k = static_cast<int>(rem); k >= 0; --k) {
            m.e[static_cast<size_t>(i)] = static_cast<unsigned>(k);
            self(self, i + 1, rem - static_cast<unsigned>(k));
        }
        m.e[static_cast<size_t>(i)] = 0;
    };
    if (n <= 0) {
        if (d == 0) out.push_back(Monomial(0));
        return out;
    }
    rec(rec, 0, d);
    return out;
}

}  // namespace prehom
