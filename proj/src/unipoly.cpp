#include "prehom/unipoly.hpp"

#include <sstream>
#include <stdexcept>

namespace prehom {

namespace {
const Rat kZero{};
}

UniPoly UniPoly::constant(const Rat& c) {
    UniPoly p;
    if (!c.is_zero()) p.c_.push_back(c);
    return p;
}

const Rat& UniPoly::coeff(size_t i) const { return i < c_.size() ? c_[i] : kZero; }

void UniPoly::set_coeff(size_t i, const Rat& v) {
    if (i >= c_.size()) {
        if (v.is_zero()) return;
        c_.resize(i + 1, Rat());
    }
    c_[i] = v;
    trim();
}

void UniPoly::trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

UniPoly UniPoly::operator-() const {
    UniPoly r(*this);
    for (auto& x : r.c_) x = -x;
    return r;
}

UniPoly& UniPoly::operator+=(const UniPoly& o) {
    if (c_.size() < o.c_.size()) c_.resize(o.c_.size(), Rat());
    for (size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    trim();
    return *this;
}

UniPoly& UniPoly::operator-=(const UniPoly& o) {
    if (c_.size() < o.c_.size()) c_.resize(o.c_.size(), Rat());
    for (size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    trim();
    return *this;
}

UniPoly operator*(const UniPoly& a, const UniPoly& b) {
    if (a.is_zero() || b.is_zero()) return UniPoly();
    std::vector<Rat> r(a.c_.size() + b.c_.size() - 1, Rat());
    for (size_t i = 0; i < a.c_.size(); ++i)
        for (size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
    return UniPoly(std::move(r));
}

UniPoly UniPoly::scaled(const Rat& s) const {
    if (s.is_zero()) return UniPoly();
    UniPoly r(*this);
    for (auto& x : r.c_) x *= s;
    return r;
}

Rat UniPoly::eval(const Rat& t) const {
    Rat v;
    for (size_t i = c_.size(); i-- > 0;) v = v * t + c_[i];
    return v;
}

UniPoly UniPoly::derivative() const {
    if (c_.size() <= 1) return UniPoly();
    std::vector<Rat> r(c_.size() - 1);
    for (size_t i = 1; i < c_.size(); ++i) r[i - 1] = c_[i] * Rat(static_cast<long>(i));
    return UniPoly(std::move(r));
}

std::string UniPoly::str(const std::string& var) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (size_t i = c_.size(); i-- > 0;) {
        if (c_[i].is_zero()) continue;
        Rat c = c_[i];
        if (first) {
            if (c.sign() < 0) { os << "-"; c = -c; }
        } else {
            os << (c.sign() < 0 ? " - " : " + ");
            if (c.sign() < 0) c = -c;
        }
        first = false;
        if (i == 0 || !c.is_one()) os << c.str();
        if (i > 0) {
            if (!c.is_one()) os << "*";
            os << var;
            if (i > 1) os << "^" << i;
        }
    }
    return os.str();
}

std::pair<UniPoly, UniPoly> uni_divmod(const UniPoly& a, const UniPoly& b) {
    if (b.is_zero()) throw std::invalid_argument("uni_divmod: division by zero polynomial");
    UniPoly r = a;
    std::vector<Rat> q(a.degree() >= b.degree() ? a.degree() - b.degree() + 1 : 0, Rat());
    while (!r.is_zero() && r.degree() >= b.degree()) {
        size_t shift = static_cast<size_t>(r.degree() - b.degree());
        Rat factor = r.leading() / b.leading();
        q[shift] = factor;
        std::vector<Rat> sub(shift + static_cast<size_t>(b.degree()) + 1, Rat());
        for (size_t i = 0; i < b.coeffs().size(); ++i) sub[i + shift] = b.coeffs()[i] * factor;
        r -= UniPoly(std::move(sub));
    }
    return {UniPoly(std::move(q)), r};
}

UniPoly uni_gcd(const UniPoly& a, const UniPoly& b) {
    if (a.is_zero() && b.is_zero()) throw std::invalid_argument("uni_gcd: both arguments zero");
    UniPoly x = a, y = b;
    while (!y.is_zero()) {
        UniPoly r = uni_divmod(x, y).second;
        x = y;
        y = r;
    }
    return x.scaled(Rat(1) / x.leading());
}

}  // namespace prehom
