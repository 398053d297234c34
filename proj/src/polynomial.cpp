#include "ghurwitz/polynomial.hpp"

#include <algorithm>

namespace ghurwitz {

void RationalPoly::normalize() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

const Rational& RationalPoly::leading() const {
    if (c_.empty()) throw domain_error("leading coefficient of the zero polynomial");
    return c_.back();
}

Rational RationalPoly::eval(const Rational& x) const {
    Rational acc(0);
    for (std::size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
    return acc;
}

int RationalPoly::sign_at_pos_inf() const { return is_zero() ? 0 : leading().sign(); }

int RationalPoly::sign_at_neg_inf() const {
    if (is_zero()) return 0;
    return degree() % 2 == 0 ? leading().sign() : -leading().sign();
}

RationalPoly RationalPoly::derivative() const {
    if (c_.size() <= 1) return RationalPoly();
    std::vector<Rational> d(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i) d[i - 1] = Rational(static_cast<long>(i)) * c_[i];
    return RationalPoly(std::move(d));
}

RationalPoly RationalPoly::monic() const {
    if (is_zero()) return RationalPoly();
    const Rational inv = leading().inv();
    std::vector<Rational> d = c_;
    for (auto& x : d) x *= inv;
    return RationalPoly(std::move(d));
}

RationalPoly RationalPoly::operator-() const {
    std::vector<Rational> d = c_;
    for (auto& x : d) x = -x;
    return RationalPoly(std::move(d));
}

RationalPoly operator+(const RationalPoly& a, const RationalPoly& b) {
    std::vector<Rational> d(std::max(a.c_.size(), b.c_.size()), Rational(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) d[i] += a.c_[i];
    for (std::size_t i = 0; i < b.c_.size(); ++i) d[i] += b.c_[i];
    return RationalPoly(std::move(d));
}

RationalPoly operator-(const RationalPoly& a, const RationalPoly& b) { return a + (-b); }

RationalPoly operator*(const RationalPoly& a, const RationalPoly& b) {
    if (a.is_zero() || b.is_zero()) return RationalPoly();
    std::vector<Rational> d(a.c_.size() + b.c_.size() - 1, Rational(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i].is_zero()) continue;
        for (std::size_t j = 0; j < b.c_.size(); ++j) d[i + j] += a.c_[i] * b.c_[j];
    }
    return RationalPoly(std::move(d));
}

RationalPoly operator*(const Rational& s, const RationalPoly& a) {
    std::vector<Rational> d = a.c_;
    for (auto& x : d) x *= s;
    return RationalPoly(std::move(d));
}

RationalPoly RationalPoly::reflected() const {
    std::vector<Rational> d = c_;
    for (std::size_t i = 1; i < d.size(); i += 2) d[i] = -d[i];
    return RationalPoly(std::move(d));
}

RationalPoly RationalPoly::shifted_up(std::int64_t k) const {
    if (is_zero() || k == 0) return *this;
    std::vector<Rational> d(static_cast<std::size_t>(k), Rational(0));
    d.insert(d.end(), c_.begin(), c_.end());
    return RationalPoly(std::move(d));
}

std::string RationalPoly::str(const std::string& var) const {
    if (is_zero()) return "0";
    std::string out;
    for (std::size_t i = c_.size(); i-- > 0;) {
        if (c_[i].is_zero()) continue;
        if (!out.empty()) out += " + ";
        out += c_[i].str();
        if (i >= 1) out += "*" + var;
        if (i >= 2) out += "^" + std::to_string(i);
    }
    return out;
}

PolyDivMod divmod(const RationalPoly& a, const RationalPoly& b) {
    if (b.is_zero()) throw domain_error("polynomial division by zero");
    RationalPoly rem = a;
    std::vector<Rational> q;
    const std::int64_t db = b.degree();
    if (a.degree() >= db) q.assign(static_cast<std::size_t>(a.degree() - db + 1), Rational(0));
    const Rational lb_inv = b.leading().inv();
    while (!rem.is_zero() && rem.degree() >= db) {
        const std::int64_t shift = rem.degree() - db;
        const Rational f = rem.leading() * lb_inv;
        q[static_cast<std::size_t>(shift)] = f;
        rem = rem - (f * b).shifted_up(shift);
    }
    return {RationalPoly(std::move(q)), std::move(rem)};
}

RationalPoly gcd_monic(RationalPoly a, RationalPoly b) {
    while (!b.is_zero()) {
        RationalPoly r = divmod(a, b).remainder;
        a = std::move(b);
        b = r.is_zero() ? RationalPoly() : r.monic();
    }
    return a.is_zero() ? a : a.monic();
}

std::vector<RationalPoly> squarefree_decomposition(const RationalPoly& f) {
    std::vector<RationalPoly> out;
    if (f.degree() <= 0) return out;
    const RationalPoly fm = f.monic();
    RationalPoly a0 = gcd_monic(fm, fm.derivative());
    RationalPoly b = divmod(fm, a0).quotient;
    RationalPoly c = divmod(fm.derivative(), a0).quotient;
    RationalPoly d = c - b.derivative();
    while (b.degree() > 0) {
        RationalPoly ai = gcd_monic(b, d);
        out.push_back(ai);
        b = divmod(b, ai).quotient;
        c = divmod(d, ai).quotient;
        d = c - b.derivative();
    }
    return out;
}

Rational cauchy_root_bound(const RationalPoly& f) {
    if (f.is_zero()) throw domain_error("root bound of the zero polynomial");
    const Rational lead = f.leading().abs();
    Rational m(0);
    for (std::int64_t k = 0; k < f.degree(); ++k) m = max(m, f.coeff(k).abs());
    return Rational(1) + m / lead;
}

}  // namespace ghurwitz
