#include "lieinv/poly.hpp"

#include <algorithm>

#include "lieinv/errors.hpp"

namespace lieinv {

Poly::Poly(Scalar c) {
    if (!c.is_zero()) c_.push_back(std::move(c));
}

Poly Poly::variable() { return monomial(Scalar(1), 1); }

Poly Poly::monomial(Scalar c, std::size_t k) {
    Poly p;
    if (c.is_zero()) return p;
    p.c_.assign(k + 1, Scalar());
    p.c_[k] = std::move(c);
    return p;
}

Poly Poly::from_coeffs(std::vector<Scalar> c) {
    Poly p;
    p.c_ = std::move(c);
    p.trim();
    return p;
}

Poly Poly::linear_root(const Scalar& r) { return from_coeffs({-r, Scalar(1)}); }

void Poly::trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

const FieldTower* Poly::tower() const {
    for (const auto& c : c_)
        if (c.tower() && !c.in_base()) return c.tower();
    for (const auto& c : c_)
        if (c.tower()) return c.tower();
    return nullptr;
}

Poly& Poly::operator+=(const Poly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (std::size_t k = 0; k < o.c_.size(); ++k)
        if (!o.c_[k].is_zero()) c_[k] += o.c_[k];
    trim();
    return *this;
}

Poly& Poly::operator-=(const Poly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (std::size_t k = 0; k < o.c_.size(); ++k)
        if (!o.c_[k].is_zero()) c_[k] -= o.c_[k];
    trim();
    return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
    if (a.c_.empty() || b.c_.empty()) return {};
    if (b.c_.size() == 1) return a * b.c_[0];
    if (a.c_.size() == 1) return b * a.c_[0];
    Poly r;
    r.c_.assign(a.c_.size() + b.c_.size() - 1, Scalar());
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i].is_zero()) continue;
        for (std::size_t j = 0; j < b.c_.size(); ++j)
            if (!b.c_[j].is_zero()) r.c_[i + j] += a.c_[i] * b.c_[j];
    }
    r.trim();
    return r;
}

Poly& Poly::operator*=(const Poly& o) { return *this = *this * o; }

Poly& Poly::operator*=(const Scalar& s) {
    if (s.is_zero()) {
        c_.clear();
        return *this;
    }
    if (s.is_one()) return *this;
    for (auto& c : c_)
        if (!c.is_zero()) c *= s;
    trim();
    return *this;
}

Poly Poly::operator-() const {
    Poly p = *this;
    for (auto& c : p.c_) c = -c;
    return p;
}

bool operator==(const Poly& a, const Poly& b) {
    if (a.c_.size() != b.c_.size()) return false;
    for (std::size_t k = 0; k < a.c_.size(); ++k)
        if (a.c_[k] != b.c_[k]) return false;
    return true;
}

Poly Poly::monic() const {
    if (c_.empty() || c_.back().is_one()) return *this;
    return *this * c_.back().inv();
}

Poly Poly::derivative() const {
    Poly p;
    for (std::size_t k = 1; k < c_.size(); ++k) p.c_.push_back(c_[k] * Scalar(static_cast<long>(k)));
    p.trim();
    return p;
}

Scalar Poly::eval(const Scalar& x) const {
    Scalar r;
    for (std::size_t k = c_.size(); k-- > 0;) {
        r *= x;
        r += c_[k];
    }
    return r;
}

std::size_t Poly::height() const {
    std::size_t h = 0;
    for (const auto& c : c_) h = std::max(h, c.height());
    return h;
}

std::string Poly::to_string(const std::string& var) const {
    if (c_.empty()) return "0";
    std::string out;
    for (std::size_t k = c_.size(); k-- > 0;) {
        const Scalar& c = c_[k];
        if (c.is_zero()) continue;
        std::string mono = k == 0 ? "" : (k == 1 ? var : var + "^" + std::to_string(k));
        if (mono.empty()) {
            std::string s = c.to_string();
            if (!out.empty() && s[0] != '-') out += '+';
            out += s;
        } else if (c.is_rational()) {
            Rational v = c.base_part().re;
            if (sgn(v) < 0)
                out += '-';
            else if (!out.empty())
                out += '+';
            Rational a = abs(v);
            if (a != 1) out += a.get_str() + "*";
            out += mono;
        } else {
            if (!out.empty()) out += '+';
            out += "(" + c.to_string() + ")*" + mono;
        }
    }
    return out;
}

std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b) {
    if (b.is_zero()) throw MathError("polynomial division by zero");
    if (a.degree() < b.degree()) return {Poly(), a};
    std::vector<Scalar> r = a.coeffs();
    std::size_t db = static_cast<std::size_t>(b.degree());
    std::vector<Scalar> q(r.size() - db);
    Scalar lead_inv = b.lead().inv();
    const auto& bc = b.coeffs();
    for (std::size_t k = r.size(); k-- > db;) {
        if (r[k].is_zero()) continue;
        Scalar f = r[k] * lead_inv;
        std::size_t shift = k - db;
        for (std::size_t j = 0; j < db; ++j)
            if (!bc[j].is_zero()) r[shift + j] -= f * bc[j];
        r[k] = Scalar();
        q[shift] = std::move(f);
    }
    r.resize(db);
    return {Poly::from_coeffs(std::move(q)), Poly::from_coeffs(std::move(r))};
}

Poly operator%(const Poly& a, const Poly& b) {
    if (a.degree() < b.degree()) return a;
    return divmod(a, b).second;
}

Poly exact_div(const Poly& a, const Poly& b) {
    auto [q, r] = divmod(a, b);
    if (!r.is_zero()) throw MathError("inexact polynomial division");
    return q;
}

Poly gcd(const Poly& a, const Poly& b) {
    if (a.is_zero() && b.is_zero()) throw MathError("gcd of two zero polynomials");
    Poly x = a, y = b;
    while (!y.is_zero()) {
        Poly r = x % y;
        x = std::move(y);
        y = r.monic();
    }
    return x.monic();
}

Poly xgcd(const Poly& a, const Poly& b, Poly* s, Poly* t) {
    if (a.is_zero() && b.is_zero()) throw MathError("gcd of two zero polynomials");
    Poly r0 = a, r1 = b, s0(1), s1, t0, t1(1);
    while (!r1.is_zero()) {
        auto [q, r] = divmod(r0, r1);
        Poly s2 = s0 - q * s1;
        Poly t2 = t0 - q * t1;
        r0 = std::move(r1);
        r1 = std::move(r);
        s0 = std::move(s1);
        s1 = std::move(s2);
        t0 = std::move(t1);
        t1 = std::move(t2);
    }
    Scalar f = r0.lead().inv();
    if (s) *s = s0 * f;
    if (t) *t = t0 * f;
    return r0 * f;
}

Poly squarefree_part(const Poly& p) {
    if (p.is_zero()) throw MathError("square-free part of the zero polynomial");
    if (p.is_constant()) return Poly(1);
    Poly g = gcd(p, p.derivative());
    return exact_div(p, g).monic();
}

Poly pow(Poly p, unsigned e) {
    Poly r(1);
    while (e > 0) {
        if (e & 1) r *= p;
        e >>= 1;
        if (e) p *= p;
    }
    return r;
}

int compare(const Poly& a, const Poly& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree() ? -1 : 1;
    for (std::size_t k = 0; k < a.coeffs().size(); ++k) {
        int c = compare(a.coeffs()[k], b.coeffs()[k]);
        if (c != 0) return c;
    }
    return 0;
}

}  // namespace lieinv
