#include "lieinv/scalar.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>
#include <sstream>
#include <utility>

#include "lieinv/errors.hpp"
#include "lieinv/roots.hpp"

namespace lieinv {

GaussianRational& GaussianRational::operator+=(const GaussianRational& o) {
    re += o.re;
    if (sgn(o.im) != 0) im += o.im;
    return *this;
}

GaussianRational& GaussianRational::operator-=(const GaussianRational& o) {
    re -= o.re;
    if (sgn(o.im) != 0) im -= o.im;
    return *this;
}

GaussianRational& GaussianRational::operator*=(const GaussianRational& o) {
    if (sgn(im) == 0 && sgn(o.im) == 0) {
        re *= o.re;
        return *this;
    }
    Rational r = re * o.re - im * o.im;
    Rational i = re * o.im + im * o.re;
    re = std::move(r);
    im = std::move(i);
    return *this;
}

GaussianRational GaussianRational::inv() const {
    if (is_zero()) throw MathError("division by zero");
    if (sgn(im) == 0) return GaussianRational(Rational(1) / re);
    Rational n = norm();
    return {re / n, -im / n};
}

GaussianRational& GaussianRational::operator/=(const GaussianRational& o) {
    if (o.is_zero()) throw MathError("division by zero");
    if (sgn(o.im) == 0) {
        re /= o.re;
        if (sgn(im) != 0) im /= o.re;
        return *this;
    }
    return *this *= o.inv();
}

std::complex<long double> GaussianRational::to_complex() const {
    return {static_cast<long double>(re.get_d()), static_cast<long double>(im.get_d())};
}

int compare(const GaussianRational& a, const GaussianRational& b) {
    int c = cmp(a.re, b.re);
    if (c != 0) return c < 0 ? -1 : 1;
    c = cmp(a.im, b.im);
    return c < 0 ? -1 : (c > 0 ? 1 : 0);
}

namespace {

bool rational_sqrt(const Rational& q, Rational* root) {
    if (sgn(q) < 0) return false;
    if (!mpz_perfect_square_p(q.get_num_mpz_t()) || !mpz_perfect_square_p(q.get_den_mpz_t()))
        return false;
    mpz_class n, d;
    mpz_sqrt(n.get_mpz_t(), q.get_num_mpz_t());
    mpz_sqrt(d.get_mpz_t(), q.get_den_mpz_t());
    *root = Rational(n, d);
    root->canonicalize();
    return true;
}

std::size_t bits(const Rational& q) {
    return mpz_sizeinbase(q.get_num_mpz_t(), 2) + mpz_sizeinbase(q.get_den_mpz_t(), 2);
}

}  // namespace

bool gaussian_sqrt(const GaussianRational& g, GaussianRational* root) {
    const Rational& u = g.re;
    const Rational& v = g.im;
    if (sgn(v) == 0) {
        Rational r;
        if (rational_sqrt(u, &r)) {
            *root = GaussianRational(r);
            return true;
        }
        if (rational_sqrt(Rational(-u), &r)) {
            *root = GaussianRational(Rational(0), r);
            return true;
        }
        return false;
    }
    Rational n;
    if (!rational_sqrt(Rational(u * u + v * v), &n)) return false;
    Rational x;
    if (!rational_sqrt(Rational((u + n) / 2), &x) || sgn(x) == 0) return false;
    *root = GaussianRational(x, Rational(v / (2 * x)));
    return true;
}

std::size_t height(const GaussianRational& g) { return bits(g.re) + bits(g.im); }

namespace {

void append_term(std::string& out, const Rational& c, const std::string& monomial) {
    if (sgn(c) == 0) return;
    Rational a = abs(c);
    if (sgn(c) < 0)
        out += '-';
    else if (!out.empty())
        out += '+';
    if (monomial.empty()) {
        out += a.get_str();
    } else if (a == 1) {
        out += monomial;
    } else {
        out += a.get_str();
        out += '*';
        out += monomial;
    }
}

}  // namespace

std::string to_string(const GaussianRational& g) {
    std::string out;
    append_term(out, g.re, "");
    append_term(out, g.im, "i");
    return out.empty() ? "0" : out;
}

// Dense helpers on ascending coefficient vectors over Q(i), used for tower arithmetic.
namespace {

using GVec = std::vector<GaussianRational>;

void trim(GVec& v) {
    while (!v.empty() && v.back().is_zero()) v.pop_back();
}

GVec gmul(const GVec& a, const GVec& b) {
    if (a.empty() || b.empty()) return {};
    GVec r(a.size() + b.size() - 1);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i].is_zero()) continue;
        for (std::size_t j = 0; j < b.size(); ++j)
            if (!b[j].is_zero()) r[i + j] += a[i] * b[j];
    }
    trim(r);
    return r;
}

// In-place remainder modulo b; returns the quotient.
GVec gdivmod(GVec& a, const GVec& b) {
    trim(a);
    if (b.empty()) throw MathError("polynomial division by zero");
    if (a.size() < b.size()) return {};
    GVec q(a.size() - b.size() + 1);
    GaussianRational lead_inv = b.back().inv();
    for (std::size_t k = a.size(); k-- >= b.size();) {
        if (a[k].is_zero()) continue;
        GaussianRational f = a[k] * lead_inv;
        std::size_t shift = k - (b.size() - 1);
        for (std::size_t j = 0; j < b.size(); ++j) a[shift + j] -= f * b[j];
        q[shift] = f;
    }
    trim(a);
    trim(q);
    return q;
}

GVec gderiv(const GVec& a) {
    GVec r;
    for (std::size_t k = 1; k < a.size(); ++k) r.push_back(a[k] * GaussianRational(static_cast<long>(k)));
    trim(r);
    return r;
}

std::size_t ggcd_degree(GVec a, GVec b) {
    trim(a);
    trim(b);
    while (!b.empty()) {
        gdivmod(a, b);
        std::swap(a, b);
    }
    return a.empty() ? 0 : a.size() - 1;
}

struct TowerRegistry {
    std::mutex mu;
    std::map<std::string, std::unique_ptr<FieldTower>> towers;
};

TowerRegistry& registry() {
    static TowerRegistry r;
    return r;
}

}  // namespace

FieldTower::FieldTower(std::string g, std::vector<GaussianRational> m)
    : generator_(std::move(g)), minpoly_(std::move(m)) {
    std::vector<std::complex<long double>> cm;
    for (const auto& c : minpoly_) cm.push_back(c.to_complex());
    embeddings_ = numeric_roots(cm);
}

const FieldTower* FieldTower::declare(const std::string& generator, std::vector<GaussianRational> minpoly) {
    if (generator.empty() || generator == "i" || generator == "x")
        throw MathError("invalid tower generator name '" + generator + "'");
    trim(minpoly);
    if (minpoly.size() < 3) throw MathError("tower minimal polynomial must have degree at least 2");
    GaussianRational lead_inv = minpoly.back().inv();
    for (auto& c : minpoly) c *= lead_inv;
    if (ggcd_degree(minpoly, gderiv(minpoly)) != 0)
        throw MathError("tower minimal polynomial is not square-free");
    if (minpoly.size() == 3) {
        GaussianRational disc = minpoly[1] * minpoly[1] - GaussianRational(4) * minpoly[0];
        GaussianRational root;
        if (gaussian_sqrt(disc, &root))
            throw MathError("tower minimal polynomial splits over Q(i)");
    }
    std::ostringstream key;
    key << generator;
    for (const auto& c : minpoly) key << '|' << to_string(c);
    auto& reg = registry();
    std::lock_guard<std::mutex> lock(reg.mu);
    auto it = reg.towers.find(key.str());
    if (it != reg.towers.end()) return it->second.get();
    auto* t = new FieldTower(generator, std::move(minpoly));
    reg.towers.emplace(key.str(), std::unique_ptr<FieldTower>(t));
    return t;
}

std::string FieldTower::minpoly_string() const {
    std::string out;
    for (std::size_t k = minpoly_.size(); k-- > 0;) {
        const auto& c = minpoly_[k];
        if (c.is_zero()) continue;
        std::string mono;
        if (k == 1)
            mono = generator_;
        else if (k > 1)
            mono = generator_ + "^" + std::to_string(k);
        if (c.is_real() || sgn(c.re) == 0) {
            Rational v = c.is_real() ? c.re : c.im;
            std::string m = mono;
            if (!c.is_real()) m = m.empty() ? "i" : m + "*i";
            append_term(out, v, m);
        } else {
            if (!out.empty()) out += '+';
            out += "(" + to_string(c) + ")";
            if (!mono.empty()) out += "*" + mono;
        }
    }
    return out;
}

Scalar Scalar::imag_unit() { return Scalar(GaussianRational(Rational(0), Rational(1))); }

Scalar Scalar::generator(const FieldTower* t) {
    if (!t) throw MathError("generator of missing tower");
    std::vector<GaussianRational> c(t->degree());
    c[1] = GaussianRational(1);
    return from_coeffs(t, std::move(c));
}

Scalar Scalar::from_coeffs(const FieldTower* t, std::vector<GaussianRational> coeffs) {
    Scalar s;
    s.t_ = t;
    s.c_ = std::move(coeffs);
    if (s.c_.empty()) s.c_.resize(1);
    if (!t && s.c_.size() > 1) throw MathError("generator coefficients without tower");
    s.reduce();
    return s;
}

void Scalar::reduce() {
    if (!t_) {
        c_.resize(1);
        return;
    }
    std::size_t d = static_cast<std::size_t>(t_->degree());
    if (c_.size() > d) gdivmod(c_, t_->minpoly());
    c_.resize(d);
}

GaussianRational Scalar::coeff(std::size_t k) const { return k < c_.size() ? c_[k] : GaussianRational(); }

bool Scalar::is_zero() const {
    for (const auto& c : c_)
        if (!c.is_zero()) return false;
    return true;
}

bool Scalar::in_base() const {
    for (std::size_t k = 1; k < c_.size(); ++k)
        if (!c_[k].is_zero()) return false;
    return true;
}

bool Scalar::is_one() const { return in_base() && c_[0] == GaussianRational(1); }

bool Scalar::is_rational() const { return in_base() && c_[0].is_real(); }

const FieldTower* Scalar::common_tower(const Scalar& a, const Scalar& b) {
    if (a.t_ == b.t_) return a.t_;
    if (!a.t_) return b.t_;
    if (!b.t_) return a.t_;
    if (a.in_base()) return b.t_;
    if (b.in_base()) return a.t_;
    throw MathError("scalars from different field towers (" + a.t_->generator() + ", " +
                    b.t_->generator() + ")");
}

Scalar Scalar::lifted(const FieldTower* t) const {
    if (t_ == t) return *this;
    if (t_ && !in_base()) throw MathError("cannot move a scalar between field towers");
    Scalar s;
    s.t_ = t;
    s.c_.assign(t ? t->degree() : 1, GaussianRational());
    s.c_[0] = c_[0];
    return s;
}

Scalar Scalar::lowered() const {
    if (!t_ || !in_base()) return *this;
    return Scalar(c_[0]);
}

Scalar& Scalar::operator+=(const Scalar& o) {
    const FieldTower* t = common_tower(*this, o);
    if (t != t_) *this = lifted(t);
    if (o.t_ == t) {
        for (std::size_t k = 0; k < c_.size(); ++k) c_[k] += o.c_[k];
    } else {
        c_[0] += o.c_[0];
    }
    return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
    const FieldTower* t = common_tower(*this, o);
    if (t != t_) *this = lifted(t);
    if (o.t_ == t) {
        for (std::size_t k = 0; k < c_.size(); ++k) c_[k] -= o.c_[k];
    } else {
        c_[0] -= o.c_[0];
    }
    return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
    const FieldTower* t = common_tower(*this, o);
    if (!t) {
        c_[0] *= o.c_[0];
        return *this;
    }
    if (o.t_ != t || o.in_base()) {
        GaussianRational f = o.c_[0];
        if (t != t_) *this = lifted(t);
        for (auto& c : c_) c *= f;
        return *this;
    }
    if (t_ != t || in_base()) {
        GaussianRational f = c_[0];
        *this = o;
        for (auto& c : c_) c *= f;
        return *this;
    }
    c_ = gmul(c_, o.c_);
    reduce();
    return *this;
}

Scalar Scalar::inv() const {
    if (is_zero()) throw MathError("division by zero");
    if (!t_ || in_base()) {
        Scalar s = *this;
        s.c_[0] = c_[0].inv();
        return s;
    }
    // Extended Euclid: find u with u*c == 1 mod minpoly.
    GVec r0 = t_->minpoly(), r1 = c_;
    trim(r1);
    GVec s0, s1{GaussianRational(1)};
    while (r1.size() > 1) {
        GVec r = r0;
        GVec q = gdivmod(r, r1);
        GVec qs = gmul(q, s1);
        GVec s = s0;
        if (s.size() < qs.size()) s.resize(qs.size());
        for (std::size_t k = 0; k < qs.size(); ++k) s[k] -= qs[k];
        trim(s);
        r0 = std::move(r1);
        r1 = std::move(r);
        s0 = std::move(s1);
        s1 = std::move(s);
    }
    if (r1.empty()) throw MathError("zero divisor in field tower " + t_->generator());
    GaussianRational f = r1[0].inv();
    for (auto& c : s1) c *= f;
    return from_coeffs(t_, std::move(s1));
}

Scalar& Scalar::operator/=(const Scalar& o) {
    if (o.is_zero()) throw MathError("division by zero");
    if (o.in_base()) {
        const FieldTower* t = common_tower(*this, o);
        if (t != t_) *this = lifted(t);
        GaussianRational f = o.c_[0].inv();
        for (auto& c : c_) c *= f;
        return *this;
    }
    return *this *= o.inv();
}

Scalar Scalar::operator-() const {
    Scalar s = *this;
    for (auto& c : s.c_) c = -c;
    return s;
}

bool operator==(const Scalar& a, const Scalar& b) {
    if (a.t_ == b.t_) return a.c_ == b.c_;
    std::size_t n = std::max(a.c_.size(), b.c_.size());
    for (std::size_t k = 0; k < n; ++k)
        if (a.coeff(k) != b.coeff(k)) return false;
    return true;
}

int compare(const Scalar& a, const Scalar& b) {
    std::size_t n = std::max(a.coeffs().size(), b.coeffs().size());
    for (std::size_t k = 0; k < n; ++k) {
        int c = compare(a.coeff(k), b.coeff(k));
        if (c != 0) return c;
    }
    return 0;
}

std::complex<long double> Scalar::embed(std::size_t which) const {
    std::complex<long double> v = c_[0].to_complex();
    if (!t_ || in_base()) return v;
    std::complex<long double> s = t_->embeddings().at(which), p = s;
    for (std::size_t k = 1; k < c_.size(); ++k) {
        v += c_[k].to_complex() * p;
        p *= s;
    }
    return v;
}

std::size_t Scalar::height() const {
    std::size_t h = 0;
    for (const auto& c : c_) h += lieinv::height(c);
    return h;
}

std::string Scalar::to_string() const {
    if (!t_) return lieinv::to_string(c_[0]);
    std::string out;
    const std::string& g = t_->generator();
    for (std::size_t k = 0; k < c_.size(); ++k) {
        std::string mono = k == 0 ? "" : (k == 1 ? g : g + "^" + std::to_string(k));
        append_term(out, c_[k].re, mono);
        append_term(out, c_[k].im, mono.empty() ? "i" : mono + "*i");
    }
    return out.empty() ? "0" : out;
}

Scalar pow(Scalar base, long e) {
    if (e < 0) {
        base = base.inv();
        e = -e;
    }
    Scalar r(1);
    while (e > 0) {
        if (e & 1) r *= base;
        base *= base;
        e >>= 1;
    }
    return r;
}

}  // namespace lieinv
