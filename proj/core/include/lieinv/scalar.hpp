#pragma once

#include <complex>
#include <cstddef>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace lieinv {

using Rational = mpq_class;

/// Element re + im*i of Q(i).
struct GaussianRational {
    Rational re;
    Rational im;

    GaussianRational() = default;
    GaussianRational(long v) : re(v) {}
    // Canonicalized so that values built as Rational(n, d) with common factors compare equal.
    GaussianRational(Rational r) : re(std::move(r)) { re.canonicalize(); }
    GaussianRational(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {
        re.canonicalize();
        im.canonicalize();
    }

    bool is_zero() const { return sgn(re) == 0 && sgn(im) == 0; }
    bool is_real() const { return sgn(im) == 0; }
    Rational norm() const { return re * re + im * im; }
    GaussianRational conj() const { return {re, -im}; }
    GaussianRational inv() const;

    GaussianRational& operator+=(const GaussianRational& o);
    GaussianRational& operator-=(const GaussianRational& o);
    GaussianRational& operator*=(const GaussianRational& o);
    GaussianRational& operator/=(const GaussianRational& o);

    friend GaussianRational operator+(GaussianRational a, const GaussianRational& b) { return a += b; }
    friend GaussianRational operator-(GaussianRational a, const GaussianRational& b) { return a -= b; }
    friend GaussianRational operator*(GaussianRational a, const GaussianRational& b) { return a *= b; }
    friend GaussianRational operator/(GaussianRational a, const GaussianRational& b) { return a /= b; }
    GaussianRational operator-() const { return {-re, -im}; }

    friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
        return a.re == b.re && a.im == b.im;
    }
    friend bool operator!=(const GaussianRational& a, const GaussianRational& b) { return !(a == b); }

    std::complex<long double> to_complex() const;
};

/// Total order on Q(i): by real part, then imaginary part.
int compare(const GaussianRational& a, const GaussianRational& b);

/// True iff `g` is a square in Q(i); on success stores one square root in `root`.
bool gaussian_sqrt(const GaussianRational& g, GaussianRational* root);

/// Sum of the bit sizes of numerators and denominators.
std::size_t height(const GaussianRational& g);

/// Renders in the literal grammar, e.g. "-1/2+1/2*i".
std::string to_string(const GaussianRational& g);

/// A single algebraic generator over Q(i) with square-free monic minimal polynomial.
///
/// Towers are interned: declaring the same generator and polynomial twice yields the same
/// pointer, so scalars compare towers by address. Towers live until process exit.
class FieldTower {
public:
    /// `minpoly` is ascending; it is made monic. Degree must be at least 2.
    static const FieldTower* declare(const std::string& generator, std::vector<GaussianRational> minpoly);

    const std::string& generator() const { return generator_; }
    int degree() const { return static_cast<int>(minpoly_.size()) - 1; }
    /// Ascending, monic, length degree()+1.
    const std::vector<GaussianRational>& minpoly() const { return minpoly_; }
    std::string minpoly_string() const;
    /// Numeric values of the generator under each complex embedding.
    const std::vector<std::complex<long double>>& embeddings() const { return embeddings_; }

private:
    FieldTower(std::string g, std::vector<GaussianRational> m);

    std::string generator_;
    std::vector<GaussianRational> minpoly_;
    std::vector<std::complex<long double>> embeddings_;
};

/// Exact element of Q(i) or of Q(i)[s]/(minpoly) for one declared tower.
///
/// A scalar without tower is an element of Q(i). Binary operations lift a base scalar into the
/// other operand's tower; combining two different towers throws MathError unless one operand
/// has no generator content.
class Scalar {
public:
    Scalar() : c_(1) {}
    Scalar(long v) : c_(1, GaussianRational(v)) {}
    Scalar(Rational r) : c_(1, GaussianRational(std::move(r))) {}
    Scalar(GaussianRational g) : c_(1, std::move(g)) {}

    static Scalar imag_unit();
    static Scalar generator(const FieldTower* t);
    /// Coefficients with respect to 1, s, s^2, ...; reduced modulo the minpoly.
    static Scalar from_coeffs(const FieldTower* t, std::vector<GaussianRational> coeffs);

    const FieldTower* tower() const { return t_; }
    /// Coefficient of s^k (zero beyond the stored length).
    GaussianRational coeff(std::size_t k) const;
    const std::vector<GaussianRational>& coeffs() const { return c_; }

    bool is_zero() const;
    bool is_one() const;
    /// True when all generator coefficients vanish, i.e. the value lies in Q(i).
    bool in_base() const;
    /// True when the value is a rational number.
    bool is_rational() const;
    const GaussianRational& base_part() const { return c_[0]; }

    Scalar inv() const;
    Scalar lifted(const FieldTower* t) const;
    /// Drops the tower when the value lies in Q(i).
    Scalar lowered() const;

    Scalar& operator+=(const Scalar& o);
    Scalar& operator-=(const Scalar& o);
    Scalar& operator*=(const Scalar& o);
    Scalar& operator/=(const Scalar& o);
    friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
    friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
    friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
    friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
    Scalar operator-() const;

    friend bool operator==(const Scalar& a, const Scalar& b);
    friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

    /// Numeric value under embedding `which` of the tower (ignored without tower).
    std::complex<long double> embed(std::size_t which = 0) const;

    std::size_t height() const;
    std::string to_string() const;

    /// Resolves the tower two operands should be computed in.
    static const FieldTower* common_tower(const Scalar& a, const Scalar& b);

private:
    void reduce();

    const FieldTower* t_ = nullptr;
    std::vector<GaussianRational> c_;
};

/// Canonical total order: coefficient vectors compared from the constant term upward,
/// each coefficient by (re, im). Values are compared after lifting to a common tower.
int compare(const Scalar& a, const Scalar& b);

struct ScalarLess {
    bool operator()(const Scalar& a, const Scalar& b) const { return compare(a, b) < 0; }
};

Scalar pow(Scalar base, long e);

}  // namespace lieinv
