#pragma once

#include <string>
#include <utility>
#include <vector>

#include "lieinv/scalar.hpp"

namespace lieinv {

/// Dense univariate polynomial with Scalar coefficients, ascending order.
/// The zero polynomial has no coefficients; otherwise the leading coefficient is nonzero.
class Poly {
public:
    Poly() = default;
    Poly(long c) : Poly(Scalar(c)) {}
    Poly(Scalar c);

    static Poly variable();
    static Poly monomial(Scalar c, std::size_t k);
    static Poly from_coeffs(std::vector<Scalar> c);
    /// x - r
    static Poly linear_root(const Scalar& r);

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    bool is_constant() const { return c_.size() <= 1; }
    const std::vector<Scalar>& coeffs() const { return c_; }
    Scalar coeff(std::size_t k) const { return k < c_.size() ? c_[k] : Scalar(); }
    const Scalar& lead() const { return c_.back(); }
    /// Tower shared by the coefficients, or nullptr.
    const FieldTower* tower() const;

    Poly& operator+=(const Poly& o);
    Poly& operator-=(const Poly& o);
    Poly& operator*=(const Poly& o);
    Poly& operator*=(const Scalar& s);
    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator*(const Poly& a, const Poly& b);
    friend Poly operator*(Poly a, const Scalar& s) { return a *= s; }
    friend Poly operator*(const Scalar& s, Poly a) { return a *= s; }
    Poly operator-() const;

    friend bool operator==(const Poly& a, const Poly& b);
    friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

    Poly monic() const;
    Poly derivative() const;
    Scalar eval(const Scalar& x) const;
    /// Largest coefficient height.
    std::size_t height() const;
    /// Descending rendering in the expression grammar, e.g. "x^2-x+2".
    std::string to_string(const std::string& var = "x") const;

private:
    void trim();
    std::vector<Scalar> c_;
};

/// Quotient and remainder; throws MathError for b == 0.
std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b);
Poly operator%(const Poly& a, const Poly& b);
/// Exact quotient; throws MathError if the remainder is nonzero.
Poly exact_div(const Poly& a, const Poly& b);
/// Monic gcd; gcd(p, 0) = monic(p). Throws MathError when both are zero.
Poly gcd(const Poly& a, const Poly& b);
/// Monic g = s*a + t*b.
Poly xgcd(const Poly& a, const Poly& b, Poly* s, Poly* t);
/// Monic product of the distinct irreducible factors: p / gcd(p, p').
Poly squarefree_part(const Poly& p);
Poly pow(Poly p, unsigned e);

/// Order used for deterministic output: degree, then coefficients from the constant term up.
int compare(const Poly& a, const Poly& b);

}  // namespace lieinv
