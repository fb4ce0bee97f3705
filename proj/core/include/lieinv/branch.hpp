#pragma once

#include <optional>

#include "lieinv/poly.hpp"

namespace lieinv {

/// The finite set of roots of a monic square-free polynomial, treated through the residue
/// ring K[x]/(modulus) as if it were a field (dynamic evaluation).
class Branch {
public:
    /// Makes `modulus` monic; throws MathError if it is constant or not square-free.
    explicit Branch(const Poly& modulus);
    /// Skips the square-free check; for moduli produced by gcd splitting of a valid branch.
    static Branch trusted(Poly monic_modulus);
    static Branch point(const Scalar& r) { return trusted(Poly::linear_root(r)); }

    const Poly& modulus() const { return m_; }
    int degree() const { return m_.degree(); }
    bool is_point() const { return m_.degree() == 1; }
    /// The root of a degree-1 branch.
    Scalar root() const;

    Poly reduce(const Poly& p) const { return p % m_; }
    Poly mul(const Poly& a, const Poly& b) const { return (a * b) % m_; }

    friend bool operator==(const Branch& a, const Branch& b) { return a.m_ == b.m_; }

private:
    Branch() = default;
    Poly m_;
};

struct InvertResult {
    enum class Kind { Inverse, Split, Zero };
    Kind kind;
    /// Set for Inverse: the residue u with u*r == 1 modulo the modulus.
    Poly inverse;
    /// Set for Split: gcd(r, modulus) (roots where r vanishes) and its cofactor.
    std::optional<Branch> zero_part;
    std::optional<Branch> unit_part;
};

/// Inverts residue `r` on `br`, splitting the branch when r vanishes on only some roots.
InvertResult branch_invert(const Poly& r, const Branch& br);

/// Order for deterministic output: degree, then coefficients.
int compare(const Branch& a, const Branch& b);

}  // namespace lieinv
