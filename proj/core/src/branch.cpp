#include "lieinv/branch.hpp"

#include "lieinv/errors.hpp"

namespace lieinv {

Branch::Branch(const Poly& modulus) {
    if (modulus.degree() < 1) throw MathError("branch modulus must have degree at least 1");
    m_ = modulus.monic();
    if (gcd(m_, m_.derivative()).degree() > 0)
        throw MathError("branch modulus " + m_.to_string() + " is not square-free");
}

Branch Branch::trusted(Poly monic_modulus) {
    Branch b;
    b.m_ = std::move(monic_modulus);
    return b;
}

Scalar Branch::root() const {
    if (!is_point()) throw MathError("branch of degree " + std::to_string(degree()) + " is not a point");
    return -m_.coeff(0);
}

InvertResult branch_invert(const Poly& r, const Branch& br) {
    Poly red = br.reduce(r);
    if (red.is_zero()) return {InvertResult::Kind::Zero, {}, {}, {}};
    Poly s;
    Poly g = xgcd(red, br.modulus(), &s, nullptr);
    if (g.degree() == 0) return {InvertResult::Kind::Inverse, br.reduce(s), {}, {}};
    Poly co = exact_div(br.modulus(), g).monic();
    return {InvertResult::Kind::Split, {}, Branch::trusted(g), Branch::trusted(co)};
}

int compare(const Branch& a, const Branch& b) { return compare(a.modulus(), b.modulus()); }

}  // namespace lieinv
