#include "lieinv/invariant.hpp"

#include "lieinv/errors.hpp"

namespace lieinv {

ParamMatrix family_system(const LieAlgebra& L, Family f) {
    Poly x = Poly::variable();
    switch (f) {
        case Family::Psi: return build_der(L, x, Poly(1), Poly(1));
        case Family::Phi: return build_two_cocycle(L, SixParams(1, 1, 1, x, x, x));
        case Family::Phi0: return build_two_cocycle(L, SixParams(0, 1, 1, x, 1, 1));
    }
    throw MathError("unknown family");
}

int family_bound(int dim, Family f) { return f == Family::Psi ? dim * dim : dim * dim * (dim - 1) / 2; }

StepFunction compute_invariant(const LieAlgebra& L, Family f) {
    return StepFunction::from_profile(f, kernel_profile(family_system(L, f)), L.tower());
}

int cocycle_dim(const LieAlgebra& L, const KappaSpec& kappa) {
    ParamMatrix m = build_general(L, kappa);
    return m.cols() - rank_at(reduce_constant_pivots(m), Scalar());
}

int der_dim(const LieAlgebra& L, const Scalar& alpha, const Scalar& beta, const Scalar& gamma) {
    ParamMatrix m = build_der(L, Poly(alpha), Poly(beta), Poly(gamma));
    return m.cols() - rank_at(reduce_constant_pivots(m), Scalar());
}

}  // namespace lieinv
