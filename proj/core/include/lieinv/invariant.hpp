#pragma once

#include "lieinv/cocycle.hpp"
#include "lieinv/step_function.hpp"

namespace lieinv {

/// The defining system of a family: psi uses (x,1,1)-derivations, phi the six parameters
/// (1,1,1,x,x,x), phi0 the six parameters (0,1,1,x,1,1).
ParamMatrix family_system(const LieAlgebra& L, Family f);

/// Dimension of the cochain space the family lives in (n^2, resp. n^2(n-1)/2).
int family_bound(int dim, Family f);

StepFunction compute_invariant(const LieAlgebra& L, Family f);
inline StepFunction psi(const LieAlgebra& L) { return compute_invariant(L, Family::Psi); }
inline StepFunction phi(const LieAlgebra& L) { return compute_invariant(L, Family::Phi); }
inline StepFunction phi0(const LieAlgebra& L) { return compute_invariant(L, Family::Phi0); }

/// Kernel dimension of the general twisted system at a fixed twist.
int cocycle_dim(const LieAlgebra& L, const KappaSpec& kappa);
/// Dimension of the space of (alpha, beta, gamma)-derivations.
int der_dim(const LieAlgebra& L, const Scalar& alpha, const Scalar& beta, const Scalar& gamma);

}  // namespace lieinv
