#pragma once

#include <array>
#include <vector>

#include "lieinv/lie_algebra.hpp"
#include "lieinv/param_matrix.hpp"

namespace lieinv {

/// Symmetric (q+1)x(q+1) twist matrix with polynomial entries.
struct KappaSpec {
    int q = 1;
    std::vector<std::vector<Poly>> k;

    /// Throws MathError if the matrix is not (q+1)-square and symmetric.
    void check() const;
};

/// Parameters (a1, a2, a3, b1, b2, b3) of a two-dimensional twisted cocycle space.
struct SixParams {
    std::array<Poly, 6> v;

    SixParams() = default;
    SixParams(Poly a1, Poly a2, Poly a3, Poly b1, Poly b2, Poly b3) : v{a1, a2, a3, b1, b2, b3} {}
    const Poly& a(int k) const { return v[k - 1]; }
    const Poly& b(int k) const { return v[k + 2]; }
    bool is_constant() const;
    friend bool operator==(const SixParams& x, const SixParams& y) { return x.v == y.v; }
};

/// Column of cochain coordinate c^k_I for the strictly increasing tuple I.
int cochain_column(int n, const std::vector<int>& sorted_tuple, int k);
/// Strictly increasing q-tuples of {0..n-1} in lexicographic order.
std::vector<std::vector<int>> increasing_tuples(int n, int q);

/// Rows: every ordered (q+1)-tuple of basis vectors, repeats included, times n components.
/// Columns: n * C(n, q) coordinates of an alternating q-cochain.
ParamMatrix build_general(const LieAlgebra& L, const KappaSpec& kappa);

/// System for alpha*A[x,y] = beta*[Ax,y] + gamma*[x,Ay]; n^3 rows, n^2 unknowns.
/// Column s*n + r holds component r of A(e_s).
ParamMatrix build_der(const LieAlgebra& L, const Poly& alpha, const Poly& beta, const Poly& gamma);

/// The six-parameter defining equation written out directly; n^4 rows, n*C(n,2) unknowns.
/// `include_repeated` = false drops the triples with a repeated basis index.
ParamMatrix build_two_cocycle(const LieAlgebra& L, const SixParams& p, bool include_repeated = true);

/// [[b1, a2, a3], [a2, b3, a1], [a3, a1, b2]]
KappaSpec kappa_from_six(const SixParams& p);

/// The six reorderings of the parameters that come from permuting x, y, z.
std::array<SixParams, 6> six_permutations(const SixParams& p);

/// The four pairs whose intersection equals the six-parameter space.
std::array<std::pair<SixParams, SixParams>, 4> intersection_pairs(const SixParams& p);

struct NormalizedSix {
    SixParams params;
    /// 1..16, numbered row by row: (a2+a3, b2+b3) = (0,0), (0,*), (*,0), (*,*).
    int label;
};

/// Canonical representative among the sixteen normal forms; defines the same space for
/// every Lie algebra. Requires constant parameters.
NormalizedSix normalize_six(const SixParams& p);

}  // namespace lieinv
