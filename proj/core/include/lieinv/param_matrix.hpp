#pragma once

#include <memory>
#include <utility>
#include <variant>
#include <vector>

#include "lieinv/branch.hpp"
#include "lieinv/poly.hpp"

namespace lieinv {

/// One sparse row: (column, nonzero entry) pairs sorted by column.
using SparseRow = std::vector<std::pair<int, Poly>>;

/// Matrix whose entries are polynomials in the twist variable, stored by sparse rows.
class ParamMatrix {
public:
    ParamMatrix(int rows, int cols);
    ParamMatrix(int cols, std::vector<SparseRow> rows);

    int rows() const { return static_cast<int>(rows_.size()); }
    int cols() const { return cols_; }
    const std::vector<SparseRow>& sparse_rows() const { return rows_; }
    const SparseRow& row(int r) const { return rows_[r]; }

    Poly at(int r, int c) const;
    /// Adds `v` to entry (r, c).
    void add(int r, int c, const Poly& v);
    void append_row(SparseRow row);

    /// Dense construction, mostly for tests.
    static ParamMatrix from_dense(const std::vector<std::vector<Poly>>& entries);

private:
    int cols_;
    std::vector<SparseRow> rows_;
};

/// Row concatenation; the kernel is the intersection of kernels.
ParamMatrix stack_systems(const ParamMatrix& a, const ParamMatrix& b);

using Point = std::variant<Scalar, Branch>;

/// The matrix after the pointwise-safe reduction used by every rank query:
/// zero and duplicate rows removed, then Gauss steps on nonzero constant pivots.
/// rank M(a) = const_rank + rank residual(a) for every a.
struct ReducedSystem {
    int cols = 0;
    int const_rank = 0;
    std::vector<SparseRow> residual;
};

ReducedSystem reduce_constant_pivots(const ParamMatrix& m);

struct RankPiece {
    Branch branch;
    int rank;
};

/// Exact rank of M(a) at an exact point.
int rank_at(const ParamMatrix& m, const Scalar& a);
int rank_at(const ReducedSystem& s, const Scalar& a);
/// Rank on every root of a branch, splitting it where the roots behave differently.
/// The product of returned moduli equals the input modulus.
std::vector<RankPiece> rank_at_point(const ParamMatrix& m, const Point& p);
std::vector<RankPiece> rank_at_point(const ReducedSystem& s, const Point& p);

struct GenericRank {
    int rank;
    Poly certificate;
};

/// Fraction-free Bareiss elimination with full pivoting over K[x].
/// The certificate is the last pivot, a nonzero rank x rank minor (1 for rank 0).
GenericRank bareiss_generic_rank(const ParamMatrix& m);

struct KernelProfile {
    int generic_kernel_dim = 0;
    /// Square-free polynomial vanishing at every point where the rank drops.
    Poly certificate;
    /// Points with strictly larger kernel, ordered by degree then coefficients.
    std::vector<std::pair<Branch, int>> exceptional;
    std::shared_ptr<const ReducedSystem> system;

    /// Kernel dimension at an exact point.
    int kernel_dim_at(const Scalar& a) const;
    /// Kernel dimension on the roots of a branch. The pieces partition its roots.
    std::vector<std::pair<Branch, int>> kernel_dim_at(const Branch& b) const;
};

KernelProfile kernel_profile(const ParamMatrix& m);

/// Basis of the null space of M(a), columns in reduced echelon form (free variables set to
/// unit vectors in increasing column order).
std::vector<std::vector<Scalar>> kernel_basis_at(const ParamMatrix& m, const Point& p);

/// Rank of a list of exact vectors of equal length.
int vector_rank(const std::vector<std::vector<Scalar>>& vs);
bool subspace_equal(const std::vector<std::vector<Scalar>>& a, const std::vector<std::vector<Scalar>>& b);

}  // namespace lieinv
