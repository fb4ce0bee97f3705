#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "lieinv/scalar.hpp"

namespace lieinv {

/// Structure constants [e_i, e_j] = sum_k c(i,j,k) e_k, stored as the full table.
/// Indices are 0-based in the API and 1-based in files and reports.
class LieAlgebra {
public:
    explicit LieAlgebra(int dim = 0, std::string name = {}, const FieldTower* tower = nullptr);

    int dim() const { return n_; }
    const std::string& name() const { return name_; }
    void set_name(std::string n) { name_ = std::move(n); }
    /// Extension the constants live in, or nullptr for Q(i).
    const FieldTower* tower() const { return tower_; }

    const Scalar& c(int i, int j, int k) const { return c_[index(i, j, k)]; }
    /// Sets c(i,j,k) = v and c(j,i,k) = -v.
    void set_bracket(int i, int j, int k, const Scalar& v);
    /// Sets one entry without touching its antisymmetric partner.
    void set_raw(int i, int j, int k, const Scalar& v);

    bool is_abelian() const;
    friend bool operator==(const LieAlgebra& a, const LieAlgebra& b);

private:
    std::size_t index(int i, int j, int k) const {
        return (static_cast<std::size_t>(i) * n_ + j) * n_ + k;
    }
    void adopt_tower(const Scalar& v);

    int n_;
    std::string name_;
    const FieldTower* tower_;
    std::vector<Scalar> c_;
};

struct Violation {
    enum class Kind { Antisymmetry, Jacobi };
    Kind kind;
    /// 1-based: (i, j, k) for antisymmetry; (i, j, k, s) for Jacobi.
    std::vector<int> index;
    Scalar residual;

    std::string describe() const;
};

/// First antisymmetry violation (i <= j, then k), else first Jacobi violation (i<j<k, then s).
std::optional<Violation> validate(const LieAlgebra& L);
/// Throws InvalidAlgebra describing the first violation.
void require_valid(const LieAlgebra& L);

LieAlgebra direct_sum(const LieAlgebra& a, const LieAlgebra& b);

/// New basis e'_i = sum_r P[r][i] e_r. Throws MathError if P is singular.
LieAlgebra change_basis(const LieAlgebra& L, const std::vector<std::vector<Scalar>>& P);

/// Inverse of a square scalar matrix; throws MathError if singular.
std::vector<std::vector<Scalar>> invert_matrix(const std::vector<std::vector<Scalar>>& P);

/// Algebra file format: {"format":1,"name":...,"dim":n,"extension":{...}?,"brackets":{"i,j":{"k":lit}}}.
LieAlgebra parse_algebra(const std::string& json_text);
std::string serialize_algebra(const LieAlgebra& L);

}  // namespace lieinv
