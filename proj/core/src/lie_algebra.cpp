#include "lieinv/lie_algebra.hpp"

#include "lieinv/errors.hpp"

namespace lieinv {

LieAlgebra::LieAlgebra(int dim, std::string name, const FieldTower* tower)
    : n_(dim), name_(std::move(name)), tower_(tower) {
    if (dim < 0) throw MathError("negative dimension");
    c_.assign(static_cast<std::size_t>(dim) * dim * dim, Scalar());
}

void LieAlgebra::adopt_tower(const Scalar& v) {
    if (!v.tower() || v.in_base()) return;
    if (tower_ && tower_ != v.tower()) throw MathError("structure constants from different field towers");
    tower_ = v.tower();
}

void LieAlgebra::set_bracket(int i, int j, int k, const Scalar& v) {
    adopt_tower(v);
    Scalar w = v.lowered();
    c_[index(i, j, k)] = w;
    c_[index(j, i, k)] = -w;
}

void LieAlgebra::set_raw(int i, int j, int k, const Scalar& v) {
    adopt_tower(v);
    c_[index(i, j, k)] = v.lowered();
}

bool LieAlgebra::is_abelian() const {
    for (const auto& v : c_)
        if (!v.is_zero()) return false;
    return true;
}

bool operator==(const LieAlgebra& a, const LieAlgebra& b) {
    if (a.n_ != b.n_) return false;
    for (std::size_t k = 0; k < a.c_.size(); ++k)
        if (a.c_[k] != b.c_[k]) return false;
    return true;
}

std::string Violation::describe() const {
    std::string idx;
    for (std::size_t k = 0; k < index.size(); ++k) idx += (k ? "," : "") + std::to_string(index[k]);
    if (kind == Kind::Antisymmetry)
        return "antisymmetry violation at (" + idx + "): c_ij^k + c_ji^k = " + residual.to_string();
    return "Jacobi violation at (" + idx + "): residual " + residual.to_string();
}

std::optional<Violation> validate(const LieAlgebra& L) {
    int n = L.dim();
    for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j)
            for (int k = 0; k < n; ++k) {
                Scalar s = L.c(i, j, k) + L.c(j, i, k);
                if (!s.is_zero()) return Violation{Violation::Kind::Antisymmetry, {i + 1, j + 1, k + 1}, s};
            }
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            for (int k = j + 1; k < n; ++k)
                for (int s = 0; s < n; ++s) {
                    Scalar sum;
                    for (int r = 0; r < n; ++r) {
                        sum += L.c(i, j, r) * L.c(r, k, s);
                        sum += L.c(j, k, r) * L.c(r, i, s);
                        sum += L.c(k, i, r) * L.c(r, j, s);
                    }
                    if (!sum.is_zero())
                        return Violation{Violation::Kind::Jacobi, {i + 1, j + 1, k + 1, s + 1}, sum};
                }
    return std::nullopt;
}

void require_valid(const LieAlgebra& L) {
    if (auto v = validate(L)) throw InvalidAlgebra(v->describe());
}

LieAlgebra direct_sum(const LieAlgebra& a, const LieAlgebra& b) {
    const FieldTower* t = a.tower() ? a.tower() : b.tower();
    if (a.tower() && b.tower() && a.tower() != b.tower())
        throw MathError("direct sum of algebras over different field towers");
    std::string name = a.name().empty() || b.name().empty() ? a.name() + b.name() : a.name() + "+" + b.name();
    LieAlgebra s(a.dim() + b.dim(), name, t);
    int m = a.dim();
    for (int i = 0; i < a.dim(); ++i)
        for (int j = 0; j < a.dim(); ++j)
            for (int k = 0; k < a.dim(); ++k)
                if (!a.c(i, j, k).is_zero()) s.set_raw(i, j, k, a.c(i, j, k));
    for (int i = 0; i < b.dim(); ++i)
        for (int j = 0; j < b.dim(); ++j)
            for (int k = 0; k < b.dim(); ++k)
                if (!b.c(i, j, k).is_zero()) s.set_raw(m + i, m + j, m + k, b.c(i, j, k));
    return s;
}

std::vector<std::vector<Scalar>> invert_matrix(const std::vector<std::vector<Scalar>>& P) {
    std::size_t n = P.size();
    std::vector<std::vector<Scalar>> a(n, std::vector<Scalar>(2 * n));
    for (std::size_t r = 0; r < n; ++r) {
        if (P[r].size() != n) throw MathError("matrix is not square");
        for (std::size_t c = 0; c < n; ++c) a[r][c] = P[r][c];
        a[r][n + r] = Scalar(1);
    }
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = c;
        while (p < n && a[p][c].is_zero()) ++p;
        if (p == n) throw MathError("singular basis change matrix");
        std::swap(a[p], a[c]);
        Scalar inv = a[c][c].inv();
        for (auto& v : a[c]) v *= inv;
        for (std::size_t r = 0; r < n; ++r) {
            if (r == c || a[r][c].is_zero()) continue;
            Scalar f = a[r][c];
            for (std::size_t k = c; k < 2 * n; ++k)
                if (!a[c][k].is_zero()) a[r][k] -= f * a[c][k];
        }
    }
    std::vector<std::vector<Scalar>> out(n, std::vector<Scalar>(n));
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c) out[r][c] = a[r][n + c];
    return out;
}

LieAlgebra change_basis(const LieAlgebra& L, const std::vector<std::vector<Scalar>>& P) {
    int n = L.dim();
    if (static_cast<int>(P.size()) != n) throw MathError("basis change has wrong size");
    auto Q = invert_matrix(P);
    LieAlgebra out(n, L.name(), L.tower());
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            // w = [e'_i, e'_j] in the old basis.
            std::vector<Scalar> w(static_cast<std::size_t>(n));
            for (int r = 0; r < n; ++r) {
                if (P[r][i].is_zero()) continue;
                for (int t = 0; t < n; ++t) {
                    if (P[t][j].is_zero()) continue;
                    Scalar f = P[r][i] * P[t][j];
                    for (int k = 0; k < n; ++k)
                        if (!L.c(r, t, k).is_zero()) w[k] += f * L.c(r, t, k);
                }
            }
            for (int l = 0; l < n; ++l) {
                Scalar v;
                for (int k = 0; k < n; ++k)
                    if (!w[k].is_zero()) v += Q[l][k] * w[k];
                if (!v.is_zero()) out.set_bracket(i, j, l, v);
            }
        }
    return out;
}

}  // namespace lieinv
