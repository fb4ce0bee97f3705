#include "lieinv/param_matrix.hpp"

#include <algorithm>
#include <map>

#include "lieinv/errors.hpp"
#include "lieinv/parallel.hpp"
#include "lieinv/roots.hpp"

namespace lieinv {

ParamMatrix::ParamMatrix(int rows, int cols) : cols_(cols), rows_(static_cast<std::size_t>(rows)) {
    if (rows < 0 || cols < 0) throw MathError("negative matrix dimension");
}

ParamMatrix::ParamMatrix(int cols, std::vector<SparseRow> rows) : cols_(cols), rows_(std::move(rows)) {
    for (auto& r : rows_) {
        std::sort(r.begin(), r.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
        for (const auto& [c, v] : r)
            if (c < 0 || c >= cols_) throw MathError("column index out of range");
    }
}

Poly ParamMatrix::at(int r, int c) const {
    for (const auto& [col, v] : rows_.at(r))
        if (col == c) return v;
    return {};
}

void ParamMatrix::add(int r, int c, const Poly& v) {
    if (c < 0 || c >= cols_) throw MathError("column index out of range");
    if (v.is_zero()) return;
    SparseRow& row = rows_.at(r);
    auto it = std::lower_bound(row.begin(), row.end(), c, [](const auto& e, int col) { return e.first < col; });
    if (it != row.end() && it->first == c) {
        it->second += v;
        if (it->second.is_zero()) row.erase(it);
    } else {
        row.insert(it, {c, v});
    }
}

void ParamMatrix::append_row(SparseRow row) {
    std::sort(row.begin(), row.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    rows_.push_back(std::move(row));
}

ParamMatrix ParamMatrix::from_dense(const std::vector<std::vector<Poly>>& entries) {
    int cols = entries.empty() ? 0 : static_cast<int>(entries[0].size());
    ParamMatrix m(static_cast<int>(entries.size()), cols);
    for (std::size_t r = 0; r < entries.size(); ++r) {
        if (static_cast<int>(entries[r].size()) != cols) throw MathError("ragged dense matrix");
        for (int c = 0; c < cols; ++c)
            if (!entries[r][c].is_zero()) m.rows_[r].push_back({c, entries[r][c]});
    }
    return m;
}

ParamMatrix stack_systems(const ParamMatrix& a, const ParamMatrix& b) {
    if (a.cols() != b.cols()) throw MathError("stacked systems have different column counts");
    std::vector<SparseRow> rows = a.sparse_rows();
    rows.insert(rows.end(), b.sparse_rows().begin(), b.sparse_rows().end());
    return ParamMatrix(a.cols(), std::move(rows));
}

namespace {

const FieldTower* rows_tower(const std::vector<SparseRow>& rows) {
    const FieldTower* t = nullptr;
    for (const auto& r : rows)
        for (const auto& [c, v] : r) {
            const FieldTower* vt = v.tower();
            if (!vt) continue;
            if (t && vt != t) throw MathError("matrix entries from different field towers");
            t = vt;
        }
    return t;
}

// dst := u*dst - v*src
void combine(SparseRow& dst, const Poly& u, const Poly& v, const SparseRow& src) {
    SparseRow out;
    out.reserve(dst.size() + src.size());
    std::size_t i = 0, j = 0;
    bool u_one = u.is_constant() && !u.is_zero() && u.lead().is_one();
    while (i < dst.size() || j < src.size()) {
        if (j == src.size() || (i < dst.size() && dst[i].first < src[j].first)) {
            out.push_back({dst[i].first, u_one ? std::move(dst[i].second) : dst[i].second * u});
            ++i;
        } else if (i == dst.size() || src[j].first < dst[i].first) {
            out.push_back({src[j].first, -(v * src[j].second)});
            ++j;
        } else {
            Poly e = u_one ? std::move(dst[i].second) : dst[i].second * u;
            e -= v * src[j].second;
            if (!e.is_zero()) out.push_back({dst[i].first, std::move(e)});
            ++i;
            ++j;
        }
    }
    dst = std::move(out);
}

void scale_row(SparseRow& r, const Scalar& s) {
    for (auto& e : r) e.second *= s;
}

int compare_rows(const SparseRow& a, const SparseRow& b) {
    std::size_t n = std::min(a.size(), b.size());
    for (std::size_t k = 0; k < n; ++k) {
        if (a[k].first != b[k].first) return a[k].first < b[k].first ? -1 : 1;
        int c = compare(a[k].second, b[k].second);
        if (c != 0) return c;
    }
    if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
    return 0;
}

// Drops zero rows, scales each row so its first entry has leading coefficient 1, removes
// duplicates. Pointwise safe: every operation is invertible at every value of the variable.
std::vector<SparseRow> normalize_rows(std::vector<SparseRow> rows) {
    std::vector<SparseRow> out;
    out.reserve(rows.size());
    for (auto& r : rows) {
        if (r.empty()) continue;
        Scalar lead = r.front().second.lead();
        if (!lead.is_one()) scale_row(r, lead.inv());
        out.push_back(std::move(r));
    }
    std::sort(out.begin(), out.end(), [](const SparseRow& a, const SparseRow& b) { return compare_rows(a, b) < 0; });
    out.erase(std::unique(out.begin(), out.end(),
                          [](const SparseRow& a, const SparseRow& b) { return compare_rows(a, b) == 0; }),
              out.end());
    return out;
}

}  // namespace

ReducedSystem reduce_constant_pivots(const ParamMatrix& m) {
    ReducedSystem s;
    s.cols = m.cols();
    std::vector<SparseRow> rows = normalize_rows(m.sparse_rows());
    std::vector<int> col_count(static_cast<std::size_t>(m.cols()));
    for (;;) {
        // Markowitz-style choice among constant entries: shortest row, then rarest column.
        std::fill(col_count.begin(), col_count.end(), 0);
        for (const auto& r : rows)
            for (const auto& e : r) ++col_count[e.first];
        std::size_t best_row = rows.size();
        int best_col = -1;
        long best_cost = -1;
        for (std::size_t i = 0; i < rows.size(); ++i) {
            for (const auto& [c, v] : rows[i]) {
                if (v.degree() != 0) continue;
                long cost = static_cast<long>(rows[i].size() - 1) * (col_count[c] - 1);
                if (best_cost < 0 || cost < best_cost) {
                    best_cost = cost;
                    best_row = i;
                    best_col = c;
                }
            }
            if (best_cost == 0) break;
        }
        if (best_row == rows.size()) break;
        SparseRow pivot = std::move(rows[best_row]);
        rows.erase(rows.begin() + static_cast<long>(best_row));
        Scalar pinv;
        for (const auto& [c, v] : pivot)
            if (c == best_col) pinv = v.lead().inv();
        scale_row(pivot, pinv);
        std::vector<SparseRow> next;
        next.reserve(rows.size());
        for (auto& r : rows) {
            auto it = std::find_if(r.begin(), r.end(), [&](const auto& e) { return e.first == best_col; });
            if (it != r.end()) {
                Poly f = it->second;
                combine(r, Poly(1), f, pivot);
            }
            if (!r.empty()) next.push_back(std::move(r));
        }
        rows = std::move(next);
        ++s.const_rank;
    }
    s.residual = normalize_rows(std::move(rows));
    return s;
}

namespace {

using ScalarRow = std::vector<std::pair<int, Scalar>>;

// Incremental echelon basis over a field: rows indexed by pivot column, pivot entry 1.
class EchelonBasis {
public:
    explicit EchelonBasis(int cols) : cols_(cols), basis_(static_cast<std::size_t>(cols)), acc_(static_cast<std::size_t>(cols)) {}

    // Returns true if the row was independent and got inserted.
    bool insert(const ScalarRow& row) {
        if (row.empty()) return false;
        for (const auto& [c, v] : row) acc_[c] = v;
        int pivot = -1;
        for (int c = row.front().first; c < cols_; ++c) {
            if (acc_[c].is_zero()) continue;
            if (!basis_[c].empty()) {
                Scalar f = acc_[c];
                for (const auto& [bc, bv] : basis_[c]) acc_[bc] -= f * bv;
                continue;
            }
            if (pivot < 0) pivot = c;
        }
        if (pivot < 0) return false;
        Scalar inv = acc_[pivot].inv();
        ScalarRow out;
        for (int c = pivot; c < cols_; ++c)
            if (!acc_[c].is_zero()) {
                out.push_back({c, acc_[c] * inv});
                acc_[c] = Scalar();
            }
        basis_[pivot] = std::move(out);
        ++rank_;
        return true;
    }

    int rank() const { return rank_; }
    const std::vector<ScalarRow>& rows() const { return basis_; }

private:
    int cols_;
    std::vector<ScalarRow> basis_;
    std::vector<Scalar> acc_;
    int rank_ = 0;
};

// The acc_ vector is left zero after insert(): entries right of the pivot are moved out,
// and entries left of it were cancelled during reduction. A dependent row cancels fully.

ScalarRow eval_row(const SparseRow& r, const Scalar& a) {
    ScalarRow out;
    out.reserve(r.size());
    for (const auto& [c, v] : r) {
        Scalar s = v.eval(a);
        if (!s.is_zero()) out.push_back({c, std::move(s)});
    }
    return out;
}

int rank_rows_at(const std::vector<SparseRow>& rows, int cols, const Scalar& a) {
    EchelonBasis eb(cols);
    for (const auto& r : rows) {
        eb.insert(eval_row(r, a));
        if (eb.rank() == cols) break;
    }
    return eb.rank();
}

// Dynamic evaluation over K[x]/(m): rank on each piece of a branch.
void rank_rows_on_branch(const std::vector<SparseRow>& rows, int cols, const Branch& br,
                         std::vector<RankPiece>& out) {
    std::vector<SparseRow> red;
    red.reserve(rows.size());
    for (const auto& r : rows) {
        SparseRow rr;
        for (const auto& [c, v] : r) {
            Poly p = br.reduce(v);
            if (!p.is_zero()) rr.push_back({c, std::move(p)});
        }
        if (!rr.empty()) red.push_back(std::move(rr));
    }
    std::vector<SparseRow> basis(static_cast<std::size_t>(cols));
    std::vector<Poly> acc(static_cast<std::size_t>(cols));
    int rank = 0;
    for (const auto& row : red) {
        for (const auto& [c, v] : row) acc[c] = v;
        int pivot = -1;
        for (int c = row.front().first; c < cols; ++c) {
            if (acc[c].is_zero()) continue;
            if (!basis[c].empty()) {
                Poly f = acc[c];
                for (const auto& [bc, bv] : basis[c]) acc[bc] = br.reduce(acc[bc] - f * bv);
                continue;
            }
            if (pivot < 0) pivot = c;
        }
        if (pivot < 0) continue;
        InvertResult inv = branch_invert(acc[pivot], br);
        if (inv.kind == InvertResult::Kind::Split) {
            rank_rows_on_branch(rows, cols, *inv.zero_part, out);
            rank_rows_on_branch(rows, cols, *inv.unit_part, out);
            return;
        }
        SparseRow nb;
        for (int c = pivot; c < cols; ++c)
            if (!acc[c].is_zero()) {
                nb.push_back({c, br.mul(acc[c], inv.inverse)});
                acc[c] = Poly();
            }
        basis[pivot] = std::move(nb);
        ++rank;
        if (rank == cols) break;
    }
    out.push_back({br, rank});
}

}  // namespace

int rank_at(const ReducedSystem& s, const Scalar& a) { return s.const_rank + rank_rows_at(s.residual, s.cols, a); }

int rank_at(const ParamMatrix& m, const Scalar& a) { return rank_rows_at(m.sparse_rows(), m.cols(), a); }

std::vector<RankPiece> rank_at_point(const ReducedSystem& s, const Point& p) {
    if (const Scalar* a = std::get_if<Scalar>(&p)) return {{Branch::point(*a), rank_at(s, *a)}};
    const Branch& br = std::get<Branch>(p);
    if (br.is_point()) return {{br, rank_at(s, br.root())}};
    std::vector<RankPiece> out;
    rank_rows_on_branch(s.residual, s.cols, br, out);
    for (auto& piece : out) piece.rank += s.const_rank;
    std::sort(out.begin(), out.end(), [](const RankPiece& a, const RankPiece& b) { return compare(a.branch, b.branch) < 0; });
    return out;
}

std::vector<RankPiece> rank_at_point(const ParamMatrix& m, const Point& p) {
    ReducedSystem s;
    s.cols = m.cols();
    s.residual = m.sparse_rows();
    return rank_at_point(s, p);
}

GenericRank bareiss_generic_rank(const ParamMatrix& m) {
    int R = m.rows(), C = m.cols();
    std::vector<std::vector<Poly>> a(static_cast<std::size_t>(R), std::vector<Poly>(static_cast<std::size_t>(C)));
    for (int r = 0; r < R; ++r)
        for (const auto& [c, v] : m.row(r)) a[r][c] = v;
    Poly prev(1);
    int k = 0;
    for (; k < std::min(R, C); ++k) {
        int pr = -1, pc = -1;
        for (int i = k; i < R; ++i)
            for (int j = k; j < C; ++j) {
                const Poly& e = a[i][j];
                if (e.is_zero()) continue;
                if (pr < 0) {
                    pr = i;
                    pc = j;
                    continue;
                }
                const Poly& b = a[pr][pc];
                if (e.degree() < b.degree() || (e.degree() == b.degree() && e.height() < b.height())) {
                    pr = i;
                    pc = j;
                }
            }
        if (pr < 0) break;
        std::swap(a[k], a[pr]);
        for (auto& row : a) std::swap(row[k], row[pc]);
        for (int i = k + 1; i < R; ++i) {
            for (int j = k + 1; j < C; ++j) {
                Poly v = a[k][k] * a[i][j] - a[i][k] * a[k][j];
                a[i][j] = exact_div(v, prev);
            }
            a[i][k] = Poly();
        }
        prev = a[k][k];
    }
    return {k, k == 0 ? Poly(1) : prev};
}

int KernelProfile::kernel_dim_at(const Scalar& a) const {
    if (certificate.degree() <= 0 || !certificate.eval(a).is_zero()) return generic_kernel_dim;
    return system->cols - rank_at(*system, a);
}

std::vector<std::pair<Branch, int>> KernelProfile::kernel_dim_at(const Branch& b) const {
    std::vector<std::pair<Branch, int>> out;
    if (b.is_point()) {
        out.push_back({b, kernel_dim_at(b.root())});
        return out;
    }
    Poly g = certificate.degree() <= 0 ? Poly(1) : gcd(certificate, b.modulus());
    if (g.degree() == b.degree()) {
        for (auto& piece : rank_at_point(*system, b)) out.push_back({piece.branch, system->cols - piece.rank});
        return out;
    }
    if (g.degree() > 0) {
        for (auto& piece : rank_at_point(*system, Branch::trusted(g)))
            out.push_back({piece.branch, system->cols - piece.rank});
    }
    out.push_back({Branch::trusted(exact_div(b.modulus(), g).monic()), generic_kernel_dim});
    return out;
}

KernelProfile kernel_profile(const ParamMatrix& m) {
    auto sys = std::make_shared<ReducedSystem>(reduce_constant_pivots(m));
    const FieldTower* t = rows_tower(sys->residual);
    // The last Bareiss pivot is a nonzero rank x rank minor of the residual, so it vanishes
    // wherever the rank drops.
    GenericRank g = bareiss_generic_rank(ParamMatrix(sys->cols, sys->residual));
    int r2 = g.rank;
    Poly cert = g.certificate.degree() <= 0 ? Poly(1) : squarefree_part(g.certificate);
    KernelProfile prof;
    prof.generic_kernel_dim = m.cols() - sys->const_rank - r2;
    prof.certificate = cert;
    prof.system = sys;
    if (cert.degree() <= 0) return prof;

    LinearSplit split = split_linear_factors(cert, t);
    std::vector<int> dims(split.roots.size());
    parallel_for(split.roots.size(), [&](std::size_t k) { dims[k] = m.cols() - rank_at(*sys, split.roots[k]); });
    for (std::size_t k = 0; k < split.roots.size(); ++k)
        if (dims[k] > prof.generic_kernel_dim) prof.exceptional.push_back({Branch::point(split.roots[k]), dims[k]});
    if (split.rest.degree() > 0) {
        for (auto& piece : rank_at_point(*sys, Branch::trusted(split.rest))) {
            int dim = m.cols() - piece.rank;
            if (dim > prof.generic_kernel_dim) prof.exceptional.push_back({piece.branch, dim});
        }
    }
    std::sort(prof.exceptional.begin(), prof.exceptional.end(),
              [](const auto& a, const auto& b) { return compare(a.first, b.first) < 0; });
    return prof;
}

std::vector<std::vector<Scalar>> kernel_basis_at(const ParamMatrix& m, const Point& p) {
    Scalar a;
    if (const Scalar* s = std::get_if<Scalar>(&p)) {
        a = *s;
    } else {
        const Branch& br = std::get<Branch>(p);
        if (!br.is_point()) throw MathError("kernel basis requires an exact point");
        a = br.root();
    }
    int C = m.cols();
    EchelonBasis eb(C);
    for (const auto& r : m.sparse_rows()) eb.insert(eval_row(r, a));
    // Back-substitute to reduced echelon form.
    std::vector<ScalarRow> rows = eb.rows();
    std::vector<std::vector<Scalar>> dense(static_cast<std::size_t>(C));
    std::vector<bool> is_pivot(static_cast<std::size_t>(C), false);
    for (int c = 0; c < C; ++c) {
        if (rows[c].empty()) continue;
        is_pivot[c] = true;
        dense[c].assign(static_cast<std::size_t>(C), Scalar());
        for (const auto& [cc, v] : rows[c]) dense[c][cc] = v;
    }
    for (int c = C - 1; c >= 0; --c) {
        if (!is_pivot[c]) continue;
        for (int r = 0; r < c; ++r) {
            if (!is_pivot[r] || dense[r][c].is_zero()) continue;
            Scalar f = dense[r][c];
            for (int k = c; k < C; ++k)
                if (!dense[c][k].is_zero()) dense[r][k] -= f * dense[c][k];
        }
    }
    std::vector<std::vector<Scalar>> basis;
    for (int f = 0; f < C; ++f) {
        if (is_pivot[f]) continue;
        std::vector<Scalar> v(static_cast<std::size_t>(C));
        v[f] = Scalar(1);
        for (int r = 0; r < C; ++r)
            if (is_pivot[r] && !dense[r][f].is_zero()) v[r] = -dense[r][f];
        basis.push_back(std::move(v));
    }
    return basis;
}

int vector_rank(const std::vector<std::vector<Scalar>>& vs) {
    if (vs.empty()) return 0;
    int C = static_cast<int>(vs[0].size());
    EchelonBasis eb(C);
    for (const auto& v : vs) {
        if (static_cast<int>(v.size()) != C) throw MathError("vectors of different lengths");
        ScalarRow r;
        for (int c = 0; c < C; ++c)
            if (!v[c].is_zero()) r.push_back({c, v[c]});
        eb.insert(r);
    }
    return eb.rank();
}

bool subspace_equal(const std::vector<std::vector<Scalar>>& a, const std::vector<std::vector<Scalar>>& b) {
    int ra = vector_rank(a), rb = vector_rank(b);
    if (ra != rb) return false;
    std::vector<std::vector<Scalar>> both = a;
    both.insert(both.end(), b.begin(), b.end());
    return vector_rank(both) == ra;
}

}  // namespace lieinv
