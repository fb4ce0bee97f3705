#include "lieinv/cocycle.hpp"

#include <map>

#include "lieinv/errors.hpp"

namespace lieinv {

void KappaSpec::check() const {
    if (q < 1) throw MathError("cochain dimension q must be at least 1");
    if (static_cast<int>(k.size()) != q + 1) throw MathError("kappa must be (q+1)x(q+1)");
    for (const auto& row : k)
        if (static_cast<int>(row.size()) != q + 1) throw MathError("kappa must be (q+1)x(q+1)");
    for (int i = 0; i <= q; ++i)
        for (int j = i + 1; j <= q; ++j)
            if (k[i][j] != k[j][i]) throw MathError("kappa must be symmetric");
}

bool SixParams::is_constant() const {
    for (const auto& p : v)
        if (p.degree() > 0) return false;
    return true;
}

std::vector<std::vector<int>> increasing_tuples(int n, int q) {
    std::vector<std::vector<int>> out;
    if (q > n || q < 0) return out;
    std::vector<int> t(static_cast<std::size_t>(q));
    for (int k = 0; k < q; ++k) t[k] = k;
    for (;;) {
        out.push_back(t);
        int k = q - 1;
        while (k >= 0 && t[k] == n - q + k) --k;
        if (k < 0) break;
        ++t[k];
        for (int j = k + 1; j < q; ++j) t[j] = t[j - 1] + 1;
    }
    return out;
}

namespace {

long binom(int n, int k) {
    if (k < 0 || k > n) return 0;
    long r = 1;
    for (int j = 1; j <= k; ++j) r = r * (n - k + j) / j;
    return r;
}

// Lexicographic rank of a strictly increasing tuple among all q-subsets of {0..n-1}.
int tuple_rank(int n, const std::vector<int>& t) {
    long r = 0;
    int q = static_cast<int>(t.size());
    int prev = -1;
    for (int i = 0; i < q; ++i) {
        for (int v = prev + 1; v < t[i]; ++v) r += binom(n - 1 - v, q - 1 - i);
        prev = t[i];
    }
    return static_cast<int>(r);
}

// Sorts a tuple in place; returns the permutation sign, or 0 if an index repeats.
int sort_sign(std::vector<int>& t) {
    int sign = 1;
    for (std::size_t i = 1; i < t.size(); ++i)
        for (std::size_t j = i; j > 0 && t[j - 1] > t[j]; --j) {
            std::swap(t[j - 1], t[j]);
            sign = -sign;
        }
    for (std::size_t i = 1; i < t.size(); ++i)
        if (t[i] == t[i - 1]) return 0;
    return sign;
}

// Accumulates one equation row keyed by column.
class RowBuilder {
public:
    RowBuilder(int n) : n_(n) {}

    // Adds f * c^k(tuple) where the tuple is an ordered list of basis indices.
    void add(std::vector<int> tuple, int k, const Poly& f) {
        if (f.is_zero()) return;
        int sign = sort_sign(tuple);
        if (sign == 0) return;
        int col = tuple_rank(n_, tuple) * n_ + k;
        Poly& e = acc_[col];
        if (sign > 0)
            e += f;
        else
            e -= f;
    }

    SparseRow take() {
        SparseRow r;
        for (auto& [c, v] : acc_)
            if (!v.is_zero()) r.push_back({c, std::move(v)});
        acc_.clear();
        return r;
    }

private:
    int n_;
    std::map<int, Poly> acc_;
};

std::vector<int> without(const std::vector<int>& t, std::size_t a, std::size_t b = SIZE_MAX) {
    std::vector<int> out;
    for (std::size_t k = 0; k < t.size(); ++k)
        if (k != a && k != b) out.push_back(t[k]);
    return out;
}

}  // namespace

int cochain_column(int n, const std::vector<int>& sorted_tuple, int k) { return tuple_rank(n, sorted_tuple) * n + k; }

ParamMatrix build_general(const LieAlgebra& L, const KappaSpec& kappa) {
    kappa.check();
    int n = L.dim(), q = kappa.q;
    int cols = static_cast<int>(binom(n, q)) * n;
    std::vector<SparseRow> rows;
    RowBuilder rb(n);
    std::vector<int> t(static_cast<std::size_t>(q + 1), 0);
    long total = 1;
    for (int k = 0; k <= q; ++k) total *= n;
    for (long idx = 0; idx < total; ++idx) {
        long rem = idx;
        for (int k = q; k >= 0; --k) {
            t[k] = static_cast<int>(rem % n);
            rem /= n;
        }
        for (int s = 0; s < n; ++s) {
            // sum_i (-1)^(i+1) kappa_ii [x_i, c(..x_i omitted..)], 1-based i
            for (int i = 0; i <= q; ++i) {
                const Poly& kii = kappa.k[i][i];
                if (kii.is_zero()) continue;
                Poly f = (i % 2 == 0) ? kii : -kii;
                std::vector<int> rest = without(t, static_cast<std::size_t>(i));
                for (int k = 0; k < n; ++k) {
                    const Scalar& c = L.c(t[i], k, s);
                    if (!c.is_zero()) rb.add(rest, k, f * c);
                }
            }
            // sum_{i<j} (-1)^(i+j) kappa_ij c([x_i, x_j], ...)
            for (int i = 0; i <= q; ++i)
                for (int j = i + 1; j <= q; ++j) {
                    const Poly& kij = kappa.k[i][j];
                    if (kij.is_zero()) continue;
                    Poly f = ((i + j) % 2 == 0) ? kij : -kij;
                    std::vector<int> rest = without(t, static_cast<std::size_t>(i), static_cast<std::size_t>(j));
                    rest.insert(rest.begin(), 0);
                    for (int r = 0; r < n; ++r) {
                        const Scalar& c = L.c(t[i], t[j], r);
                        if (c.is_zero()) continue;
                        rest[0] = r;
                        rb.add(rest, s, f * c);
                    }
                }
            rows.push_back(rb.take());
        }
    }
    return ParamMatrix(cols, std::move(rows));
}

ParamMatrix build_der(const LieAlgebra& L, const Poly& alpha, const Poly& beta, const Poly& gamma) {
    int n = L.dim();
    std::vector<SparseRow> rows;
    rows.reserve(static_cast<std::size_t>(n) * n * n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int s = 0; s < n; ++s) {
                std::map<int, Poly> acc;
                for (int r = 0; r < n; ++r) {
                    // -alpha c^r_ij D_sr + beta c^s_rj D_ri + gamma c^s_ir D_rj
                    if (!L.c(i, j, r).is_zero()) acc[r * n + s] -= alpha * L.c(i, j, r);
                    if (!L.c(r, j, s).is_zero()) acc[i * n + r] += beta * L.c(r, j, s);
                    if (!L.c(i, r, s).is_zero()) acc[j * n + r] += gamma * L.c(i, r, s);
                }
                SparseRow row;
                for (auto& [c, v] : acc)
                    if (!v.is_zero()) row.push_back({c, std::move(v)});
                rows.push_back(std::move(row));
            }
    return ParamMatrix(n * n, std::move(rows));
}

ParamMatrix build_two_cocycle(const LieAlgebra& L, const SixParams& p, bool include_repeated) {
    int n = L.dim();
    int cols = static_cast<int>(binom(n, 2)) * n;
    std::vector<SparseRow> rows;
    RowBuilder rb(n);
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            for (int z = 0; z < n; ++z) {
                if (!include_repeated && (x == y || y == z || x == z)) continue;
                for (int s = 0; s < n; ++s) {
                    // a1 B(x,[y,z]) + a2 B(z,[x,y]) + a3 B(y,[z,x])
                    const int outer[3] = {x, z, y};
                    const int in1[3] = {y, x, z};
                    const int in2[3] = {z, y, x};
                    for (int term = 0; term < 3; ++term) {
                        const Poly& f = p.v[term];
                        if (f.is_zero()) continue;
                        for (int r = 0; r < n; ++r) {
                            const Scalar& c = L.c(in1[term], in2[term], r);
                            if (!c.is_zero()) rb.add({outer[term], r}, s, f * c);
                        }
                    }
                    // b1 [x, B(y,z)] + b2 [z, B(x,y)] + b3 [y, B(z,x)]
                    for (int term = 0; term < 3; ++term) {
                        const Poly& f = p.v[3 + term];
                        if (f.is_zero()) continue;
                        for (int k = 0; k < n; ++k) {
                            const Scalar& c = L.c(outer[term], k, s);
                            if (!c.is_zero()) rb.add({in1[term], in2[term]}, k, f * c);
                        }
                    }
                    rows.push_back(rb.take());
                }
            }
    return ParamMatrix(cols, std::move(rows));
}

KappaSpec kappa_from_six(const SixParams& p) {
    KappaSpec k;
    k.q = 2;
    k.k = {{p.b(1), p.a(2), p.a(3)}, {p.a(2), p.b(3), p.a(1)}, {p.a(3), p.a(1), p.b(2)}};
    return k;
}

std::array<SixParams, 6> six_permutations(const SixParams& p) {
    const Poly &a1 = p.a(1), &a2 = p.a(2), &a3 = p.a(3), &b1 = p.b(1), &b2 = p.b(2), &b3 = p.b(3);
    return {SixParams(a1, a2, a3, b1, b2, b3), SixParams(a3, a1, a2, b3, b1, b2),
            SixParams(a2, a3, a1, b2, b3, b1), SixParams(a1, a3, a2, b1, b3, b2),
            SixParams(a2, a1, a3, b2, b1, b3), SixParams(a3, a2, a1, b3, b2, b1)};
}

std::array<std::pair<SixParams, SixParams>, 4> intersection_pairs(const SixParams& p) {
    const Poly &a1 = p.a(1), &a2 = p.a(2), &a3 = p.a(3), &b1 = p.b(1), &b2 = p.b(2), &b3 = p.b(3);
    Poly two(2), zero;
    return {std::pair{SixParams(a1 + a3, a2 + a1, a3 + a2, b1 + b3, b2 + b1, b3 + b2),
                      SixParams(a1 - a3, a2 - a1, a3 - a2, b1 - b3, b2 - b1, b3 - b2)},
            std::pair{SixParams(zero, a2 - a3, a3 - a2, zero, b2 - b3, b3 - b2),
                      SixParams(two * a1, a2 + a3, a3 + a2, two * b1, b2 + b3, b3 + b2)},
            std::pair{SixParams(zero, a1 - a2, a2 - a1, zero, b1 - b2, b2 - b1),
                      SixParams(two * a3, a1 + a2, a2 + a1, two * b3, b1 + b2, b2 + b1)},
            std::pair{SixParams(zero, a3 - a1, a1 - a3, zero, b3 - b1, b1 - b3),
                      SixParams(two * a2, a3 + a1, a1 + a3, two * b2, b3 + b1, b1 + b3)}};
}

NormalizedSix normalize_six(const SixParams& p) {
    if (!p.is_constant()) throw MathError("normalize_six needs constant parameters");
    auto val = [&](int k) { return p.v[k].coeff(0); };
    Scalar a1 = val(0), a2 = val(1), a3 = val(2), b1 = val(3), b2 = val(4), b3 = val(5);
    Scalar u = a2 - a3, v = b2 - b3, w = a2 + a3, t = b2 + b3;
    bool U = !u.is_zero(), V = !v.is_zero(), W = !w.is_zero(), T = !t.is_zero();
    Scalar one(1), zero, two(2);
    auto make = [](const Scalar& c1, const Scalar& c2, const Scalar& c3, const Scalar& d1, const Scalar& d2,
                   const Scalar& d3) { return SixParams(Poly(c1), Poly(c2), Poly(c3), Poly(d1), Poly(d2), Poly(d3)); };
    if (!W && !T) {
        // Only the antisymmetric combinations survive besides (a1, b1), which may be rescaled freely.
        Scalar f = !a1.is_zero() ? a1 : (!b1.is_zero() ? b1 : one);
        Scalar A = a1 / f, B = b1 / f;
        if (!U && !V) return {make(A, zero, zero, B, zero, zero), 1};
        if (!U) return {make(A, zero, zero, B, one, -one), 2};
        if (!V) return {make(A, one, -one, B, zero, zero), 3};
        return {make(A, u / v, -(u / v), B, one, -one), 4};
    }
    if (!W) {
        if (!U && V) return {make(a1 / t, zero, zero, b1 / t, one, zero), 5};
        if (!U) return {make(two * a1 / t, zero, zero, two * b1 / t, one, one), 6};
        if (V) return {make(a1 / t, u / (two * v), -(u / (two * v)), b1 / t, one, zero), 7};
        return {make(two * a1 / t, one, -one, two * b1 / t, one, one), 8};
    }
    if (!T) {
        if (U && !V) return {make(a1 / w, one, zero, b1 / w, zero, zero), 9};
        if (!U && !V) return {make(two * a1 / w, one, one, two * b1 / w, zero, zero), 10};
        if (U) return {make(a1 / w, one, zero, b1 / w, v / (two * u), -(v / (two * u))), 11};
        return {make(two * a1 / w, one, one, two * b1 / w, one, -one), 12};
    }
    if (U && V)
        return {make(a1 / t, (w / t + u / v) / two, (w / t - u / v) / two, b1 / t, one, zero), 13};
    if (U) return {make(two * a1 / t, w / t + one, w / t - one, two * b1 / t, one, one), 14};
    if (V) return {make(two * a1 / w, one, one, two * b1 / w, t / w + one, t / w - one), 15};
    return {make(two * a1 / t, w / t, w / t, two * b1 / t, one, one), 16};
}

}  // namespace lieinv
