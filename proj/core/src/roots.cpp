#include "lieinv/roots.hpp"

#include <algorithm>
#include <cmath>

#include "lieinv/errors.hpp"

namespace lieinv {

using cld = std::complex<long double>;

namespace {

cld horner(const std::vector<cld>& c, cld z) {
    cld r = 0;
    for (std::size_t k = c.size(); k-- > 0;) r = r * z + c[k];
    return r;
}

cld horner_deriv(const std::vector<cld>& c, cld z) {
    cld r = 0;
    for (std::size_t k = c.size(); k-- > 1;) r = r * z + c[k] * static_cast<long double>(k);
    return r;
}

}  // namespace

std::vector<cld> numeric_roots(const std::vector<cld>& coeffs) {
    std::vector<cld> c = coeffs;
    while (!c.empty() && std::abs(c.back()) == 0.0L) c.pop_back();
    if (c.size() <= 1) return {};
    std::size_t n = c.size() - 1;
    cld lead = c.back();
    for (auto& v : c) v /= lead;
    if (n == 1) return {-c[0]};

    long double bound = 0;
    for (std::size_t k = 0; k < n; ++k) bound = std::max(bound, std::abs(c[k]));
    bound += 1;
    std::vector<cld> z(n);
    for (std::size_t k = 0; k < n; ++k) {
        long double ang = 2.0L * 3.14159265358979323846L * k / n + 0.4L;
        z[k] = std::polar(bound * 0.5L + 0.1L, ang);
    }
    for (int iter = 0; iter < 800; ++iter) {
        long double maxstep = 0;
        for (std::size_t k = 0; k < n; ++k) {
            cld pv = horner(c, z[k]);
            cld dv = horner_deriv(c, z[k]);
            if (std::abs(pv) == 0.0L) continue;
            cld ratio = dv == cld(0) ? cld(1e-3L) : pv / dv;
            cld sum = 0;
            for (std::size_t j = 0; j < n; ++j)
                if (j != k) {
                    cld d = z[k] - z[j];
                    if (std::abs(d) > 0) sum += 1.0L / d;
                }
            cld w = ratio / (1.0L - ratio * sum);
            z[k] -= w;
            maxstep = std::max(maxstep, std::abs(w) / std::max(1.0L, std::abs(z[k])));
        }
        if (maxstep < 1e-17L) break;
    }
    for (auto& r : z) {
        for (int it = 0; it < 3; ++it) {
            cld dv = horner_deriv(c, r);
            if (std::abs(dv) == 0.0L) break;
            r -= horner(c, r) / dv;
        }
    }
    return z;
}

bool rationalize(long double v, Rational* out, long max_den) {
    if (!std::isfinite(v)) return false;
    long double tol = 1e-11L * std::max(1.0L, std::fabs(v));
    // Convergents h/k of the continued fraction of v.
    mpz_class h0 = 0, h1 = 1, k0 = 1, k1 = 0;
    long double x = v;
    for (int step = 0; step < 64; ++step) {
        long double a = std::floor(x);
        if (std::fabs(a) > 1e18L) return false;
        mpz_class ai(static_cast<double>(a));
        mpz_class h2 = ai * h1 + h0;
        mpz_class k2 = ai * k1 + k0;
        h0 = h1;
        h1 = h2;
        k0 = k1;
        k1 = k2;
        if (cmp(k1, max_den) > 0) return false;
        Rational q(h1, k1);
        q.canonicalize();
        if (std::fabs(static_cast<long double>(q.get_d()) - v) <= tol) {
            *out = q;
            return true;
        }
        long double frac = x - a;
        if (frac < 1e-30L) return false;
        x = 1.0L / frac;
    }
    return false;
}

namespace {

std::vector<cld> embed_coeffs(const Poly& p, std::size_t which) {
    std::vector<cld> c;
    for (const auto& s : p.coeffs()) c.push_back(s.embed(which));
    return c;
}

bool rationalize_complex(cld z, GaussianRational* out) {
    Rational re, im;
    long double tol = 1e-11L * std::max(1.0L, std::abs(z));
    long double rv = std::fabs(z.real()) < tol ? 0.0L : z.real();
    long double iv = std::fabs(z.imag()) < tol ? 0.0L : z.imag();
    if (!rationalize(rv, &re) || !rationalize(iv, &im)) return false;
    *out = GaussianRational(re, im);
    return true;
}

void add_root(std::vector<Scalar>& roots, Poly& rest, const Scalar& r) {
    for (const auto& q : roots)
        if (q == r) return;
    if (!rest.eval(r).is_zero()) return;
    roots.push_back(r);
    rest = exact_div(rest, Poly::linear_root(r));
}

}  // namespace

LinearSplit split_linear_factors(const Poly& p, const FieldTower* t) {
    if (p.is_zero()) throw MathError("root search on the zero polynomial");
    LinearSplit out;
    out.rest = p.monic();
    const FieldTower* pt = p.tower();
    if (pt && t && pt != t) throw MathError("polynomial and search tower differ");
    if (!t) t = pt;
    if (t && t->degree() != 2 && pt) t = nullptr;
    // Degree-1 factors are read off directly.
    if (out.rest.degree() == 1) {
        out.roots.push_back(-out.rest.coeff(0));
        out.rest = Poly(1);
        return out;
    }
    if (out.rest.degree() < 1) return out;

    if (!pt) {
        for (const cld& z : numeric_roots(embed_coeffs(out.rest, 0))) {
            GaussianRational g;
            if (rationalize_complex(z, &g)) add_root(out.roots, out.rest, Scalar(g));
            if (out.rest.degree() < 1) break;
        }
    }
    if (t && t->degree() == 2 && out.rest.degree() >= 1) {
        const auto& emb = t->embeddings();
        cld s1 = emb[0], s2 = emb[1];
        auto r1 = numeric_roots(embed_coeffs(out.rest, 0));
        auto r2 = numeric_roots(embed_coeffs(out.rest, 1));
        for (const cld& z1 : r1) {
            for (const cld& z2 : r2) {
                if (out.rest.degree() < 1) break;
                cld c1 = (z1 - z2) / (s1 - s2);
                cld c0 = z1 - c1 * s1;
                GaussianRational g0, g1;
                if (!rationalize_complex(c0, &g0) || !rationalize_complex(c1, &g1)) continue;
                add_root(out.roots, out.rest, Scalar::from_coeffs(t, {g0, g1}).lowered());
            }
        }
    }
    std::sort(out.roots.begin(), out.roots.end(), ScalarLess{});
    out.rest = out.rest.monic();
    return out;
}

}  // namespace lieinv
