#include <gtest/gtest.h>

#include <random>

#include "lieinv/branch.hpp"
#include "lieinv/errors.hpp"
#include "lieinv/expr.hpp"
#include "lieinv/roots.hpp"

using namespace lieinv;

namespace {

Poly P(const std::string& s, const FieldTower* t = nullptr) { return parse_poly(s, {t, {}, "x"}); }
Scalar q(long n, long d = 1) { return Scalar(Rational(n, d)); }

}  // namespace

TEST(Branch, InvertSplits) {
    InvertResult r = branch_invert(P("x-1"), Branch(P("x^2-x")));
    ASSERT_EQ(r.kind, InvertResult::Kind::Split);
    EXPECT_EQ(r.zero_part->modulus(), P("x-1"));
    EXPECT_EQ(r.unit_part->modulus(), P("x"));
}

TEST(Branch, InvertUnits) {
    Branch b(P("x^2-2"));
    InvertResult r = branch_invert(Poly(2), b);
    ASSERT_EQ(r.kind, InvertResult::Kind::Inverse);
    EXPECT_EQ(r.inverse, Poly(q(1, 2)));
    r = branch_invert(P("x"), b);
    ASSERT_EQ(r.kind, InvertResult::Kind::Inverse);
    EXPECT_EQ(r.inverse, P("x/2"));
    EXPECT_EQ(branch_invert(P("x^2-2"), b).kind, InvertResult::Kind::Zero);
}

TEST(Branch, Evaluation) {
    EXPECT_EQ(Branch(P("x^2-1")).reduce(P("x^2-1")), Poly());
    EXPECT_EQ(Branch(P("x^2-x-1")).reduce(P("x+1")), P("x+1"));
    EXPECT_EQ(Branch::point(Scalar(2)).reduce(P("x^2-1")), Poly(3));
}

TEST(Branch, RejectsBadModuli) {
    EXPECT_THROW(Branch(P("(x-1)^2")), MathError);
    EXPECT_THROW(Branch(Poly(3)), MathError);
    EXPECT_EQ(Branch(P("2*x-4")).root(), Scalar(2));
}

TEST(Branch, SplitsNeverLoseRoots) {
    std::mt19937 rng(17);
    std::uniform_int_distribution<int> d(-5, 5);
    for (int k = 0; k < 60; ++k) {
        Poly m = P("x^3-x");
        Poly f = Poly::linear_root(Scalar(d(rng))) * Poly::linear_root(Scalar(d(rng))) + Poly(d(rng) % 2);
        Branch b(m);
        InvertResult r = branch_invert(f, b);
        if (r.kind == InvertResult::Kind::Split) {
            EXPECT_EQ((r.zero_part->modulus() * r.unit_part->modulus()).monic(), m);
        } else if (r.kind == InvertResult::Kind::Inverse) {
            EXPECT_EQ(b.mul(f, r.inverse), Poly(1));
        } else {
            EXPECT_TRUE(b.reduce(f).is_zero());
        }
    }
}

TEST(Roots, SplitRationalAndGaussian) {
    LinearSplit s = split_linear_factors(P("(x+1/2)*(x^2+1)*(x^2-3)"));
    ASSERT_EQ(s.roots.size(), 3u);
    EXPECT_EQ(s.roots[0], q(-1, 2));
    EXPECT_EQ(s.roots[1], -Scalar::imag_unit());
    EXPECT_EQ(s.roots[2], Scalar::imag_unit());
    EXPECT_EQ(s.rest, P("x^2-3"));
    const FieldTower* t = parse_tower("s", "s^2-3");
    LinearSplit s3 = split_linear_factors(P("x^2-3"), t);
    ASSERT_EQ(s3.roots.size(), 2u);
    EXPECT_EQ(s3.roots[0] * s3.roots[0], Scalar(3));
    EXPECT_EQ(s3.rest.degree(), 0);
}

TEST(Roots, SplitInSevenTower) {
    const FieldTower* t = parse_tower("s", "s^2-7");
    Scalar w = parse_scalar("1/4+1/4*s*i", {t, {}, {}});
    Poly m = Poly::linear_root(w) * Poly::linear_root(Scalar(2));
    LinearSplit s = split_linear_factors(m, t);
    ASSERT_EQ(s.roots.size(), 2u);
    EXPECT_TRUE(s.roots[0] == w || s.roots[1] == w);
}

TEST(Roots, Rationalize) {
    Rational r;
    ASSERT_TRUE(rationalize(0.6666666666666666L, &r));
    EXPECT_EQ(r, Rational(2, 3));
    EXPECT_FALSE(rationalize(3.14159265358979323846L, &r, 100));
    auto z = numeric_roots({{-2, 0}, {0, 0}, {1, 0}});
    ASSERT_EQ(z.size(), 2u);
    EXPECT_NEAR(static_cast<double>(std::abs(z[0] * z[0] - 2.0L)), 0.0, 1e-12);
}
