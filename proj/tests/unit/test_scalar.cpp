#include <gtest/gtest.h>

#include <random>

#include "lieinv/errors.hpp"
#include "lieinv/expr.hpp"
#include "lieinv/scalar.hpp"

using namespace lieinv;

namespace {

Scalar q(long n, long d = 1) { return Scalar(Rational(n, d)); }
const Scalar I = Scalar::imag_unit();

Scalar random_scalar(std::mt19937& rng, const FieldTower* t = nullptr) {
    std::uniform_int_distribution<int> num(-9, 9), den(1, 7);
    Scalar v = q(num(rng), den(rng)) + q(num(rng), den(rng)) * I;
    if (t) v += (q(num(rng), den(rng)) + q(num(rng), den(rng)) * I) * Scalar::generator(t);
    return v;
}

}  // namespace

TEST(Scalar, GaussianProducts) {
    EXPECT_EQ((1 + I) * (1 - I), Scalar(2));
    EXPECT_EQ(Scalar(1) / I, -I);
    EXPECT_EQ(I * I, Scalar(-1));
    EXPECT_EQ(q(1, 2) + q(1, 3), q(5, 6));
}

TEST(Scalar, TowerRelation) {
    const FieldTower* t = parse_tower("t", "t^2-3");
    Scalar g = Scalar::generator(t);
    EXPECT_EQ(g * g, Scalar(3));
    EXPECT_TRUE((g * g).in_base());
    EXPECT_EQ((g * g).lowered().tower(), nullptr);
    EXPECT_EQ((1 + g) * (1 - g), Scalar(-2));
    EXPECT_EQ(g.inv() * g, Scalar(1));
    EXPECT_EQ(parse_tower("t", "t^2-3"), t);
}

TEST(Scalar, MixingTowersIsRefused) {
    Scalar a = Scalar::generator(parse_tower("s", "s^2-3"));
    Scalar b = Scalar::generator(parse_tower("s", "s^2-7"));
    EXPECT_THROW(a + b, MathError);
    EXPECT_EQ(a + Scalar(1) - a, Scalar(1));
}

TEST(Scalar, DivisionByZero) {
    EXPECT_THROW(Scalar(1) / Scalar(0), MathError);
    EXPECT_THROW(Scalar().inv(), MathError);
}

TEST(Scalar, LiteralRoundTrip) {
    const FieldTower* s = parse_tower("s", "s^2-7");
    ExprContext ctx{s, {}, {}};
    for (const char* lit : {"0", "-1/2+1/2*i", "3", "-i", "1/4+1/4*s*i", "s", "2/3-s"}) {
        Scalar v = parse_scalar(lit, ctx);
        EXPECT_EQ(parse_scalar(v.to_string(), ctx), v) << lit;
    }
    EXPECT_EQ(parse_scalar("1/4+1/4*s*i", ctx).coeff(1), GaussianRational(0, Rational(1, 4)));
    EXPECT_THROW(parse_scalar("1/0"), ParseError);
    EXPECT_THROW(parse_scalar("2+"), ParseError);
    EXPECT_THROW(parse_scalar("s"), ParseError);
}

TEST(Scalar, CanonicalOrder) {
    EXPECT_LT(compare(Scalar(-1), Scalar(1)), 0);
    EXPECT_LT(compare(Scalar(1), 1 + I), 0);
    EXPECT_EQ(compare(q(2, 4), q(1, 2)), 0);
}

TEST(Scalar, GaussianSquareRoots) {
    GaussianRational r;
    ASSERT_TRUE(gaussian_sqrt(GaussianRational(0, 2), &r));
    EXPECT_EQ(r * r, GaussianRational(0, 2));
    ASSERT_TRUE(gaussian_sqrt(GaussianRational(Rational(-9, 4)), &r));
    EXPECT_EQ(r * r, GaussianRational(Rational(-9, 4)));
    EXPECT_FALSE(gaussian_sqrt(GaussianRational(3), &r));
}

TEST(Scalar, FieldAxiomsRandomized) {
    std::mt19937 rng(1234);
    const FieldTower* t = parse_tower("s", "s^2-7");
    for (int k = 0; k < 100; ++k) {
        const FieldTower* tw = k % 2 ? t : nullptr;
        Scalar a = random_scalar(rng, tw), b = random_scalar(rng, tw), c = random_scalar(rng, tw);
        EXPECT_EQ((a + b) + c, a + (b + c));
        EXPECT_EQ((a * b) * c, a * (b * c));
        EXPECT_EQ(a * (b + c), a * b + a * c);
        EXPECT_EQ(a - a, Scalar());
        if (!a.is_zero()) EXPECT_EQ(a * a.inv(), Scalar(1));
        if (!b.is_zero()) EXPECT_EQ((a / b) * b, a);
    }
}

TEST(Scalar, EmbeddingsAgreeWithArithmetic) {
    const FieldTower* t = parse_tower("s", "s^2-3");
    Scalar s = Scalar::generator(t);
    for (std::size_t e = 0; e < 2; ++e) {
        auto v = s.embed(e);
        EXPECT_NEAR(static_cast<double>(std::abs(v * v - std::complex<long double>(3))), 0.0, 1e-12);
    }
    EXPECT_NEAR(static_cast<double>((s.embed(0) + s.embed(1)).real()), 0.0, 1e-12);
}
