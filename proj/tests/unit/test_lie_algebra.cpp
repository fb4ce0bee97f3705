#include <gtest/gtest.h>

#include <random>

#include "lieinv/catalog.hpp"
#include "lieinv/errors.hpp"
#include "lieinv/invariant.hpp"
#include "lieinv/lie_algebra.hpp"

using namespace lieinv;

namespace {

LieAlgebra sl2_with(long c13) {
    LieAlgebra L(3, "sl2");
    L.set_bracket(0, 1, 0, Scalar(1));
    L.set_bracket(1, 2, 2, Scalar(1));
    L.set_bracket(0, 2, 1, Scalar(c13));
    return L;
}

bool same_constants(const LieAlgebra& a, const LieAlgebra& b) {
    if (a.dim() != b.dim()) return false;
    for (int i = 0; i < a.dim(); ++i)
        for (int j = 0; j < a.dim(); ++j)
            for (int k = 0; k < a.dim(); ++k)
                if (a.c(i, j, k) != b.c(i, j, k)) return false;
    return true;
}

using Matrix = std::vector<std::vector<Scalar>>;

Matrix identity(int n) {
    Matrix P(n, std::vector<Scalar>(n));
    for (int k = 0; k < n; ++k) P[k][k] = Scalar(1);
    return P;
}

}  // namespace

TEST(LieAlgebra, ValidateSl2) { EXPECT_FALSE(validate(sl2_with(2)).has_value()); }

TEST(LieAlgebra, ChangedSl2ConstantStillSatisfiesJacobi) {
    // The single Jacobi sum on (e1,e2,e3) is c13 - c13 for every value of c13, so this
    // table is a Lie algebra, isomorphic to sl2 by rescaling e3.
    LieAlgebra L = sl2_with(1);
    EXPECT_FALSE(validate(L).has_value());
    EXPECT_TRUE(step_equal(psi(L), psi(sl2_with(2))));
}

TEST(LieAlgebra, JacobiViolation) {
    LieAlgebra L(3);
    L.set_bracket(0, 1, 2, Scalar(1));
    L.set_bracket(0, 2, 0, Scalar(1));
    auto v = validate(L);
    ASSERT_TRUE(v.has_value());
    EXPECT_EQ(v->kind, Violation::Kind::Jacobi);
    EXPECT_EQ(v->index, (std::vector<int>{1, 2, 3, 3}));
    EXPECT_FALSE(v->residual.is_zero());
    EXPECT_THROW(require_valid(L), InvalidAlgebra);
}

TEST(LieAlgebra, AntisymmetryViolation) {
    LieAlgebra L(2);
    L.set_raw(0, 1, 0, Scalar(1));
    L.set_raw(1, 0, 0, Scalar(1));
    auto v = validate(L);
    ASSERT_TRUE(v.has_value());
    EXPECT_EQ(v->kind, Violation::Kind::Antisymmetry);
    EXPECT_EQ(v->index, (std::vector<int>{1, 2, 1}));
    EXPECT_EQ(v->describe(), "antisymmetry violation at (1,2,1): c_ij^k + c_ji^k = 2");
}

TEST(LieAlgebra, DirectSums) {
    EXPECT_TRUE(same_constants(direct_sum(instantiate("g2.1"), instantiate("g2.1")), instantiate("g2.1+g2.1")));
    EXPECT_TRUE(same_constants(direct_sum(instantiate("g3.4(-1)"), LieAlgebra(1)), instantiate("g3.4(-1)+g1")));
    LieAlgebra sl2 = instantiate("sl2");
    EXPECT_TRUE(same_constants(direct_sum(sl2, LieAlgebra(0)), sl2));
    LieAlgebra s = direct_sum(instantiate("g2.1"), instantiate("g2.1"));
    for (int i = 0; i < 2; ++i)
        for (int j = 2; j < 4; ++j)
            for (int k = 0; k < 4; ++k) EXPECT_TRUE(s.c(i, j, k).is_zero());
}

TEST(LieAlgebra, ChangeBasis) {
    LieAlgebra g21 = instantiate("g2.1");
    EXPECT_TRUE(same_constants(change_basis(g21, identity(2)), g21));
    Matrix swap = {{Scalar(0), Scalar(1)}, {Scalar(1), Scalar(0)}};
    LieAlgebra s = change_basis(g21, swap);
    EXPECT_EQ(s.c(0, 1, 1), Scalar(-1));
    EXPECT_TRUE(s.c(0, 1, 0).is_zero());
    Matrix singular = {{Scalar(1), Scalar(2)}, {Scalar(2), Scalar(4)}};
    EXPECT_THROW(change_basis(g21, singular), MathError);
}

TEST(LieAlgebra, ChangeBasisKeepsValidity) {
    std::mt19937 rng(3);
    std::uniform_int_distribution<int> d(-3, 3);
    std::vector<std::string> labels = {"sl2", "g3.2", "g4.7", "g4.8(-1)", "g2.1+g2.1"};
    for (int trial = 0; trial < 50; ++trial) {
        LieAlgebra L = instantiate(labels[trial % labels.size()]);
        Matrix P(L.dim(), std::vector<Scalar>(L.dim()));
        for (auto& r : P)
            for (auto& x : r) x = Scalar(d(rng));
        try {
            invert_matrix(P);
        } catch (const MathError&) {
            continue;
        }
        LieAlgebra M = change_basis(L, P);
        EXPECT_FALSE(validate(M).has_value());
        EXPECT_TRUE(same_constants(change_basis(M, invert_matrix(P)), L));
    }
}

TEST(LieAlgebraIo, ParseSl2) {
    LieAlgebra L = parse_algebra(R"({"format":1,"name":"sl2","dim":3,
        "brackets":{"1,2":{"1":"1"},"2,3":{"3":"1"},"1,3":{"2":"2"}}})");
    EXPECT_EQ(L.dim(), 3);
    EXPECT_FALSE(validate(L).has_value());
    EXPECT_TRUE(same_constants(L, sl2_with(2)));
    EXPECT_EQ(L.c(2, 1, 2), Scalar(-1));
}

TEST(LieAlgebraIo, RejectsMalformed) {
    EXPECT_THROW(parse_algebra(R"({"dim":2,"brackets":{"2,1":{"1":"1"}}})"), ParseError);
    EXPECT_THROW(parse_algebra(R"({"dim":2,"brackets":{"1,3":{"1":"1"}}})"), ParseError);
    EXPECT_THROW(parse_algebra(R"({"dim":2,"brackets":{"1,2":{"1":"1/0"}}})"), ParseError);
    EXPECT_THROW(parse_algebra(R"({"dim":2,"brackets":{"1,2":{"1":"2+"}}})"), ParseError);
    EXPECT_THROW(parse_algebra(R"({"dim":2,"brackets":{"1,2":{"1":"1","1":"2"}}})"), ParseError);
    EXPECT_THROW(parse_algebra(R"({"dim":2,"colour":"red"})"), ParseError);
    EXPECT_THROW(parse_algebra(R"({"dim":2)"), ParseError);
    try {
        parse_algebra(R"({"dim":2,"brackets":{"1,2":{"5":"1"}}})");
        FAIL();
    } catch (const ParseError& e) {
        EXPECT_NE(e.where().find("1,2"), std::string::npos);
    }
}

TEST(LieAlgebraIo, ExtensionLiteral) {
    LieAlgebra L = parse_algebra(R"({"dim":2,"extension":{"generator":"s","minpoly":"s^2-7"},
        "brackets":{"1,2":{"1":"1/4+1/4*s*i"}}})");
    ASSERT_NE(L.tower(), nullptr);
    Scalar v = L.c(0, 1, 0);
    EXPECT_EQ(v.tower(), L.tower());
    Scalar s = Scalar::generator(L.tower());
    EXPECT_EQ(v, Scalar(Rational(1, 4)) + Scalar(Rational(1, 4)) * s * Scalar::imag_unit());
}

TEST(LieAlgebraIo, RoundTripOnCatalog) {
    for (const auto& e : catalog_entries())
        for (const auto& p : sample_params(e)) {
            LieAlgebra L = instantiate(e.label, p);
            std::string text = serialize_algebra(L);
            LieAlgebra M = parse_algebra(text);
            EXPECT_TRUE(same_constants(L, M)) << e.label;
            EXPECT_EQ(M.name(), L.name());
            EXPECT_EQ(serialize_algebra(M), text);
        }
}
