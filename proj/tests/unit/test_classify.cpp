#include <gtest/gtest.h>

#include <random>

#include "lieinv/classify.hpp"
#include "lieinv/errors.hpp"
#include "lieinv/invariant.hpp"

using namespace lieinv;

namespace {

Scalar q(long n, long d = 1) { return Scalar(Rational(n, d)); }

// L1: g4.2 with a=2 in a non-standard basis.
LieAlgebra example_l1() {
    LieAlgebra L(4, "L1");
    auto set = [&](int i, int j, std::vector<long> v) {
        for (int k = 0; k < 4; ++k)
            if (v[k]) L.set_bracket(i - 1, j - 1, k, Scalar(v[k]));
    };
    set(1, 2, {-1, -1, 1, 0});
    set(1, 3, {0, -6, 4, 0});
    set(1, 4, {2, -1, 0, 1});
    set(2, 3, {3, -9, 5, 0});
    set(2, 4, {4, -2, 0, 2});
    set(3, 4, {6, -3, 0, 3});
    return L;
}

std::vector<std::vector<Scalar>> random_basis(int n, std::mt19937& rng) {
    std::uniform_int_distribution<int> d(-3, 3);
    for (;;) {
        std::vector<std::vector<Scalar>> P(n, std::vector<Scalar>(n));
        for (auto& row : P)
            for (auto& x : row) x = Scalar(d(rng));
        try {
            invert_matrix(P);
            return P;
        } catch (const MathError&) {
        }
    }
}

}  // namespace

TEST(Classify, CanonicalParams) {
    EXPECT_EQ(canonical_params("g4.8", {{"a", 3}}).at("a"), q(1, 3));
    Params c = canonical_params("g4.5", {{"a", 2}, {"b", 3}});
    EXPECT_EQ(c.at("a"), q(1, 3));
    EXPECT_EQ(c.at("b"), q(2, 3));
    EXPECT_EQ(canonical_params("g3.4", {{"a", q(1, 5)}}).at("a"), q(1, 5));
    EXPECT_EQ(canonical_params("g3.4", {{"a", 5}}).at("a"), q(1, 5));
    EXPECT_EQ(canonical_params("g4.2", {{"a", 3}}).at("a"), Scalar(3));
    EXPECT_EQ(canonical_params("g4.5(a,-1)", {{"a", 3}}).at("a"), Scalar(-3));
}

TEST(Classify, CanonicalParamsIdempotentAndOrbitConstant) {
    for (const auto& e : catalog_entries()) {
        if (!e.parametric()) continue;
        for (const auto& p : sample_params(e)) {
            Params c = canonical_params(e.label, p);
            EXPECT_EQ(canonical_params(e.label, c), c) << e.label;
            for (const auto& o : parameter_orbit(e, p)) EXPECT_EQ(canonical_params(e.label, o), c) << e.label;
        }
    }
}

TEST(Classify, CatalogIsomorphic) {
    EXPECT_TRUE(catalog_isomorphic("g4.5", {{"a", 2}, {"b", 3}}, "g4.5", {{"a", q(1, 3)}, {"b", q(2, 3)}}));
    EXPECT_TRUE(catalog_isomorphic("g3.4+g1", {{"a", 2}}, "g3.4+g1", {{"a", q(1, 2)}}));
    EXPECT_FALSE(catalog_isomorphic("g4.2", {{"a", 2}}, "g4.2", {{"a", 3}}));
    EXPECT_FALSE(catalog_isomorphic("g4.2", {{"a", 2}}, "g4.5(a,1)", {{"a", 2}}));
}

TEST(Classify, L1IsG42WithATwo) {
    Identification id = identify4(example_l1());
    EXPECT_EQ(id.label, "g4.2");
    EXPECT_EQ(id.tag, "g-11");
    EXPECT_EQ(id.params.at("a"), Scalar(2));
    EXPECT_EQ(id.evidence.at("psi"), "6_1,5_2,4");
    EXPECT_EQ(id.evidence.at("phi"), "13_2,12");
}

TEST(Classify, SquareParameterCase) {
    Identification id = identify4(instantiate("g4.5(a,a^2)", {{"a", 2}}));
    EXPECT_EQ(id.tag, "g-19");
    EXPECT_EQ(id.params.at("a"), q(1, 2));
}

TEST(Classify, Abelian) {
    EXPECT_EQ(identify4(LieAlgebra(4)).label, "4g1");
    EXPECT_EQ(classify3(LieAlgebra(3)).label, "3g1");
    EXPECT_EQ(classify3(LieAlgebra(3), Method3::Phi0).label, "3g1");
}

TEST(Classify, G34Canonical) {
    for (Method3 m : {Method3::Psi, Method3::Phi0}) {
        Identification id = classify3(instantiate("g3.4", {{"a", 5}}), m);
        EXPECT_EQ(id.label, "g3.4");
        EXPECT_EQ(id.params.at("a"), q(1, 5));
    }
}

TEST(Classify, RejectsWrongDimension) {
    EXPECT_THROW(identify4(LieAlgebra(3)), ConstraintViolation);
    EXPECT_THROW(classify3(LieAlgebra(4)), ConstraintViolation);
}

TEST(Classify, ThreeDimBothMethodsAgreeUnderBasisChange) {
    std::mt19937 rng(7);
    for (const CatalogEntry* e : list_entries(3)) {
        for (const auto& p : sample_params(*e)) {
            LieAlgebra L = change_basis(instantiate(e->label, p), random_basis(3, rng));
            Identification a = classify3(L, Method3::Psi);
            Identification b = classify3(L, Method3::Phi0);
            EXPECT_EQ(a.label, e->label);
            EXPECT_EQ(b.label, e->label);
            EXPECT_TRUE(catalog_isomorphic(a.label, a.params, e->label, p)) << e->label;
            EXPECT_EQ(a.params, b.params) << e->label;
        }
    }
}

TEST(Classify, FourDimLoop) {
    for (const CatalogEntry* e : list_entries(4)) {
        for (const auto& p : sample_params(*e)) {
            Identification id = identify4(instantiate(e->label, p));
            EXPECT_TRUE(catalog_isomorphic(id.label, id.params, e->label, p))
                << e->label << " " << params_to_string(p) << " identified as " << id.label << " "
                << params_to_string(id.params);
        }
    }
}

TEST(Classify, FourDimLoopUnderBasisChange) {
    std::mt19937 rng(11);
    for (const char* label : {"g4.2", "g4.5", "g4.5(a,-1-a)", "g4.8", "g3.4+g1", "g4.5(a,-1)"}) {
        const CatalogEntry& e = find_entry(label);
        Params p = sample_params(e).front();
        Identification id = identify4(change_basis(instantiate(label, p), random_basis(4, rng)));
        EXPECT_TRUE(catalog_isomorphic(id.label, id.params, label, p)) << label;
    }
}
