#include <gtest/gtest.h>

#include "lieinv/catalog.hpp"
#include "lieinv/errors.hpp"
#include "lieinv/expr.hpp"
#include "lieinv/invariant.hpp"

using namespace lieinv;

namespace {

Scalar q(long n, long d = 1) { return Scalar(Rational(n, d)); }

StepFunction table(Family f, int generic, std::vector<std::pair<Scalar, int>> pts) {
    std::vector<StepFunction::Entry> e;
    for (auto& [p, v] : pts) e.push_back({Branch::point(p), v});
    return StepFunction(f, generic, e);
}

}  // namespace

TEST(Catalog, ListByDimension) {
    EXPECT_EQ(list_entries(2).size(), 2u);
    EXPECT_EQ(list_entries(3).size(), 8u);
    EXPECT_EQ(list_entries(7).size(), 0u);
    auto four = list_entries(4);
    ASSERT_EQ(four.size(), 34u);
    for (std::size_t k = 0; k < four.size(); ++k) EXPECT_EQ(four[k]->tag, "g-" + std::to_string(k + 1));
    EXPECT_EQ(list_entries(3).front()->label, "3g1");
    EXPECT_EQ(list_entries(3).back()->label, "sl2");
    EXPECT_EQ(list_entries().back()->label, "L17.7");
}

TEST(Catalog, InstantiateG42) {
    LieAlgebra L = instantiate("g4.2", {{"a", 2}});
    ASSERT_EQ(L.dim(), 4);
    EXPECT_EQ(L.c(0, 3, 0), Scalar(2));
    EXPECT_EQ(L.c(1, 3, 1), Scalar(1));
    EXPECT_EQ(L.c(2, 3, 1), Scalar(1));
    EXPECT_EQ(L.c(2, 3, 2), Scalar(1));
    EXPECT_EQ(L.c(3, 0, 0), Scalar(-2));
    int nonzero = 0;
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j)
            for (int k = 0; k < 4; ++k) nonzero += !L.c(i, j, k).is_zero();
    EXPECT_EQ(nonzero, 4);
}

TEST(Catalog, InstantiateL177) {
    LieAlgebra L = instantiate("L17.7", {{"a", 1}});
    ASSERT_EQ(L.dim(), 8);
    EXPECT_EQ(L.c(0, 2, 4), Scalar(-1));
    EXPECT_EQ(L.c(0, 3, 7), Scalar(1));
    EXPECT_EQ(L.c(0, 4, 6), Scalar(1));
    EXPECT_EQ(L.c(0, 5, 3), Scalar(1));
    EXPECT_EQ(L.c(1, 2, 6), Scalar(1));
    EXPECT_EQ(L.c(1, 5, 7), Scalar(1));
    EXPECT_EQ(L.c(2, 4, 7), Scalar(1));
    int nonzero = 0;
    for (int i = 0; i < 8; ++i)
        for (int j = i + 1; j < 8; ++j)
            for (int k = 0; k < 8; ++k) nonzero += !L.c(i, j, k).is_zero();
    EXPECT_EQ(nonzero, 7);
}

TEST(Catalog, RefusesExcludedParameters) {
    try {
        instantiate("g3.4", {{"a", 1}});
        FAIL() << "g3.4 at a=1 was accepted";
    } catch (const ConstraintViolation& e) {
        EXPECT_NE(std::string(e.what()).find("a != 0, +-1"), std::string::npos) << e.what();
    }
    EXPECT_THROW(instantiate("g4.2", {{"a", 0}}), ConstraintViolation);
    EXPECT_THROW(instantiate("g4.2", {{"a", -2}}), ConstraintViolation);
    EXPECT_THROW(instantiate("g4.5", {{"a", 2}, {"b", 4}}), ConstraintViolation);
    EXPECT_THROW(instantiate("g4.5", {{"a", 2}, {"b", q(1, 2)}}), ConstraintViolation);
    EXPECT_THROW(instantiate("g4.5", {{"a", 2}, {"b", -3}}), ConstraintViolation);
    EXPECT_THROW(instantiate("g4.5(a,-1)", {{"a", Scalar::imag_unit()}}), ConstraintViolation);
    EXPECT_THROW(instantiate("g4.8", {{"a", q(-1, 2)}}), ConstraintViolation);
    const FieldTower* s3 = parse_tower("s", "s^2-3");
    Scalar w = parse_scalar("-1/2+s/2*i", {s3, {}, {}});
    EXPECT_THROW(instantiate("g4.8", {{"a", w}}), ConstraintViolation);
    EXPECT_THROW(instantiate("g4.5(a,a^2)", {{"a", w}}), ConstraintViolation);
    EXPECT_THROW(instantiate("L17.7", {{"a", 0}}), ConstraintViolation);
}

TEST(Catalog, RefusesUnknownLabelAndParameters) {
    EXPECT_THROW(instantiate("g9.9"), ConstraintViolation);
    EXPECT_THROW(instantiate("g4.2"), ConstraintViolation);
    EXPECT_THROW(instantiate("g4.2", {{"a", 2}, {"c", 1}}), ConstraintViolation);
    EXPECT_THROW(instantiate("sl2", {{"a", 2}}), ConstraintViolation);
}

TEST(Catalog, ExpectedTableG45) {
    StepFunction f = expected_table("g4.5", {{"a", 2}, {"b", 3}}, Family::Psi);
    StepFunction want = table(Family::Psi, 4,
                              {{1, 6}, {2, 5}, {3, 5}, {q(1, 2), 5}, {q(1, 3), 5}, {q(2, 3), 5}, {q(3, 2), 5}});
    EXPECT_TRUE(step_equal(f, want));
}

TEST(Catalog, ExpectedTableL177) {
    StepFunction f = expected_table("L17.7", {{"a", 2}}, Family::Phi);
    StepFunction want = table(Family::Phi, 80, {{0, 104}, {1, 82}, {-2, 81}, {q(-1, 4), 81}});
    EXPECT_TRUE(step_equal(f, want));
    StepFunction one_ = expected_table("L17.7", {{"a", 1}}, Family::Phi);
    EXPECT_TRUE(step_equal(one_, table(Family::Phi, 80, {{0, 112}, {1, 83}, {-1, 81}})));
    EXPECT_THROW(expected_table("L17.7", {{"a", 2}}, Family::Phi0), NoFixture);
}

TEST(Catalog, ExpectedTableConstant) {
    StepFunction f = expected_table("2g1", {}, Family::Psi);
    EXPECT_EQ(f.generic(), 4);
    EXPECT_TRUE(f.exceptional().empty());
}

TEST(Catalog, SampleParametersAreAdmissible) {
    for (const auto& e : catalog_entries()) {
        auto samples = sample_params(e);
        ASSERT_FALSE(samples.empty()) << e.label;
        for (const auto& p : samples) {
            LieAlgebra L = instantiate(e.label, p);
            EXPECT_FALSE(validate(L).has_value()) << e.label;
            EXPECT_EQ(L.dim(), e.dim);
        }
    }
}

TEST(Catalog, OrbitMembersGiveTheSameTables) {
    for (const auto& e : catalog_entries()) {
        if (!e.parametric() || e.dim > 4) continue;
        for (const auto& p : sample_params(e))
            for (const auto& o : parameter_orbit(e, p))
                for (Family f : {Family::Psi, Family::Phi, Family::Phi0})
                    EXPECT_TRUE(step_equal(expected_table(e.label, p, f), expected_table(e.label, o, f)))
                        << e.label << " " << params_to_string(o);
    }
}

TEST(Catalog, ParseParams) {
    Params p = parse_params("a=2, b=-1/3+i");
    EXPECT_EQ(p.at("a"), Scalar(2));
    EXPECT_EQ(p.at("b"), q(-1, 3) + Scalar::imag_unit());
    EXPECT_THROW(parse_params("a=2,a=3"), ParseError);
    EXPECT_THROW(parse_params("a"), ParseError);
    EXPECT_EQ(params_to_string(p), "a=2,b=-1/3+i");
}

// Computed invariants against the catalog tables, every entry up to dimension four.
struct RegressionCase {
    std::string label;
    std::size_t sample;
};

class CatalogRegression : public ::testing::TestWithParam<RegressionCase> {};

TEST_P(CatalogRegression, MatchesTables) {
    const CatalogEntry& e = find_entry(GetParam().label);
    Params p = sample_params(e)[GetParam().sample];
    LieAlgebra L = instantiate(e.label, p);
    for (Family f : {Family::Psi, Family::Phi, Family::Phi0}) {
        StepFunction got = compute_invariant(L, f);
        StepFunction want = expected_table(e.label, p, f);
        EXPECT_TRUE(step_equal(got, want)) << e.label << " " << params_to_string(p) << " " << family_name(f)
                                           << ": computed " << signature(got).to_string() << ", table "
                                           << signature(want).to_string();
    }
}

std::vector<RegressionCase> regression_cases() {
    std::vector<RegressionCase> out;
    for (const auto& e : catalog_entries()) {
        if (e.dim > 4) continue;
        for (std::size_t k = 0; k < sample_params(e).size(); ++k) out.push_back({e.label, k});
    }
    return out;
}

std::string case_name(const ::testing::TestParamInfo<RegressionCase>& info) {
    std::string s;
    for (char c : info.param.label) s += std::isalnum(static_cast<unsigned char>(c)) ? c : '_';
    return std::to_string(info.index) + "_" + s + "_" + std::to_string(info.param.sample);
}

INSTANTIATE_TEST_SUITE_P(AllEntries, CatalogRegression, ::testing::ValuesIn(regression_cases()), case_name);
