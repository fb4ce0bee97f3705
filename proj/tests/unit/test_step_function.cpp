#include <gtest/gtest.h>

#include "lieinv/catalog.hpp"
#include "lieinv/errors.hpp"
#include "lieinv/expr.hpp"
#include "lieinv/invariant.hpp"

using namespace lieinv;

namespace {

Scalar q(long n, long d = 1) { return Scalar(Rational(n, d)); }
Poly P(const std::string& s) { return parse_poly(s, {nullptr, {}, "x"}); }
LieAlgebra cat(const std::string& label, Params p = {}) { return instantiate(label, p); }

std::vector<std::pair<Scalar, int>> points(const StepFunction& f) {
    std::vector<std::pair<Scalar, int>> out;
    for (const auto& e : f.exceptional()) out.push_back({e.branch.root(), e.value});
    return out;
}

using Pts = std::vector<std::pair<Scalar, int>>;

}  // namespace

TEST(Invariant, Psi) {
    StepFunction s = psi(cat("sl2"));
    EXPECT_EQ(s.generic(), 0);
    EXPECT_EQ(points(s), (Pts{{-1, 5}, {1, 3}, {2, 1}}));
    StepFunction a = psi(LieAlgebra(4));
    EXPECT_EQ(a.generic(), 16);
    EXPECT_TRUE(a.exceptional().empty());
}

TEST(Invariant, Phi) {
    StepFunction f = phi(cat("g4.1"));
    EXPECT_EQ(f.generic(), 15);
    EXPECT_EQ(points(f), (Pts{{-1, 16}, {0, 16}}));
    StepFunction g = phi(cat("g3.1"));
    EXPECT_EQ(g.generic(), 8);
    EXPECT_EQ(points(g), (Pts{{0, 9}}));
}

TEST(Invariant, Phi0) {
    StepFunction f = phi0(cat("g4.7"));
    EXPECT_EQ(f.generic(), 0);
    EXPECT_EQ(points(f), (Pts{{q(3, 2), 1}, {2, 1}}));
    StepFunction g = phi0(cat("g3.3"));
    EXPECT_EQ(g.generic(), 0);
    EXPECT_EQ(points(g), (Pts{{2, 6}}));
    StepFunction a = phi0(LieAlgebra(3));
    EXPECT_EQ(a.generic(), 9);
    EXPECT_TRUE(a.exceptional().empty());
}

TEST(Invariant, PsiAtOneIsDerivationDimension) {
    for (const char* label : {"sl2+g1", "g4.8(-1)", "g3.4(-1)+g1", "g4.1", "g3.1+g1", "g2.1+g2.1", "g4.7"}) {
        LieAlgebra L = cat(label);
        EXPECT_EQ(psi(L).value_at(Scalar(1)), der_dim(L, 1, 1, 1)) << label;
    }
}

TEST(Invariant, DirectSumHasItsOwnTable) {
    StepFunction f = psi(direct_sum(cat("g2.1"), cat("g2.1")));
    EXPECT_TRUE(step_equal(f, expected_table("g2.1+g2.1", {}, Family::Psi)));
    EXPECT_EQ(f.generic(), 4);
    EXPECT_EQ(f.value_at(Scalar(0)), 6);
    EXPECT_EQ(f.value_at(Scalar(1)), 4);
}

TEST(Invariant, ValuesBoundedByCochainSpace) {
    for (const CatalogEntry* e : list_entries(3))
        for (const auto& p : sample_params(*e))
            for (Family f : {Family::Psi, Family::Phi, Family::Phi0}) {
                StepFunction s = compute_invariant(instantiate(e->label, p), f);
                EXPECT_LE(s.max_value(), family_bound(3, f)) << e->label;
            }
    EXPECT_EQ(family_bound(4, Family::Psi), 16);
    EXPECT_EQ(family_bound(4, Family::Phi), 24);
}

TEST(Signature, Examples) {
    EXPECT_EQ(signature(psi(cat("g4.2", {{"a", 3}}))).to_string(), "6_1,5_2,4");
    EXPECT_EQ(signature(psi(cat("g4.5", {{"a", 2}, {"b", 3}}))).to_string(), "6_1,5_6,4");
    OccurrenceSignature c = signature(StepFunction(Family::Psi, 16));
    EXPECT_TRUE(c.occurrences.empty());
    EXPECT_EQ(c.to_string(), "16");
}

TEST(Signature, BranchCountsDistinctRoots) {
    StepFunction f(Family::Psi, 4, {{Branch(P("x^2-x+2")), 5}, {Branch::point(Scalar(1)), 5}, {Branch::point(Scalar(3)), 6}});
    OccurrenceSignature s = signature(f);
    EXPECT_EQ(s.to_string(), "6_1,5_3,4");
    EXPECT_EQ(f.value_at(Scalar(3)), 6);
    EXPECT_EQ(f.value_at(Scalar(7)), 4);
    EXPECT_EQ(f.value_locus(5), P("(x^2-x+2)*(x-1)"));
}

TEST(StepFunction, RejectsMalformedTables) {
    EXPECT_THROW(StepFunction(Family::Psi, 4, {{Branch::point(Scalar(1)), 3}}), MathError);
    EXPECT_TRUE(StepFunction(Family::Psi, 4, {{Branch::point(Scalar(1)), 4}}).exceptional().empty());
    EXPECT_THROW(StepFunction(Family::Psi, 4, {{Branch::point(Scalar(1)), 5}, {Branch(P("x^2-1")), 6}}), MathError);
}

TEST(StepFunction, FamilyNames) {
    for (Family f : {Family::Psi, Family::Phi, Family::Phi0}) EXPECT_EQ(parse_family(family_name(f)), f);
    EXPECT_THROW(parse_family("chi"), ParseError);
}

TEST(Leq, Examples) {
    LeqResult r = leq_pointwise(psi(cat("sl2+g1")), psi(cat("g4.8(-1)")));
    EXPECT_TRUE(r.holds);
    LeqResult w = leq_pointwise(phi0(cat("g4.7")), phi0(cat("g4.2(1)")));
    ASSERT_FALSE(w.holds);
    ASSERT_TRUE(w.witness.has_value());
    EXPECT_EQ(w.witness->root(), q(3, 2));
    EXPECT_EQ(w.value_f, 1);
    EXPECT_EQ(w.value_g, 0);
    StepFunction f = psi(cat("g4.7"));
    EXPECT_TRUE(leq_pointwise(f, f).holds);
    EXPECT_THROW(leq_pointwise(f, phi(cat("g4.7"))), MathError);
}

TEST(Leq, TableOnlyRouteAgrees) {
    std::vector<std::string> labels = {"sl2+g1", "g4.8(-1)", "g4.7", "g4.2(1)", "g4.1", "4g1"};
    for (Family fam : {Family::Psi, Family::Phi, Family::Phi0})
        for (const auto& a : labels)
            for (const auto& b : labels) {
                StepFunction f = compute_invariant(cat(a), fam), g = compute_invariant(cat(b), fam);
                StepFunction tf(fam, f.generic(), f.exceptional()), tg(fam, g.generic(), g.exceptional());
                EXPECT_EQ(leq_pointwise(f, g).holds, leq_pointwise_tables(tf, tg).holds) << a << " " << b;
            }
}

TEST(StepEqual, Examples) {
    EXPECT_TRUE(step_equal(psi(cat("g3.4", {{"a", 2}})), psi(cat("g3.4", {{"a", q(1, 2)}}))));
    EXPECT_FALSE(step_equal(psi(cat("g3.2")), psi(cat("g3.3"))));
    EXPECT_EQ(psi(cat("g3.2")).value_at(Scalar(1)), 4);
    EXPECT_EQ(psi(cat("g3.3")).value_at(Scalar(1)), 6);
    StepFunction f = phi(cat("sl2"));
    EXPECT_TRUE(step_equal(f, f));
}

TEST(StepEqual, BranchRefinement) {
    StepFunction a(Family::Psi, 0, {{Branch(P("x^2-1")), 2}});
    StepFunction b(Family::Psi, 0, {{Branch::point(Scalar(1)), 2}, {Branch::point(Scalar(-1)), 2}});
    StepFunction c(Family::Psi, 0, {{Branch::point(Scalar(1)), 2}, {Branch::point(Scalar(-1)), 3}});
    EXPECT_TRUE(step_equal(a, b));
    EXPECT_FALSE(step_equal(a, c));
    EXPECT_EQ(a.value_at(Scalar(-1)), 2);
    EXPECT_EQ(point_to_string(Branch(P("x^2-x+2"))), "x^2-x+2");
    EXPECT_EQ(point_to_string(Branch::point(q(3, 2))), "3/2");
}
