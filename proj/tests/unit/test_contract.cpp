#include <gtest/gtest.h>

#include <algorithm>
#include <set>

#include "lieinv/contract.hpp"
#include "lieinv/errors.hpp"
#include "lieinv/invariant.hpp"

using namespace lieinv;

namespace {

Scalar q(long n, long d = 1) { return Scalar(Rational(n, d)); }

LieAlgebra cat(const std::string& label, Params p = {}) { return instantiate(label, p); }

}  // namespace

TEST(Contract, G47IntoG42ExcludedByPhi0) {
    ContractionReport r = criteria_report(cat("g4.7"), cat("g4.2(1)"));
    EXPECT_TRUE(r.criterion("C1").pass);
    EXPECT_TRUE(r.criterion("C2").pass);
    EXPECT_TRUE(r.criterion("C3").pass);
    const CriterionResult& c4 = r.criterion("C4");
    ASSERT_FALSE(c4.pass);
    ASSERT_TRUE(c4.witness.has_value());
    EXPECT_EQ(c4.witness->root(), q(3, 2));
    EXPECT_EQ(c4.value_L, 1);
    EXPECT_EQ(c4.value_L0, 0);
    EXPECT_EQ(r.verdict(), "excluded");
}

TEST(Contract, Sl2PlusG1IntoG48m1) {
    ContractionReport r = criteria_report(cat("sl2+g1"), cat("g4.8(-1)"));
    for (const auto& c : r.criteria) EXPECT_TRUE(c.pass) << c.name;
    EXPECT_EQ(r.verdict(), "admissible by these criteria");
}

TEST(Contract, ReflexivePairFailsC2) {
    for (const char* label : {"g4.1", "sl2+g1", "4g1"}) {
        ContractionReport r = criteria_report(cat(label), cat(label));
        EXPECT_TRUE(r.criterion("C1").pass);
        EXPECT_FALSE(r.criterion("C2").pass);
        EXPECT_TRUE(r.excluded());
    }
}

TEST(Contract, ExtraKappa) {
    KappaSpec k;
    k.q = 1;
    k.k = {{Poly(1), Poly(2)}, {Poly(2), Poly(1)}};
    ContractionReport r = criteria_report(cat("g4.2(1)"), cat("4g1"), {k});
    ASSERT_EQ(r.criteria.size(), 5u);
    EXPECT_EQ(r.criteria[4].name, "K1");
    EXPECT_TRUE(r.criteria[4].pass);
    EXPECT_EQ(r.criteria[4].value_L0, 16);
    KappaSpec bad = k;
    bad.k[0][1] = Poly::variable();
    bad.k[1][0] = Poly::variable();
    EXPECT_THROW(criteria_report(cat("g4.2(1)"), cat("4g1"), {bad}), ConstraintViolation);
}

TEST(Contract, DimensionMismatch) {
    EXPECT_THROW(criteria_report(cat("sl2"), cat("4g1")), ConstraintViolation);
    EXPECT_THROW(decide3d(cat("sl2+g1"), cat("4g1")), ConstraintViolation);
}

TEST(Contract, Decide3d) {
    EXPECT_TRUE(decide3d(cat("g3.2"), cat("g3.3")));
    EXPECT_FALSE(decide3d(cat("g3.3"), cat("g3.2")));
    EXPECT_TRUE(decide3d(cat("sl2"), cat("g3.4(-1)")));
}

TEST(Contract, Graph3dMatchesKnownList) {
    auto edges = contraction_graph3d({Scalar(2)});
    std::set<std::pair<std::string, std::string>> got;
    for (const auto& e : edges) got.insert({e.from.name(), e.to.name()});
    std::set<std::pair<std::string, std::string>> want = {
        {"sl2", "g3.4(-1)"}, {"g3.2", "g3.3"},     {"g3.2", "g3.1"},     {"g3.4(2)", "g3.1"},
        {"g3.4(-1)", "g3.1"}, {"g2.1+g1", "g3.1"}, {"sl2", "g3.1"},
    };
    for (const char* from : {"g2.1+g1", "g3.1", "g3.2", "g3.3", "g3.4(-1)", "g3.4(2)", "sl2"})
        want.insert({from, "3g1"});
    EXPECT_EQ(got, want);
}

TEST(Contract, Graph3dIsAntisymmetric) {
    auto edges = contraction_graph3d({Scalar(2), Scalar(3), q(1, 3)});
    std::set<std::pair<std::string, std::string>> got;
    for (const auto& e : edges) got.insert({e.from.name(), e.to.name()});
    for (const auto& [a, b] : got) EXPECT_FALSE(got.count({b, a})) << a << " <-> " << b;
}

TEST(Contract, ChainFromSl2PlusG1) {
    const std::vector<std::string> chain = {"sl2+g1", "g4.8(-1)", "g3.4(-1)+g1", "g4.1", "g3.1+g1", "4g1"};
    const int der[] = {4, 5, 6, 7, 10, 16};
    for (std::size_t k = 0; k < chain.size(); ++k) {
        EXPECT_EQ(psi(cat(chain[k])).value_at(Scalar(1)), der[k]) << chain[k];
        if (k + 1 == chain.size()) break;
        ContractionReport r = criteria_report(cat(chain[k]), cat(chain[k + 1]));
        for (const auto& c : r.criteria) EXPECT_TRUE(c.pass) << chain[k] << " -> " << chain[k + 1] << " " << c.name;
    }
}

TEST(Contract, G42IntoG45PhiGrowsOnlyAtOnePlusA) {
    for (long a : {2, 3}) {
        LieAlgebra L = cat("g4.2", {{"a", a}});
        LieAlgebra L0 = cat("g4.5(a,1)", {{"a", a}});
        ContractionReport r = criteria_report(L, L0);
        EXPECT_FALSE(r.excluded()) << a;
        StepFunction f = phi(L), g = phi(L0);
        EXPECT_EQ(f.generic(), g.generic());
        std::vector<Scalar> grow;
        for (const auto* s : {&f, &g})
            for (const auto& e : s->exceptional())
                if (f.value_at(e.branch.root()) < g.value_at(e.branch.root()) &&
                    std::find(grow.begin(), grow.end(), e.branch.root()) == grow.end())
                    grow.push_back(e.branch.root());
        ASSERT_EQ(grow.size(), 1u) << a;
        EXPECT_EQ(grow.front(), Scalar(1 + a));
    }
}
