#pragma once

#include <optional>
#include <string>
#include <vector>

#include "lieinv/catalog.hpp"
#include "lieinv/cocycle.hpp"

namespace lieinv {

struct CriterionResult {
    /// "C1".."C4", or "K1", "K2", ... for extra twists.
    std::string name;
    std::string description;
    bool pass = true;
    /// Set on failure when the criterion is pointwise.
    std::optional<Branch> witness;
    int value_L = 0;
    int value_L0 = 0;
};

struct ContractionReport {
    std::vector<CriterionResult> criteria;

    bool excluded() const;
    /// "excluded" or "admissible by these criteria".
    std::string verdict() const;
    const CriterionResult& criterion(const std::string& name) const;
};

/// Necessary conditions for L0 to be a proper contraction of L:
/// C1 psi L <= psi L0, C2 psi L(1) < psi L0(1), C3 phi L <= phi L0, C4 phi0 L <= phi0 L0,
/// plus dim Z^q(L, kappa) <= dim Z^q(L0, kappa) for each extra constant twist.
ContractionReport criteria_report(const LieAlgebra& L, const LieAlgebra& L0,
                                  const std::vector<KappaSpec>& extra_kappas = {});

/// Exact answer for dimension three: C1 and C2.
bool decide3d(const LieAlgebra& L, const LieAlgebra& L0);

struct GraphNode {
    std::string label;
    Params params;
    std::string name() const;
};

struct ContractionEdge {
    GraphNode from, to;
};

/// All proper contractions among the three-dimensional entries, with the family g3.4
/// taken at each of the given values of a.
std::vector<ContractionEdge> contraction_graph3d(const std::vector<Scalar>& g34_samples = {Scalar(2)});

}  // namespace lieinv
