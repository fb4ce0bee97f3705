#include "lieinv/contract.hpp"

#include "lieinv/errors.hpp"
#include "lieinv/invariant.hpp"
#include "lieinv/parallel.hpp"

namespace lieinv {

namespace {

CriterionResult pointwise(std::string name, std::string description, const StepFunction& f, const StepFunction& g) {
    LeqResult r = leq_pointwise(f, g);
    CriterionResult c{std::move(name), std::move(description), r.holds, r.witness, 0, 0};
    if (!r.holds) {
        c.value_L = r.value_f;
        c.value_L0 = r.value_g;
    }
    return c;
}

CriterionResult strict_at_one(const StepFunction& f, const StepFunction& g) {
    CriterionResult c{"C2", "psi L(1) < psi L0(1)", true, std::nullopt, f.value_at(Scalar(1)), g.value_at(Scalar(1))};
    c.pass = c.value_L < c.value_L0;
    if (!c.pass) c.witness = Branch::point(Scalar(1));
    return c;
}

}  // namespace

bool ContractionReport::excluded() const {
    for (const auto& c : criteria)
        if (!c.pass) return true;
    return false;
}

std::string ContractionReport::verdict() const { return excluded() ? "excluded" : "admissible by these criteria"; }

const CriterionResult& ContractionReport::criterion(const std::string& name) const {
    for (const auto& c : criteria)
        if (c.name == name) return c;
    throw Error("report has no criterion " + name);
}

ContractionReport criteria_report(const LieAlgebra& L, const LieAlgebra& L0, const std::vector<KappaSpec>& extra_kappas) {
    if (L.dim() != L0.dim()) throw ConstraintViolation("contraction criteria need algebras of equal dimension");
    require_valid(L);
    require_valid(L0);
    for (const auto& k : extra_kappas) {
        k.check();
        for (const auto& row : k.k)
            for (const auto& e : row)
                if (e.degree() > 0) throw ConstraintViolation("extra twists must have constant entries");
    }

    const Family fams[3] = {Family::Psi, Family::Phi, Family::Phi0};
    std::vector<std::optional<StepFunction>> fs(6);
    parallel_for(6, [&](std::size_t t) { fs[t] = compute_invariant(t < 3 ? L : L0, fams[t % 3]); });

    ContractionReport rep;
    rep.criteria.push_back(pointwise("C1", "psi L <= psi L0", *fs[0], *fs[3]));
    rep.criteria.push_back(strict_at_one(*fs[0], *fs[3]));
    rep.criteria.push_back(pointwise("C3", "phi L <= phi L0", *fs[1], *fs[4]));
    rep.criteria.push_back(pointwise("C4", "phi0 L <= phi0 L0", *fs[2], *fs[5]));
    for (std::size_t k = 0; k < extra_kappas.size(); ++k) {
        CriterionResult c;
        c.name = "K" + std::to_string(k + 1);
        c.description = "dim Z^" + std::to_string(extra_kappas[k].q) + "(L, kappa) <= dim Z^" +
                        std::to_string(extra_kappas[k].q) + "(L0, kappa)";
        c.value_L = cocycle_dim(L, extra_kappas[k]);
        c.value_L0 = cocycle_dim(L0, extra_kappas[k]);
        c.pass = c.value_L <= c.value_L0;
        rep.criteria.push_back(std::move(c));
    }
    return rep;
}

bool decide3d(const LieAlgebra& L, const LieAlgebra& L0) {
    if (L.dim() != 3 || L0.dim() != 3) throw ConstraintViolation("decide3d needs three-dimensional algebras");
    StepFunction f = psi(L);
    StepFunction g = psi(L0);
    return leq_pointwise(f, g).holds && strict_at_one(f, g).pass;
}

std::string GraphNode::name() const {
    if (params.empty()) return label;
    return label + "(" + params.begin()->second.to_string() + ")";
}

std::vector<ContractionEdge> contraction_graph3d(const std::vector<Scalar>& g34_samples) {
    std::vector<GraphNode> nodes;
    for (const CatalogEntry* e : list_entries(3)) {
        if (!e->parametric()) {
            nodes.push_back({e->label, {}});
            continue;
        }
        for (const auto& a : g34_samples) nodes.push_back({e->label, {{e->params.front(), a}}});
    }
    std::vector<std::optional<StepFunction>> fs(nodes.size());
    parallel_for(nodes.size(), [&](std::size_t t) { fs[t] = psi(instantiate(nodes[t].label, nodes[t].params)); });

    std::vector<ContractionEdge> edges;
    for (std::size_t i = 0; i < nodes.size(); ++i)
        for (std::size_t j = 0; j < nodes.size(); ++j)
            if (i != j && leq_pointwise(*fs[i], *fs[j]).holds && strict_at_one(*fs[i], *fs[j]).pass)
                edges.push_back({nodes[i], nodes[j]});
    return edges;
}

}  // namespace lieinv
