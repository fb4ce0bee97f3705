#include "lieinv/classify.hpp"

#include <algorithm>
#include <array>
#include <functional>

#include "lieinv/errors.hpp"
#include "lieinv/invariant.hpp"

namespace lieinv {

namespace {

using Key = std::vector<std::string>;

// Signature keys of every entry of one dimension at its first sample, checked for collisions.
std::map<Key, const CatalogEntry*> decision_table(int dim, const std::vector<Family>& families) {
    std::map<Key, const CatalogEntry*> table;
    for (const CatalogEntry* e : list_entries(dim)) {
        Params p = sample_params(*e).front();
        Key key;
        for (Family f : families) key.push_back(signature(expected_table(e->label, p, f)).to_string());
        auto [it, fresh] = table.emplace(key, e);
        if (!fresh)
            throw FixtureMismatch("decision table: " + e->label + " and " + it->second->label +
                                  " share the signature key");
    }
    return table;
}

const std::map<Key, const CatalogEntry*>& table4() {
    static const auto t = decision_table(4, {Family::Psi, Family::Phi});
    return t;
}

const std::map<Key, const CatalogEntry*>& table3(Method3 m) {
    static const auto psi = decision_table(3, {Family::Psi});
    static const auto phi0 = decision_table(3, {Family::Phi0});
    return m == Method3::Psi ? psi : phi0;
}

// Exact points where f takes value v, in canonical order, skipping `except`.
std::vector<Scalar> points_with(const StepFunction& f, int v, const std::vector<Scalar>& except = {}) {
    std::vector<Scalar> out;
    for (const auto& e : f.exceptional()) {
        if (e.value != v) continue;
        if (!e.branch.is_point())
            throw MathError("parameter recovery needs exact points; value " + std::to_string(v) +
                            " sits on the roots of " + e.branch.modulus().to_string());
        Scalar z = e.branch.root();
        if (std::find(except.begin(), except.end(), z) == except.end()) out.push_back(z);
    }
    return out;
}

Scalar first_point(const StepFunction& f, int v, const std::vector<Scalar>& except = {}) {
    auto pts = points_with(f, v, except);
    if (pts.empty()) throw FixtureMismatch("no point with value " + std::to_string(v));
    return pts.front();
}

bool admissible(const CatalogEntry& e, const Params& p) {
    try {
        check_admissible(e, p);
        return true;
    } catch (const ConstraintViolation&) {
        return false;
    }
}

bool tables_match(const CatalogEntry& e, const Params& p, const std::vector<std::pair<Family, const StepFunction*>>& fs) {
    for (const auto& [fam, f] : fs)
        if (!step_equal(expected_table(e.label, p, fam), *f)) return false;
    return true;
}

Params recover4(const CatalogEntry& e, const StepFunction& ps, const StepFunction& ph) {
    const std::string& tag = e.tag;
    auto one = [](const Scalar& a) { return Params{{"a", a}}; };
    if (tag == "g-8" || tag == "g-19") return one(first_point(ps, 6, {Scalar(1)}));
    if (tag == "g-18") return one(first_point(ps, 5));
    if (tag == "g-28") return one(first_point(ps, 4, {Scalar(2)}));
    if (tag == "g-20") return one(first_point(ph, 15) - Scalar(1));
    if (tag == "g-21") return one(first_point(ph, 13) + Scalar(1));
    if (tag == "g-11") {
        auto z = points_with(ph, 13);
        if (z.size() != 2) throw FixtureMismatch("g-11: expected two points with phi = 13");
        if (z[0] - Scalar(1) == Scalar(2) / z[1]) return one(z[0] - Scalar(1));
        return one(z[1] - Scalar(1));
    }
    if (tag == "g-17") {
        auto z = points_with(ph, 13);
        if (z.size() != 3) throw FixtureMismatch("g-17: expected three points with phi = 13");
        std::array<int, 3> ord = {0, 1, 2};
        do {
            const Scalar& z2 = z[ord[1]];
            const Scalar& z3 = z[ord[2]];
            if ((z2 + Scalar(1)).is_zero()) continue;
            Params p{{"a", (z3 + Scalar(1)) / (z2 + Scalar(1))}, {"b", (z2 * z3 - Scalar(1)) / (z2 + Scalar(1))}};
            if (admissible(e, p) && tables_match(e, p, {{Family::Psi, &ps}, {Family::Phi, &ph}})) return p;
        } while (std::next_permutation(ord.begin(), ord.end()));
        throw FixtureMismatch("g-17: no ordering of the phi = 13 points reproduces the input");
    }
    return {};
}

}  // namespace

Params canonical_params(const std::string& label, const Params& p) {
    const CatalogEntry& e = find_entry(label);
    if (!e.parametric()) return p;
    auto orbit = parameter_orbit(e, p);
    auto less = [&](const Params& x, const Params& y) {
        for (const auto& name : e.params) {
            int c = compare(x.at(name), y.at(name));
            if (c != 0) return c < 0;
        }
        return false;
    };
    return *std::min_element(orbit.begin(), orbit.end(), less);
}

bool catalog_isomorphic(const std::string& label1, const Params& p1, const std::string& label2,
                        const Params& p2) {
    if (label1 != label2) return false;
    return canonical_params(label1, p1) == canonical_params(label2, p2);
}

Identification classify3(const LieAlgebra& L, Method3 method) {
    if (L.dim() != 3) throw ConstraintViolation("classify3 needs a three-dimensional algebra");
    require_valid(L);
    Family fam = method == Method3::Psi ? Family::Psi : Family::Phi0;
    StepFunction f = compute_invariant(L, fam);
    std::string sig = signature(f).to_string();
    const auto& table = table3(method);
    auto it = table.find({sig});
    if (it == table.end()) throw FixtureMismatch("not a valid 3D Lie algebra table: " + sig);
    const CatalogEntry& e = *it->second;

    Params p;
    if (e.parametric()) {
        Scalar a = method == Method3::Psi ? first_point(f, 4, {Scalar(1)}) : first_point(f, 1) - Scalar(1);
        p = canonical_params(e.label, {{"a", a}});
    }
    if (!step_equal(expected_table(e.label, p, fam), f))
        throw FixtureMismatch(e.label + ": recovered parameters do not reproduce the " + family_name(fam) + " table");
    return {e.label, e.tag, p, {{family_name(fam), sig}}};
}

Identification identify4(const LieAlgebra& L) {
    if (L.dim() != 4) throw ConstraintViolation("identify4 needs a four-dimensional algebra");
    require_valid(L);
    StepFunction ps = psi(L);
    StepFunction ph = phi(L);
    Key key = {signature(ps).to_string(), signature(ph).to_string()};
    auto it = table4().find(key);
    if (it == table4().end())
        throw FixtureMismatch("signature pair psi " + key[0] + ", phi " + key[1] + " is not in the decision table");
    const CatalogEntry& e = *it->second;

    Params p = recover4(e, ps, ph);
    p = canonical_params(e.label, p);
    check_admissible(e, p);
    if (!tables_match(e, p, {{Family::Psi, &ps}, {Family::Phi, &ph}}))
        throw FixtureMismatch(e.label + ": recovered parameters " + params_to_string(p) +
                              " do not reproduce the input tables");
    return {e.label, e.tag, p, {{"psi", key[0]}, {"phi", key[1]}}};
}

}  // namespace lieinv
