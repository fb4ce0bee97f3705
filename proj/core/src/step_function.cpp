#include "lieinv/step_function.hpp"

#include <algorithm>
#include <functional>
#include <map>

#include "lieinv/errors.hpp"
#include "lieinv/roots.hpp"

namespace lieinv {

std::string family_name(Family f) {
    switch (f) {
        case Family::Psi: return "psi";
        case Family::Phi: return "phi";
        case Family::Phi0: return "phi0";
    }
    return "?";
}

Family parse_family(const std::string& s) {
    if (s == "psi") return Family::Psi;
    if (s == "phi") return Family::Phi;
    if (s == "phi0") return Family::Phi0;
    throw ParseError("unknown family \"" + s + "\" (expected psi, phi or phi0)");
}

namespace {

// Exact points first, by the scalar order of the root; then branches by degree and coefficients.
bool point_less(const Branch& a, const Branch& b) {
    if (a.is_point() && b.is_point()) return compare(a.root(), b.root()) < 0;
    if (a.is_point() != b.is_point()) return a.is_point();
    return compare(a, b) < 0;
}

Poly lcm(const Poly& a, const Poly& b) { return (a * exact_div(b, gcd(a, b))).monic(); }

}  // namespace

StepFunction::StepFunction(Family family, int generic, std::vector<Entry> exceptional, const FieldTower* tower)
    : family_(family), generic_(generic), entries_(std::move(exceptional)), tower_(tower) {
    canonicalize();
}

StepFunction StepFunction::from_profile(Family family, const KernelProfile& prof, const FieldTower* tower) {
    std::vector<Entry> e;
    for (const auto& [b, v] : prof.exceptional) e.push_back({b, v});
    StepFunction f(family, prof.generic_kernel_dim, std::move(e), tower);
    f.profile_ = std::make_shared<KernelProfile>(prof);
    return f;
}

void StepFunction::canonicalize() {
    std::map<int, Poly> by_value;
    for (const auto& e : entries_) {
        if (e.value < generic_) throw MathError("exceptional value below the generic value");
        if (e.value == generic_) continue;
        auto it = by_value.find(e.value);
        if (it == by_value.end())
            by_value.emplace(e.value, e.branch.modulus());
        else
            it->second = lcm(it->second, e.branch.modulus());
    }
    for (auto i = by_value.begin(); i != by_value.end(); ++i)
        for (auto j = std::next(i); j != by_value.end(); ++j)
            if (gcd(i->second, j->second).degree() > 0)
                throw MathError("a point carries two different values");
    std::vector<Entry> out;
    for (const auto& [v, m] : by_value) {
        LinearSplit s = split_linear_factors(m, tower_);
        for (const auto& r : s.roots) out.push_back({Branch::point(r), v});
        if (s.rest.degree() > 0) out.push_back({Branch::trusted(s.rest), v});
    }
    std::sort(out.begin(), out.end(), [](const Entry& a, const Entry& b) { return point_less(a.branch, b.branch); });
    entries_ = std::move(out);
}

int StepFunction::table_value_at(const Scalar& a) const {
    for (const auto& e : entries_)
        if (e.branch.modulus().eval(a).is_zero()) return e.value;
    return generic_;
}

std::vector<std::pair<Branch, int>> StepFunction::table_value_on(const Branch& b) const {
    if (b.is_point()) return {{b, table_value_at(b.root())}};
    std::vector<std::pair<Branch, int>> out;
    Poly rest = b.modulus();
    for (const auto& e : entries_) {
        Poly g = gcd(rest, e.branch.modulus());
        if (g.degree() <= 0) continue;
        out.push_back({Branch::trusted(g), e.value});
        rest = exact_div(rest, g).monic();
        if (rest.degree() <= 0) break;
    }
    if (rest.degree() > 0) out.push_back({Branch::trusted(rest), generic_});
    return out;
}

int StepFunction::value_at(const Scalar& a) const {
    if (!profile_) return table_value_at(a);
    return profile_->kernel_dim_at(a);
}

std::vector<std::pair<Branch, int>> StepFunction::value_on(const Branch& b) const {
    if (!profile_) return table_value_on(b);
    return profile_->kernel_dim_at(b);
}

Poly StepFunction::value_locus(int v) const {
    Poly p(1);
    for (const auto& e : entries_)
        if (e.value == v) p *= e.branch.modulus();
    return p.monic();
}

int StepFunction::max_value() const {
    int m = generic_;
    for (const auto& e : entries_) m = std::max(m, e.value);
    return m;
}

std::string OccurrenceSignature::to_string() const {
    std::string s;
    for (const auto& [v, m] : occurrences) s += std::to_string(v) + "_" + std::to_string(m) + ",";
    return s + std::to_string(generic);
}

OccurrenceSignature signature(const StepFunction& f) {
    std::map<int, int, std::greater<int>> m;
    for (const auto& e : f.exceptional()) m[e.value] += e.branch.degree();
    OccurrenceSignature s;
    s.generic = f.generic();
    s.occurrences.assign(m.begin(), m.end());
    return s;
}

std::string point_to_string(const Branch& b) {
    if (b.is_point()) return b.root().to_string();
    return b.modulus().to_string();
}

namespace {

using Lookup = std::vector<std::pair<Branch, int>> (StepFunction::*)(const Branch&) const;

LeqResult leq_impl(const StepFunction& f, const StepFunction& g, Lookup look) {
    if (f.family() != g.family()) throw MathError("comparing step functions of different families");
    LeqResult res;
    std::vector<Branch> points;
    for (const auto& e : f.exceptional()) points.push_back(e.branch);
    for (const auto& e : g.exceptional()) points.push_back(e.branch);
    if (f.generic() > g.generic()) {
        // Any point outside both exceptional sets witnesses the generic comparison.
        for (long k = 0;; ++k) {
            Scalar a(k);
            bool hit = false;
            for (const auto& p : points)
                if (p.modulus().eval(a).is_zero()) hit = true;
            if (!hit) {
                res.holds = false;
                res.witness = Branch::point(a);
                res.value_f = f.generic();
                res.value_g = g.generic();
                return res;
            }
        }
    }
    std::sort(points.begin(), points.end(), point_less);
    for (const auto& p : points) {
        for (const auto& [pf, vf] : (f.*look)(p)) {
            for (const auto& [pg, vg] : (g.*look)(pf)) {
                if (vf > vg) {
                    res.holds = false;
                    res.witness = pg;
                    res.value_f = vf;
                    res.value_g = vg;
                    return res;
                }
            }
        }
    }
    return res;
}

}  // namespace

LeqResult leq_pointwise(const StepFunction& f, const StepFunction& g) {
    return leq_impl(f, g, &StepFunction::value_on);
}

LeqResult leq_pointwise_tables(const StepFunction& f, const StepFunction& g) {
    return leq_impl(f, g, &StepFunction::table_value_on);
}

bool step_equal(const StepFunction& f, const StepFunction& g) {
    if (f.family() != g.family() || f.generic() != g.generic()) return false;
    std::map<int, int> vf, vg;
    for (const auto& e : f.exceptional()) vf[e.value] = 1;
    for (const auto& e : g.exceptional()) vg[e.value] = 1;
    if (vf != vg) return false;
    for (const auto& [v, one] : vf)
        if (f.value_locus(v) != g.value_locus(v)) return false;
    return true;
}

}  // namespace lieinv
