#pragma once

#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "lieinv/param_matrix.hpp"

namespace lieinv {

enum class Family { Psi, Phi, Phi0 };

std::string family_name(Family f);
/// Accepts "psi", "phi", "phi0"; throws ParseError otherwise.
Family parse_family(const std::string& s);

/// Integer-valued function of the twist variable: a generic value plus finitely many
/// points (exact, or all roots of a square-free modulus) where the value is larger.
class StepFunction {
public:
    struct Entry {
        Branch branch;
        int value;
    };

    StepFunction(Family family, int generic, std::vector<Entry> exceptional = {},
                 const FieldTower* tower = nullptr);
    /// Computed function; keeps the profile so values at foreign points are exact.
    static StepFunction from_profile(Family family, const KernelProfile& prof, const FieldTower* tower);

    Family family() const { return family_; }
    int generic() const { return generic_; }
    const FieldTower* tower() const { return tower_; }
    /// Canonical order: exact points by the scalar order, then branches by degree and coefficients.
    const std::vector<Entry>& exceptional() const { return entries_; }
    bool has_provenance() const { return profile_ != nullptr; }
    const KernelProfile* profile() const { return profile_.get(); }

    int value_at(const Scalar& a) const;
    /// Values on the roots of a branch; the returned pieces partition its roots.
    std::vector<std::pair<Branch, int>> value_on(const Branch& b) const;
    /// The same lookups using only the stored table.
    int table_value_at(const Scalar& a) const;
    std::vector<std::pair<Branch, int>> table_value_on(const Branch& b) const;

    /// Monic product of all moduli carrying value v.
    Poly value_locus(int v) const;

    int max_value() const;

private:
    void canonicalize();

    Family family_;
    int generic_;
    std::vector<Entry> entries_;
    const FieldTower* tower_;
    std::shared_ptr<const KernelProfile> profile_;
};

/// Multiset of (value, number of distinct points) plus the generic value.
struct OccurrenceSignature {
    int generic = 0;
    /// Sorted by value, descending.
    std::vector<std::pair<int, int>> occurrences;

    /// E.g. "6_1,5_2,4"; the generic value comes last.
    std::string to_string() const;
    friend bool operator==(const OccurrenceSignature& a, const OccurrenceSignature& b) {
        return a.generic == b.generic && a.occurrences == b.occurrences;
    }
    friend bool operator<(const OccurrenceSignature& a, const OccurrenceSignature& b) {
        return a.to_string() < b.to_string();
    }
};

OccurrenceSignature signature(const StepFunction& f);

/// Point of the twist variable rendered for reports.
std::string point_to_string(const Branch& b);

struct LeqResult {
    bool holds = true;
    /// First violating point (set when !holds).
    std::optional<Branch> witness;
    int value_f = 0;
    int value_g = 0;
};

/// Decides f(a) <= g(a) for every complex a. Throws MathError for different families.
LeqResult leq_pointwise(const StepFunction& f, const StepFunction& g);
/// Same decision evaluating only the stored tables of both functions.
LeqResult leq_pointwise_tables(const StepFunction& f, const StepFunction& g);

bool step_equal(const StepFunction& f, const StepFunction& g);

}  // namespace lieinv
