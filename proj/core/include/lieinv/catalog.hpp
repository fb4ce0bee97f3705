#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "lieinv/lie_algebra.hpp"
#include "lieinv/step_function.hpp"

namespace lieinv {

using Params = std::map<std::string, Scalar>;

/// One algebra (or one-parameter/two-parameter family) of the low-dimensional inventory.
///
/// Expressions are written in the literal grammar over the entry's parameters, `i`, and the
/// entry's extension generator when it has one.
struct CatalogEntry {
    struct Bracket {
        int i, j, k;  // 1-based: [e_i, e_j] contains expr * e_k
        std::string expr;
    };
    /// A table valid where `condition` vanishes; an empty condition matches everything.
    /// Table syntax: "point:value; point:value | generic".
    struct Table {
        std::string condition;
        std::string table;
    };

    std::string label;
    /// Position in the four-dimensional list, e.g. "g-17"; empty otherwise.
    std::string tag;
    int dim = 0;
    std::vector<std::string> params;
    /// Human-readable constraint, e.g. "a != 0, +-1".
    std::string constraint;
    /// Polynomials in the parameters that must not vanish.
    std::vector<std::string> nonzero;
    /// Generator and minimal polynomial of the extension the constants need, if any.
    std::string ext_generator;
    std::string ext_minpoly;
    std::vector<Bracket> brackets;
    std::vector<Table> psi, phi, phi0;
    /// Parameter tuples ("a,b" style, in `params` order) giving isomorphic algebras.
    std::vector<std::string> orbit;
    /// Sample parameter tuples in `params` order, e.g. {"2,3"}.
    std::vector<std::string> samples;

    bool parametric() const { return !params.empty(); }
    const std::vector<Table>& tables(Family f) const;
    const FieldTower* extension() const;
};

/// All entries: 2D, 3D, the 34 four-dimensional entries in list order, then L17.7.
const std::vector<CatalogEntry>& catalog_entries();

/// Throws ConstraintViolation for an unknown label.
const CatalogEntry& find_entry(const std::string& label);

/// Entries of the given dimension (all entries without a filter), in catalog order.
std::vector<const CatalogEntry*> list_entries(std::optional<int> dim = std::nullopt);

/// Parses "a=2,b=3" style assignments. Values may use `i` and the generator of `tower`.
Params parse_params(const std::string& text, const FieldTower* tower = nullptr);
/// Binds a tuple like "2,3" to the entry's parameter names.
Params bind_params(const CatalogEntry& e, const std::string& tuple);
std::vector<Params> sample_params(const CatalogEntry& e);
/// "a=2,b=3".
std::string params_to_string(const Params& p);

/// Throws ConstraintViolation for missing, unknown, or excluded parameters.
void check_admissible(const CatalogEntry& e, const Params& p);

LieAlgebra instantiate(const std::string& label, const Params& p = {});

/// The tabulated function at the given parameters. Throws NoFixture when no table applies
/// and FixtureMismatch when listed points coincide.
StepFunction expected_table(const std::string& label, const Params& p, Family f);

/// The parameter tuples the orbit expressions produce at `p` (including `p` itself).
std::vector<Params> parameter_orbit(const CatalogEntry& e, const Params& p);

}  // namespace lieinv
