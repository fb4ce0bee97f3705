#pragma once

#include <map>
#include <string>

#include "lieinv/catalog.hpp"

namespace lieinv {

struct Identification {
    std::string label;
    /// Four-dimensional list position, e.g. "g-11"; empty in dimension three.
    std::string tag;
    /// Canonical representative of the parameter orbit.
    Params params;
    /// Occurrence signatures that decided the label, keyed by family name.
    std::map<std::string, std::string> evidence;
};

enum class Method3 { Psi, Phi0 };

/// Identifies a three-dimensional algebra from psi alone or from phi0 alone.
Identification classify3(const LieAlgebra& L, Method3 method = Method3::Psi);

/// Identifies a four-dimensional algebra from psi and phi.
Identification identify4(const LieAlgebra& L);

/// Minimum of the parameter orbit under the scalar order, compared parameter by parameter.
Params canonical_params(const std::string& label, const Params& p);

bool catalog_isomorphic(const std::string& label1, const Params& p1, const std::string& label2,
                        const Params& p2);

}  // namespace lieinv
