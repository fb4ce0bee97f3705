#pragma once

#include <map>
#include <string>

#include "lieinv/poly.hpp"

namespace lieinv {

/// Names visible to an expression: the imaginary unit `i`, an optional tower generator,
/// named scalar parameters, and optionally one polynomial variable.
struct ExprContext {
    const FieldTower* tower = nullptr;
    std::map<std::string, Scalar> params;
    /// Name of the polynomial variable; empty forbids variables.
    std::string variable;
};

/// Parses + - * / ^ expressions with integer exponents. Division is allowed only by
/// nonzero constants. Throws ParseError with the character offset on failure.
Poly parse_poly(const std::string& text, const ExprContext& ctx);

/// Parses a constant expression.
Scalar parse_scalar(const std::string& text, const ExprContext& ctx = {});

/// Parses a tower declaration such as generator "s" with minpoly "s^2-7".
const FieldTower* parse_tower(const std::string& generator, const std::string& minpoly);

}  // namespace lieinv
