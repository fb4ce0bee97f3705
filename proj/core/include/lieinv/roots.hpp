#pragma once

#include <complex>
#include <vector>

#include "lieinv/poly.hpp"

namespace lieinv {

/// Approximate complex roots (with multiplicity) of an ascending complex coefficient vector.
/// Only used to propose candidates; every consumer verifies candidates exactly.
std::vector<std::complex<long double>> numeric_roots(const std::vector<std::complex<long double>>& coeffs);

/// Best rational approximation of `v` by continued fractions, or false if none with a
/// denominator below `max_den` lies within the relative tolerance.
bool rationalize(long double v, Rational* out, long max_den = 1000000000L);

struct LinearSplit {
    /// Exact roots found, each verified by substitution, sorted canonically.
    std::vector<Scalar> roots;
    /// Monic cofactor with no root found (may still have roots the search missed).
    Poly rest;
};

/// Extracts roots of square-free `p` lying in Q(i), or in the degree-2 tower `t` when given.
LinearSplit split_linear_factors(const Poly& p, const FieldTower* t = nullptr);

}  // namespace lieinv
