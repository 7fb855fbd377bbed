#pragma once

#include <string>
#include <string_view>

#include "ncpoly.hpp"

namespace qso {

enum class CoeffStyle {
  kPrettyQ,  // Laurent form in q / q^(1/2) when possible, else the u fraction
  kExactU,   // fraction of integer-coefficient polynomials in u
};

/// Exact fraction of integer-coefficient expressions in u; stable across
/// runs and parsed back losslessly.
std::string to_ustring(const QScalar& s);
/// Pretty form in q and q^(1/2); falls back to the u fraction when the
/// denominator is not a monomial.
std::string to_qstring(const QScalar& s);

/// Element syntax: I+(k,l), I-(k,l), juxtaposition for products, +/-,
/// coefficients as scalar text, powers as ^e.
std::string to_string(const NCPoly& p, CoeffStyle style = CoeffStyle::kPrettyQ);

/// Parses the element syntax (also plain scalar expressions); accepts
/// everything the renderers produce, plus q, u, i, rationals, parentheses
/// and ^ exponents. I(k,l) is accepted for basic generators.
NCPoly parse_element(std::string_view text);
/// Parses a scalar expression (an element with no generators).
QScalar parse_scalar(std::string_view text);

}  // namespace qso
