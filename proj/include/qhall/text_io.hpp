#pragma once
/**
 * Deterministic text, JSON and CSV renderings of series and monomials, plus
 * the inverse parsers.  Plain text looks like "1 + q + 2*q^2 + u^2*v*q^3":
 * terms are ordered by grade, ties broken by the exponent vector in canonical
 * variable order (u, v, x, y, z, a, c, q), and exponents may be negative
 * ("y^-1").  JSON renders a series as a list of {"coeff": <decimal string>,
 * "exps": {<var>: <int>, ...}} objects in the same order; coefficients are
 * decimal strings so arbitrary precision survives any JSON reader.  CSV has
 * one exponent column per variable that occurs plus a trailing coefficient
 * column.  Text and JSON parse back to equal series.
 */

#include <string>

#include "json.hpp"

#include "qhall/series.hpp"

namespace qhall {

using Json = nlohmann::ordered_json;

std::string monomial_to_text(const Monomial& m);
Monomial parse_monomial(const std::string& text);

std::string series_to_text(const GradedSeries& s);
GradedSeries parse_series(const std::string& text, const Grading& g);

Json series_to_json(const GradedSeries& s);
GradedSeries series_from_json(const Json& j, const Grading& g);

std::string series_to_csv(const GradedSeries& s);

}  // namespace qhall
