#pragma once

// JSON and CSV encodings shared by the CLI and the tests. Field names are
// documented in docs/schemas.md. Every encoder here is a pure function of
// its input, so equal inputs give byte-identical output.

#include <string>
#include <vector>

#include <json.hpp>

#include "kahler/case_analysis.hpp"
#include "kahler/domain.hpp"
#include "kahler/geometry.hpp"

namespace kahler {

using nlohmann::json;

/// {"kind":"type1","m":1,"n":2}, {"kind":"type4","n":5}, {"kind":"exc5"}.
json to_json(const DomainSpec& spec);

/// Inverse of to_json. Throws std::invalid_argument on unknown kinds,
/// missing or extra parameters, or parameters the factories reject.
DomainSpec domain_from_json(const json& j);

/// Flat object of the scalar fields. With `tensors`, also g, g_inv, ric
/// (row-major [re, im] pairs) and R (flat, index ((i n + j) n + k) n + l).
/// NaN scalars become null.
json to_json(const CurvatureReport& report, bool tensors);

json to_json(const IntPolynomial& p);
json to_json(const CaseVerdict& verdict);
json to_json(const Classification& c);

/// Shortest round-trip decimal form; "nan", "inf", "-inf" for non-finite.
std::string format_double(double x);

/// Joins fields with commas and terminates with LF. Fields containing a
/// comma, quote or newline are quoted.
std::string csv_line(const std::vector<std::string>& fields);

}  // namespace kahler
