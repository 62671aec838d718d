#pragma once

#include <string>
#include <vector>

#include "json.hpp"
#include "lppqs/geometry.hpp"
#include "lppqs/growth.hpp"
#include "lppqs/patterns.hpp"
#include "lppqs/probability.hpp"

namespace lppqs {

/// Filling grid text: one line per row j, from the top row down to j = 1;
/// each line lists columns i = 1..n separated by single spaces, with `-` for
/// squares outside the domain. Blank lines and lines starting with '#' are
/// ignored when parsing.
std::string format_filling(const Filling& w);
/// Infers n from the number of rows. Throws ParseError.
Filling parse_filling(const std::string& text, GeometryKind kind);

/// Plain matrix in the same layout (top row first, no `-` cells).
std::string format_matrix(const IntMatrix& m);
IntMatrix parse_matrix(const std::string& text);

/// Pattern rows, one per line, top row first, written as "(a,b,c)".
std::string format_rows(const IntRows& rows);
IntRows parse_rows(const std::string& text);

/// Partition chain on one line: "(2,1) (3,1) ()".
std::string format_chain(const std::vector<Partition>& chain);
std::vector<Partition> parse_chain(const std::string& line);

/// {geometry, n, q, y, seed, samples, cdf: [[value, prob]...], mean, variance,
///  normalized: {c1, c2, mean, variance, skewness, histogram: [[lo, hi, count]...]}}
nlohmann::ordered_json report_json(const SimulationReport& r);
/// Shortest decimal that reads back as exactly v.
std::string shortest(double v);

/// Header "value,prob" then one row per CDF point.
std::string report_csv(const SimulationReport& r);

}  // namespace lppqs
