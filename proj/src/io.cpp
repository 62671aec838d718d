#include "lppqs/io.hpp"

#include <charconv>
#include <sstream>

#include "lppqs/errors.hpp"

namespace lppqs {

namespace {

std::vector<std::string> content_lines(const std::string& text) {
  std::vector<std::string> lines;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    const auto first = line.find_first_not_of(" \t");
    if (first == std::string::npos || line[first] == '#') continue;
    lines.push_back(line);
  }
  return lines;
}

std::vector<std::string> tokens(const std::string& line) {
  std::vector<std::string> out;
  std::istringstream in(line);
  std::string tok;
  while (in >> tok) out.push_back(tok);
  return out;
}

int parse_int(const std::string& s) {
  int v = 0;
  const auto* end = s.data() + s.size();
  auto [ptr, ec] = std::from_chars(s.data(), end, v);
  if (ec != std::errc() || ptr != end) throw ParseError("expected an integer, got '" + s + "'");
  return v;
}

int parse_weight(const std::string& s) {
  const int v = parse_int(s);
  if (v < 0) throw ParseError("weights must be non-negative, got " + s);
  return v;
}

std::vector<int> parse_paren_list(const std::string& tok) {
  if (tok.size() < 2 || tok.front() != '(' || tok.back() != ')')
    throw ParseError("expected a parenthesised list, got '" + tok + "'");
  std::vector<int> out;
  const std::string body = tok.substr(1, tok.size() - 2);
  if (body.empty()) return out;
  std::istringstream in(body);
  std::string item;
  while (std::getline(in, item, ',')) out.push_back(parse_int(item));
  return out;
}

}  // namespace

std::string format_filling(const Filling& w) {
  const Geometry& g = w.geometry();
  std::string out;
  for (int j = static_cast<int>(g.rows()); j >= 1; --j) {
    for (int i = 1; i <= static_cast<int>(g.columns()); ++i) {
      if (i > 1) out += ' ';
      out += g.contains(i, j) ? std::to_string(w.at(i, j)) : "-";
    }
    out += '\n';
  }
  return out;
}

Filling parse_filling(const std::string& text, GeometryKind kind) {
  const auto lines = content_lines(text);
  if (lines.empty()) throw ParseError("filling grid is empty");
  const std::size_t row_count = lines.size();
  std::size_t n = row_count;
  if (kind == GeometryKind::p2hlr) {
    if (row_count % 2 != 0) throw ParseError("p2hlr grid needs an even number of rows");
    n = row_count / 2;
  }
  Filling w{Geometry(kind, n)};
  const Geometry& g = w.geometry();
  for (std::size_t line = 0; line < row_count; ++line) {
    const int j = static_cast<int>(row_count - line);
    const auto toks = tokens(lines[line]);
    if (toks.size() != g.columns())
      throw ParseError("grid row " + std::to_string(line + 1) + " has " + std::to_string(toks.size()) +
                       " cells, expected " + std::to_string(g.columns()));
    for (std::size_t c = 0; c < toks.size(); ++c) {
      const int i = static_cast<int>(c + 1);
      if (!g.contains(i, j)) {
        if (toks[c] != "-") throw ParseError("cell (" + std::to_string(i) + "," + std::to_string(j) + ") lies outside the domain and must be '-'");
        continue;
      }
      if (toks[c] == "-") throw ParseError("cell (" + std::to_string(i) + "," + std::to_string(j) + ") is inside the domain");
      w.set(i, j, parse_weight(toks[c]));
    }
  }
  return w;
}

std::string format_matrix(const IntMatrix& m) {
  std::string out;
  for (std::size_t j = m.rows(); j >= 1; --j) {
    for (std::size_t i = 1; i <= m.columns(); ++i) {
      if (i > 1) out += ' ';
      out += std::to_string(m(i, j));
    }
    out += '\n';
  }
  return out;
}

IntMatrix parse_matrix(const std::string& text) {
  const auto lines = content_lines(text);
  if (lines.empty()) throw ParseError("matrix is empty");
  const std::size_t rows = lines.size();
  const std::size_t cols = tokens(lines[0]).size();
  IntMatrix m(cols, rows);
  for (std::size_t line = 0; line < rows; ++line) {
    const auto toks = tokens(lines[line]);
    if (toks.size() != cols) throw ParseError("matrix rows have different lengths");
    for (std::size_t c = 0; c < cols; ++c) m(c + 1, rows - line) = parse_weight(toks[c]);
  }
  return m;
}

std::string format_rows(const IntRows& rows) {
  std::string out;
  for (const auto& r : rows) {
    out += '(';
    for (std::size_t k = 0; k < r.size(); ++k) {
      if (k) out += ',';
      out += std::to_string(r[k]);
    }
    out += ")\n";
  }
  return out;
}

IntRows parse_rows(const std::string& text) {
  IntRows rows;
  for (const auto& line : content_lines(text)) {
    const auto toks = tokens(line);
    if (toks.size() != 1) throw ParseError("pattern rows must be a single '(...)' token per line");
    rows.push_back(parse_paren_list(toks[0]));
  }
  return rows;
}

std::string format_chain(const std::vector<Partition>& chain) {
  std::string out;
  for (std::size_t k = 0; k < chain.size(); ++k) {
    if (k) out += ' ';
    out += chain[k].to_string();
  }
  return out;
}

std::vector<Partition> parse_chain(const std::string& line) {
  std::vector<Partition> chain;
  for (const auto& tok : tokens(line)) {
    try {
      chain.emplace_back(parse_paren_list(tok));
    } catch (const DomainError& e) {
      throw ParseError(std::string("bad partition: ") + e.what());
    }
  }
  return chain;
}

nlohmann::ordered_json report_json(const SimulationReport& r) {
  nlohmann::ordered_json j;
  j["geometry"] = to_string(r.geometry);
  j["n"] = r.n;
  j["q"] = r.q();
  j["y"] = rational_string(r.y);
  j["seed"] = r.seed;
  j["samples"] = r.samples;
  auto cdf = nlohmann::ordered_json::array();
  for (const auto& [value, prob] : r.cdf) cdf.push_back({value, prob});
  j["cdf"] = std::move(cdf);
  j["mean"] = r.mean;
  j["variance"] = r.variance;
  nlohmann::ordered_json norm;
  norm["c1"] = r.scaling.c1;
  norm["c2"] = r.scaling.c2;
  norm["mean"] = r.normalized_mean;
  norm["variance"] = r.normalized_variance;
  norm["skewness"] = r.normalized_skewness;
  auto hist = nlohmann::ordered_json::array();
  for (const auto& b : r.normalized_histogram) hist.push_back({b.lo, b.hi, b.count});
  norm["histogram"] = std::move(hist);
  j["normalized"] = std::move(norm);
  return j;
}

std::string shortest(double v) {
  char buf[32];
  auto [end, ec] = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, end);
}

std::string report_csv(const SimulationReport& r) {
  std::string out = "value,prob\n";
  for (const auto& [value, prob] : r.cdf) out += std::to_string(value) + ',' + shortest(prob) + '\n';
  return out;
}

}  // namespace lppqs
