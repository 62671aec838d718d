#include "lppqs/geometry.hpp"

#include <algorithm>

#include "lppqs/errors.hpp"

namespace lppqs {

const char* to_string(GeometryKind kind) noexcept {
  switch (kind) {
    case GeometryKind::p2hlr: return "p2hlr";
    case GeometryKind::p2pr: return "p2pr";
    case GeometryKind::p2l: return "p2l";
  }
  return "?";
}

GeometryKind parse_geometry_kind(const std::string& name) {
  if (name == "p2hlr") return GeometryKind::p2hlr;
  if (name == "p2pr") return GeometryKind::p2pr;
  if (name == "p2l") return GeometryKind::p2l;
  throw ParseError("unknown geometry '" + name + "' (expected p2hlr, p2pr or p2l)");
}

Geometry::Geometry(GeometryKind kind, std::size_t n) : kind_(kind), n_(n) {
  if (n == 0) throw DomainError("geometry size n must be positive");
  const int cols = static_cast<int>(columns()), rws = static_cast<int>(rows());
  index_.assign(columns() * rows(), -1);
  for (int i = 1; i <= cols; ++i)
    for (int j = 1; j <= rws; ++j) {
      bool inside = false;
      const int nn = static_cast<int>(n);
      switch (kind) {
        case GeometryKind::p2hlr: inside = j >= i && i + j <= 2 * nn + 1; break;
        case GeometryKind::p2pr: inside = j >= i && j <= nn; break;
        case GeometryKind::p2l: inside = i + j <= nn + 1; break;
      }
      if (!inside) continue;
      index_[(i - 1) * rows() + (j - 1)] = static_cast<int>(squares_.size());
      squares_.push_back({i, j});
    }
  for (std::size_t idx = 0; idx < squares_.size(); ++idx) {
    const auto [i, j] = squares_[idx];
    auto lookup = [&](int a, int b) {
      auto k = index_of(a, b);
      return k ? static_cast<int>(*k) : -1;
    };
    preds_.push_back({lookup(i - 1, j), lookup(i, j - 1)});
    const int nn = static_cast<int>(n);
    bool term = false;
    switch (kind) {
      case GeometryKind::p2hlr: term = i + j == 2 * nn + 1; break;
      case GeometryKind::p2pr: term = i == nn && j == nn; break;
      case GeometryKind::p2l: term = i + j == nn + 1; break;
    }
    terminal_.push_back(term);
    if (is_reflecting(squares_[idx]))
      weight_vars_.push_back({static_cast<std::size_t>(i)});
    else
      weight_vars_.push_back({static_cast<std::size_t>(i), row_variable(j)});
  }
}

bool Geometry::contains(int i, int j) const noexcept { return index_of(i, j).has_value(); }

std::optional<std::size_t> Geometry::index_of(int i, int j) const noexcept {
  if (i < 1 || j < 1 || i > static_cast<int>(columns()) || j > static_cast<int>(rows())) return std::nullopt;
  const int k = index_[(i - 1) * rows() + (j - 1)];
  if (k < 0) return std::nullopt;
  return static_cast<std::size_t>(k);
}

bool Geometry::is_reflecting(const Square& s) const noexcept {
  return kind_ != GeometryKind::p2l && s.i == s.j;
}

std::size_t Geometry::row_variable(int j) const noexcept {
  const int nn = static_cast<int>(n_);
  switch (kind_) {
    case GeometryKind::p2hlr: return static_cast<std::size_t>(j <= nn ? j : 2 * nn - j + 1);
    case GeometryKind::p2pr: return static_cast<std::size_t>(j);
    case GeometryKind::p2l: return static_cast<std::size_t>(nn - j + 1);
  }
  return 0;
}

std::size_t Geometry::reflecting_count() const noexcept {
  return kind_ == GeometryKind::p2l ? 0 : n_;
}

Filling::Filling(Geometry geometry) : geometry_(std::move(geometry)), weights_(geometry_.size(), 0) {}

Filling::Filling(Geometry geometry, std::vector<int> weights)
    : geometry_(std::move(geometry)), weights_(std::move(weights)) {
  if (weights_.size() != geometry_.size()) throw DomainError("filling has the wrong number of squares");
  if (std::any_of(weights_.begin(), weights_.end(), [](int v) { return v < 0; }))
    throw DomainError("filling weights must be non-negative");
}

int Filling::at(int i, int j) const {
  auto idx = geometry_.index_of(i, j);
  if (!idx) throw DomainError("square outside the domain");
  return weights_[*idx];
}

void Filling::set(int i, int j, int value) {
  auto idx = geometry_.index_of(i, j);
  if (!idx) throw DomainError("square outside the domain");
  if (value < 0) throw DomainError("filling weights must be non-negative");
  weights_[*idx] = value;
}

long long lpp_time(const Filling& w) {
  const Geometry& g = w.geometry();
  std::vector<long long> dp(g.size(), 0);
  long long best = 0;
  for (std::size_t idx = 0; idx < g.size(); ++idx) {
    const auto [left, down] = g.predecessors(idx);
    long long prev = 0;
    if (left >= 0) prev = dp[static_cast<std::size_t>(left)];
    if (down >= 0) prev = std::max(prev, dp[static_cast<std::size_t>(down)]);
    dp[idx] = prev + w[idx];
    if (g.is_terminal(idx)) best = std::max(best, dp[idx]);
  }
  return best;
}

LaurentPolynomial weight_of(const Filling& w) {
  const Geometry& g = w.geometry();
  Exponents e(g.n(), 0);
  for (std::size_t idx = 0; idx < g.size(); ++idx)
    for (std::size_t v : g.weight_variables(idx)) e[v - 1] += w[idx];
  return LaurentPolynomial::monomial(std::move(e));
}

}  // namespace lppqs
