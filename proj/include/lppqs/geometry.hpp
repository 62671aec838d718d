#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "lppqs/laurent.hpp"

namespace lppqs {

/// p2hlr: half-line-reflected quarter square, squares with j >= i and i + j <= 2n+1.
/// p2pr:  point-to-point-reflected triangle, squares with i <= j <= n.
/// p2l:   point-to-line triangle, squares with i + j <= n+1.
enum class GeometryKind { p2hlr, p2pr, p2l };

const char* to_string(GeometryKind kind) noexcept;
/// Throws ParseError on unknown names.
GeometryKind parse_geometry_kind(const std::string& name);

/// Unit square addressed by its top-right corner; i is the column (horizontal),
/// j the row (vertical), both 1-based.
struct Square {
  int i = 0;
  int j = 0;
  friend bool operator==(const Square&, const Square&) = default;
};

class Geometry {
 public:
  Geometry(GeometryKind kind, std::size_t n);

  GeometryKind kind() const noexcept { return kind_; }
  std::size_t n() const noexcept { return n_; }
  std::size_t columns() const noexcept { return n_; }
  std::size_t rows() const noexcept { return kind_ == GeometryKind::p2hlr ? 2 * n_ : n_; }

  /// Squares in column-major order (i ascending, then j ascending); every
  /// square comes after its left and lower neighbours.
  const std::vector<Square>& squares() const noexcept { return squares_; }
  std::size_t size() const noexcept { return squares_.size(); }
  bool contains(int i, int j) const noexcept;
  std::optional<std::size_t> index_of(int i, int j) const noexcept;

  /// Indices of the left and lower neighbours inside the domain, or -1.
  const std::array<int, 2>& predecessors(std::size_t idx) const { return preds_[idx]; }
  /// Squares where polymers may end.
  bool is_terminal(std::size_t idx) const { return terminal_[idx]; }

  /// Diagonal squares of p2hlr / p2pr carry weight x_i^w instead of (x_i x_j)^w.
  bool is_reflecting(const Square& s) const noexcept;
  /// Variable index (1-based) attached to row j.
  std::size_t row_variable(int j) const noexcept;
  /// Variables multiplied in per unit of weight at square idx (1 or 2
  /// entries, possibly repeated).
  const std::vector<std::size_t>& weight_variables(std::size_t idx) const { return weight_vars_[idx]; }

  std::size_t reflecting_count() const noexcept;

  friend bool operator==(const Geometry& a, const Geometry& b) { return a.kind_ == b.kind_ && a.n_ == b.n_; }

 private:
  GeometryKind kind_;
  std::size_t n_;
  std::vector<Square> squares_;
  std::vector<int> index_;  // columns x rows grid, -1 outside
  std::vector<std::array<int, 2>> preds_;
  std::vector<bool> terminal_;
  std::vector<std::vector<std::size_t>> weight_vars_;
};

/// Non-negative integer weights on the squares of a geometry.
class Filling {
 public:
  explicit Filling(Geometry geometry);
  Filling(Geometry geometry, std::vector<int> weights);

  const Geometry& geometry() const noexcept { return geometry_; }
  const std::vector<int>& weights() const noexcept { return weights_; }
  int at(int i, int j) const;
  void set(int i, int j, int value);
  int operator[](std::size_t idx) const { return weights_[idx]; }

  friend bool operator==(const Filling&, const Filling&) = default;

 private:
  Geometry geometry_;
  std::vector<int> weights_;
};

/// Last-passage time: heaviest up-right path from (1,1) to the terminal set
/// (the anti-diagonal for p2hlr and p2l, the square (n,n) for p2pr).
long long lpp_time(const Filling& w);

/// wt(W) as a monomial in x_1..x_n.
LaurentPolynomial weight_of(const Filling& w);

}  // namespace lppqs
