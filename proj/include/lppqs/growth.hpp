#pragma once

#include <cstddef>
#include <vector>

#include "lppqs/partition.hpp"

namespace lppqs {

/// Local growth rule: Knuth row insertion or Burge column insertion.
enum class Rule { row, col };

const char* to_string(Rule rule) noexcept;

/// Inputs of a local rule around one unit cell:
///
///   alpha ---- nu          alpha = NW corner, beta = SE corner,
///     |    g   |           kappa = SW corner, nu = NE corner (output).
///   kappa ---- beta
///
/// Requires kappa ≺ alpha and kappa ≺ beta, g >= 0.
struct LocalRuleInput {
  Partition alpha;
  Partition beta;
  Partition kappa;
  int g = 0;
};

/// Output nu with alpha ≺ nu ≻ beta and |kappa| + |nu| = |alpha| + |beta| + g.
Partition row_rsk_local(const LocalRuleInput& in);
Partition col_rsk_local(const LocalRuleInput& in);
Partition apply_local(Rule rule, const LocalRuleInput& in);

struct LocalPreimage {
  Partition kappa;
  int g = 0;
  friend bool operator==(const LocalPreimage&, const LocalPreimage&) = default;
};

/// Recovers (kappa, g) from (alpha, beta, nu). Throws DomainError when nu does
/// not interlace above both alpha and beta or the reconstruction is
/// inconsistent (negative g, kappa not interlacing).
LocalPreimage invert_local(Rule rule, const Partition& alpha, const Partition& beta,
                           const Partition& nu);

/// Dense non-negative integer matrix w(i, j), 1 <= i <= columns, 1 <= j <= rows.
/// i is the horizontal coordinate, j the vertical one; cell (i, j) has its
/// top-right corner at lattice point (i, j).
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t columns, std::size_t rows, int fill = 0);

  std::size_t columns() const noexcept { return columns_; }
  std::size_t rows() const noexcept { return rows_; }
  int& operator()(std::size_t i, std::size_t j) { return data_[index(i, j)]; }
  int operator()(std::size_t i, std::size_t j) const { return data_[index(i, j)]; }
  long long total() const noexcept;
  long long column_sum(std::size_t i) const;
  long long row_sum(std::size_t j) const;

  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

 private:
  std::size_t index(std::size_t i, std::size_t j) const { return (i - 1) * rows_ + (j - 1); }
  std::size_t columns_ = 0;
  std::size_t rows_ = 0;
  std::vector<int> data_;
};

/// Partitions on the lattice points (i, j), 0 <= i <= columns, 0 <= j <= rows,
/// produced by applying a local rule cell by cell. Axis points hold ∅.
class GrowthGrid {
 public:
  GrowthGrid(Rule rule, std::size_t columns, std::size_t rows);

  Rule rule() const noexcept { return rule_; }
  std::size_t columns() const noexcept { return columns_; }
  std::size_t rows() const noexcept { return rows_; }
  const Partition& at(std::size_t i, std::size_t j) const { return points_[index(i, j)]; }
  Partition& at(std::size_t i, std::size_t j) { return points_[index(i, j)]; }
  const Partition& corner() const { return at(columns_, rows_); }

  /// μ^(i, rows) for i = 0..columns.
  std::vector<Partition> north_chain() const;
  /// μ^(columns, j) for j = 0..rows.
  std::vector<Partition> east_chain() const;

 private:
  std::size_t index(std::size_t i, std::size_t j) const { return i * (rows_ + 1) + j; }
  Rule rule_;
  std::size_t columns_;
  std::size_t rows_;
  std::vector<Partition> points_;
};

/// Grows the full grid over `w`. Throws DomainError on negative entries.
GrowthGrid grow_grid(const IntMatrix& w, Rule rule);

/// Inverse of grow_grid from the outer boundary: north[i] = μ^(i, rows),
/// east[j] = μ^(columns, j). Throws DomainError if the boundary is not the
/// image of any matrix.
IntMatrix shrink_grid(Rule rule, const std::vector<Partition>& north,
                      const std::vector<Partition>& east);

enum class PathDirection { up_right, down_right };

/// Maximum total weight of k vertex-disjoint monotone lattice paths, by
/// exhaustive search. up_right paths run from cells (1, r) to (m, n-k+r);
/// down_right paths from (1, n+1-r) to (m, k+1-r), r = 1..k. Intended for
/// m, n <= 6. Throws DomainError when k is 0 or exceeds min(m, n).
long long greene_oracle(const IntMatrix& w, std::size_t k, PathDirection direction);

}  // namespace lppqs
