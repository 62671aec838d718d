#pragma once

#include <cstddef>
#include <functional>
#include <string>
#include <vector>

#include "lppqs/partition.hpp"

namespace lppqs {

using IntRows = std::vector<std::vector<int>>;

/// Gelfand–Tsetlin pattern of height n: row i (1-based) has i entries and
/// z_{i+1,j+1} <= z_{i,j} <= z_{i+1,j}. Equivalent to the interlacing chain
/// ∅ = λ^(0) ≺ λ^(1) ≺ ... ≺ λ^(n) with λ^(i)_j = z_{i,j}.
class GTPattern {
 public:
  GTPattern() = default;

  /// Throws DomainError unless the rows form a valid pattern.
  static GTPattern from_rows(IntRows rows);
  /// chain[i-1] = λ^(i), i = 1..n; λ^(0) = ∅ is implicit.
  static GTPattern from_chain(const std::vector<Partition>& chain);

  std::size_t height() const noexcept { return rows_.size(); }
  const IntRows& rows() const noexcept { return rows_; }
  /// λ^(i) for 0 <= i <= height().
  Partition level(std::size_t i) const;
  Partition shape() const { return level(height()); }
  /// type(z)_i = |row i| - |row i-1|.
  std::vector<int> type() const;

  friend bool operator==(const GTPattern&, const GTPattern&) = default;
  friend auto operator<=>(const GTPattern&, const GTPattern&) = default;

 private:
  IntRows rows_;
};

/// Symplectic Gelfand–Tsetlin pattern of height 2n: row i has ceil(i/2)
/// entries, interlacing with z_{i,j} := 0 for j > ceil(i/2).
class SpGTPattern {
 public:
  SpGTPattern() = default;

  static SpGTPattern from_rows(IntRows rows);
  static SpGTPattern from_chain(const std::vector<Partition>& chain);

  /// Number of variables n (height is 2n).
  std::size_t rank() const noexcept { return rows_.size() / 2; }
  std::size_t height() const noexcept { return rows_.size(); }
  const IntRows& rows() const noexcept { return rows_; }
  Partition level(std::size_t i) const;
  Partition shape() const { return level(height()); }
  std::vector<int> type() const;

  friend bool operator==(const SpGTPattern&, const SpGTPattern&) = default;
  friend auto operator<=>(const SpGTPattern&, const SpGTPattern&) = default;

 private:
  IntRows rows_;
};

enum class Alphabet { ssyt, symplectic, odd_orthogonal };

/// Tableau over one of three ordered alphabets, with symbols stored as codes:
///   ssyt:            1 < 2 < ... < n               (code = letter)
///   symplectic:      1 < 1̄ < ... < n < n̄          (i -> 2i-1, ī -> 2i)
///   odd_orthogonal:  same as symplectic, plus ∞ -> 2n+1
/// Rows weakly increase, columns strictly increase; symplectic kinds require
/// entries of row r to be >= r (code >= 2r-1); odd orthogonal tableaux have
/// at most one ∞ per row, and ∞ may repeat down a column.
class Tableau {
 public:
  Tableau() = default;

  /// Throws DomainError if the filling violates any condition above or
  /// has more than n rows.
  static Tableau from_rows(Alphabet alphabet, std::size_t n, IntRows rows);

  Alphabet alphabet() const noexcept { return alphabet_; }
  std::size_t rank() const noexcept { return n_; }
  const IntRows& rows() const noexcept { return rows_; }
  Partition shape() const;
  int count(int code) const noexcept;
  int infinity_code() const noexcept { return static_cast<int>(2 * n_ + 1); }

  /// Human-readable symbol: "3", "2bar", "inf".
  std::string symbol_name(int code) const;

  friend bool operator==(const Tableau&, const Tableau&) = default;

 private:
  Alphabet alphabet_ = Alphabet::ssyt;
  std::size_t n_ = 0;
  IntRows rows_;
};

Tableau to_tableau(const GTPattern& z);
Tableau to_tableau(const SpGTPattern& z);
GTPattern gt_from_tableau(const Tableau& t);
SpGTPattern spgt_from_tableau(const Tableau& t);

/// Every GT pattern of height n and the given shape, unspecified order.
void for_each_gt(std::size_t n, const Partition& shape,
                 const std::function<void(const GTPattern&)>& visit);
void for_each_spgt(std::size_t n, const Partition& shape,
                   const std::function<void(const SpGTPattern&)>& visit);
/// Odd orthogonal tableaux of rank n: a symplectic tableau of shape mu plus
/// ∞ in the cells of shape/mu, where shape/mu is a vertical strip.
void for_each_oot(std::size_t n, const Partition& shape,
                  const std::function<void(const Tableau&)>& visit);

/// Sorted (lexicographic on row-major entries) enumerations.
/// Throw DomainError when length(shape) > n.
std::vector<GTPattern> enumerate_gt(std::size_t n, const Partition& shape);
std::vector<SpGTPattern> enumerate_spgt(std::size_t n, const Partition& shape);
std::vector<Tableau> enumerate_oot(std::size_t n, const Partition& shape);

}  // namespace lppqs
