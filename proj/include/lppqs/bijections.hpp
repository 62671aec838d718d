#pragma once

#include <cstddef>
#include <vector>

#include "lppqs/geometry.hpp"
#include "lppqs/growth.hpp"
#include "lppqs/patterns.hpp"

namespace lppqs {

/// Generalized oscillating tableau on the p2hlr squares. Its k-th diagonal
/// (squares with j - i = 2n - k, k = 1..2n) read from the square nearest the
/// main diagonal outward is the boundary partition
///   nu^(k) = μ^(ceil(k/2), 2n - floor(k/2)),
/// so t(i, 2n-k+i) = nu^(k)_{ceil(k/2) - i + 1}.
class OscillatingTableau {
 public:
  explicit OscillatingTableau(std::size_t n);

  /// Builds the tableau from the 2n boundary partitions nu^(1..2n).
  static OscillatingTableau from_boundary(const std::vector<Partition>& boundary);

  std::size_t n() const noexcept { return geometry_.n(); }
  int at(int i, int j) const;
  /// nu^(1), ..., nu^(2n).
  std::vector<Partition> boundary() const;
  int max_entry() const;

 private:
  Geometry geometry_;
  std::vector<int> entries_;
};

/// rowRSK growth over the p2hlr domain. On a diagonal square (i,i), i >= 2,
/// the missing south-east corner is replaced by μ^(i-1,i).
OscillatingTableau bz_oscillating(const Filling& w);

/// Filling of p2hlr with lpp_time <= u  ->  symplectic GT pattern of height 2n
/// with z_{k,j} = u - t(j, 2n-k+j). Throws DomainError if lpp_time(w) > u or
/// the filling is not p2hlr.
SpGTPattern bz_forward(const Filling& w, int u);

/// Inverse of bz_forward. Throws DomainError unless z is a valid pattern with
/// shape part 1 <= u.
Filling bz_inverse(const SpGTPattern& z, int u);

/// p2l filling -> symmetric n × n matrix: flip rows upside down, double the
/// hypotenuse, reflect across it. M(i, j) = W(i, n+1-j) for i <= j.
IntMatrix p2l_symmetric_matrix(const Filling& w);
/// Inverse of p2l_symmetric_matrix; throws DomainError on an asymmetric
/// matrix or an odd diagonal entry.
Filling p2l_from_symmetric_matrix(const IntMatrix& m);

/// colRSK growth over the symmetric matrix; returns the pattern read from the
/// north boundary, z row i = μ^(i, n).
GTPattern p2l_forward(const Filling& w);
/// Inverse of p2l_forward. Throws DomainError on odd shape parts or when the
/// reconstruction is not symmetric.
Filling p2l_inverse(const GTPattern& z);

}  // namespace lppqs
