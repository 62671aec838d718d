#pragma once

#include <cstdint>

#include "lppqs/geometry.hpp"
#include "lppqs/laurent.hpp"

namespace lppqs {

struct SeriesOptions {
  /// Maximum number of (square, value) assignments visited before giving up.
  std::uint64_t node_budget = 400'000'000;
};

/// Sum of weight_of(W) over all fillings W with lpp_time(W) <= bound, by
/// exhaustive enumeration pruned on partial last-passage values.
/// Parallelised over the value of the first square. Throws BudgetExceeded.
LaurentPolynomial generating_series(const Geometry& geometry, int bound,
                                    const SeriesOptions& options = {});

/// Single-threaded reference for generating_series.
LaurentPolynomial generating_series_serial(const Geometry& geometry, int bound,
                                           const SeriesOptions& options = {});

}  // namespace lppqs
