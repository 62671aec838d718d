#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "lppqs/geometry.hpp"
#include "lppqs/laurent.hpp"
#include "lppqs/series.hpp"

namespace lppqs {

/// Centering and scale of the p2hlr last-passage time:
///   c1 = 2√q / (1 - √q),  c2 = q^{1/6} (1 + √q)^{1/3} / (1 - √q).
struct ScalingConstants {
  double c1 = 0;
  double c2 = 0;
};

/// Throws DomainError unless 0 < q < 1.
ScalingConstants scaling_constants(double q);

/// Geometric weights with y = √q: parameter y on reflecting squares and
/// y^2 = q elsewhere.
struct GeometricSpec {
  Geometry geometry;
  Rational y;
  std::uint64_t seed = 0;

  double q() const;
};

/// Probability normalisation Π(1 - p_square) at x_i = y.
Rational normalization(const Geometry& geometry, const Rational& y);

/// P(L <= bound) exactly: normalization × series(bound) evaluated at x_i = y.
/// Throws DomainError unless 0 < y < 1, BudgetExceeded past the node budget.
Rational exact_cdf(const Geometry& geometry, int bound, const Rational& y,
                   const SeriesOptions& options = {});

/// Histogram bin [lo, hi) with its count.
struct HistogramBin {
  double lo = 0;
  double hi = 0;
  std::uint64_t count = 0;
};

struct SimulationReport {
  GeometryKind geometry = GeometryKind::p2hlr;
  std::size_t n = 0;
  Rational y;
  std::uint64_t seed = 0;
  std::size_t samples = 0;
  /// (value, P̂(L <= value)) for value = 0..max observed.
  std::vector<std::pair<long long, double>> cdf;
  double mean = 0;
  double variance = 0;
  ScalingConstants scaling;
  /// Moments and histogram of (L - c1 n) / (c2 n^{1/3}).
  double normalized_mean = 0;
  double normalized_variance = 0;
  double normalized_skewness = 0;
  std::vector<HistogramBin> normalized_histogram;
  double wall_seconds = 0;

  double q() const;
  /// P̂(L <= value), 0 below the support and 1 above it.
  double cdf_at(long long value) const;
};

/// Last-passage times of `samples` independent fillings; OpenMP over samples.
/// Sample s depends only on (seed, geometry, s), so the result does not
/// depend on the thread count.
std::vector<long long> sample_lpp_times(const GeometricSpec& spec, std::size_t samples);
/// Single-threaded reference for sample_lpp_times.
std::vector<long long> sample_lpp_times_serial(const GeometricSpec& spec, std::size_t samples);

/// Statistics over a vector of last-passage times.
SimulationReport summarize(const GeometricSpec& spec, std::span<const long long> times);

/// Draws and summarises. Throws DomainError when samples == 0 or y ∉ (0,1).
SimulationReport sample_lpp(const GeometricSpec& spec, std::size_t samples);

struct ExactFactorizationRow {
  int u = 0;
  Rational p2hlr;
  Rational p2pr;
  Rational p2l;  // at v = u / 2
  Rational product() const { return p2pr * p2l; }
  bool holds() const { return p2hlr == product(); }
};

/// Exact check of P(L^p2hlr <= u) = P(L^p2pr <= u) P(L^p2l <= u/2).
/// Throws DomainError on odd u.
std::vector<ExactFactorizationRow> exact_factorization(std::size_t n, const Rational& y,
                                                       std::span<const int> u_values,
                                                       const SeriesOptions& options = {});

struct MonteCarloFactorizationRow {
  int u = 0;
  double p2hlr = 0;
  double p2pr = 0;
  double p2l = 0;  // at v = u / 2
};

struct MonteCarloFactorization {
  SimulationReport p2hlr;
  SimulationReport p2pr;
  SimulationReport p2l;
  std::vector<MonteCarloFactorizationRow> rows;  // even u
  double sup_distance = 0;
};

/// Three independent simulations (distinct streams per geometry) and the
/// sup over even u of |F̂_p2hlr(u) - F̂_p2pr(u) F̂_p2l(u/2)|.
MonteCarloFactorization monte_carlo_factorization(std::size_t n, const Rational& y,
                                                  std::size_t samples, std::uint64_t seed);

/// Square root of a rational: exact when numerator and denominator are
/// perfect squares, otherwise rounded to 1e-15 relative accuracy.
Rational rational_sqrt(const Rational& q);

}  // namespace lppqs
