#include "lppqs/probability.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>

#include "lppqs/errors.hpp"
#include "lppqs/rng.hpp"

namespace lppqs {

namespace {

constexpr double kHistogramLo = -6.0;
constexpr double kHistogramHi = 6.0;
constexpr double kHistogramWidth = 0.25;

void require_open_unit(const Rational& y) {
  if (y <= 0 || y >= 1) throw DomainError("y = sqrt(q) must lie strictly between 0 and 1");
}

std::uint32_t stream_of(GeometryKind kind) {
  switch (kind) {
    case GeometryKind::p2hlr: return 1;
    case GeometryKind::p2pr: return 2;
    case GeometryKind::p2l: return 3;
  }
  return 0;
}

/// log of the geometric parameter at each square.
std::vector<double> square_log_parameters(const GeometricSpec& spec) {
  require_open_unit(spec.y);
  const double y = spec.y.convert_to<double>();
  const Geometry& g = spec.geometry;
  std::vector<double> logs(g.size());
  for (std::size_t idx = 0; idx < g.size(); ++idx)
    logs[idx] = g.is_reflecting(g.squares()[idx]) ? std::log(y) : 2.0 * std::log(y);
  return logs;
}

long long sample_once(const Geometry& g, const SquareStream& stream, const std::vector<double>& log_p,
                      std::uint64_t sample, std::vector<long long>& dp) {
  long long best = 0;
  for (std::size_t idx = 0; idx < g.size(); ++idx) {
    const int w = geometric_from_uniform(stream.uniform(sample, static_cast<std::uint32_t>(idx)), log_p[idx]);
    const auto [left, down] = g.predecessors(idx);
    long long prev = 0;
    if (left >= 0) prev = dp[static_cast<std::size_t>(left)];
    if (down >= 0) prev = std::max(prev, dp[static_cast<std::size_t>(down)]);
    dp[idx] = prev + w;
    if (g.is_terminal(idx)) best = std::max(best, dp[idx]);
  }
  return best;
}

}  // namespace

ScalingConstants scaling_constants(double q) {
  if (!(q > 0.0 && q < 1.0)) throw DomainError("q must lie strictly between 0 and 1");
  const double r = std::sqrt(q);
  return {2.0 * r / (1.0 - r), std::pow(q, 1.0 / 6.0) * std::cbrt(1.0 + r) / (1.0 - r)};
}

double GeometricSpec::q() const { return Rational(y * y).convert_to<double>(); }

double SimulationReport::q() const { return Rational(y * y).convert_to<double>(); }

double SimulationReport::cdf_at(long long value) const {
  if (value < 0 || cdf.empty()) return 0.0;
  if (value >= cdf.back().first) return 1.0;
  return cdf[static_cast<std::size_t>(value)].second;
}

Rational normalization(const Geometry& geometry, const Rational& y) {
  require_open_unit(y);
  const unsigned reflecting = static_cast<unsigned>(geometry.reflecting_count());
  const unsigned bulk = static_cast<unsigned>(geometry.size()) - reflecting;
  return rational_pow(Rational(1 - y), reflecting) * rational_pow(Rational(1 - y * y), bulk);
}

Rational exact_cdf(const Geometry& geometry, int bound, const Rational& y, const SeriesOptions& options) {
  require_open_unit(y);
  const auto series = generating_series(geometry, bound, options);
  const std::vector<Rational> at(geometry.n(), y);
  return normalization(geometry, y) * specialize(series, at);
}

std::vector<long long> sample_lpp_times_serial(const GeometricSpec& spec, std::size_t samples) {
  const auto log_p = square_log_parameters(spec);
  const SquareStream stream(spec.seed, stream_of(spec.geometry.kind()));
  std::vector<long long> times(samples);
  std::vector<long long> dp(spec.geometry.size());
  for (std::size_t s = 0; s < samples; ++s) times[s] = sample_once(spec.geometry, stream, log_p, s, dp);
  return times;
}

std::vector<long long> sample_lpp_times(const GeometricSpec& spec, std::size_t samples) {
  const auto log_p = square_log_parameters(spec);
  const SquareStream stream(spec.seed, stream_of(spec.geometry.kind()));
  std::vector<long long> times(samples);
  const long long count = static_cast<long long>(samples);
#pragma omp parallel
  {
    std::vector<long long> dp(spec.geometry.size());
#pragma omp for schedule(static)
    for (long long s = 0; s < count; ++s)
      times[static_cast<std::size_t>(s)] =
          sample_once(spec.geometry, stream, log_p, static_cast<std::uint64_t>(s), dp);
  }
  return times;
}

SimulationReport summarize(const GeometricSpec& spec, std::span<const long long> times) {
  if (times.empty()) throw DomainError("at least one sample is required");
  SimulationReport r;
  r.geometry = spec.geometry.kind();
  r.n = spec.geometry.n();
  r.y = spec.y;
  r.seed = spec.seed;
  r.samples = times.size();

  const long long max_value = *std::max_element(times.begin(), times.end());
  std::vector<std::uint64_t> counts(static_cast<std::size_t>(max_value) + 1, 0);
  for (long long t : times) ++counts[static_cast<std::size_t>(t)];
  std::uint64_t running = 0;
  const double total = static_cast<double>(times.size());
  for (std::size_t v = 0; v < counts.size(); ++v) {
    running += counts[v];
    r.cdf.emplace_back(static_cast<long long>(v), static_cast<double>(running) / total);
  }

  double sum = 0;
  for (long long t : times) sum += static_cast<double>(t);
  r.mean = sum / total;
  double m2 = 0;
  for (long long t : times) m2 += (static_cast<double>(t) - r.mean) * (static_cast<double>(t) - r.mean);
  r.variance = m2 / total;

  r.scaling = scaling_constants(r.q());
  const double nn = static_cast<double>(r.n);
  const double scale = r.scaling.c2 * std::cbrt(nn);
  std::vector<double> normalized(times.size());
  for (std::size_t s = 0; s < times.size(); ++s)
    normalized[s] = (static_cast<double>(times[s]) - r.scaling.c1 * nn) / scale;
  double nsum = 0;
  for (double x : normalized) nsum += x;
  r.normalized_mean = nsum / total;
  double c2 = 0, c3 = 0;
  for (double x : normalized) {
    const double d = x - r.normalized_mean;
    c2 += d * d;
    c3 += d * d * d;
  }
  r.normalized_variance = c2 / total;
  r.normalized_skewness = r.normalized_variance > 0 ? (c3 / total) / std::pow(r.normalized_variance, 1.5) : 0.0;

  const auto bins = static_cast<std::size_t>((kHistogramHi - kHistogramLo) / kHistogramWidth);
  for (std::size_t b = 0; b < bins; ++b)
    r.normalized_histogram.push_back(
        {kHistogramLo + kHistogramWidth * static_cast<double>(b), kHistogramLo + kHistogramWidth * static_cast<double>(b + 1), 0});
  // edge bins absorb values outside [lo, hi)
  for (double x : normalized) {
    const double pos = std::floor((x - kHistogramLo) / kHistogramWidth);
    const auto b = static_cast<std::size_t>(std::clamp(pos, 0.0, static_cast<double>(bins - 1)));
    ++r.normalized_histogram[b].count;
  }
  return r;
}

SimulationReport sample_lpp(const GeometricSpec& spec, std::size_t samples) {
  if (samples == 0) throw DomainError("at least one sample is required");
  const auto start = std::chrono::steady_clock::now();
  const auto times = sample_lpp_times(spec, samples);
  auto report = summarize(spec, times);
  report.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

std::vector<ExactFactorizationRow> exact_factorization(std::size_t n, const Rational& y,
                                                       std::span<const int> u_values,
                                                       const SeriesOptions& options) {
  require_open_unit(y);
  for (int u : u_values)
    if (u < 0 || u % 2 != 0)
      throw DomainError("exact factorization is stated for even u only, got u = " + std::to_string(u));
  const Geometry hlr(GeometryKind::p2hlr, n), pr(GeometryKind::p2pr, n), l(GeometryKind::p2l, n);
  std::vector<ExactFactorizationRow> rows;
  for (int u : u_values)
    rows.push_back({u, exact_cdf(hlr, u, y, options), exact_cdf(pr, u, y, options), exact_cdf(l, u / 2, y, options)});
  return rows;
}

MonteCarloFactorization monte_carlo_factorization(std::size_t n, const Rational& y, std::size_t samples,
                                                  std::uint64_t seed) {
  MonteCarloFactorization mc;
  mc.p2hlr = sample_lpp({Geometry(GeometryKind::p2hlr, n), y, seed}, samples);
  mc.p2pr = sample_lpp({Geometry(GeometryKind::p2pr, n), y, seed}, samples);
  mc.p2l = sample_lpp({Geometry(GeometryKind::p2l, n), y, seed}, samples);
  const long long top = std::max({mc.p2hlr.cdf.back().first, mc.p2pr.cdf.back().first, 2 * mc.p2l.cdf.back().first});
  for (long long u = 0; u <= top + 2; u += 2) {
    MonteCarloFactorizationRow row{static_cast<int>(u), mc.p2hlr.cdf_at(u), mc.p2pr.cdf_at(u), mc.p2l.cdf_at(u / 2)};
    mc.sup_distance = std::max(mc.sup_distance, std::abs(row.p2hlr - row.p2pr * row.p2l));
    mc.rows.push_back(row);
  }
  return mc;
}

Rational rational_sqrt(const Rational& q) {
  if (q < 0) throw DomainError("square root of a negative rational");
  const BigInt num = boost::multiprecision::numerator(q), den = boost::multiprecision::denominator(q);
  const BigInt rn = boost::multiprecision::sqrt(num), rd = boost::multiprecision::sqrt(den);
  if (rn * rn == num && rd * rd == den) return Rational(rn, rd);
  const double approx = std::sqrt(q.convert_to<double>());
  const BigInt scale = boost::multiprecision::pow(BigInt(10), 15);
  return Rational(BigInt(std::llround(approx * 1e15)), scale);
}

}  // namespace lppqs
