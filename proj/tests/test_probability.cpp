#include <omp.h>

#include <cmath>
#include <numeric>

#include "doctest.h"
#include "lppqs/errors.hpp"
#include "lppqs/probability.hpp"
#include "lppqs/rng.hpp"

using namespace lppqs;

namespace {

GeometricSpec spec(GeometryKind kind, std::size_t n, Rational y, std::uint64_t seed = 1) {
  return GeometricSpec{Geometry(kind, n), y, seed};
}

// Two-sided DKW radius at confidence 1 - alpha.
double dkw(std::size_t samples, double alpha = 0.01) {
  return std::sqrt(std::log(2.0 / alpha) / (2.0 * static_cast<double>(samples)));
}

}  // namespace

TEST_CASE("Philox4x32-10 known-answer vectors") {
  using C = Philox4x32::Counter;
  CHECK(Philox4x32::generate({0, 0, 0, 0}, {0, 0}) == C{0x6627e8d5, 0xe169c58d, 0xbc57ac4c, 0x9b00dbd8});
  CHECK(Philox4x32::generate({0xffffffff, 0xffffffff, 0xffffffff, 0xffffffff}, {0xffffffff, 0xffffffff}) ==
        C{0x408f276d, 0x41c83b0e, 0xa20bc7c6, 0x6d5451fd});
  CHECK(Philox4x32::generate({0x243f6a88, 0x85a308d3, 0x13198a2e, 0x03707344}, {0xa4093822, 0x299f31d0}) ==
        C{0xd16cfe09, 0x94fdcceb, 0x5001e420, 0x24126ea1});
}

TEST_CASE("uniform draws lie in (0, 1] and depend on every coordinate") {
  const SquareStream s(42, 1);
  double sum = 0;
  for (std::uint64_t k = 0; k < 20000; ++k) {
    const double u = s.uniform(k, 3);
    CHECK(u > 0.0);
    CHECK(u <= 1.0);
    sum += u;
  }
  CHECK(sum / 20000 == doctest::Approx(0.5).epsilon(0.01));
  CHECK(s.uniform(5, 3) != s.uniform(5, 4));
  CHECK(s.uniform(5, 3) != s.uniform(6, 3));
  CHECK(s.uniform(5, 3) != SquareStream(43, 1).uniform(5, 3));
  CHECK(s.uniform(5, 3) != SquareStream(42, 2).uniform(5, 3));
  CHECK(s.uniform(1ull << 33, 0) != s.uniform(0, 0));
}

TEST_CASE("inverse-CDF geometric draws") {
  const double log_half = std::log(0.5);
  CHECK(geometric_from_uniform(1.0, log_half) == 0);
  CHECK(geometric_from_uniform(0.75, log_half) == 0);
  CHECK(geometric_from_uniform(0.5, log_half) == 1);
  CHECK(geometric_from_uniform(0.2, log_half) == 2);
  CHECK(geometric_from_uniform(0x1.0p-53, log_half) == 53);
  // mean p / (1 - p) at p = 0.3
  const SquareStream s(9, 7);
  double sum = 0;
  const int draws = 200000;
  for (int k = 0; k < draws; ++k) sum += geometric_from_uniform(s.uniform(k, 0), std::log(0.3));
  CHECK(sum / draws == doctest::Approx(0.3 / 0.7).epsilon(0.02));
}

TEST_CASE("scaling constants") {
  const auto c = scaling_constants(0.25);
  CHECK(c.c1 == doctest::Approx(2.0).epsilon(1e-12));
  const double c2 = std::pow(0.25, 1.0 / 6) * std::cbrt(1.5) / 0.5;
  CHECK(c.c2 == doctest::Approx(c2).epsilon(1e-12));
  CHECK(c.c2 == doctest::Approx(1.8171205928321).epsilon(1e-12));
  ScalingConstants prev{0, 0};
  for (int k = 1; k <= 9; ++k) {
    const auto s = scaling_constants(k / 10.0);
    CHECK(s.c1 > prev.c1);
    CHECK(s.c2 > prev.c2);
    prev = s;
  }
  CHECK_THROWS_AS(scaling_constants(0.0), DomainError);
  CHECK_THROWS_AS(scaling_constants(1.0), DomainError);
}

TEST_CASE("exact CDF closed forms at n = 1") {
  for (const Rational y : {Rational(1, 2), Rational(1, 3)})
    for (int u = 0; u <= 8; ++u) {
      CHECK(exact_cdf(Geometry(GeometryKind::p2pr, 1), u, y) == 1 - rational_pow(y, u + 1));
      CHECK(exact_cdf(Geometry(GeometryKind::p2l, 1), u, y) == 1 - rational_pow(y, 2 * (u + 1)));
    }
  CHECK(exact_cdf(Geometry(GeometryKind::p2hlr, 1), 2, Rational(1, 2)) == Rational(105, 128));
  CHECK(exact_cdf(Geometry(GeometryKind::p2pr, 1), 3, Rational(1, 2)) == Rational(15, 16));
}

TEST_CASE("normalisation constants") {
  const Rational y(1, 2);
  CHECK(normalization(Geometry(GeometryKind::p2pr, 1), y) == Rational(1, 2));
  CHECK(normalization(Geometry(GeometryKind::p2l, 1), y) == Rational(3, 4));
  CHECK(normalization(Geometry(GeometryKind::p2hlr, 1), y) == Rational(3, 8));
  CHECK(normalization(Geometry(GeometryKind::p2pr, 2), y) == Rational(1, 2) * Rational(1, 2) * Rational(3, 4));
}

TEST_CASE("exact CDF is monotone and tends to one") {
  const Geometry g(GeometryKind::p2pr, 2);
  Rational prev = 0;
  for (int u = 0; u <= 10; ++u) {
    const Rational p = exact_cdf(g, u, Rational(1, 2));
    CHECK(p >= prev);
    CHECK(p <= 1);
    prev = p;
  }
  CHECK(1 - prev < Rational(1, 100));
  for (int u = 0; u <= 4; ++u)
    CHECK(exact_cdf(Geometry(GeometryKind::p2hlr, 2), u, Rational(1, 3)) >
          exact_cdf(Geometry(GeometryKind::p2hlr, 2), u, Rational(1, 2)));
  CHECK_THROWS_AS(exact_cdf(g, 2, Rational(1)), DomainError);
  CHECK_THROWS_AS(exact_cdf(g, 2, Rational(0)), DomainError);
}

TEST_CASE("exact factorisation") {
  std::vector<int> us{0, 2, 4, 6, 8};
  for (const auto& row : exact_factorization(1, Rational(1, 2), us)) CHECK(row.holds());
  std::vector<int> small{0, 2, 4};
  for (const auto& row : exact_factorization(2, Rational(1, 3), small)) CHECK(row.holds());
  std::vector<int> odd{3};
  CHECK_THROWS_AS(exact_factorization(1, Rational(1, 2), odd), DomainError);
}

TEST_CASE("tiny y leaves almost every filling empty") {
  const auto r = sample_lpp(spec(GeometryKind::p2hlr, 2, Rational(1, 1000)), 1000);
  CHECK(r.cdf_at(0) >= 0.99);
  CHECK(r.cdf_at(-1) == 0.0);
  CHECK(r.cdf_at(1000) == 1.0);
}

TEST_CASE("p2pr n = 1 simulation matches 15/16") {
  const auto r = sample_lpp(spec(GeometryKind::p2pr, 1, Rational(1, 2), 5), 100000);
  CHECK(std::abs(r.cdf_at(3) - 15.0 / 16) <= 0.01);
}

TEST_CASE("empirical CDFs lie in DKW bands around the exact CDF") {
  const std::size_t samples = 20000;
  for (auto kind : {GeometryKind::p2hlr, GeometryKind::p2pr, GeometryKind::p2l})
    for (std::size_t n = 1; n <= 2; ++n) {
      const Rational y(1, 2);
      const auto r = sample_lpp(spec(kind, n, y, 1000 + n), samples);
      for (int u = 0; u <= 6; ++u) {
        const double exact = exact_cdf(Geometry(kind, n), u, y).convert_to<double>();
        INFO(to_string(kind) << " n=" << n << " u=" << u);
        CHECK(std::abs(r.cdf_at(u) - exact) <= dkw(samples));
      }
    }
}

TEST_CASE("reports are consistent") {
  const auto r = sample_lpp(spec(GeometryKind::p2hlr, 4, Rational(1, 2), 3), 5000);
  CHECK(r.samples == 5000);
  CHECK(r.cdf.back().second == 1.0);
  for (std::size_t k = 1; k < r.cdf.size(); ++k) CHECK(r.cdf[k].second >= r.cdf[k - 1].second);
  std::uint64_t total = 0;
  for (const auto& b : r.normalized_histogram) total += b.count;
  CHECK(total == 5000);
  CHECK(r.variance > 0);
  CHECK(r.q() == doctest::Approx(0.25));
  CHECK_THROWS_AS(sample_lpp(spec(GeometryKind::p2pr, 2, Rational(1, 2)), 0), DomainError);
  CHECK_THROWS_AS(sample_lpp(spec(GeometryKind::p2pr, 2, Rational(3, 2)), 10), DomainError);
}

TEST_CASE("sampling is deterministic and independent of the thread count") {
  const auto s = spec(GeometryKind::p2hlr, 10, Rational(7, 10), 77);
  const auto serial = sample_lpp_times_serial(s, 3000);
  const int saved = omp_get_max_threads();
  for (int threads : {1, 2, 4}) {
    omp_set_num_threads(threads);
    CHECK(sample_lpp_times(s, 3000) == serial);
  }
  omp_set_num_threads(saved);
  const auto a = sample_lpp(s, 2000), b = sample_lpp(s, 2000);
  CHECK(a.cdf == b.cdf);
  CHECK(a.normalized_skewness == b.normalized_skewness);
  const auto other = sample_lpp(spec(GeometryKind::p2hlr, 10, Rational(7, 10), 78), 2000);
  CHECK(other.cdf != a.cdf);
}

TEST_CASE("Monte Carlo factorisation at moderate size") {
  const auto f = monte_carlo_factorization(6, Rational(1, 2), 20000, 11);
  CHECK(f.sup_distance <= 3 * dkw(20000));
  CHECK_FALSE(f.rows.empty());
  for (const auto& row : f.rows) CHECK(row.u % 2 == 0);
}

TEST_CASE("rational square roots") {
  CHECK(rational_sqrt(Rational(49, 100)) == Rational(7, 10));
  CHECK(rational_sqrt(Rational(1, 4)) == Rational(1, 2));
  CHECK(rational_sqrt(Rational(1, 2)).convert_to<double>() == doctest::Approx(std::sqrt(0.5)).epsilon(1e-14));
}
