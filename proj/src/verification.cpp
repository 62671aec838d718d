#include "lppqs/verification.hpp"

#include <algorithm>
#include <chrono>
#include <numeric>
#include <random>

#include "lppqs/bijections.hpp"
#include "lppqs/errors.hpp"
#include "lppqs/geometry.hpp"
#include "lppqs/probability.hpp"

namespace lppqs {

namespace {

class Stopwatch {
 public:
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

std::string nu_label(std::size_t n, int u) {
  return "n=" + std::to_string(n) + " u=" + std::to_string(u);
}

CheckResult sides(std::string suite, std::string instance, const LaurentPolynomial& lhs,
                  const LaurentPolynomial& rhs, const Stopwatch& clock) {
  CheckResult r{std::move(suite), std::move(instance), lhs == rhs, clock.seconds(), {}};
  r.details.emplace_back("lhs", lhs.to_string());
  r.details.emplace_back("rhs", rhs.to_string());
  return r;
}

int uniform_int(std::mt19937_64& rng, int lo, int hi) {
  return std::uniform_int_distribution<int>(lo, hi)(rng);
}

Partition random_partition(std::mt19937_64& rng, std::size_t max_length, int max_part) {
  std::vector<int> parts(max_length);
  for (auto& p : parts) p = uniform_int(rng, 0, max_part);
  std::sort(parts.rbegin(), parts.rend());
  return Partition(parts);
}

/// Random mu with kappa ≺ mu; the first part grows by at most `slack`.
Partition random_above(std::mt19937_64& rng, const Partition& kappa, int slack) {
  std::vector<int> parts;
  for (std::size_t i = 1; i <= kappa.length() + 1; ++i) {
    const int lo = kappa.part(i);
    const int hi = i == 1 ? kappa.part(1) + slack : kappa.part(i - 1);
    parts.push_back(uniform_int(rng, lo, hi));
  }
  return Partition(parts);
}

std::string partition_list(std::initializer_list<const Partition*> ps) {
  std::string out;
  for (const auto* p : ps) out += (out.empty() ? "" : " ") + p->to_string();
  return out;
}

CheckResult failure(CheckResult r, std::string what, const Stopwatch& clock) {
  r.pass = false;
  r.seconds = clock.seconds();
  r.details.emplace_back("counterexample", std::move(what));
  return r;
}

}  // namespace

CheckResult check_theorem(std::size_t n, int u, const SeriesOptions& options) {
  if (u < 0 || u % 2 != 0) throw DomainError("the factorisation needs an even u >= 0");
  Stopwatch clock;
  const auto lhs = generating_series(Geometry(GeometryKind::p2hlr, n), u, options);
  const auto rhs = generating_series(Geometry(GeometryKind::p2pr, n), u, options) *
                   generating_series(Geometry(GeometryKind::p2l, n), u / 2, options);
  return sides("theorem", nu_label(n, u), lhs, rhs, clock);
}

CheckResult check_step1(std::size_t n, int u, const SeriesOptions& options) {
  Stopwatch clock;
  const auto lhs = generating_series(Geometry(GeometryKind::p2hlr, n), u, options);
  const auto rhs = product_power(n, u) * bounded_symplectic_sum(u, n);
  return sides("step1", nu_label(n, u), lhs, rhs, clock);
}

CheckResult check_step4(std::size_t n, int u, const SeriesOptions& options) {
  Stopwatch clock;
  const auto pr = generating_series(Geometry(GeometryKind::p2pr, n), u, options);
  const auto pr_rhs = bounded_schur_sum(u, n, false);
  CheckResult r{"step4", nu_label(n, u), pr == pr_rhs, 0, {}};
  r.details.emplace_back("p2pr", pr.to_string());
  r.details.emplace_back("schur", pr_rhs.to_string());
  if (u % 2 == 0) {
    const auto l = generating_series(Geometry(GeometryKind::p2l, n), u / 2, options);
    const auto l_rhs = bounded_schur_sum(u, n, true);
    r.pass = r.pass && l == l_rhs;
    r.details.emplace_back("p2l", l.to_string());
    r.details.emplace_back("schur_even", l_rhs.to_string());
  }
  r.seconds = clock.seconds();
  return r;
}

CheckResult check_okada(std::size_t n, int u) {
  Stopwatch clock;
  const auto s = okada_product(u, n);
  return sides("okada", nu_label(n, u), s.lhs, s.rhs, clock);
}

CheckResult check_stembridge(std::size_t n, int v) {
  Stopwatch clock;
  const auto s = stembridge_sides(v, n);
  CheckResult r{"stembridge", nu_label(n, 2 * v), s.all_rows.equal() && s.even_rows.equal(), 0, {}};
  r.details.emplace_back("all_rows_lhs", s.all_rows.lhs.to_string());
  r.details.emplace_back("all_rows_rhs", s.all_rows.rhs.to_string());
  r.details.emplace_back("even_rows_lhs", s.even_rows.lhs.to_string());
  r.details.emplace_back("even_rows_rhs", s.even_rows.rhs.to_string());
  r.seconds = clock.seconds();
  return r;
}

CheckResult check_characters(Family family, std::size_t n, int max_part) {
  Stopwatch clock;
  CheckResult r{"characters", std::string(to_string(family)) + " n=" + std::to_string(n) +
                                  " box=" + std::to_string(max_part),
                true, 0, {}};
  std::size_t count = 0;
  for (const auto& lambda : partitions_in_box(n, max_part)) {
    const auto jt = character_jt(family, lambda, n);
    const auto tab = character_tab(family, lambda, n);
    if (jt != tab) return failure(r, "jt != tab at " + lambda.to_string(), clock);
    if (family == Family::schur) {
      std::vector<std::size_t> perm(n);
      std::iota(perm.begin(), perm.end(), 1);
      do {
        if (jt.permuted(perm) != jt)
          return failure(r, "not symmetric at " + lambda.to_string(), clock);
      } while (std::next_permutation(perm.begin(), perm.end()));
    } else {
      for (std::size_t i = 1; i <= n; ++i)
        if (jt.inverted_variable(i) != jt)
          return failure(r, "not inversion invariant in x" + std::to_string(i) + " at " + lambda.to_string(), clock);
    }
    ++count;
  }
  r.details.emplace_back("shapes", std::to_string(count));
  r.seconds = clock.seconds();
  return r;
}

CheckResult check_greene(const RandomCheckConfig& config, std::size_t max_dim, int max_entry) {
  Stopwatch clock;
  CheckResult r{"greene", "trials=" + std::to_string(config.trials) + " max-dim=" + std::to_string(max_dim),
                true, 0, {}};
  std::mt19937_64 rng(config.seed);
  for (std::size_t t = 0; t < config.trials; ++t) {
    const auto m = static_cast<std::size_t>(uniform_int(rng, 1, static_cast<int>(max_dim)));
    const auto n = static_cast<std::size_t>(uniform_int(rng, 1, static_cast<int>(max_dim)));
    IntMatrix w(m, n);
    for (std::size_t i = 1; i <= m; ++i)
      for (std::size_t j = 1; j <= n; ++j) w(i, j) = uniform_int(rng, 0, max_entry);
    const Partition row_shape = grow_grid(w, Rule::row).corner();
    const Partition col_shape = grow_grid(w, Rule::col).corner();
    long long row_sum = 0;
    long long col_sum = 0;
    for (std::size_t k = 1; k <= std::min(m, n); ++k) {
      row_sum += row_shape.part(k);
      col_sum += col_shape.part(k);
      if (row_sum != greene_oracle(w, k, PathDirection::up_right))
        return failure(r, "row rule, trial " + std::to_string(t) + ", k=" + std::to_string(k), clock);
      if (col_sum != greene_oracle(w, k, PathDirection::down_right))
        return failure(r, "col rule, trial " + std::to_string(t) + ", k=" + std::to_string(k), clock);
    }
  }
  r.seconds = clock.seconds();
  return r;
}

CheckResult check_local_roundtrips(Rule rule, const RandomCheckConfig& config) {
  Stopwatch clock;
  CheckResult r{"roundtrips", std::string(to_string(rule)) + "-local trials=" + std::to_string(config.trials),
                true, 0, {}};
  std::mt19937_64 rng(config.seed);
  for (std::size_t t = 0; t < config.trials; ++t) {
    LocalRuleInput in;
    in.kappa = random_partition(rng, 3, 4);
    in.alpha = random_above(rng, in.kappa, 3);
    in.beta = random_above(rng, in.kappa, 3);
    in.g = uniform_int(rng, 0, 4);
    const Partition nu = apply_local(rule, in);
    const auto where = partition_list({&in.alpha, &in.beta, &in.kappa}) + " g=" + std::to_string(in.g);
    if (!interlaces(in.alpha, nu) || !interlaces(in.beta, nu))
      return failure(r, "output does not interlace: " + where, clock);
    if (in.kappa.size() + nu.size() != in.alpha.size() + in.beta.size() + in.g)
      return failure(r, "size not conserved: " + where, clock);
    if (invert_local(rule, in.alpha, in.beta, nu) != LocalPreimage{in.kappa, in.g})
      return failure(r, "inverse mismatch: " + where, clock);
  }
  r.seconds = clock.seconds();
  return r;
}

CheckResult check_bz_roundtrips(const RandomCheckConfig& config, std::size_t max_n, int max_u) {
  Stopwatch clock;
  CheckResult r{"roundtrips", "bz_map trials=" + std::to_string(config.trials), true, 0, {}};
  std::mt19937_64 rng(config.seed);
  for (std::size_t t = 0; t < config.trials; ++t) {
    const auto n = static_cast<std::size_t>(uniform_int(rng, 1, static_cast<int>(max_n)));
    const int u = uniform_int(rng, 0, max_u);
    Filling w{Geometry(GeometryKind::p2hlr, n)};
    std::vector<Square> order = w.geometry().squares();
    std::shuffle(order.begin(), order.end(), rng);
    for (const auto& s : order) {
      w.set(s.i, s.j, uniform_int(rng, 0, u));
      while (lpp_time(w) > u) w.set(s.i, s.j, w.at(s.i, s.j) - 1);
    }
    const auto where = "trial " + std::to_string(t) + " n=" + std::to_string(n) + " u=" + std::to_string(u);
    const SpGTPattern z = bz_forward(w, u);
    for (const auto& row : z.rows())
      for (int e : row)
        if (e < 0 || e > u) return failure(r, "entry out of range, " + where, clock);
    if (bz_inverse(z, u) != w) return failure(r, "round trip, " + where, clock);
    const auto type = z.type();
    Exponents e(n);
    for (std::size_t i = 1; i <= n; ++i) e[i - 1] = u - (type[2 * i - 2] - type[2 * i - 1]);
    if (weight_of(w) != LaurentPolynomial::monomial(e)) return failure(r, "weight identity, " + where, clock);
  }
  r.seconds = clock.seconds();
  return r;
}

CheckResult check_p2l_roundtrips(const RandomCheckConfig& config, std::size_t max_n, int max_entry) {
  Stopwatch clock;
  CheckResult r{"roundtrips", "p2l_map trials=" + std::to_string(config.trials), true, 0, {}};
  std::mt19937_64 rng(config.seed);
  for (std::size_t t = 0; t < config.trials; ++t) {
    const auto n = static_cast<std::size_t>(uniform_int(rng, 1, static_cast<int>(max_n)));
    Filling w{Geometry(GeometryKind::p2l, n)};
    for (const auto& s : w.geometry().squares()) w.set(s.i, s.j, uniform_int(rng, 0, max_entry));
    const auto where = "trial " + std::to_string(t) + " n=" + std::to_string(n);
    const GTPattern z = p2l_forward(w);
    const Partition shape = z.shape();
    if (!shape.all_parts_even()) return failure(r, "odd shape row, " + where, clock);
    if (shape.part(1) != 2 * lpp_time(w)) return failure(r, "shape_1 != 2 lpp_time, " + where, clock);
    const IntMatrix m = p2l_symmetric_matrix(w);
    const auto type = z.type();
    for (std::size_t i = 1; i <= n; ++i)
      if (type[i - 1] != m.column_sum(i)) return failure(r, "type != column sums, " + where, clock);
    if (p2l_inverse(z) != w) return failure(r, "round trip, " + where, clock);
  }
  r.seconds = clock.seconds();
  return r;
}

CheckResult check_exact_factorization(std::size_t n, const Rational& y, int u_max,
                                      const SeriesOptions& options) {
  Stopwatch clock;
  CheckResult r{"factorization", "n=" + std::to_string(n) + " y=" + rational_string(y) +
                                     " u<=" + std::to_string(u_max),
                true, 0, {}};
  std::vector<int> us;
  for (int u = 0; u <= u_max; u += 2) us.push_back(u);
  for (const auto& row : exact_factorization(n, y, us, options)) {
    const std::string at = "u=" + std::to_string(row.u);
    r.details.emplace_back(at, rational_string(row.p2hlr) + " = " + rational_string(row.p2pr) +
                                   " * " + rational_string(row.p2l));
    if (!row.holds()) return failure(r, "product differs at " + at, clock);
    if (n == 1) {
      const Rational pr = 1 - rational_pow(y, static_cast<unsigned>(row.u + 1));
      const Rational l = 1 - rational_pow(y, static_cast<unsigned>(row.u + 2));
      if (row.p2pr != pr || row.p2l != l) return failure(r, "closed form differs at " + at, clock);
    }
  }
  r.seconds = clock.seconds();
  return r;
}

}  // namespace lppqs
