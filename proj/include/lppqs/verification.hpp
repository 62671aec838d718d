#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "lppqs/characters.hpp"
#include "lppqs/growth.hpp"
#include "lppqs/laurent.hpp"
#include "lppqs/series.hpp"

namespace lppqs {

/// Outcome of one verification instance. `details` holds labelled text such
/// as the two sides of an identity, or the first counterexample found.
struct CheckResult {
  std::string suite;
  std::string instance;
  bool pass = false;
  double seconds = 0;
  std::vector<std::pair<std::string, std::string>> details;
};

/// series(p2hlr, n, u) = series(p2pr, n, u) * series(p2l, n, u/2). u even.
CheckResult check_theorem(std::size_t n, int u, const SeriesOptions& options = {});
/// series(p2hlr, n, u) = (x_1..x_n)^u * sum over λ_1 <= u of sp_λ.
CheckResult check_step1(std::size_t n, int u, const SeriesOptions& options = {});
/// series(p2pr, n, u) = bounded_schur_sum(u, n, false) and, for even u,
/// series(p2l, n, u/2) = bounded_schur_sum(u, n, true).
CheckResult check_step4(std::size_t n, int u, const SeriesOptions& options = {});
CheckResult check_okada(std::size_t n, int u);
/// Both bounded Littlewood identities at u = 2v.
CheckResult check_stembridge(std::size_t n, int v);
/// character_jt = character_tab for every λ inside the n × max_part box, plus
/// inversion symmetry (symplectic, odd orthogonal) or permutation symmetry (Schur).
CheckResult check_characters(Family family, std::size_t n, int max_part);

struct RandomCheckConfig {
  std::size_t trials = 200;
  std::uint64_t seed = 1;
};

/// Greene's theorem on random matrices with m, n <= max_dim and entries
/// <= max_entry, against the brute-force path oracle.
CheckResult check_greene(const RandomCheckConfig& config, std::size_t max_dim = 5, int max_entry = 4);
/// Local rules: inverse(apply(x)) = x, interlacing and size conservation.
CheckResult check_local_roundtrips(Rule rule, const RandomCheckConfig& config);
/// bz_map on random p2hlr fillings with n <= max_n, u <= max_u: round trip,
/// 0 <= z <= u and the weight identity.
CheckResult check_bz_roundtrips(const RandomCheckConfig& config, std::size_t max_n = 3, int max_u = 4);
/// p2l_map on random p2l fillings with n <= max_n, entries <= max_entry:
/// round trip, even shape rows, shape_1 = 2 * lpp_time, type = column sums.
CheckResult check_p2l_roundtrips(const RandomCheckConfig& config, std::size_t max_n = 4,
                                 int max_entry = 3);

/// Exact factorisation of the CDFs at every even u <= u_max.
CheckResult check_exact_factorization(std::size_t n, const Rational& y, int u_max,
                                      const SeriesOptions& options = {});

}  // namespace lppqs
