#include <algorithm>
#include <map>
#include <random>
#include <set>

#include "doctest.h"
#include "lppqs/errors.hpp"
#include "lppqs/growth.hpp"
#include "lppqs/verification.hpp"

using namespace lppqs;

namespace {

IntMatrix small_matrix() {
  IntMatrix w(2, 2);
  w(1, 1) = 1;
  w(1, 2) = 2;
  w(2, 1) = 0;
  w(2, 2) = 3;
  return w;
}

IntMatrix random_matrix(std::mt19937_64& rng, std::size_t max_dim, int max_entry) {
  const std::size_t m = 1 + rng() % max_dim, n = 1 + rng() % max_dim;
  IntMatrix w(m, n);
  for (std::size_t i = 1; i <= m; ++i)
    for (std::size_t j = 1; j <= n; ++j) w(i, j) = static_cast<int>(rng() % (max_entry + 1));
  return w;
}

// Cell sets of every monotone path from (1, r0) to (m, r1), stepping right
// or by `dj` rows; cells are numbered (i-1) * rows + (j-1).
void paths_between(const IntMatrix& w, int r0, int r1, int dj, std::vector<std::uint64_t>& out) {
  const int m = static_cast<int>(w.columns()), rows = static_cast<int>(w.rows());
  auto bit = [&](int i, int j) { return std::uint64_t{1} << ((i - 1) * rows + (j - 1)); };
  auto rec = [&](auto& self, int i, int j, std::uint64_t cells) -> void {
    cells |= bit(i, j);
    if (i == m && j == r1) {
      out.push_back(cells);
      return;
    }
    if (i < m) self(self, i + 1, j, cells);
    if (j != r1) self(self, i, j + dj, cells);
  };
  rec(rec, 1, r0, 0);
}

long long path_weight(const IntMatrix& w, std::uint64_t cells) {
  long long s = 0;
  for (std::size_t i = 1; i <= w.columns(); ++i)
    for (std::size_t j = 1; j <= w.rows(); ++j)
      if (cells >> ((i - 1) * w.rows() + (j - 1)) & 1) s += w(i, j);
  return s;
}

// Independent oracle: list every path per endpoint pair, then maximise over
// pairwise disjoint tuples.
long long brute_k_paths(const IntMatrix& w, std::size_t k, PathDirection dir) {
  const int n = static_cast<int>(w.rows()), kk = static_cast<int>(k);
  std::vector<std::vector<std::uint64_t>> families(k);
  for (int r = 1; r <= kk; ++r) {
    if (dir == PathDirection::up_right) paths_between(w, r, n - kk + r, +1, families[r - 1]);
    else paths_between(w, n + 1 - r, kk + 1 - r, -1, families[r - 1]);
  }
  long long best = -1;
  auto rec = [&](auto& self, std::size_t r, std::uint64_t used, long long acc) -> void {
    if (r == k) {
      best = std::max(best, acc);
      return;
    }
    for (auto p : families[r])
      if (!(p & used)) self(self, r + 1, used | p, acc + path_weight(w, p));
  };
  rec(rec, 0, 0, 0);
  return best;
}

void partitions_of(int total, int max_part, std::size_t max_len, std::vector<int>& cur,
                   std::vector<Partition>& out) {
  if (total == 0) {
    out.emplace_back(cur);
    return;
  }
  if (cur.size() == max_len) return;
  for (int p = std::min(total, max_part); p >= 1; --p) {
    cur.push_back(p);
    partitions_of(total - p, p, max_len, cur, out);
    cur.pop_back();
  }
}

}  // namespace

TEST_CASE("row local rule examples") {
  CHECK(row_rsk_local({Partition(), Partition(), Partition(), 4}) == Partition({4}));
  CHECK(row_rsk_local({Partition({2}), Partition({1}), Partition({1}), 3}) == Partition({5}));
  CHECK(invert_local(Rule::row, Partition({2}), Partition({1}), Partition({5})) == LocalPreimage{Partition({1}), 3});
}

TEST_CASE("col local rule examples") {
  CHECK(col_rsk_local({Partition(), Partition(), Partition(), 4}) == Partition({4}));
  CHECK(col_rsk_local({Partition({2}), Partition({1}), Partition({1}), 3}) == Partition({4, 1}));
  CHECK(invert_local(Rule::col, Partition(), Partition(), Partition({7})) == LocalPreimage{Partition(), 7});
  CHECK(invert_local(Rule::col, Partition({2}), Partition({1}), Partition({4, 1})) ==
        LocalPreimage{Partition({1}), 3});
}

TEST_CASE("local rules reject bad inputs") {
  CHECK_THROWS_AS(row_rsk_local({Partition({1}), Partition(), Partition({2}), 0}), DomainError);
  CHECK_THROWS_AS(col_rsk_local({Partition({1}), Partition({1}), Partition(), -1}), DomainError);
  // nu must sit above both alpha and beta
  CHECK_THROWS_AS(invert_local(Rule::row, Partition({3}), Partition({1}), Partition({2})), DomainError);
  CHECK_THROWS_AS(invert_local(Rule::col, Partition({3}), Partition({1}), Partition({2, 1})), DomainError);
}

TEST_CASE("local rule round trips (1000 random inputs per rule)") {
  for (Rule rule : {Rule::row, Rule::col}) {
    const auto r = check_local_roundtrips(rule, {1000, 99});
    INFO(r.instance);
    for (const auto& [k, v] : r.details) INFO(k << ": " << v);
    CHECK(r.pass);
  }
}

TEST_CASE("skew Cauchy: both sides of a local rule have the same graded counts") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 30; ++trial) {
    std::vector<int> k(3);
    for (auto& p : k) p = static_cast<int>(rng() % 4);
    std::sort(k.rbegin(), k.rend());
    const Partition kappa0(k);
    auto above = [&](const Partition& base) {
      std::vector<int> parts;
      for (std::size_t i = 1; i <= base.length() + 1; ++i) {
        const int hi = i == 1 ? base.part(1) + 2 : base.part(i - 1);
        parts.push_back(base.part(i) + static_cast<int>(rng() % (hi - base.part(i) + 1)));
      }
      return Partition(parts);
    };
    const Partition alpha = above(kappa0), beta = above(kappa0);
    const int base = alpha.size() + beta.size();
    for (Rule rule : {Rule::row, Rule::col}) {
      for (int d = 0; d <= 8; ++d) {
        const int target = base + d - kappa0.size();  // any fixed size of nu works
        if (target < 0) continue;
        std::set<Partition> image;
        std::size_t preimages = 0;
        for (const auto& kappa : interlacing_below(alpha, alpha.length())) {
          if (!interlaces(kappa, beta)) continue;
          const int g = target + kappa.size() - base;
          if (g < 0) continue;
          ++preimages;
          image.insert(apply_local(rule, {alpha, beta, kappa, g}));
        }
        std::vector<Partition> all;
        std::vector<int> cur;
        partitions_of(target, target, std::min(alpha.length(), beta.length()) + 1, cur, all);
        std::size_t targets = 0;
        for (const auto& nu : all) targets += interlaces(alpha, nu) && interlaces(beta, nu);
        CHECK(image.size() == preimages);
        CHECK(targets == preimages);
      }
    }
  }
}

TEST_CASE("grow_grid on the worked 2x2 example") {
  const auto w = small_matrix();
  CHECK(grow_grid(w, Rule::row).corner() == Partition({6}));
  CHECK(grow_grid(w, Rule::col).corner() == Partition({5, 1}));
  const auto zero = grow_grid(IntMatrix(3, 2), Rule::row);
  for (std::size_t i = 0; i <= 3; ++i)
    for (std::size_t j = 0; j <= 2; ++j) CHECK(zero.at(i, j).empty());
  IntMatrix bad(1, 1);
  bad(1, 1) = -1;
  CHECK_THROWS_AS(grow_grid(bad, Rule::row), DomainError);
}

TEST_CASE("growth grids conserve size, bound lengths and record row/column sums") {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 200; ++trial) {
    const auto w = random_matrix(rng, 5, 4);
    for (Rule rule : {Rule::row, Rule::col}) {
      const auto g = grow_grid(w, rule);
      for (std::size_t i = 1; i <= w.columns(); ++i)
        for (std::size_t j = 1; j <= w.rows(); ++j) {
          CHECK(g.at(i - 1, j - 1).size() + g.at(i, j).size() ==
                g.at(i - 1, j).size() + g.at(i, j - 1).size() + w(i, j));
          CHECK(g.at(i, j).length() <= std::min(i, j));
        }
      for (std::size_t k = 1; k <= w.rows(); ++k)
        CHECK(g.at(w.columns(), k).size() - g.at(w.columns(), k - 1).size() == w.row_sum(k));
      for (std::size_t k = 1; k <= w.columns(); ++k)
        CHECK(g.at(k, w.rows()).size() - g.at(k - 1, w.rows()).size() == w.column_sum(k));
      CHECK(shrink_grid(rule, g.north_chain(), g.east_chain()) == w);
    }
  }
}

TEST_CASE("shrink_grid rejects boundaries that are not growth images") {
  const std::vector<Partition> north{Partition(), Partition({1})};
  const std::vector<Partition> east{Partition(), Partition({2})};
  CHECK_THROWS_AS(shrink_grid(Rule::row, north, east), DomainError);
}

TEST_CASE("greene oracle examples") {
  const auto w = small_matrix();
  CHECK(greene_oracle(w, 1, PathDirection::up_right) == 6);
  CHECK(greene_oracle(w, 1, PathDirection::down_right) == 5);
  CHECK(greene_oracle(w, 2, PathDirection::up_right) == 6);
  CHECK(greene_oracle(IntMatrix(3, 4), 2, PathDirection::up_right) == 0);
  CHECK_THROWS_AS(greene_oracle(w, 3, PathDirection::up_right), DomainError);
  CHECK_THROWS_AS(greene_oracle(w, 0, PathDirection::up_right), DomainError);
}

TEST_CASE("k = n paths cover a square matrix") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 50; ++trial) {
    IntMatrix w(3, 3);
    for (std::size_t i = 1; i <= 3; ++i)
      for (std::size_t j = 1; j <= 3; ++j) w(i, j) = static_cast<int>(rng() % 5);
    CHECK(greene_oracle(w, 3, PathDirection::up_right) == w.total());
    CHECK(greene_oracle(w, 3, PathDirection::down_right) == w.total());
  }
}

TEST_CASE("greene oracle agrees with an independent path-set search") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 150; ++trial) {
    const auto w = random_matrix(rng, 4, 3);
    for (std::size_t k = 1; k <= std::min(w.columns(), w.rows()); ++k)
      for (auto dir : {PathDirection::up_right, PathDirection::down_right})
        CHECK(greene_oracle(w, k, dir) == brute_k_paths(w, k, dir));
  }
}

TEST_CASE("Greene's theorem for both rules") {
  const auto r = check_greene({200, 2024});
  for (const auto& [k, v] : r.details) INFO(k << ": " << v);
  CHECK(r.pass);
}
