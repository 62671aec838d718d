#include "lppqs/growth.hpp"

#include <algorithm>
#include <string>

#include "lppqs/errors.hpp"

namespace lppqs {

namespace {

void check_input(const LocalRuleInput& in) {
  if (in.g < 0) throw DomainError("local rule weight must be non-negative");
  if (!interlaces(in.kappa, in.alpha) || !interlaces(in.kappa, in.beta))
    throw DomainError("local rule requires kappa ≺ alpha and kappa ≺ beta, got kappa=" +
                      in.kappa.to_string() + " alpha=" + in.alpha.to_string() +
                      " beta=" + in.beta.to_string());
}

int hi(const Partition& a, const Partition& b, std::size_t s) { return std::max(a.part(s), b.part(s)); }
int lo(const Partition& a, const Partition& b, std::size_t s) { return std::min(a.part(s), b.part(s)); }

}  // namespace

const char* to_string(Rule rule) noexcept { return rule == Rule::row ? "row" : "col"; }

Partition row_rsk_local(const LocalRuleInput& in) {
  check_input(in);
  const auto& [a, b, k, g] = in;
  const std::size_t len = std::min(a.length(), b.length()) + 1;
  std::vector<int> nu(len);
  nu[0] = hi(a, b, 1) + g;
  for (std::size_t s = 2; s <= len; ++s) nu[s - 1] = hi(a, b, s) + lo(a, b, s - 1) - k.part(s - 1);
  return Partition(std::move(nu));
}

Partition col_rsk_local(const LocalRuleInput& in) {
  check_input(in);
  const auto& [a, b, k, g] = in;
  const std::size_t len = std::min(a.length(), b.length()) + 1;
  std::vector<int> nu(len);
  // carry runs from the last row up; κ_0 acts as +∞, so ν_1 is uncapped
  int carry = g;
  for (std::size_t s = len; s >= 2; --s) {
    const int top = hi(a, b, s);
    const int cap = k.part(s - 1);
    nu[s - 1] = std::min(top + carry, cap);
    carry = carry - std::min(carry, cap - top) + lo(a, b, s - 1) - cap;
  }
  nu[0] = hi(a, b, 1) + carry;
  return Partition(std::move(nu));
}

Partition apply_local(Rule rule, const LocalRuleInput& in) {
  return rule == Rule::row ? row_rsk_local(in) : col_rsk_local(in);
}

LocalPreimage invert_local(Rule rule, const Partition& alpha, const Partition& beta,
                           const Partition& nu) {
  if (!interlaces(alpha, nu) || !interlaces(beta, nu))
    throw DomainError("inverse local rule requires alpha ≺ nu ≻ beta, got alpha=" +
                      alpha.to_string() + " beta=" + beta.to_string() + " nu=" + nu.to_string());
  const std::size_t len = std::min(alpha.length(), beta.length()) + 1;
  std::vector<int> kappa(len - 1);
  int g = 0;
  if (rule == Rule::row) {
    for (std::size_t s = 2; s <= len; ++s)
      kappa[s - 2] = hi(alpha, beta, s) + lo(alpha, beta, s - 1) - nu.part(s);
    g = nu.part(1) - hi(alpha, beta, 1);
  } else {
    int carry = nu.part(1) - hi(alpha, beta, 1);
    for (std::size_t s = 1; s + 1 <= len; ++s) {
      const int ks = std::max(lo(alpha, beta, s) - carry, nu.part(s + 1));
      kappa[s - 1] = ks;
      carry = nu.part(s + 1) + carry - hi(alpha, beta, s + 1) - lo(alpha, beta, s) + ks;
    }
    g = carry;
  }
  if (g < 0) throw DomainError("inverse local rule produced a negative weight");
  LocalPreimage out;
  try {
    out.kappa = Partition(std::move(kappa));
  } catch (const DomainError&) {
    throw DomainError("inverse local rule produced a non-partition kappa");
  }
  out.g = g;
  if (!interlaces(out.kappa, alpha) || !interlaces(out.kappa, beta))
    throw DomainError("inverse local rule produced kappa not interlacing alpha and beta");
  return out;
}

// ---------------------------------------------------------------- IntMatrix

IntMatrix::IntMatrix(std::size_t columns, std::size_t rows, int fill)
    : columns_(columns), rows_(rows), data_(columns * rows, fill) {}

long long IntMatrix::total() const noexcept {
  long long t = 0;
  for (int v : data_) t += v;
  return t;
}

long long IntMatrix::column_sum(std::size_t i) const {
  long long t = 0;
  for (std::size_t j = 1; j <= rows_; ++j) t += (*this)(i, j);
  return t;
}

long long IntMatrix::row_sum(std::size_t j) const {
  long long t = 0;
  for (std::size_t i = 1; i <= columns_; ++i) t += (*this)(i, j);
  return t;
}

// --------------------------------------------------------------- GrowthGrid

GrowthGrid::GrowthGrid(Rule rule, std::size_t columns, std::size_t rows)
    : rule_(rule), columns_(columns), rows_(rows), points_((columns + 1) * (rows + 1)) {}

std::vector<Partition> GrowthGrid::north_chain() const {
  std::vector<Partition> out;
  for (std::size_t i = 0; i <= columns_; ++i) out.push_back(at(i, rows_));
  return out;
}

std::vector<Partition> GrowthGrid::east_chain() const {
  std::vector<Partition> out;
  for (std::size_t j = 0; j <= rows_; ++j) out.push_back(at(columns_, j));
  return out;
}

GrowthGrid grow_grid(const IntMatrix& w, Rule rule) {
  if (w.columns() == 0 || w.rows() == 0) throw DomainError("growth needs a non-empty matrix");
  GrowthGrid grid(rule, w.columns(), w.rows());
  for (std::size_t i = 1; i <= w.columns(); ++i)
    for (std::size_t j = 1; j <= w.rows(); ++j) {
      if (w(i, j) < 0) throw DomainError("matrix entries must be non-negative");
      grid.at(i, j) =
          apply_local(rule, {grid.at(i - 1, j), grid.at(i, j - 1), grid.at(i - 1, j - 1), w(i, j)});
    }
  return grid;
}

IntMatrix shrink_grid(Rule rule, const std::vector<Partition>& north,
                      const std::vector<Partition>& east) {
  if (north.size() < 2 || east.size() < 2) throw DomainError("boundary chains are too short");
  const std::size_t m = north.size() - 1, n = east.size() - 1;
  if (north.back() != east.back()) throw DomainError("boundary chains disagree at the corner");
  if (!north.front().empty() || !east.front().empty())
    throw DomainError("boundary chains must start at the empty partition");
  GrowthGrid grid(rule, m, n);
  for (std::size_t i = 0; i <= m; ++i) grid.at(i, n) = north[i];
  for (std::size_t j = 0; j <= n; ++j) grid.at(m, j) = east[j];
  IntMatrix w(m, n);
  for (std::size_t i = m; i >= 1; --i)
    for (std::size_t j = n; j >= 1; --j) {
      const auto pre = invert_local(rule, grid.at(i - 1, j), grid.at(i, j - 1), grid.at(i, j));
      w(i, j) = pre.g;
      if ((i == 1 || j == 1) && !pre.kappa.empty())
        throw DomainError("boundary does not shrink to empty axes");
      grid.at(i - 1, j - 1) = pre.kappa;
    }
  return w;
}

// ------------------------------------------------------------ Greene oracle

namespace {

class PathSearch {
 public:
  PathSearch(const IntMatrix& w, std::size_t k) : w_(w), k_(k), used_(w.columns() * w.rows(), 0) {}

  long long run() {
    if (k_ == 1) return single_path();
    place(1, 0);
    return best_;
  }

 private:
  // Longest single path: plain dynamic program, the memoized k = 1 case.
  long long single_path() const {
    const std::size_t m = w_.columns(), n = w_.rows();
    std::vector<long long> dp(m * n, 0);
    auto at = [&](std::size_t i, std::size_t j) -> long long& { return dp[(i - 1) * n + (j - 1)]; };
    for (std::size_t i = 1; i <= m; ++i)
      for (std::size_t j = 1; j <= n; ++j) {
        long long prev = 0;
        if (i > 1) prev = at(i - 1, j);
        if (j > 1) prev = std::max(prev, at(i, j - 1));
        at(i, j) = prev + w_(i, j);
      }
    return at(m, n);
  }

  char& used(std::size_t i, std::size_t j) { return used_[(i - 1) * w_.rows() + (j - 1)]; }

  void place(std::size_t r, long long acc) {
    if (r > k_) {
      best_ = std::max(best_, acc);
      return;
    }
    const std::size_t end_row = w_.rows() - k_ + r;
    walk(r, 1, r, end_row, acc);
  }

  void walk(std::size_t r, std::size_t i, std::size_t j, std::size_t end_row, long long acc) {
    if (used(i, j)) return;
    used(i, j) = 1;
    acc += w_(i, j);
    if (i == w_.columns() && j == end_row) {
      place(r + 1, acc);
    } else {
      if (i < w_.columns()) walk(r, i + 1, j, end_row, acc);
      if (j < end_row) walk(r, i, j + 1, end_row, acc);
    }
    used(i, j) = 0;
  }

  const IntMatrix& w_;
  std::size_t k_;
  std::vector<char> used_;
  long long best_ = -1;
};

}  // namespace

long long greene_oracle(const IntMatrix& w, std::size_t k, PathDirection direction) {
  if (k == 0 || k > std::min(w.columns(), w.rows()))
    throw DomainError("greene_oracle needs 1 <= k <= min(m, n)");
  if (direction == PathDirection::up_right) return PathSearch(w, k).run();
  // down-right paths are up-right paths of the vertically mirrored matrix
  IntMatrix mirrored(w.columns(), w.rows());
  for (std::size_t i = 1; i <= w.columns(); ++i)
    for (std::size_t j = 1; j <= w.rows(); ++j) mirrored(i, j) = w(i, w.rows() + 1 - j);
  return PathSearch(mirrored, k).run();
}

}  // namespace lppqs
