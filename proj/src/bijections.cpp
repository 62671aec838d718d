#include "lppqs/bijections.hpp"

#include <algorithm>

#include "lppqs/errors.hpp"

namespace lppqs {

namespace {

std::size_t ceil_half(std::size_t k) { return (k + 1) / 2; }

/// Lattice points (i, j), 0 <= i <= n, 0 <= j <= 2n, of the p2hlr growth.
class LatticeField {
 public:
  explicit LatticeField(std::size_t n) : n_(n), points_((n + 1) * (2 * n + 1)) {}
  Partition& at(std::size_t i, std::size_t j) { return points_.at(i * (2 * n_ + 1) + j); }

 private:
  std::size_t n_;
  std::vector<Partition> points_;
};

void require_kind(const Filling& w, GeometryKind kind) {
  if (w.geometry().kind() != kind)
    throw DomainError(std::string("expected a ") + to_string(kind) + " filling");
}

}  // namespace

// ------------------------------------------------------ OscillatingTableau

OscillatingTableau::OscillatingTableau(std::size_t n)
    : geometry_(GeometryKind::p2hlr, n), entries_(geometry_.size(), 0) {}

OscillatingTableau OscillatingTableau::from_boundary(const std::vector<Partition>& boundary) {
  if (boundary.empty() || boundary.size() % 2 != 0)
    throw DomainError("oscillating boundary must have 2n partitions");
  const std::size_t n = boundary.size() / 2;
  OscillatingTableau t(n);
  for (std::size_t k = 1; k <= 2 * n; ++k) {
    const std::size_t c = ceil_half(k);
    const Partition& nu = boundary[k - 1];
    if (nu.length() > c) throw DomainError("boundary partition is too long");
    for (std::size_t i = 1; i <= c; ++i) {
      const auto idx = t.geometry_.index_of(static_cast<int>(i), static_cast<int>(2 * n - k + i));
      t.entries_.at(*idx) = nu.part(c - i + 1);
    }
  }
  return t;
}

int OscillatingTableau::at(int i, int j) const {
  auto idx = geometry_.index_of(i, j);
  if (!idx) throw DomainError("square outside the oscillating tableau");
  return entries_[*idx];
}

std::vector<Partition> OscillatingTableau::boundary() const {
  const std::size_t n = geometry_.n();
  std::vector<Partition> out;
  for (std::size_t k = 1; k <= 2 * n; ++k) {
    const std::size_t c = ceil_half(k);
    std::vector<int> parts(c);
    for (std::size_t i = 1; i <= c; ++i) parts[c - i] = at(static_cast<int>(i), static_cast<int>(2 * n - k + i));
    out.emplace_back(std::move(parts));
  }
  return out;
}

int OscillatingTableau::max_entry() const {
  return entries_.empty() ? 0 : *std::max_element(entries_.begin(), entries_.end());
}

// ------------------------------------------------------------------ Step 1

OscillatingTableau bz_oscillating(const Filling& w) {
  require_kind(w, GeometryKind::p2hlr);
  const Geometry& g = w.geometry();
  const std::size_t n = g.n();
  LatticeField mu(n);
  // anti-diagonal sweep, increasing i within each anti-diagonal
  for (std::size_t s = 2; s <= 2 * n + 1; ++s)
    for (std::size_t i = 1; i <= n && i < s; ++i) {
      const std::size_t j = s - i;
      if (!g.contains(static_cast<int>(i), static_cast<int>(j))) continue;
      const Partition& alpha = mu.at(i - 1, j);
      const Partition& beta = (i == j) ? alpha : mu.at(i, j - 1);
      mu.at(i, j) = row_rsk_local({alpha, beta, mu.at(i - 1, j - 1), w.at(static_cast<int>(i), static_cast<int>(j))});
    }
  std::vector<Partition> boundary;
  for (std::size_t k = 1; k <= 2 * n; ++k) boundary.push_back(mu.at(ceil_half(k), 2 * n - k / 2));
  return OscillatingTableau::from_boundary(boundary);
}

SpGTPattern bz_forward(const Filling& w, int u) {
  require_kind(w, GeometryKind::p2hlr);
  if (u < 0) throw DomainError("bound u must be non-negative");
  if (lpp_time(w) > u) throw DomainError("filling has last-passage time above u");
  const auto boundary = bz_oscillating(w).boundary();
  IntRows rows;
  for (std::size_t k = 1; k <= boundary.size(); ++k) {
    const std::size_t c = ceil_half(k);
    std::vector<int> row(c);
    for (std::size_t j = 1; j <= c; ++j) row[j - 1] = u - boundary[k - 1].part(c - j + 1);
    rows.push_back(std::move(row));
  }
  return SpGTPattern::from_rows(std::move(rows));
}

Filling bz_inverse(const SpGTPattern& z, int u) {
  const std::size_t n = z.rank();
  if (n == 0) throw DomainError("pattern must have positive height");
  if (z.shape().part(1) > u) throw DomainError("pattern shape exceeds the bound u");
  LatticeField mu(n);
  for (std::size_t k = 1; k <= 2 * n; ++k) {
    const std::size_t c = ceil_half(k);
    std::vector<int> parts(c);
    for (std::size_t j = 1; j <= c; ++j) parts[c - j] = u - z.rows()[k - 1][j - 1];
    try {
      mu.at(c, 2 * n - k / 2) = Partition(std::move(parts));
    } catch (const DomainError&) {
      throw DomainError("pattern does not correspond to an oscillating boundary");
    }
  }
  Geometry g(GeometryKind::p2hlr, n);
  Filling w(g);
  for (std::size_t s = 2 * n + 1; s >= 2; --s)
    for (std::size_t i = std::min(n, s - 1); i >= 1; --i) {
      const std::size_t j = s - i;
      if (!g.contains(static_cast<int>(i), static_cast<int>(j))) continue;
      const Partition alpha = mu.at(i - 1, j);
      const Partition beta = (i == j) ? alpha : mu.at(i, j - 1);
      const auto pre = invert_local(Rule::row, alpha, beta, mu.at(i, j));
      w.set(static_cast<int>(i), static_cast<int>(j), pre.g);
      if ((i == 1 || j == 1) && !pre.kappa.empty())
        throw DomainError("pattern does not shrink to empty axes");
      mu.at(i - 1, j - 1) = pre.kappa;
    }
  return w;
}

// ------------------------------------------------------------------ Step 4

IntMatrix p2l_symmetric_matrix(const Filling& w) {
  require_kind(w, GeometryKind::p2l);
  const std::size_t n = w.geometry().n();
  IntMatrix m(n, n);
  for (const auto& sq : w.geometry().squares()) {
    const std::size_t a = static_cast<std::size_t>(sq.i);
    const std::size_t b = n + 1 - static_cast<std::size_t>(sq.j);
    const int v = w.at(sq.i, sq.j);
    if (a == b) {
      m(a, a) = 2 * v;
    } else {
      m(a, b) = v;
      m(b, a) = v;
    }
  }
  return m;
}

Filling p2l_from_symmetric_matrix(const IntMatrix& m) {
  const std::size_t n = m.columns();
  if (n == 0 || m.rows() != n) throw DomainError("expected a non-empty square matrix");
  Filling w(Geometry(GeometryKind::p2l, n));
  for (std::size_t a = 1; a <= n; ++a)
    for (std::size_t b = a; b <= n; ++b) {
      if (m(a, b) != m(b, a)) throw DomainError("matrix is not symmetric");
      int v = m(a, b);
      if (a == b) {
        if (v % 2 != 0) throw DomainError("diagonal entry is odd");
        v /= 2;
      }
      w.set(static_cast<int>(a), static_cast<int>(n + 1 - b), v);
    }
  return w;
}

GTPattern p2l_forward(const Filling& w) {
  const auto grid = grow_grid(p2l_symmetric_matrix(w), Rule::col);
  auto north = grid.north_chain();
  north.erase(north.begin());
  return GTPattern::from_chain(north);
}

Filling p2l_inverse(const GTPattern& z) {
  const std::size_t n = z.height();
  if (n == 0) throw DomainError("pattern must have positive height");
  if (!z.shape().all_parts_even()) throw DomainError("pattern shape has an odd part");
  std::vector<Partition> chain;
  for (std::size_t i = 0; i <= n; ++i) chain.push_back(z.level(i));
  // the east boundary equals the north boundary for a symmetric matrix
  return p2l_from_symmetric_matrix(shrink_grid(Rule::col, chain, chain));
}

}  // namespace lppqs
