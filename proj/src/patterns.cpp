#include "lppqs/patterns.hpp"

#include <algorithm>
#include <numeric>

#include "lppqs/errors.hpp"

namespace lppqs {

namespace {

std::size_t ceil_half(std::size_t i) { return (i + 1) / 2; }

int row_sum(const std::vector<int>& r) { return std::accumulate(r.begin(), r.end(), 0); }

int entry(const IntRows& rows, std::size_t i, std::size_t j) {
  // 1-based, zero outside the stored triangle
  if (i == 0 || i > rows.size()) return 0;
  const auto& r = rows[i - 1];
  return (j >= 1 && j <= r.size()) ? r[j - 1] : 0;
}

/// Checks row widths and interlacing for a triangular array whose row i has
/// width(i) entries.
template <typename Width>
void validate_triangle(const IntRows& rows, Width width, const char* what) {
  for (std::size_t i = 1; i <= rows.size(); ++i) {
    const auto& r = rows[i - 1];
    if (r.size() != width(i))
      throw DomainError(std::string(what) + ": row " + std::to_string(i) + " has wrong width");
    for (int v : r)
      if (v < 0) throw DomainError(std::string(what) + ": negative entry");
  }
  for (std::size_t i = 1; i < rows.size(); ++i)
    for (std::size_t j = 1; j <= width(i); ++j) {
      const int z = entry(rows, i, j);
      if (!(entry(rows, i + 1, j + 1) <= z && z <= entry(rows, i + 1, j)))
        throw DomainError(std::string(what) + ": interlacing fails at row " + std::to_string(i));
    }
  // the bottom row itself must be a partition
  if (!rows.empty()) {
    const auto& b = rows.back();
    if (!std::is_sorted(b.begin(), b.end(), std::greater<>()))
      throw DomainError(std::string(what) + ": shape is not a partition");
  }
}

std::vector<int> type_of(const IntRows& rows) {
  std::vector<int> t(rows.size());
  int prev = 0;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const int s = row_sum(rows[i]);
    t[i] = s - prev;
    prev = s;
  }
  return t;
}

IntRows rows_from_chain(const std::vector<Partition>& chain, auto width) {
  IntRows rows;
  rows.reserve(chain.size());
  for (std::size_t i = 1; i <= chain.size(); ++i) {
    if (chain[i - 1].length() > width(i))
      throw DomainError("chain level " + std::to_string(i) + " is too long");
    rows.push_back(chain[i - 1].padded(width(i)));
  }
  return rows;
}

/// Cells of level k of a tableau: counts of codes <= k per row.
Partition level_of(const Tableau& t, int k) {
  std::vector<int> parts;
  for (const auto& r : t.rows())
    parts.push_back(static_cast<int>(std::count_if(r.begin(), r.end(), [k](int c) { return c <= k; })));
  return Partition(std::move(parts));
}

Tableau tableau_from_chain(Alphabet alphabet, std::size_t n, const std::vector<Partition>& chain) {
  // chain[k-1] = cells holding codes <= k
  const Partition& shape = chain.empty() ? Partition() : chain.back();
  IntRows rows(shape.length());
  Partition prev;
  for (std::size_t k = 1; k <= chain.size(); ++k) {
    const Partition& cur = chain[k - 1];
    for (std::size_t r = 1; r <= cur.length(); ++r)
      rows[r - 1].insert(rows[r - 1].end(), cur.part(r) - prev.part(r), static_cast<int>(k));
    prev = cur;
  }
  return Tableau::from_rows(alphabet, n, std::move(rows));
}

void require_length(const Partition& shape, std::size_t n) {
  if (shape.length() > n)
    throw DomainError("shape " + shape.to_string() + " has more than " + std::to_string(n) + " rows");
}

}  // namespace

// ---------------------------------------------------------------- GTPattern

GTPattern GTPattern::from_rows(IntRows rows) {
  validate_triangle(rows, [](std::size_t i) { return i; }, "GT pattern");
  GTPattern z;
  z.rows_ = std::move(rows);
  return z;
}

GTPattern GTPattern::from_chain(const std::vector<Partition>& chain) {
  return from_rows(rows_from_chain(chain, [](std::size_t i) { return i; }));
}

Partition GTPattern::level(std::size_t i) const {
  return i == 0 ? Partition() : Partition(rows_.at(i - 1));
}

std::vector<int> GTPattern::type() const { return type_of(rows_); }

// -------------------------------------------------------------- SpGTPattern

SpGTPattern SpGTPattern::from_rows(IntRows rows) {
  if (rows.size() % 2 != 0) throw DomainError("symplectic pattern must have an even number of rows");
  validate_triangle(rows, ceil_half, "symplectic GT pattern");
  SpGTPattern z;
  z.rows_ = std::move(rows);
  return z;
}

SpGTPattern SpGTPattern::from_chain(const std::vector<Partition>& chain) {
  return from_rows(rows_from_chain(chain, ceil_half));
}

Partition SpGTPattern::level(std::size_t i) const {
  return i == 0 ? Partition() : Partition(rows_.at(i - 1));
}

std::vector<int> SpGTPattern::type() const { return type_of(rows_); }

// ------------------------------------------------------------------ Tableau

Tableau Tableau::from_rows(Alphabet alphabet, std::size_t n, IntRows rows) {
  if (rows.size() > n) throw DomainError("tableau has more rows than letters allow");
  const int max_code = alphabet == Alphabet::ssyt       ? static_cast<int>(n)
                       : alphabet == Alphabet::symplectic ? static_cast<int>(2 * n)
                                                          : static_cast<int>(2 * n + 1);
  const int inf = static_cast<int>(2 * n + 1);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    const auto& row = rows[r];
    if (row.empty()) throw DomainError("tableau row is empty");
    if (r > 0 && row.size() > rows[r - 1].size()) throw DomainError("tableau rows must not grow");
    int infinities = 0;
    for (std::size_t c = 0; c < row.size(); ++c) {
      const int v = row[c];
      if (v < 1 || v > max_code) throw DomainError("tableau symbol out of range");
      if (c > 0 && row[c - 1] > v) throw DomainError("tableau row is not weakly increasing");
      if (r > 0 && rows[r - 1][c] >= v) {
        const bool stacked_infinity = alphabet == Alphabet::odd_orthogonal && v == inf && rows[r - 1][c] == inf;
        if (!stacked_infinity) throw DomainError("tableau column is not strictly increasing");
      }
      if (alphabet != Alphabet::ssyt && v < static_cast<int>(2 * r + 1))
        throw DomainError("symplectic condition fails in row " + std::to_string(r + 1));
      if (alphabet == Alphabet::odd_orthogonal && v == inf) ++infinities;
    }
    if (infinities > 1) throw DomainError("two infinity symbols in one row");
  }
  Tableau t;
  t.alphabet_ = alphabet;
  t.n_ = n;
  t.rows_ = std::move(rows);
  return t;
}

Partition Tableau::shape() const {
  std::vector<int> parts;
  for (const auto& r : rows_) parts.push_back(static_cast<int>(r.size()));
  return Partition(std::move(parts));
}

int Tableau::count(int code) const noexcept {
  int c = 0;
  for (const auto& r : rows_) c += static_cast<int>(std::count(r.begin(), r.end(), code));
  return c;
}

std::string Tableau::symbol_name(int code) const {
  if (alphabet_ == Alphabet::ssyt) return std::to_string(code);
  if (alphabet_ == Alphabet::odd_orthogonal && code == infinity_code()) return "inf";
  const int letter = (code + 1) / 2;
  return std::to_string(letter) + (code % 2 == 0 ? "bar" : "");
}

// -------------------------------------------------------------- conversions

Tableau to_tableau(const GTPattern& z) {
  std::vector<Partition> chain;
  for (std::size_t i = 1; i <= z.height(); ++i) chain.push_back(z.level(i));
  return tableau_from_chain(Alphabet::ssyt, z.height(), chain);
}

Tableau to_tableau(const SpGTPattern& z) {
  std::vector<Partition> chain;
  for (std::size_t i = 1; i <= z.height(); ++i) chain.push_back(z.level(i));
  return tableau_from_chain(Alphabet::symplectic, z.rank(), chain);
}

GTPattern gt_from_tableau(const Tableau& t) {
  if (t.alphabet() != Alphabet::ssyt) throw DomainError("expected a semi-standard tableau");
  std::vector<Partition> chain;
  for (std::size_t k = 1; k <= t.rank(); ++k) chain.push_back(level_of(t, static_cast<int>(k)));
  return GTPattern::from_chain(chain);
}

SpGTPattern spgt_from_tableau(const Tableau& t) {
  if (t.alphabet() != Alphabet::symplectic) throw DomainError("expected a symplectic tableau");
  std::vector<Partition> chain;
  for (std::size_t k = 1; k <= 2 * t.rank(); ++k) chain.push_back(level_of(t, static_cast<int>(k)));
  return SpGTPattern::from_chain(chain);
}

// -------------------------------------------------------------- enumeration

void for_each_gt(std::size_t n, const Partition& shape,
                 const std::function<void(const GTPattern&)>& visit) {
  require_length(shape, n);
  if (n == 0) {
    visit(GTPattern());
    return;
  }
  // chain[k-1] = λ^(k); walk downward from the shape, capping λ^(k) at k parts.
  std::vector<Partition> chain(n);
  chain[n - 1] = shape;
  auto walk = [&](auto&& self, std::size_t level) -> void {
    if (level == 0) {
      visit(GTPattern::from_chain(chain));
      return;
    }
    for (auto& mu : interlacing_below(chain[level], level)) {
      chain[level - 1] = std::move(mu);
      self(self, level - 1);
    }
  };
  walk(walk, n - 1);
}

void for_each_spgt(std::size_t n, const Partition& shape,
                   const std::function<void(const SpGTPattern&)>& visit) {
  require_length(shape, n);
  if (n == 0) {
    visit(SpGTPattern());
    return;
  }
  std::vector<Partition> chain(2 * n);
  chain[2 * n - 1] = shape;
  auto walk = [&](auto&& self, std::size_t level) -> void {
    if (level == 0) {
      visit(SpGTPattern::from_chain(chain));
      return;
    }
    for (auto& mu : interlacing_below(chain[level], ceil_half(level))) {
      chain[level - 1] = std::move(mu);
      self(self, level - 1);
    }
  };
  walk(walk, 2 * n - 1);
}

void for_each_oot(std::size_t n, const Partition& shape,
                  const std::function<void(const Tableau&)>& visit) {
  require_length(shape, n);
  // mu runs over shape minus a vertical strip: each row loses at most one cell
  const std::size_t len = shape.length();
  for (std::size_t mask = 0; mask < (std::size_t{1} << len); ++mask) {
    std::vector<int> parts(len);
    for (std::size_t r = 0; r < len; ++r) parts[r] = shape.part(r + 1) - static_cast<int>((mask >> r) & 1);
    if (!std::is_sorted(parts.rbegin(), parts.rend())) continue;
    const Partition mu(parts);
    for_each_spgt(n, mu, [&](const SpGTPattern& z) {
      std::vector<Partition> chain;
      for (std::size_t k = 1; k <= z.height(); ++k) chain.push_back(z.level(k));
      chain.push_back(shape);
      visit(tableau_from_chain(Alphabet::odd_orthogonal, n, chain));
    });
  }
}

std::vector<GTPattern> enumerate_gt(std::size_t n, const Partition& shape) {
  std::vector<GTPattern> out;
  for_each_gt(n, shape, [&](const GTPattern& z) { out.push_back(z); });
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<SpGTPattern> enumerate_spgt(std::size_t n, const Partition& shape) {
  std::vector<SpGTPattern> out;
  for_each_spgt(n, shape, [&](const SpGTPattern& z) { out.push_back(z); });
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Tableau> enumerate_oot(std::size_t n, const Partition& shape) {
  std::vector<Tableau> out;
  for_each_oot(n, shape, [&](const Tableau& t) { out.push_back(t); });
  std::sort(out.begin(), out.end(),
            [](const Tableau& a, const Tableau& b) { return a.rows() < b.rows(); });
  return out;
}

}  // namespace lppqs
