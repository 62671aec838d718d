#include "lppqs/characters.hpp"

#include <bit>
#include <cstdint>

#include "lppqs/errors.hpp"
#include "lppqs/patterns.hpp"

namespace lppqs {

namespace {

LaurentPolynomial one(std::size_t n) { return LaurentPolynomial::constant(n, 1); }

/// h_0..h_max of the monomial list, built factor by factor from
/// h(z) *= 1 / (1 - v z).
std::vector<LaurentPolynomial> complete_upto(int max_degree, const std::vector<Exponents>& monomials,
                                             std::size_t nvars) {
  std::vector<LaurentPolynomial> h(static_cast<std::size_t>(std::max(max_degree, 0)) + 1,
                                   LaurentPolynomial(nvars));
  h[0] = one(nvars);
  for (const auto& v : monomials) {
    const auto var = LaurentPolynomial::monomial(v);
    for (std::size_t k = 1; k < h.size(); ++k) h[k] += var * h[k - 1];
  }
  return h;
}

}  // namespace

const char* to_string(Family family) noexcept {
  switch (family) {
    case Family::schur: return "schur";
    case Family::symplectic: return "symplectic";
    case Family::odd_orthogonal: return "odd_orthogonal";
  }
  return "?";
}

std::vector<Exponents> character_variables(Family family, std::size_t n) {
  std::vector<Exponents> vars;
  for (std::size_t i = 0; i < n; ++i) {
    Exponents e(n, 0);
    e[i] = 1;
    vars.push_back(e);
    if (family != Family::schur) {
      e[i] = -1;
      vars.push_back(e);
    }
  }
  if (family == Family::odd_orthogonal) vars.emplace_back(n, 0);
  return vars;
}

LaurentPolynomial complete_homogeneous(int k, const std::vector<Exponents>& monomials,
                                       std::size_t nvars) {
  if (k < 0) return LaurentPolynomial(nvars);
  return complete_upto(k, monomials, nvars)[static_cast<std::size_t>(k)];
}

LaurentPolynomial determinant(const std::vector<std::vector<LaurentPolynomial>>& m,
                              std::size_t nvars) {
  const std::size_t size = m.size();
  if (size == 0) return one(nvars);
  if (size > 20) throw DomainError("determinant: matrix too large for subset expansion");
  // minors[mask] = det of rows 0..popcount(mask)-1 restricted to columns in mask
  std::vector<LaurentPolynomial> minors(std::size_t{1} << size, LaurentPolynomial(nvars));
  minors[0] = one(nvars);
  for (std::uint32_t mask = 1; mask < (1u << size); ++mask) {
    const std::size_t row = static_cast<std::size_t>(std::popcount(mask)) - 1;
    LaurentPolynomial acc(nvars);
    for (std::size_t col = 0; col < size; ++col) {
      if (!(mask & (1u << col))) continue;
      const auto& sub = minors[mask & ~(1u << col)];
      if (sub.is_zero() || m[row][col].is_zero()) continue;
      // sign from the number of selected columns to the right of col
      const int right = std::popcount(mask >> (col + 1));
      if (right % 2 == 0) acc += m[row][col] * sub;
      else acc -= m[row][col] * sub;
    }
    minors[mask] = std::move(acc);
  }
  return minors.back();
}

LaurentPolynomial character_jt(Family family, const Partition& lambda, std::size_t n) {
  if (lambda.length() > n) throw DomainError("character needs length(lambda) <= n");
  const std::size_t len = lambda.length();
  if (len == 0) return one(n);
  const int max_degree = lambda.part(1) + static_cast<int>(len);
  const auto h = complete_upto(max_degree, character_variables(family, n), n);
  auto hk = [&](int k) { return k < 0 ? LaurentPolynomial(n) : h.at(static_cast<std::size_t>(k)); };

  std::vector<std::vector<LaurentPolynomial>> m(len, std::vector<LaurentPolynomial>(len, LaurentPolynomial(n)));
  for (std::size_t i = 1; i <= len; ++i)
    for (std::size_t j = 1; j <= len; ++j) {
      const int li = lambda.part(i), ii = static_cast<int>(i), jj = static_cast<int>(j);
      switch (family) {
        case Family::schur: m[i - 1][j - 1] = hk(li - ii + jj); break;
        case Family::symplectic: m[i - 1][j - 1] = hk(li - ii + jj) + hk(li - ii - jj + 2); break;
        case Family::odd_orthogonal: m[i - 1][j - 1] = hk(li - ii + jj) - hk(li - ii - jj); break;
      }
    }
  auto det = determinant(m, n);
  return family == Family::symplectic ? det.halved_exact() : det;
}

LaurentPolynomial character_tab(Family family, const Partition& lambda, std::size_t n) {
  LaurentPolynomial sum(n);
  Exponents e(n);
  switch (family) {
    case Family::schur:
      for_each_gt(n, lambda, [&](const GTPattern& z) {
        const auto t = z.type();
        for (std::size_t i = 0; i < n; ++i) e[i] = t[i];
        sum.add_term(e, 1);
      });
      break;
    case Family::symplectic:
      for_each_spgt(n, lambda, [&](const SpGTPattern& z) {
        const auto t = z.type();
        for (std::size_t i = 0; i < n; ++i) e[i] = t[2 * i] - t[2 * i + 1];
        sum.add_term(e, 1);
      });
      break;
    case Family::odd_orthogonal:
      for_each_oot(n, lambda, [&](const Tableau& t) {
        for (std::size_t i = 0; i < n; ++i) {
          const int letter = static_cast<int>(2 * i + 1);
          e[i] = t.count(letter) - t.count(letter + 1);
        }
        sum.add_term(e, 1);
      });
      break;
  }
  return sum;
}

LaurentPolynomial product_power(std::size_t n, int power) {
  return LaurentPolynomial::monomial(Exponents(n, power));
}

LaurentPolynomial bounded_schur_sum(int u, std::size_t n, bool even_rows_only) {
  if (u < 0) throw DomainError("bound must be non-negative");
  LaurentPolynomial sum(n);
  for (const auto& lambda : partitions_in_box(n, u)) {
    if (even_rows_only && !lambda.all_parts_even()) continue;
    sum += character_jt(Family::schur, lambda, n);
  }
  return sum;
}

LaurentPolynomial bounded_symplectic_sum(int u, std::size_t n) {
  if (u < 0) throw DomainError("bound must be non-negative");
  LaurentPolynomial sum(n);
  for (const auto& lambda : partitions_in_box(n, u)) sum += character_jt(Family::symplectic, lambda, n);
  return sum;
}

ProductSides okada_product(int u, std::size_t n) {
  if (u < 0) throw DomainError("bound must be non-negative");
  const int s = u / 2, t = u - u / 2;
  return {bounded_symplectic_sum(u, n),
          character_jt(Family::symplectic, rectangle(s, n), n) *
              character_jt(Family::odd_orthogonal, rectangle(t, n), n)};
}

StembridgeSides stembridge_sides(int v, std::size_t n) {
  if (v < 0) throw DomainError("bound must be non-negative");
  const auto shift = product_power(n, v);
  return {{bounded_schur_sum(2 * v, n, false), shift * character_jt(Family::odd_orthogonal, rectangle(v, n), n)},
          {bounded_schur_sum(2 * v, n, true), shift * character_jt(Family::symplectic, rectangle(v, n), n)}};
}

}  // namespace lppqs
