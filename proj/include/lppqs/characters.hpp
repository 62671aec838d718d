#pragma once

#include <cstddef>
#include <vector>

#include "lppqs/laurent.hpp"
#include "lppqs/partition.hpp"

namespace lppqs {

enum class Family { schur, symplectic, odd_orthogonal };

const char* to_string(Family family) noexcept;

/// Variable lists fed to h_k, as monomials in x_1..x_n:
///   schur:          x_1, ..., x_n
///   symplectic:     x_1, x_1^-1, ..., x_n, x_n^-1
///   odd_orthogonal: symplectic list followed by the constant 1
std::vector<Exponents> character_variables(Family family, std::size_t n);

/// h_k of the given monomials (each of length nvars); 0 for k < 0, 1 for k = 0.
LaurentPolynomial complete_homogeneous(int k, const std::vector<Exponents>& monomials,
                                       std::size_t nvars);

/// Determinant of a square matrix over the Laurent ring, by Laplace
/// expansion memoized over column subsets (exact, division-free).
LaurentPolynomial determinant(const std::vector<std::vector<LaurentPolynomial>>& m,
                              std::size_t nvars);

/// Jacobi–Trudi determinant. Throws DomainError if length(lambda) > n.
LaurentPolynomial character_jt(Family family, const Partition& lambda, std::size_t n);
/// Tableau generating function over SSYT / SpT / OOT of shape lambda.
LaurentPolynomial character_tab(Family family, const Partition& lambda, std::size_t n);

/// (x_1 ... x_n)^power.
LaurentPolynomial product_power(std::size_t n, int power);

/// Sum of s_lambda(x_1..x_n) over lambda inside the n × u box, optionally only
/// over lambda with every part even.
LaurentPolynomial bounded_schur_sum(int u, std::size_t n, bool even_rows_only);
/// Sum of sp_lambda over lambda inside the n × u box.
LaurentPolynomial bounded_symplectic_sum(int u, std::size_t n);

struct ProductSides {
  LaurentPolynomial lhs;
  LaurentPolynomial rhs;
  bool equal() const { return lhs == rhs; }
};

/// lhs = bounded_symplectic_sum(u, n);
/// rhs = sp_{s^n} * so_{t^n} with s = floor(u/2), t = ceil(u/2).
ProductSides okada_product(int u, std::size_t n);

/// The two bounded Littlewood identities for u = 2v:
///   bounded_schur_sum(u, n, false) vs (x_1..x_n)^v so_{v^n}
///   bounded_schur_sum(u, n, true)  vs (x_1..x_n)^v sp_{v^n}
struct StembridgeSides {
  ProductSides all_rows;
  ProductSides even_rows;
};
StembridgeSides stembridge_sides(int v, std::size_t n);

}  // namespace lppqs
