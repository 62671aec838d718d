#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstddef>
#include <map>
#include <span>
#include <string>
#include <vector>

namespace lppqs {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;
using Exponents = std::vector<int>;

/// Sparse Laurent polynomial in x_1..x_n with arbitrary-precision integer
/// coefficients. Zero coefficients are never stored, so equality is
/// structural.
class LaurentPolynomial {
 public:
  explicit LaurentPolynomial(std::size_t variables = 0) : variables_(variables) {}

  static LaurentPolynomial constant(std::size_t variables, const BigInt& c);
  static LaurentPolynomial monomial(Exponents exponents, const BigInt& c = 1);
  /// x_index^power, index 1-based.
  static LaurentPolynomial variable(std::size_t variables, std::size_t index, int power = 1);

  std::size_t variables() const noexcept { return variables_; }
  std::size_t term_count() const noexcept { return terms_.size(); }
  bool is_zero() const noexcept { return terms_.empty(); }
  const std::map<Exponents, BigInt>& terms() const noexcept { return terms_; }
  BigInt coefficient(const Exponents& e) const;
  /// Sum of coefficients, i.e. the value at x = (1, ..., 1).
  BigInt coefficient_sum() const;

  void add_term(const Exponents& e, const BigInt& c);

  LaurentPolynomial& operator+=(const LaurentPolynomial& rhs);
  LaurentPolynomial& operator-=(const LaurentPolynomial& rhs);
  LaurentPolynomial& operator*=(const LaurentPolynomial& rhs);
  LaurentPolynomial& operator*=(const BigInt& c);
  LaurentPolynomial operator-() const;

  friend LaurentPolynomial operator+(LaurentPolynomial a, const LaurentPolynomial& b) { return a += b; }
  friend LaurentPolynomial operator-(LaurentPolynomial a, const LaurentPolynomial& b) { return a -= b; }
  friend LaurentPolynomial operator*(const LaurentPolynomial& a, const LaurentPolynomial& b);
  friend bool operator==(const LaurentPolynomial&, const LaurentPolynomial&) = default;

  LaurentPolynomial pow(unsigned k) const;
  /// Divides every coefficient by 2; throws std::logic_error if one is odd.
  LaurentPolynomial halved_exact() const;
  /// x_index -> x_index^{-1}.
  LaurentPolynomial inverted_variable(std::size_t index) const;
  /// Renames x_i to x_{perm[i-1]} (perm holds a permutation of 1..n).
  LaurentPolynomial permuted(std::span<const std::size_t> perm) const;

  /// Canonical text: terms in ascending lexicographic exponent order, each
  /// written `c * x1^e1 ... xn^en`, joined by " + "; "0" for zero.
  std::string to_string() const;

 private:
  void require_same_arity(const LaurentPolynomial& other) const;

  std::size_t variables_;
  std::map<Exponents, BigInt> terms_;
};

/// Exact evaluation at x_i = values[i-1]. Throws DomainError when a zero
/// value meets a negative exponent or the arity differs.
Rational specialize(const LaurentPolynomial& p, std::span<const Rational> values);

/// base^exponent by repeated squaring.
Rational rational_pow(Rational base, unsigned exponent);

/// "p/q" or "p" for integral values.
std::string rational_string(const Rational& r);
/// Parses "p/q", "p" or a finite decimal like "0.49"; throws ParseError.
Rational parse_rational(const std::string& text);

}  // namespace lppqs
