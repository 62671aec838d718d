#include "lppqs/laurent.hpp"

#include <algorithm>
#include <stdexcept>

#include "lppqs/errors.hpp"

namespace lppqs {

LaurentPolynomial LaurentPolynomial::constant(std::size_t variables, const BigInt& c) {
  LaurentPolynomial p(variables);
  p.add_term(Exponents(variables, 0), c);
  return p;
}

LaurentPolynomial LaurentPolynomial::monomial(Exponents exponents, const BigInt& c) {
  LaurentPolynomial p(exponents.size());
  p.add_term(exponents, c);
  return p;
}

LaurentPolynomial LaurentPolynomial::variable(std::size_t variables, std::size_t index, int power) {
  if (index == 0 || index > variables) throw DomainError("variable index out of range");
  Exponents e(variables, 0);
  e[index - 1] = power;
  return monomial(std::move(e));
}

BigInt LaurentPolynomial::coefficient(const Exponents& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? BigInt(0) : it->second;
}

BigInt LaurentPolynomial::coefficient_sum() const {
  BigInt s = 0;
  for (const auto& [e, c] : terms_) s += c;
  return s;
}

void LaurentPolynomial::add_term(const Exponents& e, const BigInt& c) {
  if (e.size() != variables_) throw DomainError("exponent vector has the wrong length");
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

void LaurentPolynomial::require_same_arity(const LaurentPolynomial& other) const {
  if (other.variables_ != variables_)
    throw DomainError("Laurent polynomials have different variable counts (" +
                      std::to_string(variables_) + " vs " + std::to_string(other.variables_) + ")");
}

LaurentPolynomial& LaurentPolynomial::operator+=(const LaurentPolynomial& rhs) {
  require_same_arity(rhs);
  for (const auto& [e, c] : rhs.terms_) add_term(e, c);
  return *this;
}

LaurentPolynomial& LaurentPolynomial::operator-=(const LaurentPolynomial& rhs) {
  require_same_arity(rhs);
  for (const auto& [e, c] : rhs.terms_) add_term(e, -c);
  return *this;
}

LaurentPolynomial operator*(const LaurentPolynomial& a, const LaurentPolynomial& b) {
  a.require_same_arity(b);
  LaurentPolynomial out(a.variables_);
  Exponents e(a.variables_);
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) {
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      out.add_term(e, ca * cb);
    }
  return out;
}

LaurentPolynomial& LaurentPolynomial::operator*=(const LaurentPolynomial& rhs) {
  *this = *this * rhs;
  return *this;
}

LaurentPolynomial& LaurentPolynomial::operator*=(const BigInt& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, v] : terms_) v *= c;
  return *this;
}

LaurentPolynomial LaurentPolynomial::operator-() const {
  LaurentPolynomial p = *this;
  for (auto& [e, v] : p.terms_) v = -v;
  return p;
}

LaurentPolynomial LaurentPolynomial::pow(unsigned k) const {
  LaurentPolynomial result = constant(variables_, 1);
  LaurentPolynomial base = *this;
  while (k) {
    if (k & 1u) result *= base;
    k >>= 1u;
    if (k) base *= base;
  }
  return result;
}

LaurentPolynomial LaurentPolynomial::halved_exact() const {
  LaurentPolynomial p(variables_);
  for (const auto& [e, c] : terms_) {
    if (c % 2 != 0) throw std::logic_error("halving a Laurent polynomial with an odd coefficient");
    p.terms_.emplace(e, c / 2);
  }
  return p;
}

LaurentPolynomial LaurentPolynomial::inverted_variable(std::size_t index) const {
  if (index == 0 || index > variables_) throw DomainError("variable index out of range");
  LaurentPolynomial p(variables_);
  for (const auto& [e, c] : terms_) {
    Exponents f = e;
    f[index - 1] = -f[index - 1];
    p.add_term(f, c);
  }
  return p;
}

LaurentPolynomial LaurentPolynomial::permuted(std::span<const std::size_t> perm) const {
  if (perm.size() != variables_) throw DomainError("permutation has the wrong length");
  LaurentPolynomial p(variables_);
  for (const auto& [e, c] : terms_) {
    Exponents f(variables_, 0);
    for (std::size_t i = 0; i < variables_; ++i) f.at(perm[i] - 1) = e[i];
    p.add_term(f, c);
  }
  return p;
}

std::string LaurentPolynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::string s;
  for (const auto& [e, c] : terms_) {
    if (!s.empty()) s += " + ";
    s += c.str();
    if (!e.empty()) s += " *";
    for (std::size_t i = 0; i < e.size(); ++i)
      s += " x" + std::to_string(i + 1) + "^" + std::to_string(e[i]);
  }
  return s;
}

Rational specialize(const LaurentPolynomial& p, std::span<const Rational> values) {
  if (values.size() != p.variables()) throw DomainError("specialize: wrong number of values");
  Rational total = 0;
  for (const auto& [e, c] : p.terms()) {
    Rational term = Rational(c);
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (values[i] == 0) {
        if (e[i] < 0) throw DomainError("specialize: zero value under a negative exponent");
        term = 0;
        break;
      }
      const Rational base = e[i] > 0 ? values[i] : Rational(1) / values[i];
      const unsigned k = static_cast<unsigned>(e[i] > 0 ? e[i] : -e[i]);
      term *= rational_pow(base, k);
    }
    total += term;
  }
  return total;
}

Rational rational_pow(Rational base, unsigned exponent) {
  Rational result = 1;
  while (exponent) {
    if (exponent & 1u) result *= base;
    exponent >>= 1u;
    if (exponent) base *= base;
  }
  return result;
}

std::string rational_string(const Rational& r) {
  const BigInt num = boost::multiprecision::numerator(r);
  const BigInt den = boost::multiprecision::denominator(r);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

Rational parse_rational(const std::string& text) {
  auto digits_only = [](const std::string& s, bool allow_sign) {
    if (s.empty()) return false;
    std::size_t i = (allow_sign && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i)
      if (s[i] < '0' || s[i] > '9') return false;
    return true;
  };
  // cpp_int reads a leading 0 as an octal prefix, so build from bare digits
  auto integer = [](std::string s) {
    bool negative = false;
    if (!s.empty() && (s[0] == '-' || s[0] == '+')) {
      negative = s[0] == '-';
      s.erase(0, 1);
    }
    s.erase(0, std::min(s.find_first_not_of('0'), s.size()));
    const BigInt v(s.empty() ? std::string("0") : s);
    return negative ? BigInt(-v) : v;
  };
  try {
    if (auto slash = text.find('/'); slash != std::string::npos) {
      const std::string num = text.substr(0, slash), den = text.substr(slash + 1);
      if (!digits_only(num, true) || !digits_only(den, false)) throw ParseError("bad rational");
      const BigInt d = integer(den);
      if (d == 0) throw ParseError("zero denominator");
      return Rational(integer(num), d);
    }
    if (auto dot = text.find('.'); dot != std::string::npos) {
      std::string whole = text.substr(0, dot), frac = text.substr(dot + 1);
      bool negative = !whole.empty() && whole[0] == '-';
      if (!whole.empty() && (whole[0] == '-' || whole[0] == '+')) whole.erase(0, 1);
      if (whole.empty()) whole = "0";
      if (!digits_only(whole, false) || (!frac.empty() && !digits_only(frac, false)))
        throw ParseError("bad decimal");
      BigInt scale = boost::multiprecision::pow(BigInt(10), static_cast<unsigned>(frac.size()));
      Rational r(integer(whole + frac), scale);
      return negative ? Rational(-r) : r;
    }
    if (!digits_only(text, true)) throw ParseError("bad integer");
    return Rational(integer(text));
  } catch (const ParseError&) {
    throw ParseError("cannot parse '" + text + "' as an exact rational");
  }
}

}  // namespace lppqs
