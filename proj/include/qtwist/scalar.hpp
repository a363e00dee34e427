// Exact coefficient arithmetic for two-parameter quantum groups.
//
// LaurentScalar is a finite Q-linear combination of monomials r^a s^b with
// rational exponents a, b. RationalFunction is its fraction field, kept in a
// canonical reduced form so that equal values print identically.
#pragma once

#include <gmpxx.h>

#include <boost/rational.hpp>

#include <compare>
#include <cstdint>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace qtwist {

using Exponent = boost::rational<long long>;

inline std::strong_ordering compare_exponents(const Exponent& a, const Exponent& b) {
  if (a < b) return std::strong_ordering::less;
  if (b < a) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

std::string format_exponent(const Exponent& e);

struct LaurentTerm {
  Exponent r;
  Exponent s;
  mpq_class coeff;
};

class LaurentScalar {
 public:
  LaurentScalar() = default;
  LaurentScalar(long value);  // NOLINT: integers embed implicitly
  explicit LaurentScalar(const mpq_class& value);

  static LaurentScalar monomial(const mpq_class& coeff, Exponent r_exp, Exponent s_exp);
  static LaurentScalar r_power(Exponent e) { return monomial(1, e, 0); }
  static LaurentScalar s_power(Exponent e) { return monomial(1, 0, e); }
  /// q^k with q = (r s^{-1})^{1/2}.
  static LaurentScalar q_power(Exponent k) { return monomial(1, k / 2, -k / 2); }

  bool is_zero() const { return terms_.empty(); }
  bool is_one() const;
  bool is_monomial() const { return terms_.size() == 1; }
  bool is_constant() const;
  std::size_t size() const { return terms_.size(); }
  const std::vector<LaurentTerm>& terms() const { return terms_; }
  const LaurentTerm& leading() const { return terms_.front(); }

  LaurentScalar operator-() const;
  LaurentScalar& operator+=(const LaurentScalar& o);
  LaurentScalar& operator-=(const LaurentScalar& o);
  LaurentScalar& operator*=(const LaurentScalar& o);
  friend LaurentScalar operator+(LaurentScalar a, const LaurentScalar& b) { return a += b; }
  friend LaurentScalar operator-(LaurentScalar a, const LaurentScalar& b) { return a -= b; }
  friend LaurentScalar operator*(const LaurentScalar& a, const LaurentScalar& b);
  friend bool operator==(const LaurentScalar& a, const LaurentScalar& b);

  /// Inverse of a monomial. Sums have no inverse in the Laurent ring.
  LaurentScalar inverse() const;
  /// Integer power; negative powers require a monomial.
  LaurentScalar pow(long long k) const;

  /// True when every exponent is a multiple of 1/denominator.
  bool on_lattice(long long denominator) const;

  /// Substitute r^a s^b -> (monomial) r^{a*scale_r} s^{b*scale_s}; used for
  /// the r -> q, s -> q^{-1} specialization.
  LaurentScalar substitute(const LaurentScalar& r_image, const LaurentScalar& s_image) const;

  std::string str() const;

 private:
  void canonicalize();
  std::vector<LaurentTerm> terms_;  // strictly decreasing (r, s), nonzero coefficients
};

std::ostream& operator<<(std::ostream& os, const LaurentScalar& x);

/// q^k as an (r,s)-monomial, rejecting exponents off the 1/denominator lattice.
LaurentScalar q_power(Exponent k, long long denominator);

/// gcd of two Laurent polynomials, normalized: no monomial factor, leading
/// coefficient 1. gcd(0, 0) is 0.
LaurentScalar polynomial_gcd(const LaurentScalar& a, const LaurentScalar& b);

/// a / b when b divides a in the Laurent ring, otherwise nullopt.
std::optional<LaurentScalar> exact_divide(const LaurentScalar& a, const LaurentScalar& b);

/// Element of the fraction field Q(r^{1/N}, s^{1/N}).
class RationalFunction {
 public:
  RationalFunction() : den_(1) {}
  RationalFunction(long value) : num_(value), den_(1) {}  // NOLINT
  RationalFunction(const LaurentScalar& num) : num_(num), den_(1) {}  // NOLINT
  RationalFunction(const LaurentScalar& num, const LaurentScalar& den);

  const LaurentScalar& numerator() const { return num_; }
  const LaurentScalar& denominator() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const { return den_.is_one() && num_.is_one(); }
  bool is_polynomial() const { return den_.is_one(); }

  RationalFunction operator-() const;
  RationalFunction& operator+=(const RationalFunction& o);
  RationalFunction& operator-=(const RationalFunction& o);
  RationalFunction& operator*=(const RationalFunction& o);
  RationalFunction& operator/=(const RationalFunction& o);
  friend RationalFunction operator+(RationalFunction a, const RationalFunction& b) { return a += b; }
  friend RationalFunction operator-(RationalFunction a, const RationalFunction& b) { return a -= b; }
  friend RationalFunction operator*(RationalFunction a, const RationalFunction& b) { return a *= b; }
  friend RationalFunction operator/(RationalFunction a, const RationalFunction& b) { return a /= b; }
  friend bool operator==(const RationalFunction& a, const RationalFunction& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }

  RationalFunction inverse() const;
  RationalFunction pow(long long k) const;
  bool on_lattice(long long denominator) const {
    return num_.on_lattice(denominator) && den_.on_lattice(denominator);
  }

  std::string str() const;

 private:
  void normalize();
  LaurentScalar num_;
  LaurentScalar den_;
};

std::ostream& operator<<(std::ostream& os, const RationalFunction& x);

using Coeff = RationalFunction;

/// Thrown for malformed scalar or element text.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : std::runtime_error(what + " at position " + std::to_string(position)), position_(position) {}
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

/// Parses the scalar grammar: rationals, r, s, q with integer or (p/q)
/// exponents, + - * / and parentheses. q is rewritten as r^(1/2)*s^(-1/2).
RationalFunction parse_scalar(std::string_view text);

struct Specialization {
  bool exact = false;
  mpq_class value;
  std::string symbolic;  // set when a required root is irrational
};

/// Evaluates x at rational r, s > 0; exact when all needed roots are rational.
Specialization specialize(const RationalFunction& x, const mpq_class& r_value, const mpq_class& s_value);

/// q-integers: (n)_v = 1 + v + ... + v^{n-1} and the matching binomial.
LaurentScalar gauss_integer(const LaurentScalar& v, int n);
LaurentScalar gauss_binomial(const LaurentScalar& v, int n, int k);
/// Symmetric quantum binomial [n choose k]_v as a Laurent polynomial in v.
LaurentScalar quantum_binomial(const LaurentScalar& v, int n, int k);

}  // namespace qtwist
