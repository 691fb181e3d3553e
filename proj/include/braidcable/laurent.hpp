#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "braidcable/rational.hpp"

namespace braidcable {

/// Laurent polynomial in q with rational coefficients.
///
/// Stored densely as q^low * (c[0] + c[1] q + ... ). The zero polynomial has
/// no coefficients; otherwise the first and last stored coefficients are
/// nonzero, so equal polynomials have equal representations.
class LaurentPoly {
 public:
  LaurentPoly() = default;
  LaurentPoly(const Rational& c);  // NOLINT(google-explicit-constructor)
  LaurentPoly(long c) : LaurentPoly(Rational(c)) {}  // NOLINT
  LaurentPoly(int c) : LaurentPoly(Rational(c)) {}   // NOLINT

  static LaurentPoly monomial(const Rational& c, int exponent);
  /// q^exponent
  static LaurentPoly q(int exponent = 1) { return monomial(Rational(1), exponent); }
  static LaurentPoly from_terms(const std::map<int, Rational>& terms);
  /// Takes ownership of a dense coefficient run starting at q^low; trims zeros.
  static LaurentPoly from_dense(int low, std::vector<Rational> coeffs);

  bool is_zero() const { return c_.empty(); }
  bool is_constant() const { return c_.empty() || (c_.size() == 1 && low_ == 0); }
  /// Monomials c q^k (c != 0) are exactly the units of Q[q, q^-1].
  bool is_unit() const { return c_.size() == 1; }
  bool is_one() const;
  bool has_integer_coeffs() const;

  // Degree accessors require a nonzero polynomial.
  int low_degree() const { return low_; }
  int high_degree() const { return low_ + static_cast<int>(c_.size()) - 1; }
  std::size_t term_span() const { return c_.size(); }
  const std::vector<Rational>& dense() const { return c_; }

  Rational coeff(int exponent) const;
  Rational leading_coeff() const { return c_.back(); }
  Rational trailing_coeff() const { return c_.front(); }
  std::map<int, Rational> terms() const;
  std::size_t num_terms() const;

  LaurentPoly operator-() const;
  LaurentPoly& operator+=(const LaurentPoly& o);
  LaurentPoly& operator-=(const LaurentPoly& o);
  LaurentPoly& operator*=(const LaurentPoly& o);
  LaurentPoly& operator*=(const Rational& s);

  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  friend LaurentPoly operator*(LaurentPoly a, const Rational& s) { return a *= s; }
  friend LaurentPoly operator*(const Rational& s, LaurentPoly a) { return a *= s; }
  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
    return a.low_ == b.low_ && a.c_ == b.c_;
  }
  friend bool operator!=(const LaurentPoly& a, const LaurentPoly& b) { return !(a == b); }

  /// Multiplies by q^k.
  LaurentPoly shifted(int k) const;
  /// Image under the ring morphism q -> q^r (r != 0).
  LaurentPoly substitute_power(int r) const;
  LaurentPoly pow(unsigned e) const;
  Rational evaluate(const Rational& at) const;

  /// Human-readable form, e.g. "q - q^-1", "2/3*q^2 + 1".
  std::string to_string() const;

 private:
  void trim();

  int low_ = 0;
  std::vector<Rational> c_;
};

/// Exact quotient a / b in Q[q, q^-1], or nullopt if b does not divide a.
/// Throws std::domain_error if b is zero.
std::optional<LaurentPoly> exact_divide(const LaurentPoly& a, const LaurentPoly& b);

/// Greatest common divisor in Q[q, q^-1], normalized to a monic polynomial
/// with nonzero constant term. gcd(0, 0) = 0.
LaurentPoly gcd(const LaurentPoly& a, const LaurentPoly& b);

/// Splits p into unit * normal with normal monic and normal(0) != 0.
struct UnitSplit {
  LaurentPoly unit;
  LaurentPoly normal;
};
UnitSplit split_unit(const LaurentPoly& p);

/// Parses "q - q^-1", "2*q^3 + 1/2", "-q^-2" etc.
LaurentPoly parse_laurent(std::string_view text);

}  // namespace braidcable
