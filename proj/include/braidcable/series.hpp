#pragma once

#include <string>
#include <vector>

#include "braidcable/laurent.hpp"

namespace braidcable {

/// Power series in h truncated after h^(order-1).
class TruncSeries {
 public:
  TruncSeries() : TruncSeries(1) {}
  explicit TruncSeries(std::size_t order) : c_(order) {
    if (order == 0) throw std::invalid_argument("series order must be positive");
  }
  TruncSeries(std::size_t order, const Rational& constant) : TruncSeries(order) { c_[0] = constant; }
  static TruncSeries from_coeffs(std::vector<Rational> coeffs);
  /// The series h (requires order >= 2 to be nonzero).
  static TruncSeries h(std::size_t order);

  std::size_t order() const { return c_.size(); }
  const Rational& operator[](std::size_t k) const { return c_.at(k); }
  Rational& operator[](std::size_t k) { return c_.at(k); }
  const std::vector<Rational>& coeffs() const { return c_; }
  bool is_zero() const;
  bool is_one() const;

  /// Drops terms of degree >= new_order (new_order <= order()).
  TruncSeries truncated(std::size_t new_order) const;

  TruncSeries operator-() const;
  TruncSeries& operator+=(const TruncSeries& o);
  TruncSeries& operator-=(const TruncSeries& o);
  TruncSeries& operator*=(const Rational& s);
  friend TruncSeries operator+(TruncSeries a, const TruncSeries& b) { return a += b; }
  friend TruncSeries operator-(TruncSeries a, const TruncSeries& b) { return a -= b; }
  friend TruncSeries operator*(const TruncSeries& a, const TruncSeries& b);
  friend TruncSeries operator*(TruncSeries a, const Rational& s) { return a *= s; }
  friend bool operator==(const TruncSeries& a, const TruncSeries& b) { return a.c_ == b.c_; }
  friend bool operator!=(const TruncSeries& a, const TruncSeries& b) { return !(a == b); }

  std::string to_string() const;

 private:
  std::vector<Rational> c_;
};

/// exp(x) truncated at the order of x. Throws std::domain_error unless x(0) = 0.
TruncSeries series_exp(const TruncSeries& x);

/// Image of p under q -> exp(h/2), truncated after h^(order-1).
TruncSeries laurent_to_series(const LaurentPoly& p, std::size_t order);

}  // namespace braidcable
