#include "braidcable/series.hpp"

#include <sstream>
#include <stdexcept>

namespace braidcable {

namespace {

void check_orders(const TruncSeries& a, const TruncSeries& b) {
  if (a.order() != b.order()) throw std::invalid_argument("series of different truncation orders");
}

}  // namespace

TruncSeries TruncSeries::from_coeffs(std::vector<Rational> coeffs) {
  if (coeffs.empty()) throw std::invalid_argument("series order must be positive");
  TruncSeries s(coeffs.size());
  s.c_ = std::move(coeffs);
  return s;
}

TruncSeries TruncSeries::h(std::size_t order) {
  TruncSeries s(order);
  if (order > 1) s.c_[1] = 1;
  return s;
}

bool TruncSeries::is_zero() const {
  for (const auto& x : c_) {
    if (x != 0) return false;
  }
  return true;
}

bool TruncSeries::is_one() const {
  if (c_[0] != 1) return false;
  for (std::size_t k = 1; k < c_.size(); ++k) {
    if (c_[k] != 0) return false;
  }
  return true;
}

TruncSeries TruncSeries::truncated(std::size_t new_order) const {
  if (new_order == 0 || new_order > order()) throw std::invalid_argument("bad truncation order");
  return from_coeffs(std::vector<Rational>(c_.begin(), c_.begin() + static_cast<std::ptrdiff_t>(new_order)));
}

TruncSeries TruncSeries::operator-() const {
  TruncSeries s = *this;
  for (auto& x : s.c_) x = -x;
  return s;
}

TruncSeries& TruncSeries::operator+=(const TruncSeries& o) {
  check_orders(*this, o);
  for (std::size_t k = 0; k < c_.size(); ++k) c_[k] += o.c_[k];
  return *this;
}

TruncSeries& TruncSeries::operator-=(const TruncSeries& o) {
  check_orders(*this, o);
  for (std::size_t k = 0; k < c_.size(); ++k) c_[k] -= o.c_[k];
  return *this;
}

TruncSeries& TruncSeries::operator*=(const Rational& s) {
  for (auto& x : c_) x *= s;
  return *this;
}

TruncSeries operator*(const TruncSeries& a, const TruncSeries& b) {
  check_orders(a, b);
  const std::size_t n = a.order();
  TruncSeries out(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (a.c_[i] == 0) continue;
    for (std::size_t j = 0; i + j < n; ++j) {
      if (b.c_[j] != 0) out.c_[i + j] += a.c_[i] * b.c_[j];
    }
  }
  return out;
}

std::string TruncSeries::to_string() const {
  std::ostringstream os;
  bool first = true;
  for (std::size_t k = 0; k < c_.size(); ++k) {
    if (c_[k] == 0) continue;
    Rational mag = abs(c_[k]);
    if (first) {
      if (c_[k] < 0) os << '-';
    } else {
      os << (c_[k] < 0 ? " - " : " + ");
    }
    first = false;
    if (k == 0) {
      os << mag.get_str();
      continue;
    }
    if (mag != 1) os << mag.get_str() << '*';
    os << 'h';
    if (k > 1) os << '^' << k;
  }
  if (first) os << '0';
  os << " + O(h^" << c_.size() << ')';
  return os.str();
}

TruncSeries series_exp(const TruncSeries& x) {
  if (x[0] != 0) throw std::invalid_argument("series_exp needs a series with zero constant term");
  // exp = sum_k x^k / k!; x^k vanishes below h^k so order terms suffice.
  const std::size_t n = x.order();
  TruncSeries result(n, Rational(1));
  TruncSeries power(n, Rational(1));
  Rational inv_fact(1);
  for (std::size_t k = 1; k < n; ++k) {
    power = power * x;
    inv_fact /= static_cast<long>(k);
    result += power * inv_fact;
  }
  return result;
}

TruncSeries laurent_to_series(const LaurentPoly& p, std::size_t order) {
  TruncSeries out(order);
  if (p.is_zero()) return out;
  for (const auto& [e, c] : p.terms()) {
    // q^e = exp(e h / 2) = sum_k (e/2)^k h^k / k!
    Rational half_e(e);
    half_e /= 2;
    Rational term = c;
    for (std::size_t k = 0; k < order; ++k) {
      out[k] += term;
      term *= half_e;
      term /= static_cast<long>(k + 1);
    }
  }
  return out;
}

}  // namespace braidcable
