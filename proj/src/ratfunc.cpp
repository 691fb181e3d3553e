#include "braidcable/ratfunc.hpp"

#include <stdexcept>

namespace braidcable {

RatFunc::RatFunc(const LaurentPoly& num, const LaurentPoly& den) : num_(num), den_(den) {
  if (den_.is_zero()) throw std::domain_error("rational function with zero denominator");
  canonicalize();
}

void RatFunc::canonicalize() {
  if (num_.is_zero()) {
    den_ = LaurentPoly(1);
    return;
  }
  auto [unit, normal] = split_unit(den_);
  // num / (unit * normal): move the unit into the numerator.
  num_ = num_.shifted(-unit.low_degree());
  num_ *= Rational(1 / unit.trailing_coeff());
  den_ = std::move(normal);
  if (den_.is_one()) return;
  LaurentPoly g = gcd(num_, den_);
  if (!g.is_one()) {
    num_ = *exact_divide(num_, g);
    den_ = *exact_divide(den_, g);
  }
}

RatFunc RatFunc::operator-() const {
  RatFunc r = *this;
  r.num_ = -r.num_;
  return r;
}

RatFunc RatFunc::inverse() const {
  if (is_zero()) throw std::domain_error("inverse of zero rational function");
  return RatFunc(den_, num_);
}

RatFunc& RatFunc::operator+=(const RatFunc& o) {
  if (o.is_zero()) return *this;
  if (is_zero()) return *this = o;
  if (den_.is_one() && o.den_.is_one()) {
    num_ += o.num_;
    return *this;
  }
  if (den_ == o.den_) {
    num_ += o.num_;
    canonicalize();
    return *this;
  }
  // a/b + c/d with g = gcd(b, d): (a*(d/g) + c*(b/g)) / (b*(d/g))
  LaurentPoly g = gcd(den_, o.den_);
  LaurentPoly bg = *exact_divide(den_, g);
  LaurentPoly dg = *exact_divide(o.den_, g);
  num_ = num_ * dg + o.num_ * bg;
  den_ = den_ * dg;
  canonicalize();
  return *this;
}

RatFunc& RatFunc::operator*=(const RatFunc& o) {
  if (is_zero() || o.is_zero()) return *this = RatFunc();
  if (den_.is_one() && o.den_.is_one()) {
    num_ *= o.num_;
    return *this;
  }
  // Cross-cancel before multiplying to keep degrees down.
  LaurentPoly g1 = gcd(num_, o.den_);
  LaurentPoly g2 = gcd(o.num_, den_);
  LaurentPoly a = g1.is_one() ? num_ : *exact_divide(num_, g1);
  LaurentPoly d = g1.is_one() ? o.den_ : *exact_divide(o.den_, g1);
  LaurentPoly c = g2.is_one() ? o.num_ : *exact_divide(o.num_, g2);
  LaurentPoly b = g2.is_one() ? den_ : *exact_divide(den_, g2);
  num_ = a * c;
  den_ = b * d;
  // Already coprime; only normalization of the leading coefficient remains.
  auto [unit, normal] = split_unit(den_);
  num_ = num_.shifted(-unit.low_degree());
  num_ *= Rational(1 / unit.trailing_coeff());
  den_ = std::move(normal);
  return *this;
}

RatFunc RatFunc::substitute_power(int r) const {
  return RatFunc(num_.substitute_power(r), den_.substitute_power(r));
}

Rational RatFunc::evaluate(const Rational& at) const {
  Rational d = den_.evaluate(at);
  if (d == 0) throw std::domain_error("rational function has a pole at the evaluation point");
  return num_.evaluate(at) / d;
}

std::string RatFunc::to_string() const {
  if (den_.is_one()) return num_.to_string();
  return "(" + num_.to_string() + ")/(" + den_.to_string() + ")";
}

}  // namespace braidcable
