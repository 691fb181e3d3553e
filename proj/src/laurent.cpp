#include "braidcable/laurent.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <stdexcept>
#include <utility>

namespace braidcable {

std::string to_string(const Rational& x) { return x.get_str(); }

Rational parse_rational(std::string_view text) {
  std::string s(text);
  s.erase(std::remove_if(s.begin(), s.end(), [](unsigned char ch) { return std::isspace(ch); }),
          s.end());
  if (s.empty()) throw std::invalid_argument("empty rational");
  std::size_t start = (s[0] == '+' || s[0] == '-') ? 1 : 0;
  bool seen_slash = false;
  bool digit_before = false, digit_after = false;
  for (std::size_t i = start; i < s.size(); ++i) {
    if (s[i] == '/' && !seen_slash) {
      seen_slash = true;
    } else if (std::isdigit(static_cast<unsigned char>(s[i]))) {
      (seen_slash ? digit_after : digit_before) = true;
    } else {
      throw std::invalid_argument("bad rational: " + s);
    }
  }
  if (!digit_before || (seen_slash && !digit_after)) throw std::invalid_argument("bad rational: " + s);
  if (s[0] == '+') s.erase(0, 1);
  Rational r;
  if (r.set_str(s, 10) != 0) throw std::invalid_argument("bad rational: " + s);
  if (r.get_den() == 0) throw std::invalid_argument("zero denominator: " + s);
  r.canonicalize();
  return r;
}

namespace {

using Dense = std::vector<Rational>;

void trim_high(Dense& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

// Polynomial remainder of a modulo b (ascending coefficients, b nonzero).
// Quotient written to *quot when non-null.
void poly_divmod(Dense& a, const Dense& b, Dense* quot) {
  trim_high(a);
  const std::size_t db = b.size() - 1;
  if (quot) quot->assign(a.size() >= b.size() ? a.size() - db : 0, Rational(0));
  if (a.size() < b.size()) return;
  const Rational inv_lead = 1 / b.back();
  Rational f;
  for (std::size_t top = a.size(); top-- > db;) {
    if (a[top] == 0) continue;
    f = a[top] * inv_lead;
    const std::size_t shift = top - db;
    for (std::size_t k = 0; k < db; ++k) {
      if (b[k] != 0) a[shift + k] -= f * b[k];
    }
    a[top] = 0;
    if (quot) (*quot)[shift] = f;
  }
  trim_high(a);
}

void make_monic(Dense& p) {
  if (p.empty() || p.back() == 1) return;
  const Rational inv = 1 / p.back();
  for (auto& c : p) c *= inv;
}

// Multiplies dense runs. Uses integer accumulation when all coefficients are
// integral, which is the common case for braid group representations.
Dense dense_mul(const Dense& a, const Dense& b) {
  Dense out(a.size() + b.size() - 1);
  bool integral = true;
  for (const auto& x : a) integral = integral && x.get_den() == 1;
  for (const auto& x : b) integral = integral && x.get_den() == 1;
  if (integral) {
    std::vector<Integer> acc(out.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (a[i] == 0) continue;
      const mpz_srcptr ai = a[i].get_num_mpz_t();
      for (std::size_t j = 0; j < b.size(); ++j) {
        if (b[j] == 0) continue;
        mpz_addmul(acc[i + j].get_mpz_t(), ai, b[j].get_num_mpz_t());
      }
    }
    for (std::size_t k = 0; k < out.size(); ++k) out[k] = Rational(acc[k]);
    return out;
  }
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) {
      if (b[j] != 0) out[i + j] += a[i] * b[j];
    }
  }
  return out;
}

}  // namespace

LaurentPoly::LaurentPoly(const Rational& c) {
  if (c != 0) c_.push_back(c);
}

LaurentPoly LaurentPoly::monomial(const Rational& c, int exponent) {
  LaurentPoly p;
  if (c != 0) {
    p.low_ = exponent;
    p.c_.push_back(c);
  }
  return p;
}

LaurentPoly LaurentPoly::from_terms(const std::map<int, Rational>& terms) {
  LaurentPoly p;
  if (terms.empty()) return p;
  int lo = terms.begin()->first, hi = terms.rbegin()->first;
  Dense c(static_cast<std::size_t>(hi - lo + 1));
  for (const auto& [e, v] : terms) c[static_cast<std::size_t>(e - lo)] = v;
  return from_dense(lo, std::move(c));
}

LaurentPoly LaurentPoly::from_dense(int low, std::vector<Rational> coeffs) {
  LaurentPoly p;
  p.low_ = low;
  p.c_ = std::move(coeffs);
  p.trim();
  return p;
}

void LaurentPoly::trim() {
  trim_high(c_);
  std::size_t lead = 0;
  while (lead < c_.size() && c_[lead] == 0) ++lead;
  if (lead > 0) {
    c_.erase(c_.begin(), c_.begin() + static_cast<std::ptrdiff_t>(lead));
    low_ += static_cast<int>(lead);
  }
  if (c_.empty()) low_ = 0;
}

bool LaurentPoly::is_one() const { return c_.size() == 1 && low_ == 0 && c_[0] == 1; }

bool LaurentPoly::has_integer_coeffs() const {
  return std::all_of(c_.begin(), c_.end(), [](const Rational& x) { return x.get_den() == 1; });
}

Rational LaurentPoly::coeff(int exponent) const {
  if (c_.empty() || exponent < low_ || exponent > high_degree()) return Rational(0);
  return c_[static_cast<std::size_t>(exponent - low_)];
}

std::map<int, Rational> LaurentPoly::terms() const {
  std::map<int, Rational> out;
  for (std::size_t k = 0; k < c_.size(); ++k) {
    if (c_[k] != 0) out.emplace(low_ + static_cast<int>(k), c_[k]);
  }
  return out;
}

std::size_t LaurentPoly::num_terms() const {
  return static_cast<std::size_t>(
      std::count_if(c_.begin(), c_.end(), [](const Rational& x) { return x != 0; }));
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly p = *this;
  for (auto& c : p.c_) c = -c;
  return p;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
  if (o.is_zero()) return *this;
  if (is_zero()) return *this = o;
  const int lo = std::min(low_, o.low_);
  const int hi = std::max(high_degree(), o.high_degree());
  if (lo < low_) {
    c_.insert(c_.begin(), static_cast<std::size_t>(low_ - lo), Rational(0));
    low_ = lo;
  }
  c_.resize(static_cast<std::size_t>(hi - lo + 1));
  for (std::size_t k = 0; k < o.c_.size(); ++k) {
    c_[static_cast<std::size_t>(o.low_ - lo) + k] += o.c_[k];
  }
  trim();
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) { return *this += -o; }

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  if (a.c_.size() == 1 && b.c_.size() == 1) return LaurentPoly::monomial(a.c_[0] * b.c_[0], a.low_ + b.low_);
  LaurentPoly p;
  p.low_ = a.low_ + b.low_;
  p.c_ = dense_mul(a.c_, b.c_);
  p.trim();
  return p;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& o) { return *this = *this * o; }

LaurentPoly& LaurentPoly::operator*=(const Rational& s) {
  if (s == 0) return *this = LaurentPoly();
  for (auto& c : c_) c *= s;
  return *this;
}

LaurentPoly LaurentPoly::shifted(int k) const {
  LaurentPoly p = *this;
  if (!p.is_zero()) p.low_ += k;
  return p;
}

LaurentPoly LaurentPoly::substitute_power(int r) const {
  if (r == 0) throw std::invalid_argument("q -> q^0 is not a field morphism of Q(q)");
  std::map<int, Rational> out;
  for (std::size_t k = 0; k < c_.size(); ++k) {
    if (c_[k] != 0) out.emplace(r * (low_ + static_cast<int>(k)), c_[k]);
  }
  return from_terms(out);
}

LaurentPoly LaurentPoly::pow(unsigned e) const {
  LaurentPoly result(1), base = *this;
  while (e) {
    if (e & 1U) result *= base;
    e >>= 1U;
    if (e) base *= base;
  }
  return result;
}

Rational LaurentPoly::evaluate(const Rational& at) const {
  if (is_zero()) return Rational(0);
  if (at == 0) throw std::domain_error("cannot evaluate a Laurent polynomial at q = 0");
  Rational acc(0);
  for (std::size_t k = c_.size(); k-- > 0;) acc = acc * at + c_[k];
  Rational scale(1);
  Rational base = low_ >= 0 ? at : Rational(1 / at);
  for (int i = 0; i < std::abs(low_); ++i) scale *= base;
  return acc * scale;
}

std::string LaurentPoly::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t k = c_.size(); k-- > 0;) {
    const Rational& c = c_[k];
    if (c == 0) continue;
    const int e = low_ + static_cast<int>(k);
    Rational mag = abs(c);
    if (first) {
      if (c < 0) os << '-';
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (e == 0) {
      os << mag.get_str();
      continue;
    }
    if (mag != 1) os << mag.get_str() << '*';
    os << 'q';
    if (e != 1) os << '^' << e;
  }
  return os.str();
}

std::optional<LaurentPoly> exact_divide(const LaurentPoly& a, const LaurentPoly& b) {
  if (b.is_zero()) throw std::domain_error("division by zero Laurent polynomial");
  if (a.is_zero()) return LaurentPoly();
  if (b.is_unit()) {
    LaurentPoly out = a.shifted(-b.low_degree());
    out *= Rational(1 / b.trailing_coeff());
    return out;
  }
  Dense rem = a.dense();
  Dense quot;
  poly_divmod(rem, b.dense(), &quot);
  if (!rem.empty()) return std::nullopt;
  return LaurentPoly::from_dense(a.low_degree() - b.low_degree(), std::move(quot));
}

LaurentPoly gcd(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.is_zero() && b.is_zero()) return {};
  if (a.is_zero()) return split_unit(b).normal;
  if (b.is_zero()) return split_unit(a).normal;
  if (a.is_unit() || b.is_unit()) return LaurentPoly(1);
  Dense x = a.dense(), y = b.dense();
  if (x.size() < y.size()) std::swap(x, y);
  make_monic(y);
  while (!y.empty()) {
    poly_divmod(x, y, nullptr);
    std::swap(x, y);
    make_monic(y);
  }
  make_monic(x);
  return LaurentPoly::from_dense(0, std::move(x));
}

UnitSplit split_unit(const LaurentPoly& p) {
  if (p.is_zero()) return {LaurentPoly(1), LaurentPoly()};
  const Rational lead = p.leading_coeff();
  LaurentPoly normal = p.shifted(-p.low_degree());
  normal *= Rational(1 / lead);
  return {LaurentPoly::monomial(lead, p.low_degree()), std::move(normal)};
}

namespace {

// term := [coeff ['*']] ['q' ['^' int]] | coeff
LaurentPoly parse_term(std::string_view t, std::string_view whole) {
  if (t.empty()) throw std::invalid_argument("bad Laurent polynomial: " + std::string(whole));
  const auto qpos = t.find('q');
  if (qpos == std::string_view::npos) return LaurentPoly(parse_rational(t));
  std::string_view head = t.substr(0, qpos);
  std::string_view tail = t.substr(qpos + 1);
  if (!head.empty() && head.back() == '*') head.remove_suffix(1);
  Rational c(1);
  if (head == "-") {
    c = -1;
  } else if (!head.empty() && head != "+") {
    c = parse_rational(head);
  }
  int e = 1;
  if (!tail.empty()) {
    if (tail[0] != '^') throw std::invalid_argument("bad Laurent polynomial: " + std::string(whole));
    tail.remove_prefix(1);
    if (!tail.empty() && tail[0] == '(' && tail.back() == ')') tail = tail.substr(1, tail.size() - 2);
    try {
      std::size_t used = 0;
      e = std::stoi(std::string(tail), &used);
      if (used != tail.size()) throw std::invalid_argument("trailing");
    } catch (const std::exception&) {
      throw std::invalid_argument("bad exponent in: " + std::string(whole));
    }
  }
  return LaurentPoly::monomial(c, e);
}

}  // namespace

LaurentPoly parse_laurent(std::string_view text) {
  std::string s;
  for (char ch : text) {
    if (!std::isspace(static_cast<unsigned char>(ch))) s.push_back(ch);
  }
  if (s.empty()) throw std::invalid_argument("empty Laurent polynomial");
  LaurentPoly out;
  std::size_t start = 0;
  for (std::size_t i = 1; i <= s.size(); ++i) {
    const bool boundary = i == s.size() || ((s[i] == '+' || s[i] == '-') && s[i - 1] != '^' && s[i - 1] != '(');
    if (!boundary) continue;
    out += parse_term(std::string_view(s).substr(start, i - start), text);
    start = i;
  }
  return out;
}

}  // namespace braidcable
