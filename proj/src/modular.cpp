#include "braidcable/modular.hpp"

#include <stdexcept>

namespace braidcable::modp {

std::uint64_t pow(std::uint64_t a, std::uint64_t e) {
  std::uint64_t r = 1;
  a %= kPrime;
  while (e) {
    if (e & 1U) r = mul(r, a);
    a = mul(a, a);
    e >>= 1U;
  }
  return r;
}

std::uint64_t reduce(const Rational& x) {
  const Integer p(static_cast<unsigned long>(kPrime));
  Integer num = x.get_num() % p;
  if (num < 0) num += p;
  Integer den = x.get_den() % p;
  if (den == 0) throw std::domain_error("denominator vanishes modulo the screening prime");
  return mul(static_cast<std::uint64_t>(num.get_ui()), inv(static_cast<std::uint64_t>(den.get_ui())));
}

std::uint64_t evaluate(const LaurentPoly& p, std::uint64_t at) {
  if (p.is_zero()) return 0;
  if (at == 0) throw std::domain_error("cannot evaluate a Laurent polynomial at q = 0");
  std::uint64_t acc = 0;
  const auto& c = p.dense();
  for (std::size_t k = c.size(); k-- > 0;) acc = add(mul(acc, at), c[k] == 0 ? 0 : reduce(c[k]));
  const int low = p.low_degree();
  const std::uint64_t base = low >= 0 ? at : inv(at);
  return mul(acc, pow(base, static_cast<std::uint64_t>(low >= 0 ? low : -low)));
}

std::uint64_t random_unit(std::mt19937_64& rng) {
  std::uniform_int_distribution<std::uint64_t> dist(1, kPrime - 1);
  return dist(rng);
}

ModMatrix ModMatrix::identity(std::size_t n) {
  ModMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

ModMatrix ModMatrix::from_laurent(const LaurentMatrix& m, std::uint64_t at) {
  ModMatrix out(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = evaluate(m(i, j), at);
  }
  return out;
}

ModMatrix operator*(const ModMatrix& a, const ModMatrix& b) {
  if (a.cols_ != b.rows_) throw std::invalid_argument("modular matrix product shape mismatch");
  ModMatrix out(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i) {
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const std::uint64_t aik = a(i, k);
      if (aik == 0) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) {
        if (b(k, j)) out(i, j) = add(out(i, j), mul(aik, b(k, j)));
      }
    }
  }
  return out;
}

bool ModMatrix::is_identity() const {
  if (rows_ != cols_) return false;
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) {
      if ((*this)(i, j) != (i == j ? 1U : 0U)) return false;
    }
  }
  return true;
}

std::uint64_t ModMatrix::determinant() const {
  if (rows_ != cols_) throw std::invalid_argument("determinant of a non-square matrix");
  ModMatrix m = *this;
  const std::size_t n = rows_;
  std::uint64_t det = 1;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t p = k;
    while (p < n && m(p, k) == 0) ++p;
    if (p == n) return 0;
    if (p != k) {
      for (std::size_t j = 0; j < n; ++j) std::swap(m(k, j), m(p, j));
      det = sub(0, det);
    }
    det = mul(det, m(k, k));
    const std::uint64_t pinv = inv(m(k, k));
    for (std::size_t i = k + 1; i < n; ++i) {
      if (m(i, k) == 0) continue;
      const std::uint64_t f = mul(m(i, k), pinv);
      for (std::size_t j = k; j < n; ++j) m(i, j) = sub(m(i, j), mul(f, m(k, j)));
    }
  }
  return det;
}

ModMatrix ModMatrix::inverse() const {
  if (rows_ != cols_) throw std::invalid_argument("inverse of a non-square matrix");
  const std::size_t n = rows_;
  ModMatrix m = *this;
  ModMatrix out = identity(n);
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t p = k;
    while (p < n && m(p, k) == 0) ++p;
    if (p == n) throw std::domain_error("singular matrix modulo the screening prime");
    for (std::size_t j = 0; j < n; ++j) {
      std::swap(m(k, j), m(p, j));
      std::swap(out(k, j), out(p, j));
    }
    const std::uint64_t pinv = inv(m(k, k));
    for (std::size_t j = 0; j < n; ++j) {
      m(k, j) = mul(m(k, j), pinv);
      out(k, j) = mul(out(k, j), pinv);
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (i == k || m(i, k) == 0) continue;
      const std::uint64_t f = m(i, k);
      for (std::size_t j = 0; j < n; ++j) {
        m(i, j) = sub(m(i, j), mul(f, m(k, j)));
        out(i, j) = sub(out(i, j), mul(f, out(k, j)));
      }
    }
  }
  return out;
}

}  // namespace braidcable::modp
