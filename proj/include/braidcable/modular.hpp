#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "braidcable/matrix.hpp"

namespace braidcable::modp {

// Arithmetic in F_p for the 62-bit prime p = 2^62 - 57. Used only to
// pre-screen identities: a mismatch mod p is a proof of inequality, a
// match must still be confirmed exactly.
inline constexpr std::uint64_t kPrime = 4611686018427387847ULL;

inline std::uint64_t add(std::uint64_t a, std::uint64_t b) {
  std::uint64_t s = a + b;
  return s >= kPrime ? s - kPrime : s;
}
inline std::uint64_t sub(std::uint64_t a, std::uint64_t b) { return a >= b ? a - b : a + kPrime - b; }
inline std::uint64_t mul(std::uint64_t a, std::uint64_t b) {
  return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % kPrime);
}
std::uint64_t pow(std::uint64_t a, std::uint64_t e);
inline std::uint64_t inv(std::uint64_t a) { return pow(a, kPrime - 2); }

/// Reduction of a rational; throws std::domain_error if p divides the denominator.
std::uint64_t reduce(const Rational& x);
/// Value of p at q = at (at != 0).
std::uint64_t evaluate(const LaurentPoly& p, std::uint64_t at);

/// Uniform nonzero residue.
std::uint64_t random_unit(std::mt19937_64& rng);

/// Small dense matrix over F_p.
class ModMatrix {
 public:
  ModMatrix() = default;
  ModMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, 0) {}
  static ModMatrix identity(std::size_t n);
  static ModMatrix from_laurent(const LaurentMatrix& m, std::uint64_t at);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  std::uint64_t& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  std::uint64_t operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  friend ModMatrix operator*(const ModMatrix& a, const ModMatrix& b);
  friend bool operator==(const ModMatrix& a, const ModMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }
  bool is_identity() const;
  std::uint64_t determinant() const;
  /// Throws std::domain_error when singular.
  ModMatrix inverse() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<std::uint64_t> data_;
};

}  // namespace braidcable::modp
