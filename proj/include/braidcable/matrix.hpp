#pragma once

#include <functional>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <type_traits>
#include <vector>

#include "braidcable/laurent.hpp"
#include "braidcable/ratfunc.hpp"
#include "braidcable/series.hpp"

namespace braidcable {

inline bool is_zero(const Rational& x) { return sgn(x) == 0; }
template <class T>
bool is_zero(const T& x) {
  return x.is_zero();
}

/// Dense row-major matrix over one of the exact coefficient kinds
/// (Rational, LaurentPoly, RatFunc, TruncSeries).
template <class T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, const T& fill = T())
      : rows_(rows), cols_(cols), data_(rows * cols, fill) {}
  Matrix(std::initializer_list<std::initializer_list<T>> init) {
    rows_ = init.size();
    cols_ = rows_ ? init.begin()->size() : 0;
    data_.reserve(rows_ * cols_);
    for (const auto& row : init) {
      if (row.size() != cols_) throw std::invalid_argument("ragged matrix initializer");
      data_.insert(data_.end(), row.begin(), row.end());
    }
  }

  static Matrix identity(std::size_t n, const T& one = T(1), const T& zero = T()) {
    Matrix m(n, n, zero);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = one;
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
  T& at(std::size_t i, std::size_t j) {
    check(i, j);
    return (*this)(i, j);
  }
  const T& at(std::size_t i, std::size_t j) const {
    check(i, j);
    return (*this)(i, j);
  }
  const std::vector<T>& data() const { return data_; }

  template <class F>
  auto map(F&& f) const -> Matrix<std::decay_t<decltype(f(std::declval<const T&>()))>> {
    using U = std::decay_t<decltype(f(std::declval<const T&>()))>;
    Matrix<U> out(rows_, cols_);
    for (std::size_t i = 0; i < rows_; ++i) {
      for (std::size_t j = 0; j < cols_; ++j) out(i, j) = f((*this)(i, j));
    }
    return out;
  }

  Matrix& operator+=(const Matrix& o) {
    same_shape(o);
    for (std::size_t k = 0; k < data_.size(); ++k) data_[k] += o.data_[k];
    return *this;
  }
  Matrix& operator-=(const Matrix& o) {
    same_shape(o);
    for (std::size_t k = 0; k < data_.size(); ++k) data_[k] -= o.data_[k];
    return *this;
  }
  friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
  friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }

  /// Product that skips structural zeros on both sides; generator images of
  /// braid representations are very sparse.
  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw std::invalid_argument("matrix product shape mismatch");
    Matrix out(a.rows_, b.cols_, a.zero_like());
    for (std::size_t i = 0; i < a.rows_; ++i) {
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const T& aik = a(i, k);
        if (is_zero(aik)) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) {
          const T& bkj = b(k, j);
          if (!is_zero(bkj)) out(i, j) += aik * bkj;
        }
      }
    }
    return out;
  }

  template <class S>
  Matrix scaled(const S& s) const {
    Matrix out = *this;
    for (auto& x : out.data_) x = x * s;
    return out;
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }
  friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

  bool is_zero_matrix() const {
    for (const auto& x : data_) {
      if (!is_zero(x)) return false;
    }
    return true;
  }

  Matrix transpose() const {
    Matrix out(cols_, rows_, zero_like());
    for (std::size_t i = 0; i < rows_; ++i) {
      for (std::size_t j = 0; j < cols_; ++j) out(j, i) = (*this)(i, j);
    }
    return out;
  }

  /// A zero of the same kind as the stored entries (matters for series,
  /// whose zero carries a truncation order).
  T zero_like() const {
    if constexpr (std::is_same_v<T, TruncSeries>) {
      return data_.empty() ? T() : T(data_.front().order());
    } else {
      return T();
    }
  }

 private:
  void check(std::size_t i, std::size_t j) const {
    if (i >= rows_ || j >= cols_) throw std::out_of_range("matrix index out of range");
  }
  void same_shape(const Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("matrix shape mismatch");
  }

  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

using QMatrix = Matrix<Rational>;
using LaurentMatrix = Matrix<LaurentPoly>;
using RatFuncMatrix = Matrix<RatFunc>;
using SeriesMatrix = Matrix<TruncSeries>;

/// Block-diagonal direct sum.
template <class T>
Matrix<T> direct_sum(const std::vector<Matrix<T>>& blocks) {
  std::size_t r = 0, c = 0;
  for (const auto& b : blocks) {
    r += b.rows();
    c += b.cols();
  }
  Matrix<T> out(r, c, blocks.empty() ? T() : blocks.front().zero_like());
  std::size_t r0 = 0, c0 = 0;
  for (const auto& b : blocks) {
    for (std::size_t i = 0; i < b.rows(); ++i) {
      for (std::size_t j = 0; j < b.cols(); ++j) out(r0 + i, c0 + j) = b(i, j);
    }
    r0 += b.rows();
    c0 += b.cols();
  }
  return out;
}

template <class T>
bool is_identity(const Matrix<T>& m) {
  if (!m.is_square()) return false;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) {
      const T& x = m(i, j);
      if (i == j) {
        if (!(x == T(1))) return false;
      } else if (!is_zero(x)) {
        return false;
      }
    }
  }
  return true;
}

template <>
inline bool is_identity(const Matrix<TruncSeries>& m) {
  if (!m.is_square()) return false;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (i == j ? !m(i, j).is_one() : !m(i, j).is_zero()) return false;
    }
  }
  return true;
}

inline RatFuncMatrix to_ratfunc(const LaurentMatrix& m) {
  return m.map([](const LaurentPoly& p) { return RatFunc(p); });
}
inline LaurentMatrix to_laurent(const QMatrix& m) {
  return m.map([](const Rational& x) { return LaurentPoly(x); });
}
/// Entrywise image under q -> exp(h/2).
inline SeriesMatrix to_series(const LaurentMatrix& m, std::size_t order) {
  return m.map([order](const LaurentPoly& p) { return laurent_to_series(p, order); });
}
inline SeriesMatrix constant_series(const QMatrix& m, std::size_t order) {
  return m.map([order](const Rational& x) { return TruncSeries(order, x); });
}

/// Aligned multi-line rendering for terminals.
template <class T>
std::string render(const Matrix<T>& m) {
  std::vector<std::string> cells;
  cells.reserve(m.rows() * m.cols());
  std::vector<std::size_t> width(m.cols(), 1);
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) {
      std::string s;
      if constexpr (std::is_same_v<T, Rational>) {
        s = m(i, j).get_str();
      } else {
        s = m(i, j).to_string();
      }
      width[j] = std::max(width[j], s.size());
      cells.push_back(std::move(s));
    }
  }
  std::string out;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    out += "[ ";
    for (std::size_t j = 0; j < m.cols(); ++j) {
      const std::string& s = cells[i * m.cols() + j];
      out += s;
      out.append(width[j] - s.size() + (j + 1 < m.cols() ? 2 : 1), ' ');
    }
    out += "]\n";
  }
  return out;
}

}  // namespace braidcable
