#include "braidcable/linalg.hpp"

#include <algorithm>
#include <map>
#include <utility>

namespace braidcable {

namespace {

template <class F>
F field_determinant(Matrix<F> m) {
  if (!m.is_square()) throw std::invalid_argument("determinant of a non-square matrix");
  const std::size_t n = m.rows();
  F det(1);
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t p = k;
    while (p < n && is_zero(m(p, k))) ++p;
    if (p == n) return F();
    if (p != k) {
      for (std::size_t j = k; j < n; ++j) std::swap(m(k, j), m(p, j));
      det = -det;
    }
    det *= m(k, k);
    const F inv = F(1) / m(k, k);
    for (std::size_t i = k + 1; i < n; ++i) {
      if (is_zero(m(i, k))) continue;
      const F f = m(i, k) * inv;
      for (std::size_t j = k + 1; j < n; ++j) {
        if (!is_zero(m(k, j))) m(i, j) -= f * m(k, j);
      }
    }
  }
  return det;
}

template <class F>
Matrix<F> field_inverse(const Matrix<F>& input) {
  if (!input.is_square()) throw std::invalid_argument("inverse of a non-square matrix");
  const std::size_t n = input.rows();
  Matrix<F> m = input;
  Matrix<F> inv = Matrix<F>::identity(n);
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t p = k;
    while (p < n && is_zero(m(p, k))) ++p;
    if (p == n) throw SingularMatrix("0");
    if (p != k) {
      for (std::size_t j = 0; j < n; ++j) {
        std::swap(m(k, j), m(p, j));
        std::swap(inv(k, j), inv(p, j));
      }
    }
    const F pinv = F(1) / m(k, k);
    for (std::size_t j = 0; j < n; ++j) {
      if (!is_zero(m(k, j))) m(k, j) *= pinv;
      if (!is_zero(inv(k, j))) inv(k, j) *= pinv;
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (i == k || is_zero(m(i, k))) continue;
      const F f = m(i, k);
      for (std::size_t j = 0; j < n; ++j) {
        if (!is_zero(m(k, j))) m(i, j) -= f * m(k, j);
        if (!is_zero(inv(k, j))) inv(i, j) -= f * inv(k, j);
      }
    }
  }
  return inv;
}

// ---------------------------------------------------------------------------
// Sparse fraction-free row echelon engine.
//
// Rows are kept in reduced echelon form: each stored row owns one pivot
// column, and no stored row has a nonzero entry in another row's pivot
// column. Over Q[q, q^-1] rows are normalized to primitive form (entry gcd
// divided out, integral coefficients with unit content) after each update.

template <class T>
using SparseRow = std::vector<std::pair<std::size_t, T>>;

template <class T>
const T* find_entry(const SparseRow<T>& row, std::size_t col) {
  auto it = std::lower_bound(row.begin(), row.end(), col,
                             [](const auto& e, std::size_t c) { return e.first < c; });
  return (it != row.end() && it->first == col) ? &it->second : nullptr;
}

// alpha * x + beta * y
template <class T>
SparseRow<T> combine(const T& alpha, const SparseRow<T>& x, const T& beta, const SparseRow<T>& y) {
  SparseRow<T> out;
  out.reserve(x.size() + y.size());
  std::size_t i = 0, j = 0;
  const bool alpha_one = alpha == T(1);
  while (i < x.size() || j < y.size()) {
    if (j == y.size() || (i < x.size() && x[i].first < y[j].first)) {
      out.emplace_back(x[i].first, alpha_one ? x[i].second : alpha * x[i].second);
      ++i;
    } else if (i == x.size() || y[j].first < x[i].first) {
      out.emplace_back(y[j].first, beta * y[j].second);
      ++j;
    } else {
      T v = alpha_one ? x[i].second : alpha * x[i].second;
      v += beta * y[j].second;
      if (!is_zero(v)) out.emplace_back(x[i].first, std::move(v));
      ++i;
      ++j;
    }
  }
  return out;
}

template <class T>
struct RingOps;

template <>
struct RingOps<Rational> {
  using Field = Rational;
  static bool is_unit(const Rational& x) { return !is_zero(x); }
  static Rational unit_inverse(const Rational& x) { return 1 / x; }
  static std::size_t cost(const Rational& x) {
    return mpz_sizeinbase(x.get_num_mpz_t(), 2) + mpz_sizeinbase(x.get_den_mpz_t(), 2);
  }
  static void normalize(SparseRow<Rational>&) {}
  static Field ratio(const Rational& a, const Rational& b) { return a / b; }
};

template <>
struct RingOps<LaurentPoly> {
  using Field = RatFunc;
  static bool is_unit(const LaurentPoly& x) { return x.is_unit(); }
  static LaurentPoly unit_inverse(const LaurentPoly& x) {
    return LaurentPoly::monomial(1 / x.trailing_coeff(), -x.low_degree());
  }
  static std::size_t cost(const LaurentPoly& x) { return x.term_span(); }

  static void normalize(SparseRow<LaurentPoly>& row) {
    if (row.empty()) return;
    LaurentPoly g;
    for (const auto& [c, v] : row) {
      g = gcd(g, v);
      if (g.is_one()) break;
    }
    if (!g.is_one()) {
      for (auto& e : row) e.second = *exact_divide(e.second, g);
    }
    // Integral primitive coefficients and lowest exponent zero.
    Integer den_lcm(1), num_gcd(0);
    int low = row.front().second.low_degree();
    for (const auto& [c, v] : row) {
      low = std::min(low, v.low_degree());
      for (const auto& x : v.dense()) {
        if (x == 0) continue;
        mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), x.get_den_mpz_t());
        mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), x.get_num_mpz_t());
      }
    }
    Rational scale(den_lcm, num_gcd);
    scale.canonicalize();
    if (row.front().second.leading_coeff() < 0) scale = -scale;
    if (scale == 1 && low == 0) return;
    for (auto& e : row) {
      e.second = e.second.shifted(-low);
      e.second *= scale;
    }
  }
  static Field ratio(const LaurentPoly& a, const LaurentPoly& b) { return RatFunc(a, b); }
};

template <class T>
class EchelonForm {
 public:
  using Ops = RingOps<T>;
  using Row = SparseRow<T>;

  explicit EchelonForm(std::size_t ncols) : pivot_of_col_(ncols, npos) {}

  void insert(Row e) {
    // Clear every existing pivot column from e.
    for (std::size_t r = 0; r < rows_.size() && !e.empty(); ++r) {
      const std::size_t pc = pivots_[r];
      const T* ec = find_entry(e, pc);
      if (!ec) continue;
      const T& p = *find_entry(rows_[r], pc);
      e = eliminate(e, *ec, rows_[r], p);
    }
    if (e.empty()) return;
    Ops::normalize(e);

    // Choose the cheapest pivot, preferring units.
    std::size_t best = 0;
    for (std::size_t k = 1; k < e.size(); ++k) {
      if (better(e[k].second, e[best].second)) best = k;
    }
    const std::size_t pc = e[best].first;
    if (Ops::is_unit(e[best].second)) {
      const T inv = Ops::unit_inverse(e[best].second);
      for (auto& x : e) x.second = x.second * inv;
    }
    const T p = *find_entry(e, pc);
    for (auto& row : rows_) {
      const T* rc = find_entry(row, pc);
      if (!rc) continue;
      row = eliminate(row, *rc, e, p);
      Ops::normalize(row);
    }
    pivot_of_col_[pc] = rows_.size();
    pivots_.push_back(pc);
    rows_.push_back(std::move(e));
  }

  std::size_t rank() const { return rows_.size(); }

  /// Null space basis vectors (dense, over the field of fractions).
  std::vector<std::vector<typename Ops::Field>> null_space() const {
    using Field = typename Ops::Field;
    std::vector<std::vector<Field>> basis;
    const std::size_t n = pivot_of_col_.size();
    for (std::size_t f = 0; f < n; ++f) {
      if (pivot_of_col_[f] != npos) continue;
      std::vector<Field> x(n, Field());
      x[f] = Field(1);
      for (std::size_t r = 0; r < rows_.size(); ++r) {
        const T* rf = find_entry(rows_[r], f);
        if (!rf) continue;
        const std::size_t pc = pivots_[r];
        x[pc] = Ops::ratio(-*rf, *find_entry(rows_[r], pc));
      }
      basis.push_back(std::move(x));
    }
    return basis;
  }

 private:
  static constexpr std::size_t npos = static_cast<std::size_t>(-1);

  static bool better(const T& a, const T& b) {
    const bool ua = Ops::is_unit(a), ub = Ops::is_unit(b);
    if (ua != ub) return ua;
    return Ops::cost(a) < Ops::cost(b);
  }

  // Returns a row with the entry at the pivot column cancelled:
  // target - (c/p) * pivot_row when p is a unit, else p*target - c*pivot_row.
  static Row eliminate(const Row& target, const T& c, const Row& pivot_row, const T& p) {
    if (p == T(1)) return combine(T(1), target, T(-c), pivot_row);
    if (Ops::is_unit(p)) return combine(T(1), target, T(-(c * Ops::unit_inverse(p))), pivot_row);
    return combine(p, target, T(-c), pivot_row);
  }

  std::vector<std::size_t> pivot_of_col_;
  std::vector<std::size_t> pivots_;
  std::vector<Row> rows_;
};

// Builds the equations M*A_k - B_k*M = 0 with unknown M(a, c) at index a*dim_a + c.
template <class T>
std::vector<SparseRow<T>> intertwiner_equations(std::span<const Matrix<T>> a, std::span<const Matrix<T>> b,
                                                std::size_t dim_a, std::size_t dim_b) {
  if (a.size() != b.size()) throw std::invalid_argument("intertwiner: generator lists differ in length");
  for (const auto& m : a) {
    if (m.rows() != dim_a || m.cols() != dim_a) throw std::invalid_argument("intertwiner: bad source matrix size");
  }
  for (const auto& m : b) {
    if (m.rows() != dim_b || m.cols() != dim_b) throw std::invalid_argument("intertwiner: bad target matrix size");
  }
  std::vector<SparseRow<T>> eqs;
  for (std::size_t k = 0; k < a.size(); ++k) {
    for (std::size_t i = 0; i < dim_b; ++i) {
      for (std::size_t j = 0; j < dim_a; ++j) {
        // (M A)(i,j) = sum_c M(i,c) A(c,j);  (B M)(i,j) = sum_c B(i,c) M(c,j)
        std::map<std::size_t, T> acc;
        for (std::size_t c = 0; c < dim_a; ++c) {
          if (!is_zero(a[k](c, j))) acc[i * dim_a + c] += a[k](c, j);
        }
        for (std::size_t c = 0; c < dim_b; ++c) {
          if (!is_zero(b[k](i, c))) acc[c * dim_a + j] -= b[k](i, c);
        }
        SparseRow<T> row;
        for (auto& [col, v] : acc) {
          if (!is_zero(v)) row.emplace_back(col, std::move(v));
        }
        if (!row.empty()) eqs.push_back(std::move(row));
      }
    }
  }
  // Short equations first: they are cheap pivots and keep fill-in low.
  std::stable_sort(eqs.begin(), eqs.end(), [](const auto& x, const auto& y) { return x.size() < y.size(); });
  return eqs;
}

template <class T>
auto null_space_of(std::vector<SparseRow<T>> eqs, std::size_t ncols) {
  EchelonForm<T> form(ncols);
  for (auto& e : eqs) form.insert(std::move(e));
  return form.null_space();
}

}  // namespace

Rational determinant(const QMatrix& m) { return field_determinant(m); }
RatFunc determinant(const RatFuncMatrix& m) { return field_determinant(m); }

LaurentPoly determinant(const LaurentMatrix& input) {
  if (!input.is_square()) throw std::invalid_argument("determinant of a non-square matrix");
  const std::size_t n = input.rows();
  if (n == 0) return LaurentPoly(1);
  LaurentMatrix m = input;
  LaurentPoly prev(1);
  bool negate = false;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    std::size_t p = n;
    for (std::size_t i = k; i < n; ++i) {
      if (m(i, k).is_zero()) continue;
      if (p == n || m(i, k).term_span() < m(p, k).term_span()) p = i;
    }
    if (p == n) return {};
    if (p != k) {
      for (std::size_t j = k; j < n; ++j) std::swap(m(k, j), m(p, j));
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        LaurentPoly v = m(i, j) * m(k, k) - m(i, k) * m(k, j);
        auto quotient = exact_divide(v, prev);
        if (!quotient) throw std::logic_error("Bareiss step was not exact");
        m(i, j) = std::move(*quotient);
      }
      m(i, k) = LaurentPoly();
    }
    prev = m(k, k);
  }
  LaurentPoly det = m(n - 1, n - 1);
  return negate ? -det : det;
}

QMatrix inverse(const QMatrix& m) { return field_inverse(m); }
RatFuncMatrix inverse(const RatFuncMatrix& m) { return field_inverse(m); }

RatFuncMatrix inverse(const LaurentMatrix& m) {
  if (!m.is_square()) throw std::invalid_argument("inverse of a non-square matrix");
  LaurentPoly det = determinant(m);
  if (det.is_zero()) throw SingularMatrix(det.to_string());
  return field_inverse(to_ratfunc(m));
}

std::vector<RatFuncMatrix> solve_intertwiner_space(std::span<const LaurentMatrix> a,
                                                   std::span<const LaurentMatrix> b, std::size_t dim_a,
                                                   std::size_t dim_b) {
  auto basis = null_space_of(intertwiner_equations(a, b, dim_a, dim_b), dim_a * dim_b);
  std::vector<RatFuncMatrix> out;
  out.reserve(basis.size());
  for (auto& x : basis) {
    // Clear denominators: multiply through by their lcm.
    LaurentPoly lcm(1);
    for (const auto& v : x) {
      if (v.den().is_one()) continue;
      LaurentPoly g = gcd(lcm, v.den());
      lcm = *exact_divide(lcm * v.den(), g);
    }
    RatFuncMatrix m(dim_b, dim_a);
    for (std::size_t i = 0; i < dim_b; ++i) {
      for (std::size_t j = 0; j < dim_a; ++j) m(i, j) = x[i * dim_a + j] * RatFunc(lcm);
    }
    out.push_back(std::move(m));
  }
  return out;
}

std::vector<QMatrix> solve_intertwiner_space(std::span<const QMatrix> a, std::span<const QMatrix> b,
                                             std::size_t dim_a, std::size_t dim_b) {
  auto basis = null_space_of(intertwiner_equations(a, b, dim_a, dim_b), dim_a * dim_b);
  std::vector<QMatrix> out;
  for (auto& x : basis) {
    QMatrix m(dim_b, dim_a);
    for (std::size_t i = 0; i < dim_b; ++i) {
      for (std::size_t j = 0; j < dim_a; ++j) m(i, j) = x[i * dim_a + j];
    }
    out.push_back(std::move(m));
  }
  return out;
}

}  // namespace braidcable
