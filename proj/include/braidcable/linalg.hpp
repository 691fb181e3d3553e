#pragma once

#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "braidcable/matrix.hpp"

namespace braidcable {

class SingularMatrix : public std::domain_error {
 public:
  explicit SingularMatrix(const std::string& det)
      : std::domain_error("singular matrix (determinant " + det + ")"), determinant_(det) {}
  const std::string& determinant() const { return determinant_; }

 private:
  std::string determinant_;
};

// Exact determinants. Laurent matrices use fraction-free (Bareiss)
// elimination; field-valued matrices use ordinary pivoting.
Rational determinant(const QMatrix& m);
LaurentPoly determinant(const LaurentMatrix& m);
RatFunc determinant(const RatFuncMatrix& m);

// Exact inverses; Laurent input is promoted to Q(q). Throw SingularMatrix.
QMatrix inverse(const QMatrix& m);
RatFuncMatrix inverse(const LaurentMatrix& m);
RatFuncMatrix inverse(const RatFuncMatrix& m);

/// Basis of { M : M * A[k] == B[k] * M for all k } over Q(q).
///
/// Every A[k] must be dim_a x dim_a and every B[k] dim_b x dim_b; the two
/// lists must have equal length. Returned matrices are dim_b x dim_a with
/// polynomial entries (denominators are cleared per basis element).
std::vector<RatFuncMatrix> solve_intertwiner_space(std::span<const LaurentMatrix> a,
                                                   std::span<const LaurentMatrix> b,
                                                   std::size_t dim_a, std::size_t dim_b);

/// Same over Q.
std::vector<QMatrix> solve_intertwiner_space(std::span<const QMatrix> a, std::span<const QMatrix> b,
                                             std::size_t dim_a, std::size_t dim_b);

}  // namespace braidcable
