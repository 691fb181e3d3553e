#pragma once

#include <optional>
#include <string>
#include <vector>

#include "braidcable/representations.hpp"

namespace braidcable {

struct BlockInfo {
  std::string label;
  std::size_t dimension = 0;
  std::size_t multiplicity = 0;
};

/// Certificate that two representations are isomorphic: an explicit
/// intertwiner M with M * left(g) = right(g) * M for every generator g.
struct DecompositionReport {
  std::string left_label;
  std::string right_label;
  bool verified = false;
  std::vector<BlockInfo> blocks;
  std::optional<RatFuncMatrix> intertwiner;
  /// Dimension of the intertwiner space (global check only).
  std::optional<std::size_t> solution_dimension;
  /// First failing entry or relation when not verified.
  std::string failure;
};

/// Basis u_i = sum_s e_s^i and v^i_{s,r} = e_s^i - e_r^i of Q^{nr}, with
/// e_s^i the basis vector of index r(i-1)+s (1-based).
struct CabledBasis {
  int n = 0;
  int r = 0;
  std::vector<std::vector<Rational>> u_vectors;               // n vectors
  std::vector<std::vector<std::vector<Rational>>> f_vectors;  // (r-1) copies of n vectors

  CabledBasis(int n, int r);
  /// Columns u_1..u_n, then v^1_{1,r}..v^n_{1,r}, ..., v^n_{r-1,r}.
  QMatrix change_of_basis() const;
};

/// Conjugates inf_cable_pullback(inf_burau(nr), n, r) into the cabled basis and
/// compares it blockwise with (r rho_bur + r(r-1)) + (r-1) (r^2 - r rho_sym).
DecompositionReport verify_infinitesimal_decomposition(int n, int r);

/// q^{r(r-1)} R_bur^{q^r}  (+)  (r-1) copies of q^{r^2} R_sym^{q^-r}: the
/// representation the r-cabled Burau representation decomposes into.
GeneratorRep cabling_block_sum(int n, int r);

/// Images of the cabled generators under the Burau representation of B_{nr}.
std::vector<LaurentMatrix> cabled_burau_images(int n, int r);

/// Finds an exactly invertible intertwiner from R_bur o cabling to
/// cabling_block_sum(n, r) over Q(q).
DecompositionReport verify_global_decomposition(int n, int r);

struct DeterminantComparison {
  int generator = 0;
  LaurentPoly cabled;     // det of R_bur(cable(sigma_i))
  LaurentPoly predicted;  // (-1)^{r^2} q^{r^2 (nr-2)}
  LaurentPoly block_sum;  // det of cabling_block_sum(n, r)(sigma_i)
  bool consistent() const { return cabled == predicted && cabled == block_sum; }
};
std::vector<DeterminantComparison> determinant_comparisons(int n, int r);
bool determinant_consistency(int n, int r);

enum class SeriesMode {
  kModH,   // h^0 term equals the permutation image (any word)
  kModH2,  // Id + h * sum lk_ab rho(t_ab) modulo h^2 (pure words)
};

/// Expands rep(w) under q = exp(h/2) to `order` terms and compares it with
/// the infinitesimal prediction. Throws std::invalid_argument for a non-pure
/// word in kModH2 mode or mismatched dimensions.
bool check_series_linearization(const BraidWord& w, const InfRep& rho, const GeneratorRep& rep,
                                std::size_t order = 4, SeriesMode mode = SeriesMode::kModH2);

/// Dimension of { M : M rep(sigma_i) = rep(sigma_i) M } over Q(q).
std::size_t commutant_dimension(const GeneratorRep& rep);

struct IdentityWitness {
  bool identity = true;
  std::size_t row = 0, col = 0;
  LaurentPoly entry;  // entry of (M - Id) at (row, col) when not identity
};

struct KernelVerdict {
  BraidWord word;
  int r = 1;
  bool in_ker_burau = false;
  bool in_ker_cabled = false;
  IdentityWitness burau_witness;
  IdentityWitness cabled_witness;
  bool agree() const { return in_ker_burau == in_ker_cabled; }
};

/// Decides w in Ker R_bur and cable(w, r) in Ker R_bur exactly.
KernelVerdict kernel_equivalence_check(const BraidWord& w, int r);

/// det R_bur(sigma_1)^2 = q^{2n-4} differs from a^{-2n} for a = q^{r(r-1)}.
bool framing_criterion_holds(int n, int r);

/// (sigma_1 ... sigma_{n-1})^n
BraidWord full_twist(int n);

}  // namespace braidcable
