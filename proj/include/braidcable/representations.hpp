#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "braidcable/braid.hpp"
#include "braidcable/linalg.hpp"
#include "braidcable/modular.hpp"

namespace braidcable {

/// Representation of B_n over Z[q, q^-1] given by one invertible matrix per
/// Artin generator. Inverse images are cached alongside.
class GeneratorRep {
 public:
  /// Inverses are computed exactly; throws std::invalid_argument if an image
  /// is not invertible over Q[q, q^-1].
  GeneratorRep(int strands, std::vector<LaurentMatrix> images, std::string label);
  GeneratorRep(int strands, std::vector<LaurentMatrix> images, std::vector<LaurentMatrix> inverses,
               std::string label);

  int strands() const { return strands_; }
  std::size_t dim() const { return dim_; }
  const std::string& label() const { return label_; }
  const std::vector<LaurentMatrix>& images() const { return images_; }
  const std::vector<LaurentMatrix>& inverse_images() const { return inverses_; }
  /// Image of sigma_i (1-based).
  const LaurentMatrix& image(int i) const { return images_.at(static_cast<std::size_t>(i - 1)); }
  const LaurentMatrix& letter_image(int letter) const;

 private:
  int strands_;
  std::size_t dim_;
  std::vector<LaurentMatrix> images_;
  std::vector<LaurentMatrix> inverses_;
  std::string label_;
};

GeneratorRep burau_rep(int n);
GeneratorRep sym_rep(int n);
/// a * R; a must be a unit +-c q^k of Q[q, q^-1].
GeneratorRep frame(const GeneratorRep& rep, const LaurentPoly& a);
/// R^{q^r}: entrywise substitution q -> q^r, r != 0.
GeneratorRep twist(const GeneratorRep& rep, int r);
GeneratorRep direct_sum(const std::vector<GeneratorRep>& reps);

/// Ordered product of generator images in word order (freely reduced first).
LaurentMatrix eval_word(const GeneratorRep& rep, const BraidWord& w);
/// Same product with q specialized to `at` modulo the screening prime.
modp::ModMatrix eval_word_mod(const GeneratorRep& rep, const BraidWord& w, std::uint64_t at);
/// R(w) == Id, pre-screened at random points mod p and confirmed exactly.
bool evaluates_to_identity(const GeneratorRep& rep, const BraidWord& w);

/// Exact check of the braid relations on the generator images.
bool satisfies_braid_relations(const GeneratorRep& rep);

/// Descriptor grammar:  burau | sym | base,twist=r,frame=a | sum=[desc;desc;...]
/// Modifiers apply left to right. Throws std::invalid_argument.
GeneratorRep parse_rep_descriptor(std::string_view text, int n);

/// Infinitesimal representation: permutation-group images for s_1..s_{n-1}
/// and one rational matrix per chord t_ij (1 <= i < j <= n).
struct InfRep {
  int strands = 0;
  std::size_t dim = 0;
  std::vector<QMatrix> perm_images;
  std::map<std::pair<int, int>, QMatrix> chord_images;
  std::string label;

  /// t_ij = t_ji; 1-based, i != j.
  const QMatrix& chord(int i, int j) const;
  /// Image of an arbitrary permutation, as a product of perm_images.
  QMatrix permutation_image(const Permutation& p) const;
};

InfRep inf_burau(int n);
InfRep inf_sym(int n);
/// chords t -> t + v Id
InfRep inf_shift(const InfRep& rho, const Rational& v);
/// chords t -> b t, b != 0
InfRep inf_scale(const InfRep& rho, const Rational& b);
InfRep inf_direct_sum(const std::vector<InfRep>& reps);
/// Pullback along infinitesimal cabling: rho on n*r strands to n strands,
/// t_ij -> sum over a in block i, b in block j of t_ab.
InfRep inf_cable_pullback(const InfRep& rho, int n, int r);
/// P^-1 rho P on every image.
InfRep inf_conjugate(const InfRep& rho, const QMatrix& p);

struct RelationCheck {
  bool ok = true;
  std::string witness;  // first failing relation, empty when ok
};

/// Both infinitesimal braid relation families, S_n relations on the
/// permutation images, and equivariance s t_ij s^-1 = t_{s(i)s(j)}.
RelationCheck check_infinitesimal_relations(const InfRep& rho);

/// Permutation matrix with P e_i = e_{p(i)}.
QMatrix permutation_matrix(const Permutation& p);

}  // namespace braidcable
