#pragma once

#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace braidcable {

/// A braid on `strands` strands as a word in the Artin generators.
///
/// Letter k (1 <= |k| <= strands-1) stands for sigma_|k|^sign(k). Letters are
/// read left to right and stacked bottom to top, so the word "a b" is the
/// product a*b with a at the bottom. Words are not reduced automatically;
/// freely_reduced() cancels adjacent k, -k pairs on demand.
class BraidWord {
 public:
  BraidWord() = default;
  /// Throws std::invalid_argument on strands < 1 or letters out of range.
  BraidWord(int strands, std::vector<int> letters);
  explicit BraidWord(int strands) : BraidWord(strands, {}) {}

  int strands() const { return strands_; }
  const std::vector<int>& letters() const { return letters_; }
  std::size_t length() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }

  BraidWord inverse() const;
  BraidWord freely_reduced() const;
  BraidWord& operator*=(const BraidWord& o);
  friend BraidWord operator*(BraidWord a, const BraidWord& b) { return a *= b; }
  friend bool operator==(const BraidWord& a, const BraidWord& b) {
    return a.strands_ == b.strands_ && a.letters_ == b.letters_;
  }

  /// Whitespace-separated signed integers, "" for the empty word.
  std::string to_string() const;

 private:
  int strands_ = 1;
  std::vector<int> letters_;
};

/// Parses "2 1 -3". Throws std::invalid_argument on malformed text.
BraidWord parse_braid_word(int strands, std::string_view text);

/// sigma_i^e
BraidWord generator_power(int strands, int i, int e);

/// Permutation of {0..n-1}; perm[i] is the image of i.
using Permutation = std::vector<int>;

/// Composite s_{l1} o s_{l2} o ... of the letters' transpositions, so that
/// permutation matrices (P e_i = e_{p(i)}) multiply in word order.
Permutation underlying_permutation(const BraidWord& w);
bool is_identity_permutation(const Permutation& p);
/// Cycle notation with 1-based points, "()" for the identity.
std::string cycle_string(const Permutation& p);

int exponent_sum(const BraidWord& w);

/// Linking numbers of a pure braid keyed by 1-based strand pairs (a < b).
/// Throws std::invalid_argument for non-pure words.
std::map<std::pair<int, int>, long> linking_numbers(const BraidWord& w);

/// xi_ij = (s_{j-1} ... s_{i+1}) s_i^2 (s_{i+1}^-1 ... s_{j-1}^-1), 1 <= i < j <= n.
BraidWord pure_braid_generator(int n, int i, int j);

/// Parallel r-cabling B_n -> B_{nr}; each letter becomes an r^2-letter block
/// crossing. Throws std::invalid_argument for r < 1.
BraidWord cable_word(const BraidWord& w, int r);

/// Freely reduced word in the free group on x_1..x_rank (signed indices).
class FreeGroupWord {
 public:
  FreeGroupWord() = default;
  FreeGroupWord(int rank, std::vector<int> letters);
  static FreeGroupWord generator(int rank, int i) { return FreeGroupWord(rank, {i}); }

  int rank() const { return rank_; }
  const std::vector<int>& letters() const { return letters_; }
  std::size_t length() const { return letters_.size(); }
  FreeGroupWord inverse() const;
  /// Reduced product.
  friend FreeGroupWord operator*(const FreeGroupWord& a, const FreeGroupWord& b);
  friend bool operator==(const FreeGroupWord& a, const FreeGroupWord& b) {
    return a.rank_ == b.rank_ && a.letters_ == b.letters_;
  }

 private:
  int rank_ = 0;
  std::vector<int> letters_;
};

/// Images of x_1..x_n under the Artin automorphism of w, computed
/// explicitly. Throws std::length_error when the total image length exceeds
/// max_letters (images can grow exponentially with the word length).
std::vector<FreeGroupWord> artin_action(const BraidWord& w, std::size_t max_letters = 50'000'000);

/// True iff w is the trivial braid, decided through the (faithful) Artin
/// action on the free group. Nontriviality is certified by a homomorphic
/// image of F_n in GL_2(F_p) on which the action already differs; the
/// trivial verdict is confirmed on explicit free-group words.
bool artin_action_is_trivial(const BraidWord& w);

/// Bigelow's element beta = [g, delta5] of B_5, g = psi2 psi1^-1 s4 psi1 psi2^-1,
/// freely reduced.
BraidWord bigelow_element();

}  // namespace braidcable
