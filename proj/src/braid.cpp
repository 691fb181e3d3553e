#include "braidcable/braid.hpp"

#include <algorithm>
#include <array>
#include <cstdlib>
#include <random>
#include <sstream>
#include <stdexcept>

#include "braidcable/modular.hpp"

namespace braidcable {

BraidWord::BraidWord(int strands, std::vector<int> letters) : strands_(strands), letters_(std::move(letters)) {
  if (strands_ < 1) throw std::invalid_argument("a braid needs at least one strand");
  for (int k : letters_) {
    if (k == 0 || std::abs(k) >= strands_) {
      throw std::invalid_argument("letter " + std::to_string(k) + " out of range for B_" + std::to_string(strands_));
    }
  }
}

BraidWord BraidWord::inverse() const {
  std::vector<int> out(letters_.rbegin(), letters_.rend());
  for (int& k : out) k = -k;
  BraidWord w;
  w.strands_ = strands_;
  w.letters_ = std::move(out);
  return w;
}

BraidWord BraidWord::freely_reduced() const {
  BraidWord w;
  w.strands_ = strands_;
  for (int k : letters_) {
    if (!w.letters_.empty() && w.letters_.back() == -k) {
      w.letters_.pop_back();
    } else {
      w.letters_.push_back(k);
    }
  }
  return w;
}

BraidWord& BraidWord::operator*=(const BraidWord& o) {
  if (o.strands_ != strands_) throw std::invalid_argument("cannot multiply braids with different strand counts");
  letters_.insert(letters_.end(), o.letters_.begin(), o.letters_.end());
  return *this;
}

std::string BraidWord::to_string() const {
  std::string out;
  for (std::size_t k = 0; k < letters_.size(); ++k) {
    if (k) out += ' ';
    out += std::to_string(letters_[k]);
  }
  return out;
}

BraidWord parse_braid_word(int strands, std::string_view text) {
  std::istringstream is{std::string(text)};
  std::vector<int> letters;
  std::string tok;
  while (is >> tok) {
    std::size_t used = 0;
    int k = 0;
    try {
      k = std::stoi(tok, &used);
    } catch (const std::exception&) {
      throw std::invalid_argument("bad braid letter: " + tok);
    }
    if (used != tok.size()) throw std::invalid_argument("bad braid letter: " + tok);
    letters.push_back(k);
  }
  return BraidWord(strands, std::move(letters));
}

BraidWord generator_power(int strands, int i, int e) {
  return BraidWord(strands, std::vector<int>(static_cast<std::size_t>(std::abs(e)), e >= 0 ? i : -i));
}

Permutation underlying_permutation(const BraidWord& w) {
  Permutation p(static_cast<std::size_t>(w.strands()));
  for (std::size_t i = 0; i < p.size(); ++i) p[i] = static_cast<int>(i);
  // p <- p o s_k  swaps the images of k-1 and k (0-based).
  for (int k : w.letters()) {
    const auto a = static_cast<std::size_t>(std::abs(k) - 1);
    std::swap(p[a], p[a + 1]);
  }
  return p;
}

bool is_identity_permutation(const Permutation& p) {
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (p[i] != static_cast<int>(i)) return false;
  }
  return true;
}

std::string cycle_string(const Permutation& p) {
  std::vector<bool> seen(p.size(), false);
  std::string out;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (seen[i] || p[i] == static_cast<int>(i)) continue;
    out += '(';
    std::size_t j = i;
    bool first = true;
    while (!seen[j]) {
      seen[j] = true;
      if (!first) out += ' ';
      out += std::to_string(j + 1);
      first = false;
      j = static_cast<std::size_t>(p[j]);
    }
    out += ')';
  }
  return out.empty() ? "()" : out;
}

int exponent_sum(const BraidWord& w) {
  int s = 0;
  for (int k : w.letters()) s += k > 0 ? 1 : -1;
  return s;
}

std::map<std::pair<int, int>, long> linking_numbers(const BraidWord& w) {
  if (!is_identity_permutation(underlying_permutation(w))) {
    throw std::invalid_argument("linking numbers need a pure braid");
  }
  const int n = w.strands();
  // strand_at[pos] = strand currently at position pos
  std::vector<int> strand_at(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) strand_at[static_cast<std::size_t>(i)] = i;
  std::map<std::pair<int, int>, long> twice;
  for (int a = 1; a <= n; ++a) {
    for (int b = a + 1; b <= n; ++b) twice[{a, b}] = 0;
  }
  for (int k : w.letters()) {
    const auto pos = static_cast<std::size_t>(std::abs(k) - 1);
    int s1 = strand_at[pos] + 1, s2 = strand_at[pos + 1] + 1;
    twice[{std::min(s1, s2), std::max(s1, s2)}] += k > 0 ? 1 : -1;
    std::swap(strand_at[pos], strand_at[pos + 1]);
  }
  for (auto& [pair, v] : twice) v /= 2;
  return twice;
}

BraidWord pure_braid_generator(int n, int i, int j) {
  if (!(1 <= i && i < j && j <= n)) {
    throw std::invalid_argument("pure braid generator needs 1 <= i < j <= n");
  }
  std::vector<int> letters;
  for (int k = j - 1; k > i; --k) letters.push_back(k);
  letters.push_back(i);
  letters.push_back(i);
  for (int k = i + 1; k < j; ++k) letters.push_back(-k);
  return BraidWord(n, std::move(letters));
}

BraidWord cable_word(const BraidWord& w, int r) {
  if (r < 1) throw std::invalid_argument("cabling needs r >= 1");
  // Positive block crossing of block i over block i+1: the strands of the
  // right block pass leftwards one at a time.
  auto block = [r](int i) {
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(r * r));
    for (int k = 1; k <= r; ++k) {
      for (int m = r * i + k - 1; m >= r * (i - 1) + k; --m) out.push_back(m);
    }
    return out;
  };
  std::vector<int> letters;
  letters.reserve(w.length() * static_cast<std::size_t>(r * r));
  for (int l : w.letters()) {
    std::vector<int> b = block(std::abs(l));
    if (l < 0) {
      std::reverse(b.begin(), b.end());
      for (int& x : b) x = -x;
    }
    letters.insert(letters.end(), b.begin(), b.end());
  }
  return BraidWord(w.strands() * r, std::move(letters));
}

FreeGroupWord::FreeGroupWord(int rank, std::vector<int> letters) : rank_(rank) {
  for (int x : letters) {
    if (x == 0 || std::abs(x) > rank) throw std::invalid_argument("free group letter out of range");
    if (!letters_.empty() && letters_.back() == -x) {
      letters_.pop_back();
    } else {
      letters_.push_back(x);
    }
  }
}

FreeGroupWord FreeGroupWord::inverse() const {
  FreeGroupWord w;
  w.rank_ = rank_;
  w.letters_.assign(letters_.rbegin(), letters_.rend());
  for (int& x : w.letters_) x = -x;
  return w;
}

FreeGroupWord operator*(const FreeGroupWord& a, const FreeGroupWord& b) {
  FreeGroupWord out;
  out.rank_ = std::max(a.rank_, b.rank_);
  // Cancel the longest suffix of a against the prefix of b.
  std::size_t cancel = 0;
  while (cancel < a.letters_.size() && cancel < b.letters_.size() &&
         a.letters_[a.letters_.size() - 1 - cancel] == -b.letters_[cancel]) {
    ++cancel;
  }
  out.letters_.reserve(a.letters_.size() + b.letters_.size() - 2 * cancel);
  out.letters_.assign(a.letters_.begin(), a.letters_.end() - static_cast<std::ptrdiff_t>(cancel));
  out.letters_.insert(out.letters_.end(), b.letters_.begin() + static_cast<std::ptrdiff_t>(cancel), b.letters_.end());
  return out;
}

namespace {

// Updates images T of the generators to T o phi_l for one Artin letter:
//   sigma_i:    x_i -> x_i x_{i+1} x_i^-1,   x_{i+1} -> x_i
//   sigma_i^-1: x_i -> x_{i+1},              x_{i+1} -> x_{i+1}^-1 x_i x_{i+1}
template <class Elem, class Mul, class Inv>
void apply_artin_letter(std::vector<Elem>& images, int letter, Mul&& mul, Inv&& inv) {
  const auto i = static_cast<std::size_t>(std::abs(letter) - 1);
  Elem a = images[i], b = images[i + 1];
  if (letter > 0) {
    images[i] = mul(mul(a, b), inv(a));
    images[i + 1] = std::move(a);
  } else {
    images[i + 1] = mul(mul(inv(b), a), b);
    images[i] = std::move(b);
  }
}

// GL_2(F_p) element.
using Mat2 = std::array<std::uint64_t, 4>;

Mat2 mat2_mul(const Mat2& x, const Mat2& y) {
  using namespace modp;
  return {add(mul(x[0], y[0]), mul(x[1], y[2])), add(mul(x[0], y[1]), mul(x[1], y[3])),
          add(mul(x[2], y[0]), mul(x[3], y[2])), add(mul(x[2], y[1]), mul(x[3], y[3]))};
}

Mat2 mat2_inv(const Mat2& x) {
  using namespace modp;
  const std::uint64_t d = inv(sub(mul(x[0], x[3]), mul(x[1], x[2])));
  return {mul(x[3], d), mul(sub(0, x[1]), d), mul(sub(0, x[2]), d), mul(x[0], d)};
}

Mat2 random_gl2(std::mt19937_64& rng) {
  for (;;) {
    Mat2 m{modp::random_unit(rng), modp::random_unit(rng), modp::random_unit(rng), modp::random_unit(rng)};
    if (modp::sub(modp::mul(m[0], m[3]), modp::mul(m[1], m[2])) != 0) return m;
  }
}

// True when some homomorphism F_n -> GL_2(F_p) already separates the action
// of w from the identity; this certifies that w is a nontrivial braid.
bool modular_action_separates(const BraidWord& w, int trials) {
  std::mt19937_64 rng(0x5eedb4a1dULL);
  const auto n = static_cast<std::size_t>(w.strands());
  for (int t = 0; t < trials; ++t) {
    std::vector<Mat2> gens(n);
    for (auto& g : gens) g = random_gl2(rng);
    std::vector<Mat2> images = gens;
    for (int l : w.letters()) apply_artin_letter(images, l, mat2_mul, mat2_inv);
    if (images != gens) return true;
  }
  return false;
}

}  // namespace

std::vector<FreeGroupWord> artin_action(const BraidWord& w, std::size_t max_letters) {
  const int n = w.strands();
  std::vector<FreeGroupWord> images;
  for (int i = 1; i <= n; ++i) images.push_back(FreeGroupWord::generator(n, i));
  auto mul = [](const FreeGroupWord& a, const FreeGroupWord& b) { return a * b; };
  auto inv = [](const FreeGroupWord& a) { return a.inverse(); };
  for (int l : w.letters()) {
    apply_artin_letter(images, l, mul, inv);
    std::size_t total = 0;
    for (const auto& x : images) total += x.length();
    if (total > max_letters) throw std::length_error("Artin action images exceed the letter budget");
  }
  return images;
}

bool artin_action_is_trivial(const BraidWord& w) {
  BraidWord reduced = w.freely_reduced();
  if (reduced.empty()) return true;
  if (!is_identity_permutation(underlying_permutation(reduced))) return false;
  if (modular_action_separates(reduced, 4)) return false;
  const auto images = artin_action(reduced);
  for (std::size_t i = 0; i < images.size(); ++i) {
    if (!(images[i] == FreeGroupWord::generator(reduced.strands(), static_cast<int>(i) + 1))) return false;
  }
  return true;
}

BraidWord bigelow_element() {
  const BraidWord psi1(5, {-3, 2, 1, 1, 2, 4, 4, 4, 3, 2});
  const BraidWord psi2(5, {-4, 3, 2, -1, -1, 2, 1, 1, 2, 2, 1, 4, 4, 4, 4, 4});
  const BraidWord delta5(5, {4, 3, 2, 1, 1, 2, 3, 4});
  const BraidWord g = psi2 * psi1.inverse() * BraidWord(5, {4}) * psi1 * psi2.inverse();
  return (g * delta5 * g.inverse() * delta5.inverse()).freely_reduced();
}

}  // namespace braidcable
