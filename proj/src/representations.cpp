#include "braidcable/representations.hpp"

#include <algorithm>
#include <random>
#include <sstream>
#include <stdexcept>

namespace braidcable {

namespace {

void require_strands(int n) {
  if (n < 2) throw std::invalid_argument("representation needs n >= 2 strands");
}

LaurentMatrix laurent_from_ratfunc(const RatFuncMatrix& m) {
  return m.map([](const RatFunc& f) {
    if (!f.is_laurent()) throw std::invalid_argument("generator image is not invertible over Q[q, q^-1]");
    return f.num();
  });
}

LaurentMatrix scalar_diagonal(std::size_t n, const LaurentPoly& d) { return LaurentMatrix::identity(n, d); }

// Block image: diag(fill) with the 2x2 block placed at rows/cols k-1, k.
LaurentMatrix with_block(std::size_t n, int k, const LaurentPoly& fill, const LaurentMatrix& block) {
  LaurentMatrix m = scalar_diagonal(n, fill);
  const auto a = static_cast<std::size_t>(k - 1);
  for (std::size_t i = 0; i < 2; ++i) {
    for (std::size_t j = 0; j < 2; ++j) m(a + i, a + j) = block(i, j);
  }
  return m;
}

std::string trim(std::string_view s) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return std::string(s.substr(b, e - b));
}

std::vector<std::string> split_top_level(std::string_view s, char sep) {
  std::vector<std::string> parts;
  int depth = 0;
  std::size_t start = 0;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] == '[') ++depth;
    if (s[i] == ']') --depth;
    if (depth < 0) throw std::invalid_argument("unbalanced brackets in descriptor");
    if (s[i] == sep && depth == 0) {
      parts.push_back(trim(s.substr(start, i - start)));
      start = i + 1;
    }
  }
  if (depth != 0) throw std::invalid_argument("unbalanced brackets in descriptor");
  parts.push_back(trim(s.substr(start)));
  return parts;
}

std::string chord_name(int i, int j) { return "t_" + std::to_string(i) + std::to_string(j); }

}  // namespace

GeneratorRep::GeneratorRep(int strands, std::vector<LaurentMatrix> images, std::string label)
    : strands_(strands), dim_(0), images_(std::move(images)), label_(std::move(label)) {
  if (strands_ < 1) throw std::invalid_argument("representation needs at least one strand");
  if (images_.size() != static_cast<std::size_t>(strands_ - 1)) {
    throw std::invalid_argument("need one image per Artin generator");
  }
  dim_ = images_.empty() ? 0 : images_.front().rows();
  inverses_.reserve(images_.size());
  for (const auto& m : images_) {
    if (!m.is_square() || m.rows() != dim_) throw std::invalid_argument("generator images must share one square size");
    inverses_.push_back(laurent_from_ratfunc(inverse(m)));
  }
}

GeneratorRep::GeneratorRep(int strands, std::vector<LaurentMatrix> images, std::vector<LaurentMatrix> inverses,
                           std::string label)
    : strands_(strands),
      dim_(images.empty() ? 0 : images.front().rows()),
      images_(std::move(images)),
      inverses_(std::move(inverses)),
      label_(std::move(label)) {
  if (images_.size() != static_cast<std::size_t>(strands_ - 1) || inverses_.size() != images_.size()) {
    throw std::invalid_argument("need one image and one inverse per Artin generator");
  }
}

const LaurentMatrix& GeneratorRep::letter_image(int letter) const {
  if (letter == 0 || std::abs(letter) >= strands_) throw std::out_of_range("letter out of range");
  const auto k = static_cast<std::size_t>(std::abs(letter) - 1);
  return letter > 0 ? images_[k] : inverses_[k];
}

GeneratorRep burau_rep(int n) {
  require_strands(n);
  const auto dim = static_cast<std::size_t>(n);
  const LaurentPoly q = LaurentPoly::q(), qi = LaurentPoly::q(-1);
  const LaurentMatrix block{{q - qi, q}, {qi, LaurentPoly()}};
  const LaurentMatrix block_inv{{LaurentPoly(), q}, {qi, qi - q}};
  std::vector<LaurentMatrix> images, inverses;
  for (int k = 1; k < n; ++k) {
    images.push_back(with_block(dim, k, q, block));
    inverses.push_back(with_block(dim, k, qi, block_inv));
  }
  return GeneratorRep(n, std::move(images), std::move(inverses), "burau");
}

GeneratorRep sym_rep(int n) {
  require_strands(n);
  const auto dim = static_cast<std::size_t>(n);
  const LaurentPoly q = LaurentPoly::q(), qi = LaurentPoly::q(-1);
  const LaurentMatrix block{{LaurentPoly(), q}, {q, LaurentPoly()}};
  const LaurentMatrix block_inv{{LaurentPoly(), qi}, {qi, LaurentPoly()}};
  std::vector<LaurentMatrix> images, inverses;
  for (int k = 1; k < n; ++k) {
    images.push_back(with_block(dim, k, LaurentPoly(1), block));
    inverses.push_back(with_block(dim, k, LaurentPoly(1), block_inv));
  }
  return GeneratorRep(n, std::move(images), std::move(inverses), "sym");
}

GeneratorRep frame(const GeneratorRep& rep, const LaurentPoly& a) {
  if (!a.is_unit()) throw std::invalid_argument("framing needs a unit c*q^k, got " + a.to_string());
  const LaurentPoly a_inv = LaurentPoly::monomial(1 / a.trailing_coeff(), -a.low_degree());
  std::vector<LaurentMatrix> images, inverses;
  for (const auto& m : rep.images()) images.push_back(m.scaled(a));
  for (const auto& m : rep.inverse_images()) inverses.push_back(m.scaled(a_inv));
  return GeneratorRep(rep.strands(), std::move(images), std::move(inverses),
                      "(" + a.to_string() + ")*" + rep.label());
}

GeneratorRep twist(const GeneratorRep& rep, int r) {
  if (r == 0) throw std::invalid_argument("twisting needs r != 0");
  auto sub = [r](const LaurentPoly& p) { return p.substitute_power(r); };
  std::vector<LaurentMatrix> images, inverses;
  for (const auto& m : rep.images()) images.push_back(m.map(sub));
  for (const auto& m : rep.inverse_images()) inverses.push_back(m.map(sub));
  return GeneratorRep(rep.strands(), std::move(images), std::move(inverses),
                      rep.label() + "^{q^" + std::to_string(r) + "}");
}

GeneratorRep direct_sum(const std::vector<GeneratorRep>& reps) {
  if (reps.empty()) throw std::invalid_argument("direct sum of no representations");
  const int n = reps.front().strands();
  std::string label;
  for (const auto& r : reps) {
    if (r.strands() != n) throw std::invalid_argument("direct sum needs equal strand counts");
    label += (label.empty() ? "" : " (+) ") + r.label();
  }
  std::vector<LaurentMatrix> images, inverses;
  for (std::size_t k = 0; k + 1 < static_cast<std::size_t>(n); ++k) {
    std::vector<LaurentMatrix> blocks, inv_blocks;
    for (const auto& r : reps) {
      blocks.push_back(r.images()[k]);
      inv_blocks.push_back(r.inverse_images()[k]);
    }
    images.push_back(direct_sum(blocks));
    inverses.push_back(direct_sum(inv_blocks));
  }
  return GeneratorRep(n, std::move(images), std::move(inverses), reps.size() == 1 ? label : "[" + label + "]");
}

LaurentMatrix eval_word(const GeneratorRep& rep, const BraidWord& w) {
  if (w.strands() != rep.strands()) throw std::invalid_argument("word and representation strand counts differ");
  LaurentMatrix m = LaurentMatrix::identity(rep.dim());
  const BraidWord reduced = w.freely_reduced();
  for (int l : reduced.letters()) m = m * rep.letter_image(l);
  return m;
}

modp::ModMatrix eval_word_mod(const GeneratorRep& rep, const BraidWord& w, std::uint64_t at) {
  if (w.strands() != rep.strands()) throw std::invalid_argument("word and representation strand counts differ");
  std::vector<modp::ModMatrix> gens, invs;
  for (const auto& m : rep.images()) gens.push_back(modp::ModMatrix::from_laurent(m, at));
  for (const auto& m : rep.inverse_images()) invs.push_back(modp::ModMatrix::from_laurent(m, at));
  modp::ModMatrix acc = modp::ModMatrix::identity(rep.dim());
  const BraidWord reduced = w.freely_reduced();
  for (int l : reduced.letters()) {
    const auto k = static_cast<std::size_t>(std::abs(l) - 1);
    acc = acc * (l > 0 ? gens[k] : invs[k]);
  }
  return acc;
}

bool evaluates_to_identity(const GeneratorRep& rep, const BraidWord& w) {
  std::mt19937_64 rng(0xb1a5ULL + w.length());
  for (int trial = 0; trial < 3; ++trial) {
    if (!eval_word_mod(rep, w, modp::random_unit(rng)).is_identity()) return false;
  }
  return is_identity(eval_word(rep, w));
}

bool satisfies_braid_relations(const GeneratorRep& rep) {
  const auto& g = rep.images();
  for (std::size_t i = 0; i < g.size(); ++i) {
    if (!is_identity(g[i] * rep.inverse_images()[i])) return false;
    for (std::size_t j = i + 1; j < g.size(); ++j) {
      if (j == i + 1) {
        if (g[i] * g[j] * g[i] != g[j] * g[i] * g[j]) return false;
      } else if (g[i] * g[j] != g[j] * g[i]) {
        return false;
      }
    }
  }
  return true;
}

GeneratorRep parse_rep_descriptor(std::string_view text, int n) {
  const std::string s = trim(text);
  if (s.empty()) throw std::invalid_argument("empty representation descriptor");
  std::optional<GeneratorRep> rep;
  std::vector<std::string> modifiers;
  if (s.rfind("sum=[", 0) == 0) {
    std::size_t depth = 0, close = std::string::npos;
    for (std::size_t i = 4; i < s.size(); ++i) {
      if (s[i] == '[') ++depth;
      if (s[i] == ']' && --depth == 0) {
        close = i;
        break;
      }
    }
    if (close == std::string::npos) throw std::invalid_argument("unterminated sum=[...] in descriptor");
    std::vector<GeneratorRep> parts;
    for (const auto& part : split_top_level(std::string_view(s).substr(5, close - 5), ';')) {
      parts.push_back(parse_rep_descriptor(part, n));
    }
    rep = direct_sum(parts);
    const std::string rest = trim(std::string_view(s).substr(close + 1));
    if (!rest.empty()) {
      if (rest[0] != ',') throw std::invalid_argument("expected ',' after sum=[...]");
      modifiers = split_top_level(std::string_view(rest).substr(1), ',');
    }
  } else {
    auto tokens = split_top_level(s, ',');
    if (tokens[0] == "burau") {
      rep = burau_rep(n);
    } else if (tokens[0] == "sym") {
      rep = sym_rep(n);
    } else {
      throw std::invalid_argument("unknown representation '" + tokens[0] + "' (expected burau, sym or sum=[...])");
    }
    modifiers.assign(tokens.begin() + 1, tokens.end());
  }
  for (const auto& token : modifiers) {
    const auto eq = token.find('=');
    if (eq == std::string::npos) throw std::invalid_argument("modifier without '=': " + token);
    const std::string key = trim(std::string_view(token).substr(0, eq));
    const std::string value = trim(std::string_view(token).substr(eq + 1));
    if (key == "twist") {
      std::size_t used = 0;
      int r = 0;
      try {
        r = std::stoi(value, &used);
      } catch (const std::exception&) {
        throw std::invalid_argument("bad twist exponent: " + value);
      }
      if (used != value.size()) throw std::invalid_argument("bad twist exponent: " + value);
      rep = twist(*rep, r);
    } else if (key == "frame") {
      rep = frame(*rep, parse_laurent(value));
    } else {
      throw std::invalid_argument("unknown modifier: " + key);
    }
  }
  return *rep;
}

// ---------------------------------------------------------------------------

QMatrix permutation_matrix(const Permutation& p) {
  QMatrix m(p.size(), p.size());
  for (std::size_t i = 0; i < p.size(); ++i) m(static_cast<std::size_t>(p[i]), i) = 1;
  return m;
}

const QMatrix& InfRep::chord(int i, int j) const {
  if (i > j) std::swap(i, j);
  auto it = chord_images.find({i, j});
  if (it == chord_images.end()) throw std::out_of_range("no chord " + chord_name(i, j));
  return it->second;
}

QMatrix InfRep::permutation_image(const Permutation& p) const {
  // Bubble-sort p to the identity; the swaps, replayed in reverse, spell a
  // word whose composite transposition product is p.
  Permutation arr = p;
  std::vector<std::size_t> swaps;
  for (std::size_t pass = 0; pass < arr.size(); ++pass) {
    for (std::size_t k = 0; k + 1 < arr.size(); ++k) {
      if (arr[k] > arr[k + 1]) {
        std::swap(arr[k], arr[k + 1]);
        swaps.push_back(k);
      }
    }
  }
  QMatrix m = QMatrix::identity(dim);
  for (auto it = swaps.rbegin(); it != swaps.rend(); ++it) m = m * perm_images.at(*it);
  return m;
}

namespace {

Permutation transposition(int n, int i, int j) {
  Permutation p(static_cast<std::size_t>(n));
  for (int k = 0; k < n; ++k) p[static_cast<std::size_t>(k)] = k;
  std::swap(p[static_cast<std::size_t>(i - 1)], p[static_cast<std::size_t>(j - 1)]);
  return p;
}

InfRep with_permutation_images(int n, std::string label) {
  InfRep rho;
  rho.strands = n;
  rho.dim = static_cast<std::size_t>(n);
  rho.label = std::move(label);
  for (int k = 1; k < n; ++k) rho.perm_images.push_back(permutation_matrix(transposition(n, k, k + 1)));
  return rho;
}

}  // namespace

InfRep inf_burau(int n) {
  require_strands(n);
  InfRep rho = with_permutation_images(n, "rho_bur");
  for (int i = 1; i <= n; ++i) {
    for (int j = i + 1; j <= n; ++j) rho.chord_images[{i, j}] = permutation_matrix(transposition(n, i, j));
  }
  return rho;
}

InfRep inf_sym(int n) {
  require_strands(n);
  InfRep rho = with_permutation_images(n, "rho_sym");
  for (int i = 1; i <= n; ++i) {
    for (int j = i + 1; j <= n; ++j) {
      QMatrix m(rho.dim, rho.dim);
      m(static_cast<std::size_t>(i - 1), static_cast<std::size_t>(i - 1)) = 1;
      m(static_cast<std::size_t>(j - 1), static_cast<std::size_t>(j - 1)) = 1;
      rho.chord_images[{i, j}] = std::move(m);
    }
  }
  return rho;
}

InfRep inf_shift(const InfRep& rho, const Rational& v) {
  InfRep out = rho;
  const QMatrix shift = QMatrix::identity(rho.dim, v);
  for (auto& [pair, m] : out.chord_images) m += shift;
  out.label = rho.label.rfind('-', 0) == 0 ? v.get_str() + " - " + rho.label.substr(1)
                                            : v.get_str() + " + " + rho.label;
  return out;
}

InfRep inf_scale(const InfRep& rho, const Rational& b) {
  if (b == 0) throw std::invalid_argument("scaling by zero is degenerate");
  InfRep out = rho;
  for (auto& [pair, m] : out.chord_images) m = m.scaled(b);
  out.label = b.get_str() + "*" + rho.label;
  return out;
}

InfRep inf_direct_sum(const std::vector<InfRep>& reps) {
  if (reps.empty()) throw std::invalid_argument("direct sum of no representations");
  InfRep out;
  out.strands = reps.front().strands;
  for (const auto& r : reps) {
    if (r.strands != out.strands) throw std::invalid_argument("direct sum needs equal strand counts");
    out.dim += r.dim;
    out.label += (out.label.empty() ? "" : " (+) ") + (reps.size() == 1 ? r.label : "(" + r.label + ")");
  }
  for (std::size_t k = 0; k + 1 < static_cast<std::size_t>(out.strands); ++k) {
    std::vector<QMatrix> blocks;
    for (const auto& r : reps) blocks.push_back(r.perm_images[k]);
    out.perm_images.push_back(direct_sum(blocks));
  }
  for (const auto& [pair, m] : reps.front().chord_images) {
    std::vector<QMatrix> blocks;
    for (const auto& r : reps) blocks.push_back(r.chord(pair.first, pair.second));
    out.chord_images[pair] = direct_sum(blocks);
  }
  return out;
}

InfRep inf_cable_pullback(const InfRep& rho, int n, int r) {
  if (n < 1 || r < 1 || rho.strands != n * r) {
    throw std::invalid_argument("cable pullback needs a representation on n*r strands");
  }
  InfRep out;
  out.strands = n;
  out.dim = rho.dim;
  out.label = "cable" + std::to_string(r) + "(" + rho.label + ")";
  for (int k = 1; k < n; ++k) {
    out.perm_images.push_back(rho.permutation_image(underlying_permutation(cable_word(BraidWord(n, {k}), r))));
  }
  for (int i = 1; i <= n; ++i) {
    for (int j = i + 1; j <= n; ++j) {
      QMatrix m(rho.dim, rho.dim);
      for (int a = r * (i - 1) + 1; a <= r * i; ++a) {
        for (int b = r * (j - 1) + 1; b <= r * j; ++b) m += rho.chord(a, b);
      }
      out.chord_images[{i, j}] = std::move(m);
    }
  }
  return out;
}

InfRep inf_conjugate(const InfRep& rho, const QMatrix& p) {
  const QMatrix p_inv = inverse(p);
  InfRep out = rho;
  for (auto& m : out.perm_images) m = p_inv * m * p;
  for (auto& [pair, m] : out.chord_images) m = p_inv * m * p;
  return out;
}

RelationCheck check_infinitesimal_relations(const InfRep& rho) {
  const int n = rho.strands;
  auto fail = [](std::string w) { return RelationCheck{false, std::move(w)}; };
  auto commutes = [](const QMatrix& a, const QMatrix& b) { return a * b == b * a; };

  // [t_jk, t_ij + t_ik] = 0 for distinct i, j, k
  for (int j = 1; j <= n; ++j) {
    for (int k = j + 1; k <= n; ++k) {
      for (int i = 1; i <= n; ++i) {
        if (i == j || i == k) continue;
        if (!commutes(rho.chord(j, k), rho.chord(i, j) + rho.chord(i, k))) {
          return fail("[" + chord_name(j, k) + ", " + chord_name(std::min(i, j), std::max(i, j)) + "+" +
                      chord_name(std::min(i, k), std::max(i, k)) + "] != 0");
        }
      }
    }
  }
  // [t_ij, t_kl] = 0 for distinct i, j, k, l
  for (const auto& [p1, m1] : rho.chord_images) {
    for (const auto& [p2, m2] : rho.chord_images) {
      if (!(p1 < p2)) continue;
      if (p1.first == p2.first || p1.first == p2.second || p1.second == p2.first || p1.second == p2.second) continue;
      if (!commutes(m1, m2)) {
        return fail("[" + chord_name(p1.first, p1.second) + ", " + chord_name(p2.first, p2.second) + "] != 0");
      }
    }
  }
  // Symmetric group relations.
  const QMatrix id = QMatrix::identity(rho.dim);
  for (std::size_t a = 0; a < rho.perm_images.size(); ++a) {
    const QMatrix& s = rho.perm_images[a];
    const std::string sa = "s_" + std::to_string(a + 1);
    if (s * s != id) return fail(sa + "^2 != 1");
    for (std::size_t b = a + 1; b < rho.perm_images.size(); ++b) {
      const QMatrix& t = rho.perm_images[b];
      const std::string sb = "s_" + std::to_string(b + 1);
      if (b == a + 1) {
        if (s * t * s != t * s * t) return fail(sa + sb + sa + " != " + sb + sa + sb);
      } else if (!commutes(s, t)) {
        return fail("[" + sa + ", " + sb + "] != 0");
      }
    }
  }
  // Equivariance s t_ij s^-1 = t_{s(i) s(j)} (s is an involution).
  for (int a = 1; a < n; ++a) {
    const QMatrix& s = rho.perm_images[static_cast<std::size_t>(a - 1)];
    const Permutation p = transposition(n, a, a + 1);
    for (const auto& [pair, m] : rho.chord_images) {
      const int i = p[static_cast<std::size_t>(pair.first - 1)] + 1;
      const int j = p[static_cast<std::size_t>(pair.second - 1)] + 1;
      if (s * m * s != rho.chord(i, j)) {
        return fail("s_" + std::to_string(a) + " " + chord_name(pair.first, pair.second) + " s_" +
                    std::to_string(a) + " != " + chord_name(std::min(i, j), std::max(i, j)));
      }
    }
  }
  return {};
}

}  // namespace braidcable
