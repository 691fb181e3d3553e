#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "oracles.hpp"

using namespace braidcable;

namespace {

const LaurentPoly q = LaurentPoly::q();
const LaurentPoly qi = LaurentPoly::q(-1);
const LaurentPoly zero;
const LaurentPoly one(1);

QMatrix perm_matrix_of_swap(int n, int i, int j) {
  QMatrix m = QMatrix::identity(static_cast<std::size_t>(n));
  const auto a = static_cast<std::size_t>(i - 1), b = static_cast<std::size_t>(j - 1);
  m(a, a) = m(b, b) = 0;
  m(a, b) = m(b, a) = 1;
  return m;
}

std::vector<Rational> act(const QMatrix& m, const std::vector<Rational>& v) {
  std::vector<Rational> out(m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) out[i] += m(i, j) * v[j];
  }
  return out;
}

// e_s^i in Q^{nr}, 1-based block and offset.
std::vector<Rational> basis(int n, int r, int i, int s) {
  std::vector<Rational> v(static_cast<std::size_t>(n * r));
  v[static_cast<std::size_t>(r * (i - 1) + s - 1)] = 1;
  return v;
}

std::vector<Rational> axpy(std::vector<Rational> a, const Rational& c, const std::vector<Rational>& b) {
  for (std::size_t k = 0; k < a.size(); ++k) a[k] += c * b[k];
  return a;
}

std::vector<GeneratorRep> assorted_reps(int n) {
  return {burau_rep(n),
          sym_rep(n),
          frame(burau_rep(n), LaurentPoly::monomial(Rational(-1), 3)),
          twist(sym_rep(n), -2),
          twist(burau_rep(n), 3),
          direct_sum({burau_rep(n), frame(twist(sym_rep(n), 2), LaurentPoly::q(4))})};
}

}  // namespace

TEST_CASE("burau_rep") {
  const GeneratorRep b2 = burau_rep(2);
  CHECK(b2.image(1) == LaurentMatrix{{q - qi, q}, {qi, zero}});
  const GeneratorRep b3 = burau_rep(3);
  CHECK(determinant(b3.image(1)) == -q);
  CHECK(b3.image(2) == LaurentMatrix{{q, zero, zero}, {zero, q - qi, q}, {zero, qi, zero}});
  CHECK(oracle::eval_at(b3.image(1), Rational(1)) == perm_matrix_of_swap(3, 1, 2));
  CHECK_THROWS_AS(burau_rep(1), std::invalid_argument);
}

TEST_CASE("Hecke relation and determinant of Burau generators") {
  for (int n = 2; n <= 6; ++n) {
    const GeneratorRep rep = burau_rep(n);
    const auto dim = static_cast<std::size_t>(n);
    for (int i = 1; i < n; ++i) {
      const LaurentMatrix& m = rep.image(i);
      const LaurentMatrix lhs =
          (m - LaurentMatrix::identity(dim).scaled(q)) * (m + LaurentMatrix::identity(dim).scaled(qi));
      CHECK(lhs.is_zero_matrix());
      CHECK(oracle::leibniz_det(m) == LaurentPoly::monomial(Rational(-1), n - 2));
    }
  }
}

TEST_CASE("sym_rep") {
  CHECK(sym_rep(2).image(1) == LaurentMatrix{{zero, q}, {q, zero}});
  const LaurentMatrix sq = sym_rep(3).image(1) * sym_rep(3).image(1);
  CHECK(sq == LaurentMatrix{{q * q, zero, zero}, {zero, q * q, zero}, {zero, zero, one}});
  for (int n = 2; n <= 5; ++n) {
    for (int i = 1; i < n; ++i) CHECK(oracle::eval_at(sym_rep(n).image(i), Rational(1)) == perm_matrix_of_swap(n, i, i + 1));
  }
}

TEST_CASE("sym_rep kills commutators of pure braids") {
  for (int n = 3; n <= 4; ++n) {
    const GeneratorRep rep = sym_rep(n);
    std::vector<LaurentMatrix> xis;
    for (int i = 1; i <= n; ++i) {
      for (int j = i + 1; j <= n; ++j) xis.push_back(eval_word(rep, pure_braid_generator(n, i, j)));
    }
    for (const auto& a : xis) {
      for (const auto& b : xis) CHECK(a * b == b * a);
    }
  }
  const BraidWord x12 = pure_braid_generator(3, 1, 2), x23 = pure_braid_generator(3, 2, 3);
  CHECK(is_identity(eval_word(sym_rep(3), x12 * x23 * x12.inverse() * x23.inverse())));
  CHECK_FALSE(is_identity(eval_word(burau_rep(3), x12 * x23 * x12.inverse() * x23.inverse())));
}

TEST_CASE("frame, twist, direct_sum") {
  CHECK(frame(burau_rep(2), one).image(1) == burau_rep(2).image(1));
  CHECK(frame(sym_rep(2), LaurentPoly::q(2)).image(1) == LaurentMatrix{{zero, LaurentPoly::q(3)}, {LaurentPoly::q(3), zero}});
  CHECK_THROWS_AS(frame(sym_rep(2), q + one), std::invalid_argument);
  CHECK(twist(burau_rep(2), 2).image(1) ==
        LaurentMatrix{{LaurentPoly::q(2) - LaurentPoly::q(-2), LaurentPoly::q(2)}, {LaurentPoly::q(-2), zero}});
  CHECK(twist(sym_rep(2), -1).image(1) == LaurentMatrix{{zero, qi}, {qi, zero}});
  CHECK(twist(burau_rep(3), 1).images() == burau_rep(3).images());
  CHECK_THROWS_AS(twist(sym_rep(2), 0), std::invalid_argument);
  CHECK(direct_sum({burau_rep(3)}).images() == burau_rep(3).images());

  const GeneratorRep s = direct_sum({burau_rep(2), sym_rep(2)});
  CHECK(s.dim() == 4);
  CHECK(s.image(1)(0, 2).is_zero());
  CHECK(s.image(1)(2, 3) == q);
  CHECK(determinant(s.image(1)) == determinant(burau_rep(2).image(1)) * determinant(sym_rep(2).image(1)));

  const LaurentPoly a = LaurentPoly::monomial(Rational(-2), 3);
  for (int n = 2; n <= 4; ++n) {
    const GeneratorRep r = burau_rep(n);
    CHECK(determinant(frame(r, a).image(1)) == a.pow(static_cast<unsigned>(n)) * determinant(r.image(1)));
    CHECK(twist(twist(r, 2), -3).images() == twist(r, -6).images());
    const GeneratorRep lhs = frame(twist(direct_sum({r, sym_rep(n)}), 2), a);
    const GeneratorRep rhs = direct_sum({frame(twist(r, 2), a), frame(twist(sym_rep(n), 2), a)});
    CHECK(lhs.images() == rhs.images());
    CHECK(lhs.inverse_images() == rhs.inverse_images());
  }
}

TEST_CASE("braid relations and inverses hold for built representations") {
  for (int n = 2; n <= 5; ++n) {
    for (const auto& rep : assorted_reps(n)) {
      CHECK(satisfies_braid_relations(rep));
      for (int i = 1; i < n; ++i) CHECK(is_identity(rep.image(i) * rep.letter_image(-i)));
    }
  }
  const LaurentMatrix bad{{q, zero}, {zero, one}};
  CHECK_FALSE(satisfies_braid_relations(GeneratorRep(3, {bad, LaurentMatrix{{one, zero}, {zero, q}}}, "bad")));
  CHECK_THROWS_AS(GeneratorRep(2, {LaurentMatrix{{q + one}}}, "x"), std::invalid_argument);
}

TEST_CASE("eval_word") {
  CHECK(is_identity(eval_word(sym_rep(3), BraidWord(3, {}))));
  CHECK(is_identity(eval_word(burau_rep(5), bigelow_element())));
  const LaurentMatrix twist3 = eval_word(burau_rep(3), BraidWord(3, {1, 2, 1, 2, 1, 2}));
  CHECK(determinant(twist3) == LaurentPoly::q(6));
  CHECK_THROWS_AS(eval_word(burau_rep(3), BraidWord(4, {1})), std::invalid_argument);

  std::mt19937_64 rng(3);
  std::uniform_int_distribution<int> gen(1, 3), coin(0, 1);
  for (int k = 0; k < 20; ++k) {
    std::vector<int> la, lb;
    for (int j = 0; j < 6; ++j) la.push_back(coin(rng) ? gen(rng) : -gen(rng));
    for (int j = 0; j < 6; ++j) lb.push_back(coin(rng) ? gen(rng) : -gen(rng));
    const BraidWord a(4, la), b(4, lb);
    const GeneratorRep rep = direct_sum({burau_rep(4), sym_rep(4)});
    CHECK(eval_word(rep, a * b) == eval_word(rep, a) * eval_word(rep, b));
    // Word order: specializing q is a morphism, so the q = 2 product matches.
    QMatrix prod = QMatrix::identity(8);
    const BraidWord ab = a * b;
    for (int l : ab.letters()) prod = prod * oracle::eval_at(rep.letter_image(l), Rational(2));
    CHECK(oracle::eval_at(eval_word(rep, a * b), Rational(2)) == prod);
    const std::uint64_t at = 987654321;
    CHECK(eval_word_mod(rep, a * b, at) == modp::ModMatrix::from_laurent(eval_word(rep, a * b), at));
  }
  CHECK(evaluates_to_identity(burau_rep(3), BraidWord(3, {1, 2, 1, -2, -1, -2})));
  CHECK_FALSE(evaluates_to_identity(burau_rep(3), pure_braid_generator(3, 1, 3)));
}

TEST_CASE("full twist acts faithfully on the center") {
  for (int n = 3; n <= 5; ++n) {
    const LaurentPoly det = determinant(eval_word(burau_rep(n), full_twist(n)));
    CHECK(det == LaurentPoly::q(n * (n - 1) * (n - 2)));
    CHECK(det != one);
  }
}

TEST_CASE("representation descriptors") {
  CHECK(parse_rep_descriptor("burau", 3).images() == burau_rep(3).images());
  CHECK(parse_rep_descriptor(" sym ", 3).images() == sym_rep(3).images());
  CHECK(parse_rep_descriptor("burau,twist=2,frame=q^2", 3).images() ==
        frame(twist(burau_rep(3), 2), LaurentPoly::q(2)).images());
  CHECK(parse_rep_descriptor("sym,frame=-q,twist=-1", 2).images() ==
        twist(frame(sym_rep(2), -q), -1).images());
  CHECK(parse_rep_descriptor("sum=[burau;sym,twist=-2]", 3).images() ==
        direct_sum({burau_rep(3), twist(sym_rep(3), -2)}).images());
  CHECK(parse_rep_descriptor("sum=[burau;sum=[sym;sym]],frame=q", 2).dim() == 6);
  CHECK_THROWS_AS(parse_rep_descriptor("lk", 3), std::invalid_argument);
  CHECK_THROWS_AS(parse_rep_descriptor("burau,frame=q+1", 3), std::invalid_argument);
  CHECK_THROWS_AS(parse_rep_descriptor("burau,twist=0", 3), std::invalid_argument);
  CHECK_THROWS_AS(parse_rep_descriptor("burau,color=red", 3), std::invalid_argument);
  CHECK_THROWS_AS(parse_rep_descriptor("sum=[burau;sym", 3), std::invalid_argument);
  CHECK_THROWS_AS(parse_rep_descriptor("", 3), std::invalid_argument);
}

TEST_CASE("inf_burau and inf_sym") {
  CHECK(inf_burau(2).chord(1, 2) == QMatrix{{0, 1}, {1, 0}});
  CHECK(inf_burau(3).chord(1, 3) == perm_matrix_of_swap(3, 1, 3));
  CHECK(inf_burau(3).chord(3, 1) == inf_burau(3).chord(1, 3));
  const InfRep b3 = inf_burau(3);
  CHECK(b3.perm_images[0] * b3.chord(1, 3) * b3.perm_images[0] == b3.chord(2, 3));
  CHECK(inf_sym(2).chord(1, 2) == QMatrix::identity(2));
  CHECK(inf_sym(3).chord(1, 3) == QMatrix{{1, 0, 0}, {0, 0, 0}, {0, 0, 1}});
  const InfRep s3 = inf_sym(3);
  CHECK(s3.chord(1, 2) * s3.chord(2, 3) == s3.chord(2, 3) * s3.chord(1, 2));
  CHECK_THROWS_AS(inf_burau(1), std::invalid_argument);
  CHECK_THROWS_AS(inf_sym(1), std::invalid_argument);
  CHECK_THROWS(b3.chord(2, 2));
}

TEST_CASE("inf_shift and inf_scale") {
  const InfRep b2 = inf_burau(2);
  CHECK(inf_shift(b2, 0).chord(1, 2) == b2.chord(1, 2));
  CHECK(inf_shift(b2, 2).chord(1, 2) == QMatrix{{2, 1}, {1, 2}});
  CHECK(inf_scale(b2, 1).chord(1, 2) == b2.chord(1, 2));
  CHECK(inf_scale(b2, 3).chord(1, 2) == QMatrix{{0, 3}, {3, 0}});
  CHECK_THROWS_AS(inf_scale(b2, 0), std::invalid_argument);
  for (int n = 2; n <= 4; ++n) {
    CHECK(check_infinitesimal_relations(inf_shift(inf_burau(n), Rational(5, 3))).ok);
    CHECK(check_infinitesimal_relations(inf_scale(inf_sym(n), Rational(-7, 2))).ok);
    CHECK(check_infinitesimal_relations(inf_direct_sum({inf_burau(n), inf_sym(n)})).ok);
  }
}

TEST_CASE("check_infinitesimal_relations") {
  for (int n = 2; n <= 5; ++n) {
    CHECK(check_infinitesimal_relations(inf_burau(n)).ok);
    CHECK(check_infinitesimal_relations(inf_sym(n)).ok);
  }
  InfRep bad = inf_burau(3);
  bad.chord_images[{1, 2}] = QMatrix{{0, 1, 0}, {0, 0, 0}, {0, 0, 0}};
  const RelationCheck c = check_infinitesimal_relations(bad);
  CHECK_FALSE(c.ok);
  CHECK(c.witness == "[t_12, t_13+t_23] != 0");

  InfRep bad_perm = inf_sym(3);
  bad_perm.perm_images[0] = QMatrix::identity(3);
  CHECK_FALSE(check_infinitesimal_relations(bad_perm).ok);
}

TEST_CASE("inf_cable_pullback reproduces the cabled chord action") {
  // t_ij e_s^i = sum_t e_t^j + r(r-1) e_s^i; t_ij e_s^k = r^2 e_s^k for k != i, j.
  for (int n = 2; n <= 4; ++n) {
    for (int r = 1; r <= 3; ++r) {
      const InfRep rho = inf_cable_pullback(inf_burau(n * r), n, r);
      CHECK(check_infinitesimal_relations(rho).ok);
      for (int i = 1; i <= n; ++i) {
        for (int j = 1; j <= n; ++j) {
          if (i == j) continue;
          for (int s = 1; s <= r; ++s) {
            std::vector<Rational> expect = basis(n, r, i, s);
            for (auto& x : expect) x *= r * (r - 1);
            for (int t = 1; t <= r; ++t) expect = axpy(expect, 1, basis(n, r, j, t));
            CHECK(act(rho.chord(i, j), basis(n, r, i, s)) == expect);
            for (int k = 1; k <= n; ++k) {
              if (k == i || k == j) continue;
              std::vector<Rational> e = basis(n, r, k, s);
              std::vector<Rational> scaled = e;
              for (auto& x : scaled) x *= r * r;
              CHECK(act(rho.chord(i, j), e) == scaled);
            }
          }
        }
      }
    }
  }
  const InfRep rho = inf_cable_pullback(inf_burau(4), 2, 2);
  const auto k = axpy(basis(2, 2, 1, 1), -1, basis(2, 2, 1, 2));
  std::vector<Rational> twice = k;
  for (auto& x : twice) x *= 2;
  CHECK(act(rho.chord(1, 2), k) == twice);
  CHECK_THROWS_AS(inf_cable_pullback(inf_burau(5), 2, 2), std::invalid_argument);
}
