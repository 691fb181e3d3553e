#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "oracles.hpp"

using namespace braidcable;

namespace {

const LaurentPoly q = LaurentPoly::q();
const LaurentPoly qi = LaurentPoly::q(-1);

Rational rat(long a, long b = 1) {
  Rational x(a, b);
  x.canonicalize();
  return x;
}

}  // namespace

TEST_CASE("rationals stay canonical") {
  const Rational x = parse_rational("-6/4");
  CHECK(x == rat(-3, 2));
  CHECK(x.get_den() > 0);
  CHECK(to_string(parse_rational("10/5")) == "2");
  CHECK_THROWS_AS(parse_rational("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("abc"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("6/-4"), std::invalid_argument);
}

TEST_CASE("Laurent polynomials store no zero coefficients") {
  const LaurentPoly z = q - q;
  CHECK(z.is_zero());
  CHECK(z.terms().empty());
  const LaurentPoly p = LaurentPoly::from_terms({{-2, Rational(0)}, {1, Rational(3)}, {4, Rational(0)}});
  CHECK(p.terms().size() == 1);
  CHECK(p.low_degree() == 1);
  CHECK(p.high_degree() == 1);
}

TEST_CASE("Laurent printing and parsing round trip") {
  CHECK((q - qi).to_string() == "q - q^-1");
  CHECK(parse_laurent("q - q^-1") == q - qi);
  CHECK(parse_laurent("2/3*q^2 + 1") == LaurentPoly::monomial(rat(2, 3), 2) + LaurentPoly(1));
  CHECK(parse_laurent("-q^-2") == LaurentPoly::monomial(Rational(-1), -2));
  CHECK(parse_laurent("0").is_zero());
  CHECK_THROWS_AS(parse_laurent("q^^2"), std::invalid_argument);
  std::mt19937_64 rng(11);
  for (int k = 0; k < 50; ++k) {
    const LaurentPoly p = oracle::random_laurent(rng);
    CHECK(parse_laurent(p.to_string()) == p);
  }
}

TEST_CASE("Laurent ring axioms on random inputs") {
  std::mt19937_64 rng(1);
  for (int k = 0; k < 200; ++k) {
    const LaurentPoly a = oracle::random_laurent(rng), b = oracle::random_laurent(rng),
                      c = oracle::random_laurent(rng);
    CHECK((a * b).terms() == oracle::naive_mul(a.terms(), b.terms()));
    CHECK(a * b == b * a);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK((a + b) - b == a);
  }
}

TEST_CASE("laurent_substitute_power") {
  CHECK((q - qi).substitute_power(2) == LaurentPoly::q(2) - LaurentPoly::q(-2));
  CHECK((q + LaurentPoly(1)).substitute_power(-1) == qi + LaurentPoly(1));
  CHECK_THROWS_AS(q.substitute_power(0), std::invalid_argument);
  std::mt19937_64 rng(2);
  for (int k = 0; k < 50; ++k) {
    const LaurentPoly a = oracle::random_laurent(rng), b = oracle::random_laurent(rng);
    CHECK(a.substitute_power(1) == a);
    for (int r : {-3, -1, 2, 5}) {
      CHECK((a * b).substitute_power(r) == a.substitute_power(r) * b.substitute_power(r));
      CHECK((a + b).substitute_power(r) == a.substitute_power(r) + b.substitute_power(r));
    }
  }
}

TEST_CASE("gcd and exact division") {
  const LaurentPoly a = (q + LaurentPoly(1)) * (q - LaurentPoly(2));
  const LaurentPoly b = (q + LaurentPoly(1)) * (q + LaurentPoly(3)) * qi;
  CHECK(gcd(a, b) == q + LaurentPoly(1));
  CHECK(exact_divide(a, q + LaurentPoly(1)).value() == q - LaurentPoly(2));
  CHECK_FALSE(exact_divide(a, q + LaurentPoly(3)).has_value());
  CHECK(exact_divide(LaurentPoly(1), q).value() == qi);  // q is a unit
  CHECK_THROWS(exact_divide(a, LaurentPoly()));
}

TEST_CASE("rational functions are canonical") {
  const RatFunc f(q * q - LaurentPoly(1), q - LaurentPoly(1));
  CHECK(f.is_laurent());
  CHECK(f.num() == q + LaurentPoly(1));
  const RatFunc g(LaurentPoly(2), LaurentPoly::monomial(Rational(4), 0) * q + LaurentPoly(2));
  CHECK(g.den().low_degree() >= 0);
  CHECK(g.den().leading_coeff() > 0);
  CHECK(gcd(g.num(), g.den()).is_one());
  CHECK(g == RatFunc(LaurentPoly(1), LaurentPoly::monomial(Rational(2), 1) + LaurentPoly(1)));
  std::mt19937_64 rng(3);
  for (int k = 0; k < 60; ++k) {
    const LaurentPoly a = oracle::random_laurent(rng, 3), b = oracle::random_laurent(rng, 3);
    const LaurentPoly c = oracle::random_laurent(rng, 3), d = oracle::random_laurent(rng, 3);
    if (b.is_zero() || d.is_zero() || c.is_zero()) continue;
    const RatFunc x(a, b), y(c, d);
    const Rational at = rat(7, 5);
    if (oracle::eval_at(b, at) == 0 || oracle::eval_at(d, at) == 0 || oracle::eval_at(c, at) == 0) continue;
    const Rational xv = oracle::eval_at(a, at) / oracle::eval_at(b, at);
    const Rational yv = oracle::eval_at(c, at) / oracle::eval_at(d, at);
    CHECK((x + y).evaluate(at) == xv + yv);
    CHECK((x * y).evaluate(at) == xv * yv);
    CHECK((x / y).evaluate(at) == xv / yv);
    CHECK((x - x).is_zero());
    CHECK(gcd((x * y).num(), (x * y).den()).is_one());
  }
}

TEST_CASE("laurent_to_series") {
  // exp(e h / 2) = sum (e/2)^k h^k / k!, written out independently.
  auto exp_half = [](int e, std::size_t order) {
    std::vector<Rational> c(order);
    Rational term = 1;
    for (std::size_t k = 0; k < order; ++k) {
      c[k] = term;
      term *= rat(e, 2);
      term /= static_cast<long>(k + 1);
    }
    return TruncSeries::from_coeffs(c);
  };
  CHECK(laurent_to_series(q, 4) == TruncSeries::from_coeffs({1, rat(1, 2), rat(1, 8), rat(1, 48)}));
  CHECK(laurent_to_series(q - qi, 2) == TruncSeries::from_coeffs({0, 1}));
  CHECK(laurent_to_series(LaurentPoly(1), 3) == TruncSeries::from_coeffs({1, 0, 0}));
  CHECK(laurent_to_series(LaurentPoly::q(-3), 5) == exp_half(-3, 5));

  std::mt19937_64 rng(4);
  for (int k = 0; k < 60; ++k) {
    const LaurentPoly a = oracle::random_laurent(rng), b = oracle::random_laurent(rng);
    CHECK(laurent_to_series(a * b, 6) == laurent_to_series(a, 6) * laurent_to_series(b, 6));
    CHECK(laurent_to_series(a + b, 6) == laurent_to_series(a, 6) + laurent_to_series(b, 6));
  }
}

TEST_CASE("series_exp") {
  const TruncSeries h = TruncSeries::h(3);
  CHECK(series_exp(TruncSeries(3)) == TruncSeries(3, Rational(1)));
  CHECK(series_exp(h) == TruncSeries::from_coeffs({1, 1, rat(1, 2)}));
  CHECK(series_exp(TruncSeries::from_coeffs({0, rat(1, 2), rat(1, 2)})) ==
        TruncSeries::from_coeffs({1, rat(1, 2), rat(5, 8)}));
  CHECK_THROWS_AS(series_exp(TruncSeries(3, Rational(1))), std::invalid_argument);

  std::mt19937_64 rng(5);
  std::uniform_int_distribution<int> d(-6, 6);
  for (int k = 0; k < 40; ++k) {
    std::vector<Rational> ca{0}, cb{0};
    for (int i = 1; i < 6; ++i) {
      ca.push_back(rat(d(rng), 3));
      cb.push_back(rat(d(rng), 2));
    }
    const TruncSeries a = TruncSeries::from_coeffs(ca), b = TruncSeries::from_coeffs(cb);
    CHECK(series_exp(a + b) == series_exp(a) * series_exp(b));
    // Naive sum of x^k / k!.
    TruncSeries naive(6, Rational(1)), power(6, Rational(1));
    Rational fact = 1;
    for (int j = 1; j < 6; ++j) {
      power = power * a;
      fact *= j;
      naive += power * (Rational(1) / fact);
    }
    CHECK(series_exp(a) == naive);
  }
}

TEST_CASE("matrix_determinant") {
  const LaurentMatrix bur3{{q - qi, q, LaurentPoly()}, {qi, LaurentPoly(), LaurentPoly()}, {LaurentPoly(), LaurentPoly(), q}};
  CHECK(determinant(bur3) == -q);
  CHECK(determinant(LaurentMatrix::identity(4)) == LaurentPoly(1));
  const LaurentMatrix sym2{{LaurentPoly(), q}, {q, LaurentPoly()}};
  CHECK(determinant(sym2) == -LaurentPoly::q(2));
  CHECK_THROWS_AS(determinant(LaurentMatrix(2, 3)), std::invalid_argument);

  std::mt19937_64 rng(6);
  for (std::size_t n = 1; n <= 5; ++n) {
    for (int k = 0; k < 4; ++k) {
      const LaurentMatrix a = oracle::random_laurent_matrix(rng, n), b = oracle::random_laurent_matrix(rng, n);
      CHECK(determinant(a) == oracle::leibniz_det(a));
      CHECK(determinant(a * b) == determinant(a) * determinant(b));
      const QMatrix qa = oracle::eval_at(a, rat(3, 2));
      CHECK(determinant(qa) == oracle::q_det(qa));
    }
  }
}

TEST_CASE("matrix_inverse") {
  const LaurentMatrix bur2{{q - qi, q}, {qi, LaurentPoly()}};
  const RatFuncMatrix inv = inverse(bur2);
  const LaurentMatrix expected{{LaurentPoly(), q}, {qi, qi - q}};
  CHECK(inv == to_ratfunc(expected));
  CHECK(inverse(LaurentMatrix::identity(3)) == RatFuncMatrix::identity(3));
  const LaurentMatrix singular{{q, LaurentPoly()}, {LaurentPoly(), LaurentPoly()}};
  CHECK_THROWS_AS(inverse(singular), SingularMatrix);
  try {
    (void)inverse(singular);
  } catch (const SingularMatrix& e) {
    CHECK(e.determinant() == "0");
  }

  std::mt19937_64 rng(7);
  for (std::size_t n = 1; n <= 6; ++n) {
    for (int k = 0; k < 3; ++k) {
      const LaurentMatrix m = oracle::random_laurent_matrix(rng, n, 1);
      if (determinant(m).is_zero()) continue;
      const RatFuncMatrix rm = to_ratfunc(m);
      CHECK(inverse(m) * rm == RatFuncMatrix::identity(n));
      CHECK(inverse(rm) * rm == RatFuncMatrix::identity(n));
    }
  }
}

TEST_CASE("solve_intertwiner_space") {
  const LaurentMatrix s1{{LaurentPoly(), q, LaurentPoly()}, {q, LaurentPoly(), LaurentPoly()}, {LaurentPoly(), LaurentPoly(), LaurentPoly(1)}};
  const LaurentMatrix s2{{LaurentPoly(1), LaurentPoly(), LaurentPoly()}, {LaurentPoly(), LaurentPoly(), q}, {LaurentPoly(), q, LaurentPoly()}};
  const std::vector<LaurentMatrix> sym3{s1, s2};
  CHECK(solve_intertwiner_space(sym3, sym3, 3, 3).size() == 1);

  const std::vector<LaurentMatrix> none;
  CHECK(solve_intertwiner_space(none, none, 2, 2).size() == 4);

  const std::vector<QMatrix> swap{QMatrix{{0, 1}, {1, 0}}};
  const std::vector<QMatrix> id{QMatrix::identity(2)};
  const auto sols = solve_intertwiner_space(swap, id, 2, 2);
  CHECK(sols.size() == 2);
  for (const auto& m : sols) {
    CHECK(m(0, 0) == m(0, 1));
    CHECK(m(1, 0) == m(1, 1));
  }

  const std::vector<LaurentMatrix> one{s1};
  CHECK_THROWS_AS(solve_intertwiner_space(one, sym3, 3, 3), std::invalid_argument);
  CHECK_THROWS_AS(solve_intertwiner_space(sym3, sym3, 2, 3), std::invalid_argument);
}

TEST_CASE("intertwiner solutions satisfy the equations and match the generic rank") {
  std::mt19937_64 rng(8);
  for (int trial = 0; trial < 12; ++trial) {
    const std::size_t da = 2 + trial % 3, db = 2 + (trial / 3) % 3;
    if (db < da) continue;
    // B is A plus an identity block, so the inclusion is a solution.
    const LaurentMatrix x = oracle::random_laurent_matrix(rng, da, 1);
    const LaurentMatrix y = oracle::random_laurent_matrix(rng, da, 1);
    std::vector<LaurentMatrix> a{x, y}, b;
    for (const auto& m : a) {
      LaurentMatrix big(db, db);
      for (std::size_t i = 0; i < db; ++i) {
        for (std::size_t j = 0; j < db; ++j) {
          big(i, j) = i < da && j < da ? m(i, j) : (i == j ? LaurentPoly(1) : LaurentPoly());
        }
      }
      b.push_back(big);
    }
    const auto sols = solve_intertwiner_space(a, b, da, db);
    CHECK(sols.size() == oracle::generic_intertwiner_dim(a, b, da, db));
    for (const auto& m : sols) {
      for (std::size_t k = 0; k < a.size(); ++k) CHECK(m * to_ratfunc(a[k]) == to_ratfunc(b[k]) * m);
    }
  }
}

TEST_CASE("modular screen agrees with exact arithmetic") {
  std::mt19937_64 rng(9);
  for (int k = 0; k < 40; ++k) {
    const LaurentPoly a = oracle::random_laurent(rng), b = oracle::random_laurent(rng);
    const std::uint64_t at = modp::random_unit(rng);
    CHECK(modp::evaluate(a * b, at) == modp::mul(modp::evaluate(a, at), modp::evaluate(b, at)));
    CHECK(modp::evaluate(a + b, at) == modp::add(modp::evaluate(a, at), modp::evaluate(b, at)));
  }
  const LaurentMatrix m = oracle::random_laurent_matrix(rng, 4, 2);
  const std::uint64_t at = 12345;
  CHECK(modp::ModMatrix::from_laurent(m, at).determinant() == modp::evaluate(determinant(m), at));
}
