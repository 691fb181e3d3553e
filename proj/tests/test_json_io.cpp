#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "braidcable/json_io.hpp"
#include "oracles.hpp"

using namespace braidcable;

TEST_CASE("Laurent polynomial encoding") {
  const LaurentPoly p = LaurentPoly::q() - LaurentPoly::q(-1);
  CHECK(to_json(p) == json::parse(R"({"1":"1","-1":"-1"})"));
  CHECK(to_json(LaurentPoly()) == json::object());
  CHECK(laurent_from_json(json::parse(R"({"1":"1","-1":"-1"})")) == p);
  CHECK(laurent_from_json(json::parse(R"({"2":"3/4","0":5})")) ==
        LaurentPoly::monomial(Rational(3, 4), 2) + LaurentPoly(5));
  CHECK_THROWS_AS(laurent_from_json(json::parse(R"({"x":"1"})")), std::invalid_argument);
  CHECK_THROWS_AS(laurent_from_json(json::parse(R"({"1":"1/0"})")), std::invalid_argument);
  CHECK_THROWS_AS(laurent_from_json(json::parse("[1]")), std::invalid_argument);
}

TEST_CASE("matrices round trip through text") {
  std::mt19937_64 rng(1);
  for (int k = 0; k < 20; ++k) {
    const LaurentMatrix m = oracle::random_laurent_matrix(rng, 1 + k % 4, 4);
    const std::string text = to_json(m).dump();
    CHECK(laurent_matrix_from_json(json::parse(text)) == m);
  }
  const RatFuncMatrix inv = inverse(burau_rep(3).image(1) + LaurentMatrix::identity(3));
  CHECK(ratfunc_matrix_from_json(json::parse(to_json(inv).dump())) == inv);
  const SeriesMatrix s = to_series(burau_rep(2).image(1), 4);
  CHECK(series_matrix_from_json(json::parse(to_json(s).dump())) == s);
  CHECK(to_json(QMatrix::identity(2)) == json::parse(R"([["1","0"],["0","1"]])"));
  CHECK_THROWS_AS(laurent_matrix_from_json(json::parse(R"([[{}],[{},{}]])")), std::invalid_argument);
}

TEST_CASE("braid words and reports") {
  CHECK(to_json(BraidWord(4, {2, 1, 3, 2})) == json::parse("[2,1,3,2]"));
  CHECK(braid_word_from_json(4, json::parse("[2,1,-3]")).letters() == std::vector<int>{2, 1, -3});
  CHECK_THROWS_AS(braid_word_from_json(4, json::parse(R"(["a"])")), std::invalid_argument);

  const KernelVerdict v = kernel_equivalence_check(BraidWord(2, {1}), 2);
  const json jv = to_json(v);
  CHECK(jv["burau"] == false);
  CHECK(jv["cabled"] == false);
  CHECK(jv["agree"] == true);

  const DecompositionReport rep = verify_global_decomposition(2, 2);
  const json without = to_json(rep, false);
  CHECK(without["verified"] == true);
  CHECK_FALSE(without.contains("intertwiner"));
  const json with = to_json(rep, true);
  CHECK(ratfunc_matrix_from_json(with["intertwiner"]) == *rep.intertwiner);
  CHECK(with["blocks"].size() == 2);
}
