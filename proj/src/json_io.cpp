#include "braidcable/json_io.hpp"

#include <stdexcept>

namespace braidcable {

namespace {

[[noreturn]] void bad(const std::string& what) { throw std::invalid_argument("malformed JSON: " + what); }

template <class T, class F>
Matrix<T> matrix_from_json(const json& j, F&& entry) {
  if (!j.is_array()) bad("matrix must be an array of rows");
  const std::size_t rows = j.size();
  const std::size_t cols = rows == 0 ? 0 : j.front().size();
  Matrix<T> m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    if (!j[i].is_array() || j[i].size() != cols) bad("matrix rows must be arrays of equal length");
    for (std::size_t c = 0; c < cols; ++c) m(i, c) = entry(j[i][c]);
  }
  return m;
}

}  // namespace

json to_json(const Rational& x) { return to_string(x); }

json to_json(const LaurentPoly& p) {
  json out = json::object();
  for (const auto& [e, c] : p.terms()) out[std::to_string(e)] = to_string(c);
  return out;
}

json to_json(const RatFunc& f) { return {{"num", to_json(f.num())}, {"den", to_json(f.den())}}; }

json to_json(const TruncSeries& s) {
  json out = json::array();
  for (const auto& c : s.coeffs()) out.push_back(to_string(c));
  return out;
}

json to_json(const BraidWord& w) { return w.letters(); }

json to_json(const Permutation& p) { return std::vector<int>(p.begin(), p.end()); }

json to_json(const IdentityWitness& w) {
  if (w.identity) return {{"identity", true}};
  return {{"identity", false}, {"row", w.row + 1}, {"col", w.col + 1}, {"entry_minus_identity", to_json(w.entry)}};
}

json to_json(const KernelVerdict& v) {
  return {{"strands", v.word.strands()},
          {"r", v.r},
          {"word_length", v.word.length()},
          {"burau", v.in_ker_burau},
          {"cabled", v.in_ker_cabled},
          {"agree", v.agree()},
          {"burau_witness", to_json(v.burau_witness)},
          {"cabled_witness", to_json(v.cabled_witness)}};
}

json to_json(const DeterminantComparison& c) {
  return {{"generator", c.generator},
          {"cabled", to_json(c.cabled)},
          {"predicted", to_json(c.predicted)},
          {"block_sum", to_json(c.block_sum)},
          {"consistent", c.consistent()}};
}

json to_json(const DecompositionReport& r, bool with_intertwiner) {
  json blocks = json::array();
  for (const auto& b : r.blocks) {
    blocks.push_back({{"label", b.label}, {"dimension", b.dimension}, {"multiplicity", b.multiplicity}});
  }
  json out{{"left", r.left_label}, {"right", r.right_label}, {"verified", r.verified}, {"blocks", blocks}};
  if (r.solution_dimension) out["solution_dimension"] = *r.solution_dimension;
  if (!r.failure.empty()) out["failure"] = r.failure;
  if (with_intertwiner && r.intertwiner) out["intertwiner"] = to_json(*r.intertwiner);
  return out;
}

Rational rational_from_json(const json& j) {
  if (j.is_string()) return parse_rational(j.get<std::string>());
  if (j.is_number_integer()) return Rational(j.get<long>());
  bad("rational must be a string or integer");
}

LaurentPoly laurent_from_json(const json& j) {
  if (j.is_string()) return parse_laurent(j.get<std::string>());
  if (!j.is_object()) bad("Laurent polynomial must be an object of exponent -> coefficient");
  std::map<int, Rational> terms;
  for (const auto& [key, value] : j.items()) {
    std::size_t used = 0;
    int e = 0;
    try {
      e = std::stoi(key, &used);
    } catch (const std::exception&) {
      bad("exponent '" + key + "' is not an integer");
    }
    if (used != key.size()) bad("exponent '" + key + "' is not an integer");
    terms[e] += rational_from_json(value);
  }
  return LaurentPoly::from_terms(terms);
}

RatFunc ratfunc_from_json(const json& j) {
  if (j.is_object() && j.contains("num") && j.contains("den")) {
    const LaurentPoly den = laurent_from_json(j["den"]);
    if (den.is_zero()) bad("zero denominator");
    return RatFunc(laurent_from_json(j["num"]), den);
  }
  return RatFunc(laurent_from_json(j));
}

TruncSeries series_from_json(const json& j) {
  if (!j.is_array() || j.empty()) bad("series must be a non-empty array");
  std::vector<Rational> c;
  for (const auto& x : j) c.push_back(rational_from_json(x));
  return TruncSeries::from_coeffs(std::move(c));
}

LaurentMatrix laurent_matrix_from_json(const json& j) { return matrix_from_json<LaurentPoly>(j, laurent_from_json); }
RatFuncMatrix ratfunc_matrix_from_json(const json& j) { return matrix_from_json<RatFunc>(j, ratfunc_from_json); }
SeriesMatrix series_matrix_from_json(const json& j) { return matrix_from_json<TruncSeries>(j, series_from_json); }

BraidWord braid_word_from_json(int strands, const json& j) {
  if (!j.is_array()) bad("braid word must be an array of integers");
  std::vector<int> letters;
  for (const auto& x : j) {
    if (!x.is_number_integer()) bad("braid letters must be integers");
    letters.push_back(x.get<int>());
  }
  return BraidWord(strands, std::move(letters));
}

}  // namespace braidcable
