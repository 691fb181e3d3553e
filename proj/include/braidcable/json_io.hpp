#pragma once

#include "json.hpp"

#include "braidcable/decomposition.hpp"

namespace braidcable {

using json = nlohmann::json;

json to_json(const Rational& x);
/// {"<exponent>": "<rational>", ...}; zero is {}.
json to_json(const LaurentPoly& p);
json to_json(const RatFunc& f);
/// Coefficients of h^0 .. h^{N-1} as rational strings.
json to_json(const TruncSeries& s);
json to_json(const BraidWord& w);
json to_json(const Permutation& p);
json to_json(const IdentityWitness& w);
json to_json(const KernelVerdict& v);
json to_json(const DeterminantComparison& c);
/// The intertwiner is included only when `with_intertwiner` is set.
json to_json(const DecompositionReport& r, bool with_intertwiner);

/// Row-major nested arrays of the entry encoding.
template <class T>
json to_json(const Matrix<T>& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(to_json(m(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

/// Parsers throw std::invalid_argument on malformed input.
Rational rational_from_json(const json& j);
LaurentPoly laurent_from_json(const json& j);
RatFunc ratfunc_from_json(const json& j);
TruncSeries series_from_json(const json& j);
LaurentMatrix laurent_matrix_from_json(const json& j);
RatFuncMatrix ratfunc_matrix_from_json(const json& j);
SeriesMatrix series_matrix_from_json(const json& j);
/// Accepts a JSON array of signed integers.
BraidWord braid_word_from_json(int strands, const json& j);

}  // namespace braidcable
