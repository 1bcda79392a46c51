#pragma once

// JSON encodings. Rationals are "p/q" strings (plain integers are accepted on
// input), polynomials are coefficient arrays with the constant term first,
// and basis indices / block indices are 1-based on the wire.

#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "gitss/classical.hpp"
#include "gitss/dispo.hpp"
#include "gitss/error.hpp"
#include "gitss/exactmath.hpp"
#include "gitss/flags.hpp"
#include "gitss/hilbert_mumford.hpp"

namespace gitss::io {

using nlohmann::json;

inline const json& field(const json& j, const char* key) {
  require(j.is_object(), ErrorCode::ParseError, std::string("expected an object holding '") + key + "'");
  auto it = j.find(key);
  require(it != j.end(), ErrorCode::ParseError, std::string("missing field '") + key + "'");
  return *it;
}

inline json rational_to_json(const Rational& q) { return to_string(q); }

inline Rational rational_from_json(const json& j) {
  if (j.is_number_integer()) return Rational(j.get<std::int64_t>());
  require(j.is_string(), ErrorCode::ParseError, "rational must be a string or an integer");
  return parse_rational(j.get<std::string>());
}

inline std::int64_t int_from_json(const json& j) {
  require(j.is_number_integer(), ErrorCode::ParseError, "expected an integer");
  return j.get<std::int64_t>();
}

inline std::size_t size_from_json(const json& j) {
  auto v = int_from_json(j);
  require(v >= 0, ErrorCode::ParseError, "expected a nonnegative integer");
  return static_cast<std::size_t>(v);
}

inline const json& array_of(const json& j) {
  require(j.is_array(), ErrorCode::ParseError, "expected an array");
  return j;
}

inline json poly_to_json(const UniPoly& p) {
  json a = json::array();
  for (const auto& c : p.coefficients()) a.push_back(rational_to_json(c));
  return a;
}

inline UniPoly poly_from_json(const json& j) {
  std::vector<Rational> coeffs;
  for (const auto& c : array_of(j)) coeffs.push_back(rational_from_json(c));
  return UniPoly(std::move(coeffs));
}

inline json subgroup_to_json(const OneParamSubgroup& l) { return l.weights(); }

inline OneParamSubgroup subgroup_from_json(const json& j) {
  std::vector<std::int64_t> w;
  for (const auto& x : array_of(j)) w.push_back(int_from_json(x));
  return OneParamSubgroup(std::move(w));
}

inline json flag_to_json(const WeightedFlag& f) {
  json alphas = json::array(), order = json::array();
  for (const auto& a : f.alphas) alphas.push_back(rational_to_json(a));
  for (auto b : f.basis_order) order.push_back(b + 1);
  return {{"dims", f.dims}, {"alphas", alphas}, {"basis_order", order}};
}

inline TorusWeightRep rep_from_json(const json& j) {
  std::vector<WeightedBasisVector> basis;
  for (const auto& b : array_of(field(j, "basis"))) {
    WeightedBasisVector v;
    const auto& label = field(b, "label");
    require(label.is_string(), ErrorCode::ParseError, "label must be a string");
    v.label = label.get<std::string>();
    for (const auto& x : array_of(field(b, "weight"))) v.weight.push_back(int_from_json(x));
    basis.push_back(std::move(v));
  }
  return TorusWeightRep(size_from_json(field(j, "torus_rank")), std::move(basis));
}

inline json rep_to_json(const TorusWeightRep& rep) {
  json basis = json::array();
  for (const auto& b : rep.basis()) basis.push_back({{"label", b.label}, {"weight", b.weight}});
  return {{"torus_rank", rep.torus_rank()}, {"basis", basis}};
}

inline RepPoint point_from_json(const json& j) {
  require(j.is_object(), ErrorCode::ParseError, "point must be an object of label → rational");
  std::map<std::string, Rational> coords;
  for (const auto& [label, value] : j.items()) coords.emplace(label, rational_from_json(value));
  return RepPoint(coords);
}

inline json certificate_to_json(const HullCertificate& c) {
  json coeffs = json::object();
  for (const auto& [label, value] : c.coefficients) coeffs[label] = rational_to_json(value);
  return {{"coefficients", coeffs}, {"shift", rational_to_json(c.shift)}};
}

inline FiltrationData filtration_from_json(const json& j) {
  FiltrationData f;
  f.total_rank = size_from_json(field(j, "r"));
  f.total_degree = rational_from_json(field(j, "d"));
  f.total_hilb = poly_from_json(field(j, "P"));
  for (const auto& m : array_of(field(j, "members")))
    f.members.push_back({size_from_json(field(m, "rank")), rational_from_json(field(m, "degree")),
                         poly_from_json(field(m, "hilb")), rational_from_json(field(m, "alpha"))});
  validate(f);
  return f;
}

inline json filtration_to_json(const FiltrationData& f) {
  json members = json::array();
  for (const auto& m : f.members)
    members.push_back({{"rank", m.rank},
                       {"degree", rational_to_json(m.degree)},
                       {"hilb", poly_to_json(m.hilb)},
                       {"alpha", rational_to_json(m.alpha)}});
  return {{"r", f.total_rank}, {"d", rational_to_json(f.total_degree)}, {"P", poly_to_json(f.total_hilb)}, {"members", members}};
}

inline NonvanishingProfile profile_from_json(const json& j) {
  std::vector<IndexTuple> tuples;
  for (const auto& t : array_of(field(j, "tuples"))) {
    IndexTuple tuple;
    for (const auto& i : array_of(t)) tuple.push_back(static_cast<int>(int_from_json(i)));
    tuples.push_back(std::move(tuple));
  }
  return NonvanishingProfile(static_cast<int>(int_from_json(field(j, "t"))),
                             static_cast<int>(int_from_json(field(j, "tuple_len"))), tuples);
}

inline json profile_to_json(const NonvanishingProfile& p) {
  json tuples = json::array();
  for (const auto& t : p.tuples()) tuples.push_back(t);
  return {{"t", p.steps()}, {"tuple_len", p.tuple_len()}, {"tuples", tuples}};
}

inline PolyMatrix poly_matrix_from_json(const json& j, std::size_t expected_rows) {
  const auto& rows = array_of(j);
  require(rows.size() == expected_rows, ErrorCode::ParseError,
          "matrix must have " + std::to_string(expected_rows) + " rows");
  std::size_t cols = rows.empty() ? 0 : array_of(rows[0]).size();
  PolyMatrix m(expected_rows, cols);
  for (std::size_t i = 0; i < expected_rows; ++i) {
    require(array_of(rows[i]).size() == cols, ErrorCode::ParseError, "ragged matrix");
    for (std::size_t c = 0; c < cols; ++c) m(i, c) = poly_from_json(rows[i][c]);
  }
  return m;
}

inline json poly_matrix_to_json(const PolyMatrix& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(poly_to_json(m(i, c)));
    rows.push_back(std::move(row));
  }
  return rows;
}

inline SplitSheafModel model_from_json(const json& degrees) {
  SplitSheafModel model;
  for (const auto& d : array_of(degrees)) model.degrees.push_back(int_from_json(d));
  return model;
}

inline FormBundle form_bundle_from_json(const json& j) {
  FormBundle fb;
  fb.model = model_from_json(field(j, "degrees"));
  const auto& sym = field(j, "symmetry");
  require(sym == "symmetric" || sym == "antisymmetric", ErrorCode::ParseError,
          "symmetry must be 'symmetric' or 'antisymmetric'");
  fb.symmetry = sym == "symmetric" ? Symmetry::Symmetric : Symmetry::Antisymmetric;
  fb.entries = poly_matrix_from_json(field(j, "entries"), fb.model.rank());
  validate(fb);
  return fb;
}

/// Step degrees and ranks in the input are ignored and recomputed.
inline SubsheafFlag subsheaf_flag_from_json(const json& j, const SplitSheafModel& model) {
  std::vector<PolyMatrix> gens;
  std::vector<Rational> alphas;
  for (const auto& s : array_of(field(j, "steps"))) {
    gens.push_back(poly_matrix_from_json(field(s, "generators"), model.rank()));
    alphas.push_back(rational_from_json(field(s, "alpha")));
  }
  return make_flag(model, gens, alphas);
}

inline json subsheaf_flag_to_json(const SubsheafFlag& flag) {
  json steps = json::array();
  for (const auto& s : flag.steps)
    steps.push_back({{"generators", poly_matrix_to_json(s.generators)},
                     {"alpha", rational_to_json(s.alpha)},
                     {"rank", s.rank},
                     {"degree", s.degree}});
  return {{"steps", steps}};
}

}  // namespace gitss::io
