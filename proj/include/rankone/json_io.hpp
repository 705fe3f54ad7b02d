#pragma once

// JSON encodings. Rationals are strings ("-3/2"), extensions and quaternions
// are two-element arrays [a, b] of their base encoding, residues are integers,
// machine complex numbers are [re, im] (a bare number is read as real).
// Matrices are row-major arrays of rows.

#include <json.hpp>

#include "rankone/embedding.hpp"
#include "rankone/harness.hpp"
#include "rankone/matrix.hpp"

namespace rankone {

using Json = nlohmann::ordered_json;

inline Json to_json_value(const Rational& x) { return x.str(); }
template <unsigned M>
Json to_json_value(ModInt<M> x) { return x.value(); }
inline Json to_json_value(const MachineComplex& x) { return Json::array({x.re(), x.im()}); }
template <class B, int S, int G>
Json to_json_value(const QuadExt<B, S, G>& x) { return Json::array({to_json_value(x.a()), to_json_value(x.b())}); }
template <class B, int R>
Json to_json_value(const SkewQuotient<B, R>& x) { return Json::array({to_json_value(x.a()), to_json_value(x.b())}); }

template <class T>
struct json_reader;

template <>
struct json_reader<Rational> {
  static Rational read(const Json& j) {
    if (j.is_string()) return Rational::parse(j.get<std::string>());
    if (j.is_number_integer()) return Rational(j.get<long>());
    throw ParseError("rational must be a string like \"-3/2\" or an integer");
  }
};

template <unsigned M>
struct json_reader<ModInt<M>> {
  static ModInt<M> read(const Json& j) {
    if (!j.is_number_integer()) throw ParseError("residue must be an integer");
    return ModInt<M>::from_int(j.get<long>());
  }
};

template <>
struct json_reader<MachineComplex> {
  static MachineComplex read(const Json& j) {
    if (j.is_number()) return MachineComplex(j.get<double>());
    if (j.is_array() && j.size() == 2 && j[0].is_number() && j[1].is_number())
      return MachineComplex(j[0].get<double>(), j[1].get<double>());
    throw ParseError("complex number must be a number or [re, im]");
  }
};

template <class B, int S, int G>
struct json_reader<QuadExt<B, S, G>> {
  static QuadExt<B, S, G> read(const Json& j) {
    if (!j.is_array() || j.size() != 2) throw ParseError("extension element must be [a, b]");
    return {json_reader<B>::read(j[0]), json_reader<B>::read(j[1])};
  }
};

template <class B, int R>
struct json_reader<SkewQuotient<B, R>> {
  static SkewQuotient<B, R> read(const Json& j) {
    if (!j.is_array() || j.size() != 2) throw ParseError("quaternion element must be [a, b]");
    return {json_reader<B>::read(j[0]), json_reader<B>::read(j[1])};
  }
};

template <StarRing T>
Json matrix_to_json(const Matrix<T>& m) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.n(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < m.n(); ++j) row.push_back(to_json_value(m(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

template <StarRing T>
Matrix<T> matrix_from_json(const Json& j) {
  if (!j.is_array() || j.empty()) throw ParseError("matrix must be a nonempty array of rows");
  Matrix<T> m(j.size());
  for (std::size_t i = 0; i < j.size(); ++i) {
    if (!j[i].is_array() || j[i].size() != j.size()) throw ParseError("matrix must be square");
    for (std::size_t k = 0; k < j.size(); ++k) m(i, k) = json_reader<T>::read(j[i][k]);
  }
  return m;
}

Json report_to_json(const StructureReport& r);
Json triple_to_json(const EmbeddedTriple& t);

}  // namespace rankone
