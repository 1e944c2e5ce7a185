#pragma once

#include <json.hpp>
#include <string>

#include "closed_forms.hpp"
#include "lincomb.hpp"

namespace apery::json_io {

using json = nlohmann::json;

inline json integer_to_json(const Integer& x) {
  if (x.fits_slong_p()) return json(x.get_si());
  return json(x.get_str());
}

inline Integer integer_from_json(const json& j) {
  if (j.is_number_integer()) return Integer(j.get<long>());
  if (j.is_string()) {
    Integer x;
    if (x.set_str(j.get<std::string>(), 10) != 0) throw domain_error("malformed integer: " + j.get<std::string>());
    return x;
  }
  throw domain_error("expected an integer");
}

inline json coeff_to_json(const Integer& x) { return integer_to_json(x); }
inline json coeff_to_json(const Rational& x) { return json(canonical(x).get_str()); }
inline json coeff_to_json(const IntPoly& p) {
  json a = json::array();
  for (const auto& c : p.coeffs()) a.push_back(integer_to_json(c));
  return a;
}

template <class R>
R coeff_from_json(const json& j);

template <>
inline Integer coeff_from_json<Integer>(const json& j) {
  return integer_from_json(j);
}

template <>
inline Rational coeff_from_json<Rational>(const json& j) {
  if (j.is_number_integer()) return Rational(j.get<long>());
  if (!j.is_string()) throw domain_error("expected a rational string");
  Rational q;
  if (q.set_str(j.get<std::string>(), 10) != 0 || sgn(q.get_den()) == 0)
    throw domain_error("malformed rational: " + j.get<std::string>());
  return canonical(q);
}

template <>
inline IntPoly coeff_from_json<IntPoly>(const json& j) {
  if (!j.is_array()) throw domain_error("expected a coefficient array");
  std::vector<Integer> c;
  for (const auto& x : j) c.push_back(integer_from_json(x));
  return IntPoly(std::move(c));
}

inline json entries_to_json(const Composition& a) { return json(a.entries()); }

inline Composition entries_from_json(const json& j) {
  if (!j.is_array()) throw domain_error("expected an entry array");
  return Composition(j.get<std::vector<int>>());
}

inline json basis_to_json(const Composition& a) { return entries_to_json(a); }
inline json basis_to_json(const DualityClass& c) { return json{{"class", entries_to_json(c.representative())}}; }

template <class B>
B basis_from_json(const json& j);

template <>
inline Composition basis_from_json<Composition>(const json& j) {
  return entries_from_json(j);
}

template <>
inline DualityClass basis_from_json<DualityClass>(const json& j) {
  if (!j.is_object() || !j.contains("class")) throw domain_error("expected {\"class\": [...]}");
  return DualityClass(entries_from_json(j.at("class")));
}

template <class B, class R>
json to_json(const LinComb<B, R>& l) {
  json a = json::array();
  for (const auto& [b, c] : l) a.push_back(json{{"coeff", coeff_to_json(c)}, {"basis", basis_to_json(b)}});
  return a;
}

template <class B, class R>
LinComb<B, R> lincomb_from_json(const json& j) {
  if (!j.is_array()) throw domain_error("expected a list of terms");
  LinComb<B, R> l;
  for (const auto& t : j) {
    if (!t.is_object() || !t.contains("coeff") || !t.contains("basis")) throw domain_error("malformed term");
    l.add_term(basis_from_json<B>(t.at("basis")), coeff_from_json<R>(t.at("coeff")));
  }
  return l;
}

inline json to_json(const ConstantBasisVector& v) {
  json z = json::object(), L = json::object();
  for (const auto& [r, q] : v.zeta_odd) z[std::to_string(r)] = canonical(q).get_str();
  for (const auto& [r, q] : v.L_even) L[std::to_string(r)] = canonical(q).get_str();
  return json{{"weight", v.weight}, {"zeta_odd", z}, {"L_even", L}};
}

inline json matrix_to_json(const std::vector<std::vector<Integer>>& m) {
  json a = json::array();
  for (const auto& row : m) {
    json r = json::array();
    for (const auto& x : row) r.push_back(integer_to_json(x));
    a.push_back(r);
  }
  return a;
}

}  // namespace apery::json_io
