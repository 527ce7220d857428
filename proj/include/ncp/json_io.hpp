#pragma once

// JSON encodings of places, elements, extensions, Brauer classes, central
// extensions and every report type. Malformed input raises InvalidArgument.
//
//   place      {"type":"prime","p":7} {"type":"real"} {"type":"poly","coeffs":[-2,1]} {"type":"inf"}
//   extension  {"base":"Q","n":2,"radicands":[3,-7]}
//              {"base":"Fq","q":7,"n":3,"radicands":[[["t",1]], {"const":1,"factors":[["t-1",1],["t-2",1]]}]}
//   class      {"invariants":[{"place":{...},"inv":"7/8"}, ...]}
//   group ext  {"p":2,"a":1,"b":[2,2],"t":[1,1],"c":[[0,1],[0,0]]}   (b: factor orders)

#include <cstdint>
#include <fstream>
#include <limits>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"
#include "ncp/abext.hpp"
#include "ncp/brauer.hpp"
#include "ncp/covers.hpp"
#include "ncp/groupext.hpp"
#include "ncp/isolation.hpp"
#include "ncp/reports.hpp"
#include "ncp/suite.hpp"

namespace ncp {

using json = nlohmann::json;

namespace detail {

template <class T>
T get_field(const json& j, const char* key) {
  require(j.is_object() && j.contains(key), std::string("json: missing field '") + key + "'");
  try {
    return j.at(key).get<T>();
  } catch (const json::exception& e) {
    fail(std::string("json: field '") + key + "': " + e.what());
  }
}

}  // namespace detail

inline json read_json_file(const std::string& path) {
  std::ifstream in(path);
  require(in.good(), "cannot open " + path);
  try {
    return json::parse(in);
  } catch (const json::exception& e) {
    fail(path + ": " + e.what());
  }
}

// ---------------------------------------------------------------------------
// places and elements
// ---------------------------------------------------------------------------

inline json to_json(const Place& P) {
  switch (P.kind) {
    case PlaceKind::Real: return {{"type", "real"}};
    case PlaceKind::Prime: return {{"type", "prime"}, {"p", P.value}};
    case PlaceKind::Poly: return {{"type", "poly"}, {"coeffs", P.coeffs}};
    case PlaceKind::Infinity: return {{"type", "inf"}};
  }
  return {};
}

inline Place place_from_json(const json& j, const BaseField& K) {
  const auto type = detail::get_field<std::string>(j, "type");
  Place P;
  if (type == "real") {
    P = Place::real();
  } else if (type == "prime") {
    P = Place::prime(detail::get_field<std::int64_t>(j, "p"));
  } else if (type == "poly") {
    require(K.is_function_field(), "json: polynomial place over Q");
    P = Place::polynomial(K.q, detail::get_field<std::vector<std::int64_t>>(j, "coeffs"));
  } else if (type == "inf") {
    require(K.is_function_field(), "json: infinite place over Q");
    P = Place::infinity(K.q);
  } else {
    fail("json: unknown place type '" + type + "'");
  }
  require(P.belongs_to(K), "json: place " + P.str() + " is not a place of " + K.str());
  return P;
}

// Command-line place syntax: "real", "inf", a rational prime, or a monic
// irreducible polynomial in t such as "t-3" or "t^2+1".
inline Place parse_place(const std::string& text, const BaseField& K) {
  if (text == "real") return place_from_json({{"type", "real"}}, K);
  if (text == "inf") return place_from_json({{"type", "inf"}}, K);
  if (K.is_rationals()) {
    std::size_t used = 0;
    std::int64_t p = 0;
    try {
      p = std::stoll(text, &used);
    } catch (const std::exception&) {
      fail("place: cannot parse '" + text + "'");
    }
    require(used == text.size(), "place: cannot parse '" + text + "'");
    return Place::prime(p);
  }
  std::string body = text;
  if (body.size() >= 2 && body.front() == '(' && body.back() == ')') body = body.substr(1, body.size() - 2);
  return Place::polynomial(K.q, poly::parse(body, K.q));
}

inline std::vector<Place> parse_places(const std::string& list, const BaseField& K) {
  std::vector<Place> out;
  std::stringstream ss(list);
  std::string item;
  while (std::getline(ss, item, ','))
    if (!item.empty()) out.push_back(parse_place(item, K));
  return out;
}

inline json to_json(const Element& f) {
  if (f.field.is_rationals()) {
    bool integral = true;
    for (const auto& [P, e] : f.factors) integral = integral && e > 0;
    if (integral) {
      const Integer v = f.integer_value();
      if (v >= std::numeric_limits<std::int64_t>::min() && v <= std::numeric_limits<std::int64_t>::max())
        return static_cast<std::int64_t>(v);
    }
    json factors = json::array();
    for (const auto& [P, e] : f.factors) factors.push_back({P.value, e});
    return {{"const", f.unit}, {"factors", factors}};
  }
  json factors = json::array();
  for (const auto& [P, e] : f.factors) factors.push_back({poly::to_string(P.coeffs), e});
  return {{"const", f.unit}, {"factors", factors}};
}

inline Element element_from_json(const json& j, const BaseField& K) {
  if (K.is_rationals()) {
    if (j.is_number_integer()) return Element::from_integer(j.get<std::int64_t>());
    if (j.is_string()) {
      try {
        return Element::from_integer(std::stoll(j.get<std::string>()));
      } catch (const std::logic_error&) {
        fail("json: bad rational radicand " + j.dump());
      }
    }
    require(j.is_object(), "json: bad rational radicand " + j.dump());
    Element e = Element::from_integer(detail::get_field<std::int64_t>(j, "const"));
    for (const auto& f : detail::get_field<json>(j, "factors")) {
      require(f.is_array() && f.size() == 2, "json: factor must be [p, e]");
      e = e * Element::from_integer(f[0].get<std::int64_t>()).pow(f[1].get<std::int64_t>());
    }
    return e;
  }
  auto factor_list = [&](const json& list, Element e) {
    require(list.is_array(), "json: factors must be an array");
    for (const auto& f : list) {
      require(f.is_array() && f.size() == 2 && f[0].is_string() && f[1].is_number_integer(),
              "json: factor must be [\"poly\", exponent], got " + f.dump());
      e = e * Element::from_polynomial(K, poly::parse(f[0].get<std::string>(), K.q)).pow(f[1].get<std::int64_t>());
    }
    return e;
  };
  if (j.is_string()) return Element::from_polynomial(K, poly::parse(j.get<std::string>(), K.q));
  if (j.is_number_integer()) return Element::constant(K, j.get<std::int64_t>());
  if (j.is_array()) return factor_list(j, Element::one(K));
  require(j.is_object(), "json: bad radicand " + j.dump());
  const std::int64_t c = j.contains("const") ? detail::get_field<std::int64_t>(j, "const") : 1;
  return factor_list(j.contains("factors") ? j.at("factors") : json::array(), Element::constant(K, c));
}

// ---------------------------------------------------------------------------
// extensions
// ---------------------------------------------------------------------------

inline BaseField base_from_json(const json& j) {
  const auto base = detail::get_field<std::string>(j, "base");
  if (base == "Q") return BaseField::rationals();
  require(base == "Fq", "json: base must be \"Q\" or \"Fq\"");
  return BaseField::function_field(detail::get_field<std::int64_t>(j, "q"));
}

inline AbExt ext_from_json(const json& j) {
  const BaseField K = base_from_json(j);
  const int n = detail::get_field<int>(j, "n");
  std::vector<Element> radicands;
  for (const auto& r : detail::get_field<json>(j, "radicands")) radicands.push_back(element_from_json(r, K));
  return AbExt::build(K, n, std::move(radicands));
}

inline json ext_spec_json(const AbExt& M) {
  json j;
  j["base"] = M.base().is_rationals() ? "Q" : "Fq";
  if (M.base().is_function_field()) j["q"] = M.base().q;
  j["n"] = M.n();
  j["radicands"] = json::array();
  for (const auto& f : M.radicands()) j["radicands"].push_back(to_json(f));
  return j;
}

inline json field_summary_json(const AbExt& M) {
  json j = ext_spec_json(M);
  j["name"] = M.str();
  j["degree"] = M.degree();
  j["exponent"] = M.exponent();
  json ram = json::array();
  for (const auto& P : ramified_places(M))
    ram.push_back({{"place", to_json(P)}, {"local_degree", local_degree(M, P)}, {"e", ramification_index(M, P)}});
  j["ramified"] = ram;
  if (M.base().is_rationals()) j["real_place"] = real_place_is_complex(M) ? "complex" : "real";
  json s = json::object();
  for (std::int64_t p : degree_primes(M))
    if (p != M.base().characteristic()) s[std::to_string(p)] = roots_of_unity_s(M, p);
  j["s"] = s;
  return j;
}

inline json to_json(const LocalData& L) {
  json dec = json::array(), in = json::array();
  for (const auto& g : L.decomposition) dec.push_back(g);
  for (const auto& g : L.inertia) in.push_back(g);
  return {{"place", to_json(L.place)},       {"local_degree", L.local_degree},
          {"ramification_index", L.ramification_index}, {"frobenius", L.frobenius},
          {"decomposition", dec},            {"inertia", in}};
}

inline json to_json(const IsolationReport& r) {
  json j{{"p", r.p}, {"u1", r.u1}, {"u2", r.u2}, {"gap", r.gap}};
  j["isolated_place"] = r.isolated_place ? to_json(*r.isolated_place) : json(nullptr);
  return j;
}

// ---------------------------------------------------------------------------
// Brauer classes
// ---------------------------------------------------------------------------

inline json to_json(const BrauerClass& a) {
  json inv = json::array();
  for (const auto& [P, x] : a.invariants()) inv.push_back({{"place", to_json(P)}, {"inv", x.str()}});
  return {{"invariants", inv}};
}

inline BrauerClass class_from_json(const json& j, const BaseField& K) {
  std::map<Place, QZ> inv;
  for (const auto& e : detail::get_field<json>(j, "invariants")) {
    const Place P = place_from_json(detail::get_field<json>(e, "place"), K);
    QZ x;
    try {
      x = QZ::parse(detail::get_field<std::string>(e, "inv"));
    } catch (const InvalidArgument&) {
      throw;
    } catch (const std::exception& ex) {
      fail(std::string("json: bad invariant: ") + ex.what());
    }
    require(!inv.count(P), "json: place " + P.str() + " listed twice");
    inv[P] = x;
  }
  return make_class(K, inv);
}

inline json to_json(const IsolationInequality& r) {
  json j{{"vacuous", r.vacuous}, {"lhs", r.lhs}, {"rhs", r.rhs}, {"holds", r.holds}};
  j["place"] = r.place ? to_json(*r.place) : json(nullptr);
  return j;
}

// ---------------------------------------------------------------------------
// covers and bounds
// ---------------------------------------------------------------------------

inline json to_json(const Check& c) { return {{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}}; }

inline json to_json(const Cover& C) {
  json extra = json::array();
  for (const auto& f : C.extra) extra.push_back(to_json(f));
  return {{"L", C.L.str()}, {"n_prime", C.n_prime}, {"extra", extra}, {"degree_over_M", C.rel_degree}};
}

inline json to_json(const CertReport& r) {
  json S = json::array(), checks = json::array();
  for (const auto& P : r.S) S.push_back(to_json(P));
  for (const auto& c : r.checks) checks.push_back(to_json(c));
  json j{{"condition", r.condition}, {"m", r.m}, {"S", S}, {"checks", checks},
         {"candidates_tried", r.candidates_tried}, {"pass", r.pass()}};
  if (r.p) {
    j["p"] = r.p;
    j["n"] = r.n;
  }
  j["witness"] = r.witness ? to_json(*r.witness) : json(nullptr);
  if (!r.note.empty()) j["note"] = r.note;
  return j;
}

inline json to_json(const BoundReport& b) {
  json j{{"p", b.p},         {"chi_order", b.chi_order}, {"s", b.s},
         {"T", b.T},         {"T_degree", b.T_degree},   {"sylow_noncyclic", b.sylow_noncyclic},
         {"lower", b.lower}, {"statement", b.statement}, {"semantics", b.semantics}};
  j["r"] = b.r ? json(*b.r) : json(nullptr);
  j["ceiling"] = b.ceiling ? json(*b.ceiling) : json(nullptr);
  j["exact"] = b.exact ? json(*b.exact) : json(nullptr);
  j["upper"] = b.exact ? json(*b.exact) : (b.ceiling ? json(*b.ceiling) : json(nullptr));
  return j;
}

inline json to_json(const InertiaBoundReport& r) {
  return {{"place", to_json(r.place)}, {"e", r.e}, {"bound", r.bound},
          {"full_local_degree", r.full_local_degree}, {"holds", r.holds}};
}

// ---------------------------------------------------------------------------
// group extensions
// ---------------------------------------------------------------------------

inline CentralExt groupext_from_json(const json& j) {
  const auto p = detail::get_field<std::int64_t>(j, "p");
  const auto a = detail::get_field<int>(j, "a");
  const auto b = detail::get_field<std::vector<int>>(j, "b");
  const auto t = j.contains("t") ? detail::get_field<std::vector<int>>(j, "t") : std::vector<int>(b.size(), 0);
  auto c = j.contains("c") ? detail::get_field<std::vector<std::vector<int>>>(j, "c")
                           : std::vector<std::vector<int>>(b.size(), std::vector<int>(b.size(), 0));
  return CentralExt::build(p, a, b, t, std::move(c));
}

inline json to_json(const CentralExt& E) {
  return {{"p", E.p()}, {"a", E.a()}, {"b", E.B().orders()}, {"t", E.t()}, {"c", E.c()}};
}

inline json to_json(const BetaLawsReport& r) {
  return {{"pairs", r.pairs},
          {"alternating_violations", r.alternating_violations},
          {"bimultiplicative_violations", r.bimultiplicative_violations},
          {"lift_violations", r.lift_violations},
          {"ok", r.ok()}};
}

inline json to_json(const PowerMapReport& r) {
  return {{"gamma_homomorphism", r.gamma_homomorphism},
          {"criterion", r.criterion},
          {"consistent", r.consistent},
          {"pair_identity_violations", r.pair_identity_violations},
          {"cyclic_fiber_violations", r.cyclic_fiber_violations},
          {"ok", r.ok()}};
}

inline json to_json(const ScanResult& s) {
  json hits = json::array();
  for (const auto& E : s.hits) hits.push_back(to_json(E));
  return {{"enumerated", s.enumerated}, {"noncyclic_B", s.noncyclic_B}, {"hits", hits},
          {"counterexamples", s.counterexamples}};
}

// ---------------------------------------------------------------------------
// reports and the suite
// ---------------------------------------------------------------------------

inline json to_json(const ExampleReport& r) {
  json facts = json::array();
  for (const auto& f : r.facts) facts.push_back(to_json(f));
  json j{{"id", r.id}, {"parameters", r.parameters}, {"facts", facts}, {"verdict", r.verdict()}};
  if (!r.note.empty()) j["note"] = r.note;
  return j;
}

inline json to_json(const BatteryResult& b) {
  return {{"name", b.name},         {"cases", b.cases},   {"violations", b.violations},
          {"failures", b.failures}, {"seconds", b.seconds}, {"pass", b.pass()}};
}

inline json to_json(const SuiteSummary& s) {
  json bats = json::array();
  for (const auto& b : s.batteries) bats.push_back(to_json(b));
  return {{"seed", s.seed}, {"batteries", bats}, {"pass", s.pass()}};
}

}  // namespace ncp
