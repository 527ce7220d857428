#pragma once

// Reproductions of the worked examples: the biquadratic fields Q(sqrt q, sqrt -l),
// the bicyclic Kummer fields over F_q(t), and the search for a bicyclic
// extension without isolated primes and without p-covers of local degree p
// at a chosen place.
//
// Each report is a checklist of named facts with the computed values; the
// verdict is their conjunction. Reports are deterministic.

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ncp/abext.hpp"
#include "ncp/brauer.hpp"
#include "ncp/covers.hpp"
#include "ncp/isolation.hpp"

namespace ncp {

struct ExampleReport {
  std::string id;
  std::map<std::string, std::string> parameters;
  std::vector<Check> facts;
  std::string note;

  void add(std::string name, bool pass, std::string detail) {
    facts.push_back({std::move(name), pass, std::move(detail)});
  }
  bool verdict() const {
    for (const auto& f : facts)
      if (!f.pass) return false;
    return !facts.empty();
  }
  const Check* find(const std::string& name) const {
    for (const auto& f : facts)
      if (f.name == name) return &f;
    return nullptr;
  }
};

namespace detail {

inline std::string yes_no(bool b) { return b ? "yes" : "no"; }

inline std::string places_str(const std::vector<std::pair<Place, std::int64_t>>& iso) {
  if (iso.empty()) return "none";
  std::string s;
  for (const auto& [P, p] : iso) s += (s.empty() ? "" : ", ") + P.str() + " (p=" + std::to_string(p) + ")";
  return s;
}

}  // namespace detail

// ---------------------------------------------------------------------------
// M = Q(sqrt q, sqrt -l)
// ---------------------------------------------------------------------------

inline bool multiquadratic_hypotheses(std::int64_t l, std::int64_t q) {
  return q % 4 == 3 && mod(q + l, 8) != 0 && q != l && legendre(q, l) == -1;
}

// Eight facts for M = Q(sqrt q, sqrt -l): the hypotheses, [M:Q]_l = 4, the
// case split at q or 2, no isolated primes, K_1 = Q(sqrt q) real but M not,
// -1 a non-square mod q, an empty abelian cover scan at l, and the witness
// class of index 8 with restricted index 2 (fiber index 8).
inline ExampleReport multiquadratic_example(std::int64_t l, std::int64_t q, std::int64_t radicand_bound = 1000) {
  require(l > 2 && is_prime(l) && q > 2 && is_prime(q), "l and q must be odd primes");
  ExampleReport rep;
  rep.id = "multiquadratic";
  rep.parameters = {{"l", std::to_string(l)}, {"q", std::to_string(q)}, {"bound", std::to_string(radicand_bound)}};
  const bool hyp = multiquadratic_hypotheses(l, q);
  rep.add("hypotheses", hyp,
          "q mod 4 = " + std::to_string(q % 4) + ", (q + l) mod 8 = " + std::to_string(mod(q + l, 8)) +
              ", (q|l) = " + std::to_string(legendre(q, l)));
  const BaseField Q = BaseField::rationals();
  const Place Pl = Place::prime(l);
  std::optional<AbExt> Mopt;
  try {
    Mopt = AbExt::build(Q, 2, {Element::from_integer(q), Element::from_integer(-l)});
  } catch (const InvalidArgument& e) {
    rep.add("extension", false, e.what());
    return rep;
  }
  const AbExt& M = *Mopt;
  const std::int64_t dl = local_degree(M, Pl);
  rep.add("[M:Q]_l = 4", dl == 4, "[M:Q]_l = " + std::to_string(dl));

  if (l % 4 == 3) {
    const std::int64_t dq = local_degree(M, Place::prime(q));
    rep.add("case split: [M:Q]_q = 4 (l = 3 mod 4)", dq == 4, "[M:Q]_q = " + std::to_string(dq));
  } else {
    const std::int64_t d2 = local_degree(M, Place::prime(2));
    rep.add("case split: [M:Q]_2 = 4 (l = 1 mod 4)", d2 == 4, "[M:Q]_2 = " + std::to_string(d2));
  }

  const auto iso = isolated_places(M);
  rep.add("no isolated primes", iso.empty(), detail::places_str(iso));

  const AbExt K1 = M.sub_extension({0});
  const bool k1_real = !real_place_is_complex(K1);
  const bool m_complex = real_place_is_complex(M);
  rep.add("K_1 real, M not", k1_real && m_complex,
          "K_1 real: " + detail::yes_no(k1_real) + ", M complex: " + detail::yes_no(m_complex));

  const int sym = legendre(-1, q);
  rep.add("-1 non-square mod q", sym == -1, "(-1|q) = " + std::to_string(sym));

  const CertReport scan = check_Bm(M, 2, {Pl}, CoverFamily{radicand_bound, 2, 1, 2'000'000});
  rep.add("no abelian 2-cover with [L:M]_l = 2", !scan.witness.has_value(),
          scan.witness ? "witness " + scan.witness->L.str()
                       : "scanned " + std::to_string(scan.candidates_tried) + " radicands |d| <= " +
                             std::to_string(radicand_bound));

  try {
    const BrauerClass a = construct_class(M, 2, {Pl});
    const std::int64_t ind = index(a);
    const std::int64_t ind_l = to_int64(a.invariant(Pl).order());
    const std::int64_t res = restricted_index(a, M);
    const std::int64_t fib = fiber_index(a, M, 4);
    rep.add("witness class of fiber index 8", ind == 8 && ind_l == 8 && res == 2 && fib == 8,
            a.str() + ": ind = " + std::to_string(ind) + ", ind_l = " + std::to_string(ind_l) +
                ", ind alpha^M = " + std::to_string(res) + ", fiber index = " + std::to_string(fib));
  } catch (const Error& e) {
    rep.add("witness class of fiber index 8", false, e.what());
  }
  return rep;
}

// ---------------------------------------------------------------------------
// M = K(t^{1/p^s}, ((t-1)(t-a))^{1/p^s}) over K = F_q(t)
// ---------------------------------------------------------------------------

// The splitting table in K_1 = K(t^{1/p^s}) and K_2 = K(((t-1)(t-a))^{1/p^s}),
// no isolated primes, full local degree at (t-a) and (t), and b_p = 0.
inline ExampleReport function_field_example(std::int64_t p, std::int64_t q, std::int64_t a) {
  require(is_prime(p), "p must be prime");
  require(is_prime(q), "q must be prime");
  require(q % p == 1, "q must be 1 mod p");
  const PrimeField F(q);
  a = F.reduce(a);
  require(a != 0 && a != 1, "a must lie in F_q minus {0, 1}");
  require(F.power_class_order(a, p) > 1, "a must not be a p-th power in F_q");
  const int s = vp(q - 1, p);
  const int n = static_cast<int>(ipow(p, static_cast<unsigned>(s)));

  ExampleReport rep;
  rep.id = "function-field";
  rep.parameters = {{"p", std::to_string(p)}, {"q", std::to_string(q)}, {"a", std::to_string(a)}};
  const BaseField K = BaseField::function_field(q);
  const Element t = Element::from_polynomial(K, {0, 1});
  const Element g = Element::from_polynomial(K, poly::mul({q - 1, 1}, {q - a, 1}, q));
  const AbExt M = AbExt::build(K, n, {t, g});
  const AbExt K1 = M.sub_extension({0});
  const AbExt K2 = M.sub_extension({1});
  const Place Pt = Place::polynomial(q, {0, 1});
  const Place P1 = Place::polynomial(q, {q - 1, 1});
  const Place Pa = Place::polynomial(q, {q - a, 1});

  rep.add("s = v_p(q - 1)", s >= 1 && roots_of_unity_s(M, p) == s,
          "s = " + std::to_string(s) + ", exponent p^s = " + std::to_string(n));
  rep.add("t = a mod (t-a) is not a p-th power", F.power_class_order(residue_rep(Pa, t)[0], p) > 1,
          "residue " + std::to_string(residue_rep(Pa, t)[0]));
  rep.add("(t-1)(t-a) = a mod t", residue_rep(Pt, g) == poly::Poly{a},
          "residue " + std::to_string(residue_rep(Pt, g)[0]));

  auto inert = [&](const AbExt& E, const Place& P) {
    return local_degree(E, P) == n && ramification_index(E, P) == 1;
  };
  auto totally_ramified = [&](const AbExt& E, const Place& P) { return ramification_index(E, P) == n; };
  auto split = [&](const AbExt& E, const Place& P) { return local_degree(E, P) == 1; };
  auto show = [&](const AbExt& E, const Place& P) {
    return "[E:K]_P = " + std::to_string(local_degree(E, P)) + ", e = " + std::to_string(ramification_index(E, P));
  };
  rep.add("(t-a) inert in K_1", inert(K1, Pa), show(K1, Pa));
  rep.add("(t-a) totally ramified in K_2", totally_ramified(K2, Pa), show(K2, Pa));
  rep.add("(t) totally ramified in K_1", totally_ramified(K1, Pt), show(K1, Pt));
  rep.add("(t) inert in K_2", inert(K2, Pt), show(K2, Pt));
  rep.add("(t-1) splits completely in K_1", split(K1, P1), show(K1, P1));
  rep.add("(t-1) totally ramified in K_2", totally_ramified(K2, P1), show(K2, P1));

  const std::int64_t full = M.degree();
  const bool full_a = local_degree(M, Pa) == full;
  const bool full_t = local_degree(M, Pt) == full;
  rep.add("(t-a) and (t) have full local degree in M", full_a && full_t,
          "[M:K]_(t-a) = " + std::to_string(local_degree(M, Pa)) + ", [M:K]_(t) = " +
              std::to_string(local_degree(M, Pt)) + ", [M:K] = " + std::to_string(full));
  const auto iso = isolated_places(M);
  rep.add("no isolated primes", iso.empty(), detail::places_str(iso));

  const bool table = rep.verdict();
  const BoundReport b = bound_report(M, p, n, table);
  rep.add("b_p = 0", b.exact.has_value() && *b.exact == 0, b.statement);
  return rep;
}

// ---------------------------------------------------------------------------
// Bicyclic extensions with prescribed splitting
// ---------------------------------------------------------------------------

// Finds q_1, q_2 with N(q_i) = 1 mod p^s but not mod p^{s+1}, states the
// splitting targets (K_1: P inert, q_1 totally ramified, q_2 split;
// K_2: q_1 inert, P and q_2 totally ramified) and realizes them by Kummer
// radicands f_1 = c q_1, f_2 = c P q_2^j when such exist in the scan.
inline ExampleReport bicyclic_realization(const BaseField& K, std::int64_t p, const Place& P,
                                        std::int64_t search_bound = 100'000, std::int64_t cover_bound = 200) {
  require(is_prime(p), "p must be prime");
  require(p != K.characteristic(), "p must differ from the characteristic");
  require(P.belongs_to(K) && !P.is_real(), "P must be a finite place of " + K.str());
  const int s = K.is_rationals() ? (p == 2 ? 1 : 0) : vp(K.q - 1, p);
  require(s > 0, "s_p(K) = 0: K contains no p-th roots of unity");
  require(P.residue_norm() % p != 0, "p divides N(P)");
  const std::int64_t ps = ipow(p, static_cast<unsigned>(s));
  const int n = static_cast<int>(ps);

  ExampleReport rep;
  rep.id = "bicyclic";
  rep.parameters = {{"field", K.str()}, {"p", std::to_string(p)}, {"P", P.str()}, {"s", std::to_string(s)}};

  std::vector<Place> qs;
  for_each_place(K, search_bound, [&](const Place& Q) {
    const std::int64_t N = Q.residue_norm();
    if (Q == P || N % p == 0 || Q.is_infinity()) return true;
    if (mod(N, ps) == 1 && mod(N, ps * p) != 1) qs.push_back(Q);
    return qs.size() < 2;
  });
  if (qs.size() < 2)
    throw SearchExhausted("no two places with N = 1 mod p^s, N != 1 mod p^(s+1) below " + std::to_string(search_bound));
  const Place q1 = qs[0];
  const Place q2 = qs[1];
  rep.parameters["q1"] = q1.str();
  rep.parameters["q2"] = q2.str();
  rep.add("norm conditions on q_1, q_2", true,
          "N(q_1) = " + std::to_string(q1.residue_norm()) + ", N(q_2) = " + std::to_string(q2.residue_norm()));

  auto place_element = [&](const Place& Q) {
    return K.is_rationals() ? Element::from_integer(Q.value) : Element::from_polynomial(K, Q.coeffs);
  };
  std::vector<Element> units;
  if (K.is_rationals()) {
    for (std::int64_t u : {1, -1, 2, -2}) units.push_back(Element::from_integer(u));
  } else {
    for (std::int64_t c = 1; c < K.q; ++c) units.push_back(Element::constant(K, c));
  }
  auto inert = [&](const AbExt& E, const Place& Q) {
    return local_degree(E, Q) == n && ramification_index(E, Q) == 1;
  };
  auto totally_ramified = [&](const AbExt& E, const Place& Q) { return ramification_index(E, Q) == n; };
  auto split = [&](const AbExt& E, const Place& Q) { return local_degree(E, Q) == 1; };

  std::optional<Element> f1;
  for (const auto& c : units) {
    const Element f = c * place_element(q1);
    const AbExt E = AbExt::build(K, n, {f});
    if (inert(E, P) && totally_ramified(E, q1) && split(E, q2)) {
      f1 = f;
      break;
    }
  }
  std::optional<Element> f2;
  for (const auto& c : units) {
    for (int j = 1; j < n && !f2; ++j) {
      if (j % p == 0) continue;
      const Element f = c * place_element(P) * place_element(q2).pow(j);
      const AbExt E = AbExt::build(K, n, {f});
      if (inert(E, q1) && totally_ramified(E, P) && totally_ramified(E, q2)) f2 = f;
    }
    if (f2) break;
  }
  if (!f1 || !f2) {
    rep.note = "no Kummer realization with the scanned radicands; targets reported only";
    return rep;
  }
  rep.parameters["f1"] = f1->str();
  rep.parameters["f2"] = f2->str();
  const AbExt M = AbExt::build(K, n, {*f1, *f2});
  rep.add("K_1: P inert, q_1 totally ramified, q_2 split", true, "K_1 = " + M.sub_extension({0}).str());
  rep.add("K_2: q_1 inert, P and q_2 totally ramified", true, "K_2 = " + M.sub_extension({1}).str());
  const bool fullP = local_degree(M, P) == M.degree();
  const bool fullq1 = local_degree(M, q1) == M.degree();
  rep.add("P and q_1 have full local degree in M", fullP && fullq1,
          "[M:K]_P = " + std::to_string(local_degree(M, P)) + ", [M:K]_q1 = " + std::to_string(local_degree(M, q1)));
  const auto iso = isolated_places(M);
  rep.add("no isolated primes", iso.empty(), detail::places_str(iso));
  const CertReport scan = check_Bm(M, p, {P}, CoverFamily{cover_bound, n, 1, 2'000'000});
  rep.add("no abelian p-cover with [L:M]_P = p", !scan.witness.has_value(),
          scan.witness ? "witness " + scan.witness->L.str()
                       : "scanned " + std::to_string(scan.candidates_tried) + " radicands");
  return rep;
}

}  // namespace ncp
