#pragma once

// Base fields K in {Q, F_q(t)}, their places, and elements of K kept
// in factored form.
//
// Places of Q are the rational primes and the real place. Places of F_q(t)
// are the monic irreducible polynomials and the degree place (uniformizer
// 1/t), which is nonarchimedean like every other place of a function field.
//
// Places are totally ordered: the real place first, then by residue norm,
// then polynomial places before the degree place, then lexicographically on
// coefficients read from the top degree down.

#include <compare>
#include <cstdint>
#include <functional>
#include <map>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "ncp/arith.hpp"
#include "ncp/error.hpp"

namespace ncp {

// ---------------------------------------------------------------------------
// Base fields
// ---------------------------------------------------------------------------

enum class FieldKind { Rationals, FunctionField };

struct BaseField {
  FieldKind kind = FieldKind::Rationals;
  std::int64_t q = 0;  // constant field size, function-field case only

  static BaseField rationals() { return {}; }
  static BaseField function_field(std::int64_t q) {
    require(is_prime(q), "F_q(t): q must be prime, got " + std::to_string(q));
    return {FieldKind::FunctionField, q};
  }

  bool is_rationals() const { return kind == FieldKind::Rationals; }
  bool is_function_field() const { return kind == FieldKind::FunctionField; }
  // 0 for Q, q for F_q(t).
  std::int64_t characteristic() const { return is_rationals() ? 0 : q; }

  bool operator==(const BaseField&) const = default;

  std::string str() const { return is_rationals() ? "Q" : "F_" + std::to_string(q) + "(t)"; }
};

// ---------------------------------------------------------------------------
// Polynomials over F_q (ascending coefficients, trimmed, entries in [0, q))
// ---------------------------------------------------------------------------

namespace poly {

using Poly = std::vector<std::int64_t>;

inline Poly normalize(Poly a, std::int64_t q) {
  for (auto& c : a) c = mod(c, q);
  while (!a.empty() && a.back() == 0) a.pop_back();
  return a;
}

inline int degree(const Poly& a) { return static_cast<int>(a.size()) - 1; }
inline bool is_monic(const Poly& a) { return !a.empty() && a.back() == 1; }

inline Poly sub(const Poly& a, const Poly& b, std::int64_t q) {
  Poly r(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] = mod(r[i] - b[i], q);
  return normalize(std::move(r), q);
}

inline Poly mul(const Poly& a, const Poly& b, std::int64_t q) {
  if (a.empty() || b.empty()) return {};
  Poly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + a[i] * b[j]) % q;
  }
  return normalize(std::move(r), q);
}

// Remainder of a modulo b (b nonzero).
inline Poly rem(Poly a, const Poly& b, std::int64_t q) {
  require(!b.empty(), "poly: division by zero");
  const int db = degree(b);
  const std::int64_t lead_inv = powmod(b.back(), static_cast<std::uint64_t>(q - 2), q);
  while (degree(a) >= db) {
    const int shift = degree(a) - db;
    const std::int64_t c = mulmod(a.back(), lead_inv, q);
    for (int i = 0; i <= db; ++i) a[shift + i] = mod(a[shift + i] - c * b[i], q);
    while (!a.empty() && a.back() == 0) a.pop_back();
  }
  return a;
}

// Quotient of a by b, assuming b divides a.
inline Poly exact_div(const Poly& a, const Poly& b, std::int64_t q) {
  const int db = degree(b);
  Poly r = a;
  Poly quot(static_cast<std::size_t>(std::max(0, degree(a) - db + 1)), 0);
  const std::int64_t lead_inv = powmod(b.back(), static_cast<std::uint64_t>(q - 2), q);
  while (degree(r) >= db) {
    const int shift = degree(r) - db;
    const std::int64_t c = mulmod(r.back(), lead_inv, q);
    quot[static_cast<std::size_t>(shift)] = c;
    for (int i = 0; i <= db; ++i) r[shift + i] = mod(r[shift + i] - c * b[i], q);
    while (!r.empty() && r.back() == 0) r.pop_back();
  }
  return normalize(std::move(quot), q);
}

inline Poly mulmod(const Poly& a, const Poly& b, const Poly& m, std::int64_t q) {
  return rem(mul(a, b, q), m, q);
}

inline Poly powmod(Poly base, std::uint64_t e, const Poly& m, std::int64_t q) {
  Poly result = rem(Poly{1}, m, q);
  base = rem(std::move(base), m, q);
  while (e > 0) {
    if (e & 1U) result = mulmod(result, base, m, q);
    base = mulmod(base, base, m, q);
    e >>= 1U;
  }
  return result;
}

inline std::int64_t eval(const Poly& a, std::int64_t x, std::int64_t q) {
  std::int64_t r = 0;
  for (auto it = a.rbegin(); it != a.rend(); ++it) r = mod(r * x + *it, q);
  return r;
}

// Lexicographic comparison of equal-degree polynomials from the top down.
inline std::strong_ordering compare_from_top(const Poly& a, const Poly& b) {
  if (a.size() != b.size()) return a.size() <=> b.size();
  for (std::size_t i = a.size(); i-- > 0;)
    if (a[i] != b[i]) return a[i] <=> b[i];
  return std::strong_ordering::equal;
}

// The monic polynomial of degree d whose lower coefficients are the base-q
// digits of index (constant term least significant).
inline Poly monic_from_index(int d, std::int64_t index, std::int64_t q) {
  Poly a(static_cast<std::size_t>(d) + 1, 0);
  for (int i = 0; i < d; ++i) {
    a[static_cast<std::size_t>(i)] = index % q;
    index /= q;
  }
  a[static_cast<std::size_t>(d)] = 1;
  return a;
}

inline std::string to_string(const Poly& a) {
  if (a.empty()) return "0";
  std::string out;
  for (int i = degree(a); i >= 0; --i) {
    const std::int64_t c = a[static_cast<std::size_t>(i)];
    if (c == 0) continue;
    if (!out.empty()) out += "+";
    if (i == 0) {
      out += std::to_string(c);
      continue;
    }
    if (c != 1) out += std::to_string(c) + "*";
    out += "t";
    if (i > 1) out += "^" + std::to_string(i);
  }
  return out;
}

// Parses sums of terms "c*t^k", "t^k", "t", "c" with + and - signs.
inline Poly parse(const std::string& text, std::int64_t q) {
  std::string s;
  for (char ch : text)
    if (ch != ' ') s += ch;
  require(!s.empty(), "poly: empty polynomial");
  Poly out;
  std::size_t i = 0;
  auto bad = [&]() { fail("poly: cannot parse '" + text + "'"); };
  while (i < s.size()) {
    std::int64_t sign = 1;
    if (s[i] == '+' || s[i] == '-') {
      sign = s[i] == '-' ? -1 : 1;
      ++i;
    }
    std::int64_t coeff = 1;
    bool have_coeff = false;
    std::size_t start = i;
    while (i < s.size() && s[i] >= '0' && s[i] <= '9') ++i;
    if (i > start) {
      coeff = std::stoll(s.substr(start, i - start));
      have_coeff = true;
    }
    int power = 0;
    if (i < s.size() && s[i] == '*') {
      if (!have_coeff) bad();
      ++i;
      if (i >= s.size() || s[i] != 't') bad();
    }
    if (i < s.size() && s[i] == 't') {
      ++i;
      power = 1;
      if (i < s.size() && s[i] == '^') {
        ++i;
        start = i;
        while (i < s.size() && s[i] >= '0' && s[i] <= '9') ++i;
        if (i == start) bad();
        power = std::stoi(s.substr(start, i - start));
      }
    } else if (!have_coeff) {
      bad();
    }
    if (out.size() <= static_cast<std::size_t>(power)) out.resize(static_cast<std::size_t>(power) + 1, 0);
    out[static_cast<std::size_t>(power)] = mod(out[static_cast<std::size_t>(power)] + sign * coeff, q);
    if (i < s.size() && s[i] != '+' && s[i] != '-') bad();
  }
  return normalize(std::move(out), q);
}

// Incrementally generated list of monic irreducibles, degree by degree.
// Irreducibility is decided by trial division against all monic
// irreducibles of degree at most half the candidate's degree.
class IrreducibleTable {
 public:
  explicit IrreducibleTable(std::int64_t q) : q_(q) {}

  // Monic irreducibles of exactly degree d, in lexicographic order.
  const std::vector<Poly>& of_degree(int d) {
    while (static_cast<int>(by_degree_.size()) <= d) extend();
    return by_degree_[static_cast<std::size_t>(d)];
  }

  bool is_irreducible(const Poly& a) {
    const int d = degree(a);
    if (d < 1) return false;
    for (int e = 1; 2 * e <= d; ++e)
      for (const auto& f : of_degree(e))
        if (rem(a, f, q_).empty()) return false;
    return true;
  }

 private:
  void extend() {
    const int d = static_cast<int>(by_degree_.size());
    std::vector<Poly> found;
    if (d >= 1) {
      const std::int64_t count = ipow(q_, static_cast<unsigned>(d));
      for (std::int64_t idx = 0; idx < count; ++idx) {
        Poly cand = monic_from_index(d, idx, q_);
        bool irreducible = true;
        for (int e = 1; 2 * e <= d && irreducible; ++e)
          for (const auto& f : by_degree_[static_cast<std::size_t>(e)])
            if (rem(cand, f, q_).empty()) {
              irreducible = false;
              break;
            }
        if (irreducible) found.push_back(std::move(cand));
      }
    }
    by_degree_.push_back(std::move(found));
  }

  std::int64_t q_;
  std::vector<std::vector<Poly>> by_degree_;
};

inline bool is_irreducible(const Poly& a, std::int64_t q) {
  IrreducibleTable table(q);
  return table.is_irreducible(normalize(a, q));
}

}  // namespace poly

// ---------------------------------------------------------------------------
// Places
// ---------------------------------------------------------------------------

enum class PlaceKind { Real, Prime, Poly, Infinity };

// A place of Q or of F_q(t).
struct Place {
  PlaceKind kind = PlaceKind::Real;
  std::int64_t value = 0;   // the prime p, or q for function-field places
  poly::Poly coeffs;        // monic irreducible, polynomial places only

  static Place real() { return {}; }
  static Place prime(std::int64_t p) {
    require(ncp::is_prime(p), "place: " + std::to_string(p) + " is not prime");
    return {PlaceKind::Prime, p, {}};
  }
  static Place polynomial(std::int64_t q, poly::Poly coeffs) {
    coeffs = poly::normalize(std::move(coeffs), q);
    require(poly::is_monic(coeffs) && poly::is_irreducible(coeffs, q),
            "place: " + poly::to_string(coeffs) + " is not monic irreducible over F_" + std::to_string(q));
    return {PlaceKind::Poly, q, std::move(coeffs)};
  }
  // Builds a polynomial place without the irreducibility check (for callers
  // that already enumerated irreducibles).
  static Place polynomial_unchecked(std::int64_t q, poly::Poly coeffs) {
    return {PlaceKind::Poly, q, std::move(coeffs)};
  }
  static Place infinity(std::int64_t q) { return {PlaceKind::Infinity, q, {}}; }

  bool is_real() const { return kind == PlaceKind::Real; }
  bool is_archimedean() const { return kind == PlaceKind::Real; }
  bool is_prime() const { return kind == PlaceKind::Prime; }
  bool is_poly() const { return kind == PlaceKind::Poly; }
  bool is_infinity() const { return kind == PlaceKind::Infinity; }

  // Degree of the residue field over the prime field (1 for Q and for the
  // degree place).
  int degree() const { return is_poly() ? poly::degree(coeffs) : 1; }

  // Residue characteristic: p for a rational prime, q for F_q(t) places.
  std::int64_t residue_characteristic() const {
    require(!is_real(), "the real place has no residue field");
    return value;
  }

  // Size of the residue field.
  std::int64_t residue_norm() const {
    require(!is_real(), "the real place has no residue norm");
    if (is_poly()) return ipow(value, static_cast<unsigned>(degree()));
    return value;
  }

  bool belongs_to(const BaseField& K) const {
    if (K.is_rationals()) return is_real() || is_prime();
    return (is_poly() || is_infinity()) && value == K.q;
  }

  std::string str() const {
    switch (kind) {
      case PlaceKind::Real: return "real";
      case PlaceKind::Prime: return std::to_string(value);
      case PlaceKind::Poly: return "(" + poly::to_string(coeffs) + ")";
      case PlaceKind::Infinity: return "inf";
    }
    return "?";
  }

  bool operator==(const Place& o) const { return kind == o.kind && value == o.value && coeffs == o.coeffs; }

  std::strong_ordering operator<=>(const Place& o) const {
    if (is_real() || o.is_real()) return o.is_real() <=> is_real();
    if (auto c = residue_norm() <=> o.residue_norm(); c != 0) return c;
    if (auto c = static_cast<int>(kind) <=> static_cast<int>(o.kind); c != 0) return c;
    if (auto c = value <=> o.value; c != 0) return c;
    return poly::compare_from_top(coeffs, o.coeffs);
  }
};

// Visits the nonarchimedean places of K with residue norm <= bound in
// ascending order; the visitor returns false to stop early.
template <class Visitor>
void for_each_place(const BaseField& K, std::int64_t bound, Visitor&& visit) {
  if (K.is_rationals()) {
    if (bound <= 4'000'000) {
      for (std::int64_t p : primes_up_to(bound))
        if (!visit(Place{PlaceKind::Prime, p, {}})) return;
    } else {
      for (std::int64_t p = 2; p <= bound; ++p)
        if (is_prime(p) && !visit(Place{PlaceKind::Prime, p, {}})) return;
    }
    return;
  }
  const std::int64_t q = K.q;
  poly::IrreducibleTable table(q);
  std::int64_t norm = q;
  for (int d = 1; norm <= bound; ++d, norm *= q) {
    for (const auto& f : table.of_degree(d))
      if (!visit(Place::polynomial_unchecked(q, f))) return;
    if (d == 1 && !visit(Place::infinity(q))) return;
    if (norm > bound / q) break;
  }
}

inline std::ostream& operator<<(std::ostream& os, const Place& P) { return os << P.str(); }

inline std::vector<Place> enumerate_places(const BaseField& K, std::int64_t bound, bool include_real = false) {
  require(bound >= 2, "enumerate_places: bound must be at least 2");
  std::vector<Place> out;
  for_each_place(K, bound, [&](const Place& P) {
    out.push_back(P);
    return true;
  });
  if (include_real && K.is_rationals()) out.push_back(Place::real());
  return out;
}

// ---------------------------------------------------------------------------
// Elements of K in factored form
// ---------------------------------------------------------------------------

// A nonzero element of K: a unit (sign over Q, constant over F_q(t)) times
// a product of prime places raised to integer exponents.
struct Element {
  BaseField field;
  std::int64_t unit = 1;
  std::map<Place, std::int64_t> factors;  // rational primes / monic irreducibles, exponents != 0

  static Element one(const BaseField& K) { return Element{K, 1, {}}; }

  static Element from_integer(std::int64_t n) {
    require(n != 0, "element: zero is not a unit of K");
    Element e{BaseField::rationals(), n < 0 ? -1 : 1, {}};
    for (const auto& [p, k] : factorize(n)) e.factors.emplace(Place{PlaceKind::Prime, p, {}}, k);
    return e;
  }

  static Element constant(const BaseField& K, std::int64_t c) {
    if (K.is_rationals()) return from_integer(c);
    c = mod(c, K.q);
    require(c != 0, "element: zero constant");
    return Element{K, c, {}};
  }

  // A polynomial over F_q, factored into monic irreducibles by trial division.
  static Element from_polynomial(const BaseField& K, poly::Poly a) {
    require(K.is_function_field(), "element: polynomials need a function field");
    const std::int64_t q = K.q;
    a = poly::normalize(std::move(a), q);
    require(!a.empty(), "element: zero polynomial");
    Element e{K, a.back(), {}};
    const std::int64_t lead_inv = powmod(a.back(), static_cast<std::uint64_t>(q - 2), q);
    for (auto& c : a) c = mulmod(c, lead_inv, q);
    poly::IrreducibleTable table(q);
    for (int d = 1; 2 * d <= poly::degree(a); ++d) {
      for (const auto& f : table.of_degree(d)) {
        while (poly::degree(a) >= d && poly::rem(a, f, q).empty()) {
          a = poly::exact_div(a, f, q);
          ++e.factors[Place::polynomial_unchecked(q, f)];
        }
      }
    }
    if (poly::degree(a) >= 1) ++e.factors[Place::polynomial_unchecked(q, a)];
    return e;
  }

  Element operator*(const Element& o) const {
    require(field == o.field, "element: mixed base fields");
    Element r = *this;
    r.unit = field.is_rationals() ? unit * o.unit : mulmod(unit, o.unit, field.q);
    for (const auto& [P, k] : o.factors) {
      auto& slot = r.factors[P];
      slot += k;
      if (slot == 0) r.factors.erase(P);
    }
    return r;
  }

  Element pow(std::int64_t k) const {
    Element r = one(field);
    if (k == 0) return r;
    r.unit = field.is_rationals() ? (k % 2 != 0 ? unit : 1)
                                  : powmod(unit, static_cast<std::uint64_t>(mod(k, field.q - 1)), field.q);
    for (const auto& [P, e] : factors) r.factors.emplace(P, e * k);
    return r;
  }

  // v_P(this). The degree place valuation is minus the total degree.
  std::int64_t valuation(const Place& P) const {
    require(!P.is_real(), "valuation: the real place is archimedean");
    if (P.is_infinity()) {
      std::int64_t v = 0;
      for (const auto& [f, k] : factors) v -= k * f.degree();
      return v;
    }
    auto it = factors.find(P);
    return it == factors.end() ? 0 : it->second;
  }

  // Over Q: sign of the element.
  int sign() const {
    require(field.is_rationals(), "sign: only defined over Q");
    return unit < 0 ? -1 : 1;
  }

  // Over Q: the element divided by P^{v_P}, reduced modulo `modulus` (a power
  // of P, or P itself).
  std::int64_t unit_part_mod(const Place& P, std::int64_t modulus) const {
    require(field.is_rationals() && P.is_prime(), "unit_part_mod: rational primes only");
    std::int64_t r = mod(unit, modulus);
    for (const auto& [ell, k] : factors) {
      if (ell == P) continue;
      const std::int64_t base = k > 0 ? ell.value : powmod(ell.value, static_cast<std::uint64_t>(
                                                                          totient_of_prime_power(P.value, modulus) - 1),
                                                           modulus);
      r = mulmod(r, powmod(base, static_cast<std::uint64_t>(k > 0 ? k : -k), modulus), modulus);
    }
    return r;
  }

  // The residue of this * pi^{-v_P} at a finite place, where pi is P itself
  // (or 1/t at the degree place). Over Q the result has one coefficient.
  poly::Poly unit_residue(const Place& P) const {
    require(!P.is_real(), "unit_residue: the real place has no residue field");
    if (field.is_rationals()) return poly::Poly{unit_part_mod(P, P.value)};
    const std::int64_t q = field.q;
    if (P.is_infinity()) return poly::Poly{unit};
    const std::uint64_t inv_exp = static_cast<std::uint64_t>(P.residue_norm() - 2);
    poly::Poly r{unit};
    for (const auto& [f, k] : factors) {
      if (f == P) continue;
      poly::Poly base = poly::rem(f.coeffs, P.coeffs, q);
      if (k < 0) base = poly::powmod(base, inv_exp, P.coeffs, q);
      r = poly::mulmod(r, poly::powmod(base, static_cast<std::uint64_t>(k > 0 ? k : -k), P.coeffs, q), P.coeffs, q);
    }
    return r;
  }

  // Integer value over Q (for display; throws on negative exponents).
  Integer integer_value() const {
    require(field.is_rationals(), "integer_value: only defined over Q");
    Integer r = unit;
    for (const auto& [p, k] : factors) {
      require(k > 0, "integer_value: element is not an integer");
      for (std::int64_t i = 0; i < k; ++i) r *= p.value;
    }
    return r;
  }

  bool is_constant() const { return factors.empty(); }

  std::string str() const {
    if (field.is_rationals()) {
      bool integral = true;
      for (const auto& [p, k] : factors) integral = integral && k > 0;
      if (integral) return integer_value().str();
    }
    std::string out;
    if (unit != 1 || factors.empty()) out = std::to_string(unit);
    for (const auto& [P, k] : factors) {
      if (!out.empty()) out += "*";
      out += P.str();
      if (k != 1) out += "^" + std::to_string(k);
    }
    return out;
  }

  bool operator==(const Element&) const = default;

 private:
  static std::int64_t totient_of_prime_power(std::int64_t p, std::int64_t pe) { return pe / p * (p - 1); }
};

// Residue-field element of a field element: its image in k(P). Over Q and at
// degree-one places this is a single residue; otherwise a polynomial modulo P.
inline poly::Poly residue_rep(const Place& P, const Element& f) {
  require(P.belongs_to(f.field), "residue_rep: place " + P.str() + " is not a place of " + f.field.str());
  const std::int64_t v = f.valuation(P);
  require(v >= 0, "residue_rep: " + f.str() + " has a pole at " + P.str());
  if (v > 0) return {};
  return f.unit_residue(P);
}

}  // namespace ncp
