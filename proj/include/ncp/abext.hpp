#pragma once

// Abelian Kummer extensions M = K(W^{1/n}) of K in {Q, F_q(t)} and
// their local theory.
//
// M is given by an exponent n and radicands f_1..f_k generating W inside
// K^* / K^{*n}. Galois elements are vectors a in (Z/n)^k with
//
//     sigma(f_i^{1/n}) / f_i^{1/n} = zeta^{a_i},
//
// zeta = -1 over Q and zeta = g^{(q-1)/n} over F_q(t), g the smallest
// primitive root mod q. The pairing with a combination prod f_i^{c_i} is
// sum a_i c_i (mod n). When the radicands satisfy relations (covers with
// raised exponents), Gal(M/K) is the annihilator of the relation module.
//
// At a place P the image of W in K_P^* / K_P^{*n} is described by
// coordinates in Z/n. Some coordinates detect ramification (valuation mod n,
// or the -1 and 2 directions of Q_2^* / Q_2^{*2}); the remaining one is the
// power residue symbol of the unit part, which is the Frobenius character on
// the unramified part. Then
//
//     D = ann(ker(W -> all coordinates)),  I = ann(ker(W -> ramified ones)),
//
// and the Frobenius vector (unit coordinates of the f_i) is a lift of the
// Frobenius of D/I. All subgroup computations enumerate (Z/n)^k, which is
// fine at the sizes this library targets.

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "ncp/arith.hpp"
#include "ncp/error.hpp"
#include "ncp/places.hpp"

namespace ncp {

// Vector over Z/n: Galois elements, or coefficient vectors of radicand
// combinations.
using ZnVec = std::vector<int>;
using GalElt = ZnVec;

namespace zn {

inline constexpr std::int64_t kMaxEnumeration = std::int64_t{1} << 18;

inline int dot(const ZnVec& a, const ZnVec& c, int n) {
  std::int64_t s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += static_cast<std::int64_t>(a[i]) * c[i];
  return static_cast<int>(mod(s, n));
}

inline ZnVec add(const ZnVec& a, const ZnVec& b, int n) {
  ZnVec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = static_cast<int>((a[i] + b[i]) % n);
  return r;
}

inline ZnVec scale(const ZnVec& a, std::int64_t k, int n) {
  ZnVec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = static_cast<int>(mod(a[i] * k, n));
  return r;
}

inline bool is_zero(const ZnVec& a) {
  return std::all_of(a.begin(), a.end(), [](int x) { return x == 0; });
}

inline int order(const ZnVec& a, int n) { return additive_order(a, n); }

// All of (Z/n)^k, first coordinate most significant.
inline std::vector<ZnVec> all_vectors(int k, int n) {
  std::int64_t total = 1;
  for (int i = 0; i < k; ++i) {
    total *= n;
    require(total <= kMaxEnumeration, "group too large to enumerate: " + std::to_string(n) + "^" + std::to_string(k));
  }
  std::vector<ZnVec> out;
  out.reserve(static_cast<std::size_t>(total));
  ZnVec v(static_cast<std::size_t>(k), 0);
  for (std::int64_t idx = 0; idx < total; ++idx) {
    std::int64_t x = idx;
    for (int i = k - 1; i >= 0; --i) {
      v[static_cast<std::size_t>(i)] = static_cast<int>(x % n);
      x /= n;
    }
    out.push_back(v);
  }
  return out;
}

// Elements of `within` pairing to zero with every vector of `of`.
inline std::vector<ZnVec> annihilator(const std::vector<ZnVec>& of, const std::vector<ZnVec>& within, int n) {
  std::vector<ZnVec> out;
  for (const auto& a : within) {
    bool ok = true;
    for (const auto& c : of)
      if (dot(a, c, n) != 0) {
        ok = false;
        break;
      }
    if (ok) out.push_back(a);
  }
  return out;
}

// Subgroup of (Z/n)^dim generated by gens (closure).
inline std::vector<ZnVec> span(const std::vector<ZnVec>& gens, int n, std::size_t dim) {
  std::set<ZnVec> seen{ZnVec(dim, 0)};
  std::vector<ZnVec> frontier{ZnVec(dim, 0)};
  while (!frontier.empty()) {
    std::vector<ZnVec> next;
    for (const auto& v : frontier)
      for (const auto& g : gens) {
        ZnVec w = add(v, g, n);
        if (seen.insert(w).second) next.push_back(std::move(w));
      }
    frontier = std::move(next);
  }
  return {seen.begin(), seen.end()};
}

// A generating set of a subgroup, chosen greedily in the given order.
inline std::vector<ZnVec> generators(const std::vector<ZnVec>& subgroup, int n) {
  std::vector<ZnVec> gens;
  if (subgroup.empty()) return gens;
  const std::size_t dim = subgroup.front().size();
  std::set<ZnVec> covered{ZnVec(dim, 0)};
  for (const auto& v : subgroup) {
    if (covered.count(v)) continue;
    gens.push_back(v);
    const auto s = span(gens, n, dim);
    covered = std::set<ZnVec>(s.begin(), s.end());
    if (covered.size() == subgroup.size()) break;
  }
  return gens;
}

inline std::string str(const ZnVec& v) {
  std::string out = "(";
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? "," : "") + std::to_string(v[i]);
  return out + ")";
}

}  // namespace zn

// Class of an element of K^* in K^* / K^{*n}: a unit coordinate (sign over
// Q, power class of the constant over F_q(t)) and exponents mod n.
struct ClassVec {
  int unit = 0;
  std::map<Place, int> exps;

  bool is_trivial() const { return unit == 0 && exps.empty(); }
  bool is_constant() const { return exps.empty(); }
  auto operator<=>(const ClassVec&) const = default;
  bool operator==(const ClassVec&) const = default;
};

// Local description of K_P^* / K_P^{*n} with the images of the radicands.
struct LocalClassGroup {
  Place place;
  int n = 2;
  std::vector<std::string> coordinates;
  std::vector<bool> ramified;  // per coordinate: detects ramification
  std::vector<ZnVec> images;   // per radicand, one entry per coordinate
};

struct LocalData {
  Place place;
  std::vector<GalElt> decomposition;
  std::vector<GalElt> inertia;
  GalElt frobenius;  // a lift of the generator of D/I
  std::int64_t local_degree = 1;
  std::int64_t ramification_index = 1;
};

class AbExt {
 public:
  AbExt() = default;

  // Validated extension: n = 2 over Q, n | q-1 over F_q(t), radicand classes
  // independent in K^* / K^{*n} so that Gal(M/K) = (Z/n)^k.
  static AbExt build(const BaseField& K, int n, std::vector<Element> radicands) {
    AbExt M = build_general(K, n, std::move(radicands));
    require(M.relations_.size() == 1, "radicands are dependent in K^*/K^*^" + std::to_string(n));
    return M;
  }

  // Extension from arbitrary generators; relations among them are allowed
  // and Gal(M/K) is the annihilator of the relation module.
  static AbExt build_general(const BaseField& K, int n, std::vector<Element> radicands) {
    AbExt M;
    M.base_ = K;
    M.n_ = n;
    require(n >= 1, "exponent must be positive");
    if (K.is_rationals()) {
      require(n == 2, "over Q only multiquadratic extensions (n = 2) are supported");
    } else {
      require((K.q - 1) % n == 0, "n must divide q-1 for Kummer theory over F_q(t)");
      M.fq_.emplace(K.q);
    }
    for (auto& f : radicands) {
      require(f.field == K, "radicand " + f.str() + " is not an element of " + K.str());
      if (K.is_rationals()) f = squarefree_part(f);
    }
    M.radicands_ = std::move(radicands);
    const int k = M.rank();
    M.coeffs_ = zn::all_vectors(k, n);
    for (const auto& f : M.radicands_) M.generator_classes_.push_back(M.class_of_element(f));
    for (const auto& c : M.coeffs_) {
      ClassVec cls = M.class_of(c);
      if (cls.is_trivial()) M.relations_.push_back(c);
      M.classes_.insert(std::move(cls));
    }
    M.galois_ = zn::annihilator(M.relations_, M.coeffs_, n);
    return M;
  }

  const BaseField& base() const { return base_; }
  int n() const { return n_; }
  int rank() const { return static_cast<int>(radicands_.size()); }
  const std::vector<Element>& radicands() const { return radicands_; }

  // Elements of Gal(M/K) in enumeration order.
  const std::vector<GalElt>& galois() const { return galois_; }
  // Coefficient vectors c of (Z/n)^k (all combinations of radicands).
  const std::vector<ZnVec>& coefficient_space() const { return coeffs_; }
  const std::vector<ZnVec>& relations() const { return relations_; }

  std::int64_t degree() const { return static_cast<std::int64_t>(galois_.size()); }

  int exponent() const {
    int e = 1;
    for (const auto& a : galois_) e = std::lcm(e, zn::order(a, n_));
    return e;
  }

  bool contains(const GalElt& a) const { return std::find(galois_.begin(), galois_.end(), a) != galois_.end(); }

  // Pairing <sigma, prod f_i^{c_i}> in Z/n.
  int pair(const GalElt& sigma, const ZnVec& c) const { return zn::dot(sigma, c, n_); }

  ClassVec class_of(const ZnVec& c) const {
    ClassVec out;
    std::int64_t unit = 0;
    std::map<Place, std::int64_t> exps;
    for (std::size_t i = 0; i < c.size(); ++i) {
      if (c[i] == 0) continue;
      const auto& g = generator_classes_[i];
      unit += static_cast<std::int64_t>(c[i]) * g.unit;
      for (const auto& [P, e] : g.exps) exps[P] += static_cast<std::int64_t>(c[i]) * e;
    }
    out.unit = static_cast<int>(mod(unit, unit_modulus()));
    for (const auto& [P, e] : exps)
      if (mod(e, n_) != 0) out.exps.emplace(P, static_cast<int>(mod(e, n_)));
    return out;
  }

  ClassVec class_of_element(const Element& f) const {
    require(f.field == base_, "element " + f.str() + " is not in " + base_.str());
    ClassVec out;
    if (base_.is_rationals()) {
      out.unit = f.unit < 0 ? 1 : 0;
    } else {
      out.unit = fq_->dlog_root(fq_->pow(f.unit, static_cast<std::uint64_t>((base_.q - 1) / n_)), n_);
    }
    for (const auto& [P, e] : f.factors)
      if (mod(e, n_) != 0) out.exps.emplace(P, static_cast<int>(mod(e, n_)));
    return out;
  }

  // Whether the class of x lies in W (the radicand span).
  bool span_contains(const Element& x) const { return classes_.count(class_of_element(x)) > 0; }

  // prod f_i^{c_i} as a field element.
  Element element_of(const ZnVec& c) const {
    Element r = Element::one(base_);
    for (std::size_t i = 0; i < c.size(); ++i)
      if (c[i] != 0) r = r * radicands_[i].pow(c[i]);
    return base_.is_rationals() ? squarefree_part(r) : r;
  }

  // Sub-extension generated by a subset of the radicands.
  AbExt sub_extension(const std::vector<int>& indices) const {
    std::vector<Element> rads;
    for (int i : indices) rads.push_back(radicands_.at(static_cast<std::size_t>(i)));
    return build_general(base_, n_, std::move(rads));
  }

  // The constant-field prime field over F_q(t).
  const PrimeField& constants() const {
    require(fq_.has_value(), "constant field only exists over F_q(t)");
    return *fq_;
  }

  std::string str() const {
    std::string out = base_.str() + "(";
    for (std::size_t i = 0; i < radicands_.size(); ++i) {
      out += (i ? ", " : "");
      out += (n_ == 2 ? "sqrt(" : std::to_string(n_) + "rt(") + radicands_[i].str() + ")";
    }
    return out + ")";
  }

  static Element squarefree_part(const Element& f) {
    Element r = Element::one(f.field);
    r.unit = f.unit;
    for (const auto& [P, e] : f.factors)
      if (mod(e, 2) != 0) r.factors.emplace(P, 1);
    return r;
  }

 private:
  int unit_modulus() const { return base_.is_rationals() ? 2 : n_; }

  BaseField base_;
  int n_ = 2;
  std::vector<Element> radicands_;
  std::vector<ClassVec> generator_classes_;
  std::vector<ZnVec> coeffs_;
  std::vector<ZnVec> relations_;
  std::vector<GalElt> galois_;
  std::set<ClassVec> classes_;
  std::optional<PrimeField> fq_;
};

// ---------------------------------------------------------------------------
// Local theory
// ---------------------------------------------------------------------------

namespace detail {

// Odd unit classes of Q_2^* / Q_2^{*2} in the basis {-1, 5}: u mod 8.
inline std::pair<int, int> two_adic_unit_class(std::int64_t u_mod8) {
  switch (u_mod8) {
    case 1: return {0, 0};
    case 3: return {1, 1};  // 3 = -5 * square
    case 5: return {0, 1};
    case 7: return {1, 0};
    default: fail("two_adic_unit_class: not an odd residue");
  }
}

inline int power_symbol_q(const Element& f, const Place& P) {
  // n = 2 over Q, odd P
  return legendre(f.unit_part_mod(P, P.value), P.value) == 1 ? 0 : 1;
}

inline int power_symbol_fq(const AbExt& M, const Element& f, const Place& P) {
  const auto& F = M.constants();
  const int n = M.n();
  if (P.is_infinity()) return F.dlog_root(F.pow(f.unit, static_cast<std::uint64_t>((F.q() - 1) / n)), n);
  const poly::Poly r = f.unit_residue(P);
  const poly::Poly s =
      poly::powmod(r, static_cast<std::uint64_t>((P.residue_norm() - 1) / n), P.coeffs, F.q());
  require(poly::degree(s) == 0, "power residue symbol left the constant field");
  return F.dlog_root(s[0], n);
}

}  // namespace detail

inline LocalClassGroup local_class_group(const AbExt& M, const Place& P) {
  const BaseField& K = M.base();
  require(P.belongs_to(K), "place " + P.str() + " is not a place of " + K.str());
  LocalClassGroup g;
  g.place = P;
  g.n = M.n();
  const int n = M.n();
  if (P.is_real()) {
    g.coordinates = {"sign"};
    g.ramified = {false};
    for (const auto& f : M.radicands()) g.images.push_back({f.sign() < 0 ? 1 : 0});
    return g;
  }
  if (K.is_rationals() && P.value == 2) {
    require(n == 2, "wild place 2 is only supported for quadratic radicands");
    g.coordinates = {"-1", "5", "2"};
    g.ramified = {true, false, true};
    for (const auto& f : M.radicands()) {
      const auto [minus_one, five] = detail::two_adic_unit_class(f.unit_part_mod(P, 8));
      g.images.push_back({minus_one, five, static_cast<int>(mod(f.valuation(P), 2))});
    }
    return g;
  }
  require(std::gcd(static_cast<std::int64_t>(n), P.residue_characteristic()) == 1,
          "wild place " + P.str() + " for exponent " + std::to_string(n));
  g.coordinates = {"v", "unit"};
  g.ramified = {true, false};
  for (const auto& f : M.radicands()) {
    const int v = static_cast<int>(mod(f.valuation(P), n));
    const int u = K.is_rationals() ? detail::power_symbol_q(f, P) : detail::power_symbol_fq(M, f, P);
    g.images.push_back({v, u});
  }
  return g;
}

namespace detail {

inline std::vector<ZnVec> kernel(const AbExt& M, const LocalClassGroup& g, bool ramified_only) {
  std::vector<ZnVec> out;
  const int n = M.n();
  const std::size_t m = g.coordinates.size();
  for (const auto& c : M.coefficient_space()) {
    bool trivial = true;
    for (std::size_t j = 0; j < m && trivial; ++j) {
      if (ramified_only && !g.ramified[j]) continue;
      std::int64_t s = 0;
      for (std::size_t i = 0; i < c.size(); ++i) s += static_cast<std::int64_t>(c[i]) * g.images[i][j];
      trivial = mod(s, n) == 0;
    }
    if (trivial) out.push_back(c);
  }
  return out;
}

inline GalElt frobenius_coordinates(const LocalClassGroup& g) {
  GalElt a;
  std::size_t unit_col = 0;
  for (std::size_t j = 0; j < g.ramified.size(); ++j)
    if (!g.ramified[j]) unit_col = j;
  for (const auto& img : g.images) a.push_back(img[unit_col]);
  return a;
}

}  // namespace detail

inline LocalData local_data(const AbExt& M, const Place& P) {
  const auto g = local_class_group(M, P);
  LocalData d;
  d.place = P;
  d.decomposition = zn::annihilator(detail::kernel(M, g, false), M.galois(), M.n());
  d.inertia = zn::annihilator(detail::kernel(M, g, true), M.galois(), M.n());
  d.frobenius = detail::frobenius_coordinates(g);
  d.local_degree = static_cast<std::int64_t>(d.decomposition.size());
  d.ramification_index = static_cast<std::int64_t>(d.inertia.size());
  return d;
}

// [M:K]_P. At the real place: 2 if the radicand span contains a negative
// class, else 1.
inline std::int64_t local_degree(const AbExt& M, const Place& P) {
  const auto g = local_class_group(M, P);
  const auto ker = detail::kernel(M, g, false);
  return static_cast<std::int64_t>(M.coefficient_space().size() / ker.size());
}

inline std::int64_t ramification_index(const AbExt& M, const Place& P) {
  const auto g = local_class_group(M, P);
  const auto ker = detail::kernel(M, g, true);
  return static_cast<std::int64_t>(M.coefficient_space().size() / ker.size());
}

// Frobenius vector at P if P is unramified in M (and nonarchimedean).
inline std::optional<GalElt> frobenius_if_unramified(const AbExt& M, const Place& P) {
  if (P.is_real()) return std::nullopt;
  const auto g = local_class_group(M, P);
  for (const auto& img : g.images)
    for (std::size_t j = 0; j < img.size(); ++j)
      if (g.ramified[j] && img[j] != 0) return std::nullopt;
  return detail::frobenius_coordinates(g);
}

// Whether the real place of Q becomes complex in M.
inline bool real_place_is_complex(const AbExt& M) {
  require(M.base().is_rationals(), "real place only exists over Q");
  return local_degree(M, Place::real()) == 2;
}

// Places with nontrivial inertia in M/K.
inline std::vector<Place> ramified_places(const AbExt& M) {
  std::set<Place> candidates;
  const BaseField& K = M.base();
  if (K.is_rationals()) {
    candidates.insert(Place::prime(2));
  } else {
    candidates.insert(Place::infinity(K.q));
  }
  for (const auto& f : M.radicands())
    for (const auto& [P, e] : f.factors) candidates.insert(P);
  std::vector<Place> out;
  for (const auto& P : candidates)
    if (ramification_index(M, P) > 1) out.push_back(P);
  return out;
}

// ---------------------------------------------------------------------------
// Roots of unity and the cyclotomic part T = M cap K(mu_{p^infty})
// ---------------------------------------------------------------------------

namespace detail {

inline int vp_of_power_minus_one(std::int64_t q, std::int64_t f, std::int64_t p) {
  // v_p(q^f - 1) without forming q^f
  int e = 0;
  std::int64_t pe = p;
  while (pe <= (std::int64_t{1} << 60) / p && powmod(q, static_cast<std::uint64_t>(f), pe) == 1) {
    ++e;
    pe *= p;
  }
  return e;
}

// Coefficient vectors whose class is a constant (F_q(t) case).
inline std::vector<ZnVec> constant_members(const AbExt& M) {
  std::vector<ZnVec> out;
  for (const auto& c : M.coefficient_space())
    if (M.class_of(c).is_constant()) out.push_back(c);
  return out;
}

// Degree of the constant field of M over F_q: the number of distinct
// constant classes in W.
inline std::int64_t constant_field_degree(const AbExt& M) {
  std::set<ClassVec> seen;
  for (const auto& c : constant_members(M)) seen.insert(M.class_of(c));
  return static_cast<std::int64_t>(seen.size());
}

}  // namespace detail

// s with p^s = number of p-power roots of unity in M.
inline int roots_of_unity_s(const AbExt& M, std::int64_t p) {
  const BaseField& K = M.base();
  require(is_prime(p), "roots_of_unity_s: p must be prime");
  require(p != K.characteristic(), "roots_of_unity_s: p equals the characteristic");
  if (K.is_rationals()) {
    if (p == 2) {
      if (!M.span_contains(Element::from_integer(-1))) return 1;
      return M.span_contains(Element::from_integer(2)) ? 3 : 2;
    }
    if (p == 3) return M.span_contains(Element::from_integer(-3)) ? 1 : 0;
    return 0;
  }
  return detail::vp_of_power_minus_one(K.q, detail::constant_field_degree(M), p);
}

// Largest r with mu_{2^r} contained in M(sqrt(-1)).
inline int r_value(const AbExt& M) {
  const BaseField& K = M.base();
  require(K.characteristic() != 2, "r_value: characteristic 2");
  if (K.is_rationals())
    return (M.span_contains(Element::from_integer(2)) || M.span_contains(Element::from_integer(-2))) ? 3 : 2;
  std::int64_t f = detail::constant_field_degree(M);
  if (powmod(K.q, static_cast<std::uint64_t>(f), 4) != 1) f *= 2;
  return detail::vp_of_power_minus_one(K.q, f, 2);
}

// A sub-extension of M described by the subgroup of W generating it.
struct SubExtension {
  std::vector<ZnVec> members;  // coefficient vectors of the generating subgroup of W
  std::int64_t degree = 1;     // [T:K]
  std::vector<Element> generators;
  std::string description;
};

// T = M cap K(mu_{p^infty}).
inline SubExtension cyclotomic_T(const AbExt& M, std::int64_t p) {
  const BaseField& K = M.base();
  require(is_prime(p), "cyclotomic_T: p must be prime");
  require(p != K.characteristic(), "cyclotomic_T: p equals the characteristic");
  SubExtension T;
  std::set<ClassVec> classes;
  if (K.is_rationals()) {
    std::vector<Element> cyclotomic;
    if (p == 2) {
      cyclotomic = {Element::from_integer(-1), Element::from_integer(2), Element::from_integer(-2)};
    } else {
      cyclotomic = {Element::from_integer(p % 4 == 1 ? p : -p)};
    }
    std::set<ClassVec> wanted{ClassVec{}};
    for (const auto& e : cyclotomic) wanted.insert(M.class_of_element(e));
    for (const auto& c : M.coefficient_space()) {
      ClassVec cls = M.class_of(c);
      if (wanted.count(cls)) {
        T.members.push_back(c);
        classes.insert(cls);
      }
    }
  } else {
    // constant subfield F_{q^f}; keep the largest F_{q^d} inside F_q(mu_{p^infty})
    const auto consts = detail::constant_members(M);
    std::map<ClassVec, ZnVec> by_class;
    for (const auto& c : consts) by_class.emplace(M.class_of(c), c);
    const std::int64_t f = static_cast<std::int64_t>(by_class.size());
    const std::int64_t base_order = multiplicative_order(K.q, p == 2 ? 4 : p);
    std::int64_t keep = 1;
    for (std::int64_t d = 1; d <= f; ++d) {
      if (f % d != 0) continue;
      std::int64_t prime_to_p = d;
      while (prime_to_p % p == 0) prime_to_p /= p;
      if (base_order % prime_to_p == 0) keep = d;
    }
    // the constant classes form a cyclic group of order f; take the subgroup of order keep
    for (const auto& [cls, c] : by_class) {
      bool in_subgroup = false;
      // cls lies in the order-`keep` subgroup iff keep * cls is trivial
      ClassVec scaled = M.class_of(zn::scale(c, keep, M.n()));
      in_subgroup = scaled.is_trivial();
      if (in_subgroup) classes.insert(cls);
    }
    for (const auto& c : M.coefficient_space())
      if (classes.count(M.class_of(c))) T.members.push_back(c);
  }
  T.degree = static_cast<std::int64_t>(classes.size());
  for (const auto& c : zn::generators(T.members, M.n())) T.generators.push_back(M.element_of(c));
  if (T.generators.empty()) {
    T.description = K.str();
  } else {
    T.description = K.str() + "(";
    for (std::size_t i = 0; i < T.generators.size(); ++i)
      T.description += (i ? ", " : "") + std::string(M.n() == 2 ? "sqrt(" : "rt(") + T.generators[i].str() + ")";
    T.description += ")";
  }
  return T;
}

// Order of sigma restricted to a sub-extension.
inline int restriction_order(const AbExt& M, const SubExtension& T, const GalElt& sigma) {
  int o = 1;
  for (const auto& c : T.members) {
    const int v = M.pair(sigma, c);
    o = std::lcm(o, M.n() / std::gcd(v, M.n()));
  }
  return o;
}

// Gal(M/T) as the elements acting trivially on T.
inline std::vector<GalElt> galois_over(const AbExt& M, const SubExtension& T) {
  return zn::annihilator(T.members, M.galois(), M.n());
}

// ---------------------------------------------------------------------------
// Frobenius-prescribed searches
// ---------------------------------------------------------------------------

// Condition N(P) = residue (mod modulus).
struct NormCongruence {
  std::int64_t modulus = 1;
  std::int64_t residue = 0;
};

// Up to `count` unramified places with norm <= bound whose Frobenius is
// sigma, in ascending order. May return fewer; callers inspect the size.
inline std::vector<Place> find_primes_with_frobenius(const AbExt& M, const GalElt& sigma, std::size_t count,
                                                     std::int64_t bound,
                                                     std::optional<NormCongruence> congruence = std::nullopt) {
  require(M.contains(sigma), "sigma " + zn::str(sigma) + " is not in Gal(M/K)");
  std::vector<Place> out;
  if (count == 0) return out;
  for_each_place(M.base(), bound, [&](const Place& P) {
    if (congruence && mod(P.residue_norm() - congruence->residue, congruence->modulus) != 0) return true;
    const auto frob = frobenius_if_unramified(M, P);
    if (frob && *frob == sigma) out.push_back(P);
    return out.size() < count;
  });
  return out;
}

// Modulus p^{s+1} (odd p) or 2^{r+2} used to define Q_sigma.
inline std::int64_t qsigma_modulus(const AbExt& M, std::int64_t p) {
  if (p == 2) return ipow(2, static_cast<unsigned>(r_value(M) + 2));
  return ipow(p, static_cast<unsigned>(roots_of_unity_s(M, p) + 1));
}

// Places of Q_sigma: unramified, Frobenius sigma, p not dividing N(P), and
// N(P) of order > f_sigma = ord(sigma|_T) modulo qsigma_modulus.
inline std::vector<Place> qsigma_search(const AbExt& M, const GalElt& sigma, std::int64_t p, std::size_t count,
                                        std::int64_t bound) {
  require(M.contains(sigma), "sigma " + zn::str(sigma) + " is not in Gal(M/K)");
  const SubExtension T = cyclotomic_T(M, p);
  const int f_sigma = restriction_order(M, T, sigma);
  const std::int64_t modulus = qsigma_modulus(M, p);
  std::vector<Place> out;
  if (count == 0) return out;
  for_each_place(M.base(), bound, [&](const Place& P) {
    const std::int64_t N = P.residue_norm();
    if (N % p == 0) return true;
    if (multiplicative_order(N % modulus, modulus) <= f_sigma) return true;
    const auto frob = frobenius_if_unramified(M, P);
    if (frob && *frob == sigma) out.push_back(P);
    return out.size() < count;
  });
  return out;
}

}  // namespace ncp
