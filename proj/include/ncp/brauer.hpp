#pragma once

// Brauer classes of K as vectors of Hasse invariants.
//
// A class is a finitely supported map Place -> Q/Z with vanishing sum (the
// real invariant lies in {0, 1/2}). Its index is the lcm of the local orders.
// Restriction to M multiplies the invariant at P by the local degree
// [M:K]_P; since M/K is Galois this is the same at every place of M above P,
// so alpha^M is tracked on places of K.

#include <algorithm>
#include <cstdint>
#include <limits>
#include <numeric>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "ncp/abext.hpp"
#include "ncp/isolation.hpp"

namespace ncp {

inline std::int64_t to_int64(const Integer& x) {
  require(x <= Integer(std::numeric_limits<std::int64_t>::max()), "value does not fit in 64 bits: " + x.str());
  return x.convert_to<std::int64_t>();
}

class BrauerClass {
 public:
  BrauerClass() = default;

  static BrauerClass make(const BaseField& K, const std::map<Place, QZ>& invariants) {
    BrauerClass a;
    a.field_ = K;
    QZ sum;
    for (const auto& [P, x] : invariants) {
      require(P.belongs_to(K), "place " + P.str() + " is not a place of " + K.str());
      if (P.is_real()) require(x.is_zero() || x == QZ(1, 2), "real invariant must be 0 or 1/2, got " + x.str());
      sum += x;
      if (!x.is_zero()) a.inv_.emplace(P, x);
    }
    require(sum.is_zero(), "invariants sum to " + sum.str() + ", not 0");
    return a;
  }

  static BrauerClass zero(const BaseField& K) {
    BrauerClass a;
    a.field_ = K;
    return a;
  }

  const BaseField& field() const { return field_; }
  const std::map<Place, QZ>& invariants() const { return inv_; }

  QZ invariant(const Place& P) const {
    const auto it = inv_.find(P);
    return it == inv_.end() ? QZ() : it->second;
  }

  bool is_zero() const { return inv_.empty(); }

  BrauerClass operator+(const BrauerClass& o) const {
    require(field_ == o.field_, "adding Brauer classes of different fields");
    std::map<Place, QZ> sum = inv_;
    for (const auto& [P, x] : o.inv_) sum[P] += x;
    return make(field_, sum);
  }

  std::string str() const {
    std::string out = "{";
    bool first = true;
    for (const auto& [P, x] : inv_) {
      out += (first ? "" : ", ") + P.str() + ": " + x.str();
      first = false;
    }
    return out + "}";
  }

 private:
  BaseField field_;
  std::map<Place, QZ> inv_;
};

inline BrauerClass make_class(const BaseField& K, const std::map<Place, QZ>& invariants) {
  return BrauerClass::make(K, invariants);
}

// ind(alpha) = lcm of the orders of the local invariants.
inline std::int64_t index(const BrauerClass& a) {
  Integer l = 1;
  for (const auto& [P, x] : a.invariants()) l = lcm(l, x.order());
  return to_int64(l);
}

// ind_P(alpha^M) = order of [M:K]_P * inv_P(alpha).
inline std::int64_t restricted_local_index(const BrauerClass& a, const AbExt& M, const Place& P) {
  require(a.field() == M.base(), "class and extension live over different fields");
  const QZ x = a.invariant(P);
  if (x.is_zero()) return 1;
  return to_int64((x * Integer(local_degree(M, P))).order());
}

inline std::int64_t restricted_index(const BrauerClass& a, const AbExt& M) {
  std::int64_t l = 1;
  for (const auto& [P, x] : a.invariants()) l = std::lcm(l, restricted_local_index(a, M, P));
  return l;
}

// ind(alpha + chi) = |chi| * ind(alpha^M). Only exp Gal(M/K) | |chi| is checked.
inline std::int64_t fiber_index(const BrauerClass& a, const AbExt& M, std::int64_t chi_order) {
  require(chi_order >= 1 && chi_order % M.exponent() == 0,
          "|chi| = " + std::to_string(chi_order) + " is not a multiple of exp Gal(M/K) = " +
              std::to_string(M.exponent()));
  return chi_order * restricted_index(a, M);
}

// Local degrees of an extension L at some places. With complete = true,
// absent places count as degree 1.
struct LocalDegrees {
  std::map<Place, std::int64_t> degrees;
  bool complete = false;

  std::int64_t at(const Place& P) const {
    const auto it = degrees.find(P);
    if (it != degrees.end()) return it->second;
    require(complete, "no local degree given at " + P.str());
    return 1;
  }
};

inline LocalDegrees local_degrees_of(const AbExt& L, const std::vector<Place>& places) {
  LocalDegrees d;
  for (const auto& P : places) d.degrees.emplace(P, local_degree(L, P));
  return d;
}

// L splits alpha iff ind_P(alpha) | [L:K]_P for all P.
inline bool splits_over_K(const LocalDegrees& L, const BrauerClass& a) {
  for (const auto& [P, x] : a.invariants())
    if (L.at(P) % to_int64(x.order()) != 0) return false;
  return true;
}

// L (containing M) splits alpha^M iff ind_P(alpha^M) | [L:M]_P for all P.
inline bool splits_over_M(const LocalDegrees& L_over_M, const BrauerClass& a, const AbExt& M) {
  for (const auto& [P, x] : a.invariants())
    if (L_over_M.at(P) % restricted_local_index(a, M, P) != 0) return false;
  return true;
}

// ---------------------------------------------------------------------------
// Classes with prescribed restricted index
// ---------------------------------------------------------------------------

namespace detail {

class ValuationCache {
 public:
  ValuationCache(const AbExt& M, std::int64_t p) : M_(M), p_(p) {}
  int operator()(const Place& P) {
    auto it = cache_.find(P);
    if (it != cache_.end()) return it->second;
    const int v = vp(local_degree(M_, P), p_);
    cache_.emplace(P, v);
    return v;
  }

 private:
  const AbExt& M_;
  std::int64_t p_;
  std::map<Place, int> cache_;
};

inline Place find_place_with_valuation(const AbExt& M, ValuationCache& v, int target, const std::set<Place>& avoid,
                                       std::int64_t bound) {
  std::optional<Place> found;
  for_each_place(M.base(), bound, [&](const Place& P) {
    if (avoid.count(P) || v(P) != target) return true;
    found = P;
    return false;
  });
  if (!found)
    throw SearchExhausted("no place with v_p(local degree) = " + std::to_string(target) + " below norm " +
                          std::to_string(bound));
  return *found;
}

}  // namespace detail

// A class alpha with ind(alpha^M) = m and d_P(m) | ind_P(alpha^M) for every
// P in S. Per prime p | m, with n = v_p(m): witnesses P1 (v_p([M:K]_P) = u1,
// the p-isolated place if there is one) and P2 (v = u2) join S; every other
// finite P in S gets 1/p^{n + v_p([M:K]_P)}; P2 gets c/p^{n+u2} with c chosen
// so that the running sum x has order p^{n+u2}; P1 gets -x. For p = 2 an
// extra place with v = u2 restores the parity when no c works.
inline BrauerClass construct_class(const AbExt& M, std::int64_t m, const std::vector<Place>& S,
                                   std::int64_t search_bound = 1'000'000) {
  const BaseField& K = M.base();
  require(m >= 1, "construct_class: m must be positive");
  std::set<Place> finite;
  bool has_real = false;
  for (const auto& P : S) {
    require(P.belongs_to(K), "place " + P.str() + " is not a place of " + K.str());
    if (P.is_real())
      has_real = true;
    else
      finite.insert(P);
  }
  std::map<Place, QZ> total;
  if (m == 1) return BrauerClass::zero(K);
  for (const auto& [p, n] : factorize(m)) {
    require(p != K.characteristic(), "construct_class: wild prime " + std::to_string(p) + " = char K");
    const IsolationReport rep = isolation_report(M, p);
    detail::ValuationCache v(M, p);

    std::optional<Place> p1 = rep.isolated_place;
    if (!p1)
      for (const auto& P : finite)
        if (v(P) == rep.u1) {
          p1 = P;
          break;
        }
    if (!p1) p1 = detail::find_place_with_valuation(M, v, rep.u1, {}, search_bound);

    std::optional<Place> p2;
    for (const auto& P : finite)
      if (P != *p1 && v(P) == rep.u2) {
        p2 = P;
        break;
      }
    if (!p2) p2 = detail::find_place_with_valuation(M, v, rep.u2, {*p1}, search_bound);

    const int N2 = n + rep.u2;
    const Integer pe2 = Integer(ipow(p, static_cast<unsigned>(N2)));
    std::map<Place, QZ> inv;
    for (const auto& P : finite)
      if (P != *p1 && P != *p2) inv[P] = QZ(Integer(1), Integer(ipow(p, static_cast<unsigned>(n + v(P)))));
    if (has_real && p == 2 && is_real_in(M)) inv[Place::real()] = QZ(1, 2);

    auto balance = [&](const QZ& y) -> std::optional<std::int64_t> {
      for (std::int64_t c = 1; c < ipow(p, static_cast<unsigned>(N2)); ++c) {
        if (c % p == 0) continue;
        if ((y + QZ(Integer(c), pe2)).order() == pe2) return c;
      }
      return std::nullopt;
    };
    QZ y;
    for (const auto& [P, x] : inv) y += x;
    auto c = balance(y);
    if (!c) {
      std::set<Place> avoid(finite.begin(), finite.end());
      avoid.insert(*p1);
      avoid.insert(*p2);
      const Place extra = detail::find_place_with_valuation(M, v, rep.u2, avoid, search_bound);
      inv[extra] = QZ(Integer(1), pe2);
      y += inv[extra];
      c = balance(y);
      require(c.has_value(), "construct_class: parity adjustment failed");
    }
    inv[*p2] = QZ(Integer(*c), pe2);
    inv[*p1] = -(y + inv[*p2]);
    for (const auto& [P, x] : inv) total[P] += x;
  }
  BrauerClass a = make_class(K, total);
  if (restricted_index(a, M) != m) throw Error("construct_class: restricted index check failed for " + a.str());
  const DivisorProfile d(M, m);
  for (const auto& P : S)
    if (restricted_local_index(a, M, P) % d(P) != 0)
      throw Error("construct_class: d_P(m) check failed at " + P.str());
  return a;
}

// v_p(ind_P alpha^M) <= max(v_p(ind alpha^M) - g_p, 0) at the p-isolated P.
struct IsolationInequality {
  bool vacuous = true;  // no p-isolated place
  std::optional<Place> place;
  int lhs = 0;
  int rhs = 0;
  bool holds = true;
};

inline IsolationInequality isolation_inequality(const BrauerClass& a, const AbExt& M, std::int64_t p) {
  IsolationInequality r;
  const auto rep = isolation_report(M, p);
  if (!rep.isolated_place) return r;
  r.vacuous = false;
  r.place = rep.isolated_place;
  r.lhs = vp(restricted_local_index(a, M, *rep.isolated_place), p);
  r.rhs = std::max(vp(restricted_index(a, M), p) - rep.gap, 0);
  r.holds = r.lhs <= r.rhs;
  return r;
}

inline bool check_isolation_inequality(const BrauerClass& a, const AbExt& M, std::int64_t p) {
  return isolation_inequality(a, M, p).holds;
}

// A random class: 2..max_support places drawn from pool (always including
// the `forced` places), random invariants of order dividing one of a few
// small denominators, the last place balancing the sum. A real place only
// receives 0 or 1/2, so it is never the balancing place.
inline BrauerClass random_class(const BaseField& K, std::mt19937_64& rng, const std::vector<Place>& pool,
                                const std::vector<Place>& forced = {}, int max_support = 6) {
  static constexpr std::int64_t kDenominators[] = {2, 3, 4, 5, 6, 8, 9, 12, 16, 24};
  require(pool.size() >= 2, "random_class: need at least two places");
  std::set<Place> chosen(forced.begin(), forced.end());
  std::uniform_int_distribution<int> size_dist(2, std::max(2, max_support));
  const std::size_t target = static_cast<std::size_t>(size_dist(rng));
  std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
  for (int guard = 0; chosen.size() < target && guard < 1000; ++guard) chosen.insert(pool[pick(rng)]);
  std::vector<Place> places(chosen.begin(), chosen.end());
  // put a finite place last to absorb the balance
  auto finite_it = std::find_if(places.rbegin(), places.rend(), [](const Place& P) { return !P.is_real(); });
  require(finite_it != places.rend(), "random_class: no finite place available");
  std::iter_swap(finite_it, places.rbegin());
  std::map<Place, QZ> inv;
  QZ sum;
  std::uniform_int_distribution<std::size_t> den_pick(0, std::size(kDenominators) - 1);
  for (std::size_t i = 0; i + 1 < places.size(); ++i) {
    QZ x;
    if (places[i].is_real()) {
      x = (rng() & 1U) ? QZ(1, 2) : QZ();
    } else {
      const std::int64_t den = kDenominators[den_pick(rng)];
      x = QZ(static_cast<std::int64_t>(rng() % static_cast<std::uint64_t>(den)), den);
    }
    inv[places[i]] = x;
    sum += x;
  }
  inv[places.back()] = -sum;
  return make_class(K, inv);
}

}  // namespace ncp
