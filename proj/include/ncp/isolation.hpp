#pragma once

// u-values, gaps and p-isolated places of an abelian extension M/K, and the
// divisor d_P(m) of m built from them.
//
// For a prime p the family v_p([M:K]_P) over all places P of K is sorted
// descending as u_1 >= u_2 >= .... Unramified places realize every
// v_p(ord sigma) infinitely often, so v_p(exp Gal(M/K)) enters the family
// (at least) twice; only ramified places can push u_1 above it.

#include <algorithm>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "ncp/abext.hpp"

namespace ncp {

struct IsolationReport {
  std::int64_t p = 2;
  int u1 = 0;
  int u2 = 0;
  int gap = 0;
  std::optional<Place> isolated_place;
};

// Primes dividing [M:K]; the only ones for which a gap can occur.
inline std::vector<std::int64_t> degree_primes(const AbExt& M) {
  std::vector<std::int64_t> out;
  if (M.degree() > 1)
    for (const auto& [p, e] : factorize(M.degree())) out.push_back(p);
  return out;
}

inline IsolationReport isolation_report(const AbExt& M, std::int64_t p) {
  require(is_prime(p), "isolation: p must be prime");
  require(p != M.base().characteristic(), "isolation: wild prime p = char K");
  IsolationReport rep;
  rep.p = p;
  const int unramified = vp(static_cast<std::int64_t>(M.exponent()), p);
  std::vector<std::pair<int, Place>> values;
  for (const auto& P : ramified_places(M)) values.emplace_back(vp(local_degree(M, P), p), P);
  std::stable_sort(values.begin(), values.end(), [](const auto& a, const auto& b) { return a.first > b.first; });
  std::vector<int> family{unramified, unramified};
  for (const auto& [v, P] : values) family.push_back(v);
  std::sort(family.rbegin(), family.rend());
  rep.u1 = family[0];
  rep.u2 = family[1];
  rep.gap = rep.u1 - rep.u2;
  if (rep.gap > 0) rep.isolated_place = values.front().second;
  return rep;
}

inline std::pair<int, int> u_values(const AbExt& M, std::int64_t p) {
  const auto rep = isolation_report(M, p);
  return {rep.u1, rep.u2};
}

// All (P, p) with P p-isolated in M/K. Archimedean places never appear.
inline std::vector<std::pair<Place, std::int64_t>> isolated_places(const AbExt& M) {
  std::vector<std::pair<Place, std::int64_t>> out;
  for (std::int64_t p : degree_primes(M)) {
    if (p == M.base().characteristic()) continue;
    const auto rep = isolation_report(M, p);
    if (rep.isolated_place) out.emplace_back(*rep.isolated_place, p);
  }
  return out;
}

// The real place of Q stays real in M iff no radicand combination is negative.
inline bool is_real_in(const AbExt& M) { return !real_place_is_complex(M); }

// Isolation data for every prime dividing m, computed once per (M, m).
class DivisorProfile {
 public:
  DivisorProfile(const AbExt& M, std::int64_t m) : m_(m) {
    require(m >= 1, "d_value: m must be positive");
    for (const auto& [p, e] : factorize(m)) {
      if (M.degree() % p != 0 || p == M.base().characteristic()) {
        reports_.push_back({p, 0, 0, 0, std::nullopt});
        continue;
      }
      reports_.push_back(isolation_report(M, p));
    }
    if (M.base().is_rationals()) real_ = is_real_in(M);
  }

  std::int64_t operator()(const Place& P) const {
    if (P.is_real()) return real_ ? std::gcd(m_, std::int64_t{2}) : 1;
    std::int64_t d = 1;
    for (const auto& rep : reports_) {
      int e = vp(m_, rep.p);
      if (rep.isolated_place && *rep.isolated_place == P) e = std::max(e - rep.gap, 0);
      d *= ipow(rep.p, static_cast<unsigned>(e));
    }
    return d;
  }

  const std::vector<IsolationReport>& reports() const { return reports_; }

 private:
  std::int64_t m_;
  bool real_ = true;
  std::vector<IsolationReport> reports_;
};

// d_P(m): v_p(d) = max(v_p(m) - g_p, 0) at a p-isolated P, v_p(m) otherwise;
// gcd(m, 2) at a real place that stays real in M, 1 if it becomes complex.
inline std::int64_t d_value(const Place& P, std::int64_t m, const AbExt& M) { return DivisorProfile(M, m)(P); }

}  // namespace ncp
