#pragma once

// Seeded property batteries over a fixed set of fixture extensions. Every
// battery counts cases and violations and keeps the first few failure
// messages. The d_P(m) function and the commutator pairing can be swapped
// out through SuiteHooks so that deliberately broken variants can be shown
// to fail.

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <string>
#include <tuple>
#include <vector>

#include "ncp/abext.hpp"
#include "ncp/brauer.hpp"
#include "ncp/covers.hpp"
#include "ncp/groupext.hpp"
#include "ncp/isolation.hpp"
#include "ncp/reports.hpp"

namespace ncp {

inline constexpr std::uint64_t kDefaultSeed = 20240917;

struct Fixture {
  std::string name;
  AbExt M;
  bool cyclic = false;
};

inline std::vector<Fixture> standard_fixtures() {
  const BaseField Q = BaseField::rationals();
  const BaseField F7 = BaseField::function_field(7);
  auto z = [](std::int64_t v) { return Element::from_integer(v); };
  auto f7 = [&](poly::Poly a) { return Element::from_polynomial(F7, std::move(a)); };
  std::vector<Fixture> out;
  out.push_back({"Q(sqrt(-1), sqrt(2))", AbExt::build(Q, 2, {z(-1), z(2)}), false});
  out.push_back({"Q(sqrt(-1), sqrt(7))", AbExt::build(Q, 2, {z(-1), z(7)}), false});
  out.push_back({"Q(sqrt(-1), sqrt(2), sqrt(17))", AbExt::build(Q, 2, {z(-1), z(2), z(17)}), false});
  out.push_back({"Q(sqrt(3), sqrt(-7))", AbExt::build(Q, 2, {z(3), z(-7)}), false});
  out.push_back({"Q(sqrt(11))", AbExt::build(Q, 2, {z(11)}), true});
  out.push_back({"Q(sqrt(-5))", AbExt::build(Q, 2, {z(-5)}), true});
  out.push_back({"F_7(t)(t^(1/3), ((t-1)(t-2))^(1/3))",
                 AbExt::build(F7, 3, {f7({0, 1}), f7(poly::mul({6, 1}, {5, 1}, 7))}), false});
  out.push_back({"F_7(t)(sqrt(t), sqrt(t+3))", AbExt::build(F7, 2, {f7({0, 1}), f7({3, 1})}), false});
  out.push_back({"F_7(t)(t^(1/3))", AbExt::build(F7, 3, {f7({0, 1})}), true});
  return out;
}

// Fixtures with at least one isolated place, used by the inequality battery.
inline std::vector<Fixture> isolated_fixtures() {
  std::vector<Fixture> out;
  for (auto& f : standard_fixtures())
    if (!isolated_places(f.M).empty()) out.push_back(std::move(f));
  return out;
}

using DValueFn = std::function<std::int64_t(const Place&, std::int64_t, const AbExt&)>;

struct SuiteHooks {
  DValueFn d_value = [](const Place& P, std::int64_t m, const AbExt& M) { return ncp::d_value(P, m, M); };
  BetaFn beta = ncp::beta;
};

struct SuiteSizes {
  int random_classes = 1000;       // per fixture with an isolated place
  int constructor_sets = 20;       // random S per (fixture, m)
  int extensions = 600;            // central extensions checked for the pairing laws
  int unramified_samples = 500;    // places checked against u_2
  int frobenius_count = 5;
  std::int64_t frobenius_bound = 100'000;
  bool exhaustive_scan = true;     // full cyclic-fiber scan for p = 2, 3
  bool example_sweep = true;       // multiquadratic hypothesis sweep for l, q < 50

  // smaller sizes, no exhaustive scan or sweep
  static SuiteSizes quick() {
    SuiteSizes s;
    s.random_classes = 100;
    s.constructor_sets = 4;
    s.extensions = 100;
    s.unramified_samples = 100;
    s.frobenius_bound = 20'000;
    s.exhaustive_scan = false;
    s.example_sweep = false;
    return s;
  }
};

struct BatteryResult {
  std::string name;
  std::int64_t cases = 0;
  std::int64_t violations = 0;
  std::vector<std::string> failures;
  double seconds = 0;

  bool pass() const { return violations == 0 && cases > 0; }
  void check(bool ok, const std::string& what) {
    ++cases;
    if (ok) return;
    ++violations;
    if (failures.size() < 5) failures.push_back(what);
  }
};

struct SuiteSummary {
  std::uint64_t seed = kDefaultSeed;
  std::vector<BatteryResult> batteries;

  bool pass() const {
    for (const auto& b : batteries)
      if (!b.pass()) return false;
    return !batteries.empty();
  }
  const BatteryResult* find(const std::string& name) const {
    for (const auto& b : batteries)
      if (b.name == name) return &b;
    return nullptr;
  }
};

namespace mutants {

// d_P(m) without the gap reduction at isolated places.
inline std::int64_t d_value_without_gap(const Place& P, std::int64_t m, const AbExt& M) {
  if (P.is_real()) return is_real_in(M) ? std::gcd(m, std::int64_t{2}) : 1;
  return m;
}

// The 2-cocycle s(x)s(y)s(x+y)^{-1} in place of the commutator pairing.
inline int beta_as_cocycle(const CentralExt& E, const std::vector<int>& x, const std::vector<int>& y) {
  const GroupElt g = E.mul(E.mul(E.section(x), E.section(y)), E.inverse(E.section(E.B().add(x, y))));
  return g.alpha;
}

}  // namespace mutants

namespace detail {

template <class Body>
BatteryResult run_battery(const std::string& name, Body&& body) {
  BatteryResult r;
  r.name = name;
  const auto t0 = std::chrono::steady_clock::now();
  try {
    body(r);
  } catch (const std::exception& e) {
    r.check(false, std::string("exception: ") + e.what());
  }
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return r;
}

inline std::int64_t lcm_of_orders(const std::vector<QZ>& xs) {
  Integer l = 1;
  for (const auto& x : xs) l = lcm(l, x.den());
  return to_int64(l);
}

inline bool irreducible_by_trial_division(const poly::Poly& f, std::int64_t q,
                                          const std::map<int, std::vector<poly::Poly>>& lower) {
  const int d = poly::degree(f);
  for (const auto& [e, list] : lower) {
    if (2 * e > d) break;
    for (const auto& g : list)
      if (poly::rem(f, g, q).empty()) return false;
  }
  return true;
}

inline std::vector<Place> place_pool(const BaseField& K, std::int64_t bound) {
  return enumerate_places(K, bound, K.is_rationals());
}

inline std::vector<Place> random_subset(std::mt19937_64& rng, const std::vector<Place>& pool, int max_size) {
  std::uniform_int_distribution<int> size(1, max_size);
  std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
  std::set<Place> s;
  const int target = size(rng);
  while (static_cast<int>(s.size()) < target) s.insert(pool[pick(rng)]);
  return {s.begin(), s.end()};
}

}  // namespace detail

// ---------------------------------------------------------------------------
// arith and places
// ---------------------------------------------------------------------------

inline BatteryResult battery_arith(std::mt19937_64& rng) {
  return detail::run_battery("arith", [&](BatteryResult& r) {
    std::uniform_int_distribution<std::int64_t> den(1, 720);
    for (int i = 0; i < 500; ++i) {
      const std::int64_t d1 = den(rng), d2 = den(rng);
      const QZ x(static_cast<std::int64_t>(rng() % static_cast<std::uint64_t>(d1)), d1);
      const QZ y(static_cast<std::int64_t>(rng() % static_cast<std::uint64_t>(d2)), d2);
      r.check(lcm(x.order(), y.order()) % (x + y).order() == 0, "order(x+y) does not divide lcm: " + x.str() + ", " + y.str());
      QZ sum;
      bool prime_powers = true;
      for (const auto& [p, c] : x.p_primary()) {
        sum += c;
        prime_powers = prime_powers && factorize(to_int64(c.order())).size() == 1;
      }
      r.check(sum == x && prime_powers, "p-primary decomposition of " + x.str());
    }
    const auto primes = primes_up_to(200);
    std::uniform_int_distribution<std::size_t> pp(1, primes.size() - 1);
    for (int i = 0; i < 500; ++i) {
      const std::int64_t p = primes[pp(rng)];
      const std::int64_t a = static_cast<std::int64_t>(rng() % 1000) - 500;
      const std::int64_t b = static_cast<std::int64_t>(rng() % 1000) - 500;
      r.check(legendre(a * b, p) == legendre(a, p) * legendre(b, p),
              "legendre not multiplicative at p=" + std::to_string(p));
      // Euler's criterion as an independent oracle
      const std::int64_t e = mod(a, p) == 0 ? 0 : (powmod(mod(a, p), static_cast<std::uint64_t>((p - 1) / 2), p) == 1 ? 1 : -1);
      r.check(legendre(a, p) == e, "legendre disagrees with Euler's criterion");
    }
    for (std::int64_t q : primes_up_to(100)) {
      const PrimeField F(q);
      for (std::int64_t n = 2; n < q; ++n) {
        if ((q - 1) % n != 0) continue;
        std::set<std::int64_t> powers;
        for (std::int64_t x = 1; x < q; ++x) powers.insert(powmod(x, static_cast<std::uint64_t>(n), q));
        for (std::int64_t a = 1; a < q; ++a) {
          const std::int64_t o = F.power_class_order(a, n);
          r.check(n % o == 0 && ((o == 1) == (powers.count(a) > 0)),
                  "power_class_order(" + std::to_string(a) + ", " + std::to_string(n) + ") mod " + std::to_string(q));
        }
      }
    }
  });
}

inline BatteryResult battery_places() {
  return detail::run_battery("places", [&](BatteryResult& r) {
    for (std::int64_t q : {2, 3, 5, 7}) {
      const BaseField K = BaseField::function_field(q);
      const auto a = enumerate_places(K, 2500);
      const auto b = enumerate_places(K, 2500);
      r.check(a == b, "enumerate_places not deterministic over " + K.str());
      r.check(std::set<Place>(a.begin(), a.end()).size() == a.size(), "duplicate places over " + K.str());
      std::map<int, std::vector<poly::Poly>> lower;
      for (const auto& P : a) {
        if (P.is_infinity()) {
          r.check(P.residue_norm() == q, "norm of infinity");
          continue;
        }
        const int d = poly::degree(P.coeffs);
        r.check(detail::irreducible_by_trial_division(P.coeffs, q, lower), P.str() + " is reducible");
        r.check(P.residue_norm() == ipow(q, static_cast<unsigned>(d)), "residue norm of " + P.str());
        lower[d].push_back(P.coeffs);
      }
      // count of monic irreducibles of degree d: (1/d) sum_{e|d} mu(e) q^{d/e}, here for d <= 3
      const std::int64_t expect1 = q, expect2 = (q * q - q) / 2, expect3 = (q * q * q - q) / 3;
      auto count = [&](int d) { return lower.count(d) ? static_cast<std::int64_t>(lower[d].size()) : 0; };
      if (q * q * q <= 2500) r.check(count(3) == expect3, "degree 3 count over " + K.str());
      r.check(count(1) == expect1 && count(2) == expect2, "degree 1/2 counts over " + K.str());
    }
    const auto primes = enumerate_places(BaseField::rationals(), 1000);
    std::vector<std::int64_t> ps;
    for (const auto& P : primes) ps.push_back(P.value);
    r.check(ps == primes_up_to(1000), "finite places of Q below 1000");
  });
}

// ---------------------------------------------------------------------------
// abext
// ---------------------------------------------------------------------------

inline BatteryResult battery_local_degrees(const std::vector<Fixture>& fixtures) {
  return detail::run_battery("abext.local-degree", [&](BatteryResult& r) {
    for (const auto& f : fixtures) {
      const AbExt& M = f.M;
      std::vector<AbExt> subs;
      for (int mask = 1; mask < (1 << M.rank()) - 1; ++mask) {
        std::vector<int> idx;
        for (int i = 0; i < M.rank(); ++i)
          if (mask >> i & 1) idx.push_back(i);
        subs.push_back(M.sub_extension(idx));
      }
      for (const auto& P : detail::place_pool(M.base(), 400)) {
        const LocalData L = local_data(M, P);
        r.check(M.degree() % L.local_degree == 0, f.name + ": local degree does not divide [M:K] at " + P.str());
        r.check(static_cast<std::int64_t>(L.decomposition.size()) == L.local_degree, f.name + ": |D| at " + P.str());
        // |I| times the order of Frobenius modulo I
        const std::set<GalElt> I(L.inertia.begin(), L.inertia.end());
        std::int64_t k = 1;
        while (!I.count(zn::scale(L.frobenius, k, M.n()))) ++k;
        r.check(static_cast<std::int64_t>(I.size()) * k == L.local_degree, f.name + ": |I| ord(Frob) at " + P.str());
        if (I.size() == 1)
          r.check(zn::order(L.frobenius, M.n()) == L.local_degree, f.name + ": unramified degree at " + P.str());
        for (const auto& S : subs)
          r.check(L.local_degree % local_degree(S, P) == 0, f.name + ": sub-extension degree at " + P.str());
      }
    }
  });
}

inline BatteryResult battery_frobenius(const std::vector<Fixture>& fixtures, const SuiteSizes& sizes) {
  return detail::run_battery("abext.frobenius-search", [&](BatteryResult& r) {
    const auto count = static_cast<std::size_t>(sizes.frobenius_count);
    for (const auto& f : fixtures) {
      for (const auto& sigma : f.M.galois()) {
        const auto hits = find_primes_with_frobenius(f.M, sigma, count, sizes.frobenius_bound);
        bool right = true;
        for (const auto& P : hits) right = right && frobenius_if_unramified(f.M, P) == sigma;
        r.check(hits.size() >= count && right, f.name + ": Frobenius " + zn::str(sigma) + " found " + std::to_string(hits.size()));
        for (std::int64_t p : degree_primes(f.M)) {
          if (p == f.M.base().characteristic()) continue;
          const auto qs = qsigma_search(f.M, sigma, p, count, sizes.frobenius_bound);
          r.check(qs.size() >= count, f.name + ": Q_sigma for " + zn::str(sigma) + ", p=" + std::to_string(p) +
                                          " found " + std::to_string(qs.size()));
        }
      }
    }
  });
}

// ---------------------------------------------------------------------------
// isolation
// ---------------------------------------------------------------------------

inline BatteryResult battery_isolation(const std::vector<Fixture>& fixtures, const SuiteSizes& sizes, const SuiteHooks& hooks) {
  return detail::run_battery("isolation", [&](BatteryResult& r) {
    for (const auto& f : fixtures) {
      const auto iso = isolated_places(f.M);
      if (f.cyclic) r.check(iso.empty(), f.name + ": cyclic extension with an isolated place");
      const auto ram = ramified_places(f.M);
      for (const auto& [P, p] : iso)
        r.check(std::find(ram.begin(), ram.end(), P) != ram.end(), f.name + ": isolated " + P.str() + " unramified");
      for (std::int64_t m : {1, 2, 3, 4, 6, 8, 12, 16}) {
        const std::int64_t ch = f.M.base().characteristic();
        if (ch > 0 && m % ch == 0) continue;
        for (const auto& P : detail::place_pool(f.M.base(), 60))
          r.check(m % hooks.d_value(P, m, f.M) == 0, f.name + ": d_P(m) does not divide m at " + P.str());
      }
      for (std::int64_t p : degree_primes(f.M)) {
        if (p == f.M.base().characteristic()) continue;
        const auto rep = isolation_report(f.M, p);
        if (rep.gap == 0) continue;
        int sampled = 0;
        for_each_place(f.M.base(), 1'000'000, [&](const Place& P) {
          if (ramification_index(f.M, P) > 1) return true;
          r.check(vp(local_degree(f.M, P), p) <= rep.u2, f.name + ": unramified " + P.str() + " exceeds u_2");
          return ++sampled < sizes.unramified_samples;
        });
      }
    }
  });
}

// ---------------------------------------------------------------------------
// brauer
// ---------------------------------------------------------------------------

// Index formulas, restriction conservation and splitting on random classes.
inline BatteryResult battery_brauer_invariants(std::mt19937_64& rng, const std::vector<Fixture>& fixtures,
                                               const SuiteSizes& sizes) {
  return detail::run_battery("brauer.index-formulas", [&](BatteryResult& r) {
    for (const auto& f : fixtures) {
      const AbExt& M = f.M;
      const auto pool = detail::place_pool(M.base(), 60);
      const std::int64_t chi = M.exponent();
      const int n = std::max(1, sizes.random_classes / 5);
      for (int i = 0; i < n; ++i) {
        const BrauerClass a = random_class(M.base(), rng, pool);
        std::vector<QZ> invs, restricted;
        QZ conserved;
        std::vector<Place> support;
        for (const auto& [P, x] : a.invariants()) {
          invs.push_back(x);
          support.push_back(P);
          const std::int64_t ld = local_degree(M, P);
          const QZ y = x * Integer(ld);
          restricted.push_back(y);
          conserved += y * Integer(M.degree() / ld);
        }
        r.check(index(a) == detail::lcm_of_orders(invs), f.name + ": index oracle on " + a.str());
        const std::int64_t res = restricted_index(a, M);
        r.check(res == detail::lcm_of_orders(restricted), f.name + ": restricted index oracle on " + a.str());
        r.check(conserved.is_zero(), f.name + ": restriction does not conserve the sum on " + a.str());
        for (std::int64_t c : {chi, 2 * chi, 3 * chi}) {
          const std::int64_t fi = fiber_index(a, M, c);
          r.check(fi % c == 0, f.name + ": fiber index not a multiple of |chi| on " + a.str());
          r.check((fi == c) == (res == 1), f.name + ": fiber index = |chi| iff restricted index 1 on " + a.str());
        }
        r.check(splits_over_K(local_degrees_of(M, support), a) == (res == 1),
                f.name + ": M splits iff restricted index 1 on " + a.str());
      }
    }
  });
}

// The inequality at the isolated place on random classes forced to touch it.
inline BatteryResult battery_isolation_inequality(std::mt19937_64& rng, const std::vector<Fixture>& fixtures,
                                                  const SuiteSizes& sizes) {
  return detail::run_battery("brauer.isolation-inequality", [&](BatteryResult& r) {
    for (const auto& f : fixtures) {
      const auto pool = detail::place_pool(f.M.base(), 60);
      for (const auto& [P, p] : isolated_places(f.M)) {
        for (int i = 0; i < sizes.random_classes; ++i) {
          const BrauerClass a = random_class(f.M.base(), rng, pool, {P});
          const auto ineq = isolation_inequality(a, f.M, p);
          r.check(!ineq.vacuous && ineq.holds, f.name + ": inequality fails at " + P.str() + " on " + a.str());
        }
      }
    }
  });
}

// construct_class hits restricted index m and d_P(m) | restricted local index on S.
inline BatteryResult battery_constructor(std::mt19937_64& rng, const std::vector<Fixture>& fixtures,
                                         const SuiteSizes& sizes, const SuiteHooks& hooks) {
  return detail::run_battery("brauer.constructor", [&](BatteryResult& r) {
    for (const auto& f : fixtures) {
      const AbExt& M = f.M;
      const auto pool = detail::place_pool(M.base(), 60);
      const auto iso = isolated_places(M);
      for (std::int64_t m : {2, 3, 4, 8, 12}) {
        if (M.base().characteristic() > 0 && m % M.base().characteristic() == 0) continue;
        for (int i = 0; i < sizes.constructor_sets; ++i) {
          std::vector<Place> S = detail::random_subset(rng, pool, 4);
          if (i % 2 == 0)
            for (const auto& [P, p] : iso)
              if (std::find(S.begin(), S.end(), P) == S.end()) S.push_back(P);
          const BrauerClass a = construct_class(M, m, S);
          std::vector<QZ> restricted;
          for (const auto& [P, x] : a.invariants()) restricted.push_back(x * Integer(local_degree(M, P)));
          r.check(restricted_index(a, M) == m && detail::lcm_of_orders(restricted) == m,
                  f.name + ": restricted index of " + a.str() + " is not " + std::to_string(m));
          for (const auto& P : S)
            r.check(restricted_local_index(a, M, P) % hooks.d_value(P, m, M) == 0,
                    f.name + ": d_P(" + std::to_string(m) + ") does not divide the local index at " + P.str());
        }
      }
    }
  });
}

// ---------------------------------------------------------------------------
// covers
// ---------------------------------------------------------------------------

inline BatteryResult battery_covers(const std::vector<Fixture>& fixtures, const SuiteHooks& hooks) {
  return detail::run_battery("covers", [&](BatteryResult& r) {
    for (const auto& f : fixtures) {
      const AbExt& M = f.M;
      const auto pool = detail::place_pool(M.base(), 40);
      const CertReport one = check_Bm(M, 1, pool);
      r.check(one.pass() && one.witness && one.witness->rel_degree == 1, f.name + ": m = 1 certificate");

      const auto cands = candidate_radicands(M.base(), 40, M.n());
      std::vector<Cover> covers;
      for (std::size_t i = 0; i < cands.size() && covers.size() < 12; ++i)
        for (std::size_t j = i + 1; j < cands.size() && covers.size() < 12; ++j) {
          try {
            Cover C = build_cover(M, {cands[i], cands[j]}, M.n());
            if (C.rel_degree == 1) continue;
            covers.push_back(std::move(C));
          } catch (const InvalidArgument&) {
          }
        }
      for (const auto& C : covers) {
        for (const auto& P : pool)
          r.check(cover_local_degree(C, P) * local_degree(M, P) == local_degree(C.L, P),
                  f.name + ": tower law for " + C.L.str() + " at " + P.str());
        // S = finite places where C already meets d_P(m); every sub-cover must meet d_P(m')
        const std::int64_t m = C.rel_degree;
        std::vector<Place> S;
        for (const auto& P : pool)
          if (!P.is_real() && cover_local_degree(C, P) % hooks.d_value(P, m, M) == 0) S.push_back(P);
        for (std::int64_t mp = 2; mp < m; ++mp) {
          if (m % mp != 0) continue;
          for (const auto& sub : sub_covers(C, mp))
            for (const auto& P : S)
              r.check(cover_local_degree(sub, P) % hooks.d_value(P, mp, M) == 0,
                      f.name + ": sub-cover " + sub.L.str() + " loses d_P at " + P.str());
        }
        const int rank = group_rank(relative_galois(C), C.L.n());
        const auto fp = factorize(m);
        if (rank <= 2 && fp.size() == 1) {
          const CertReport c = check_rank_two_cover(M, fp[0].first, fp[0].second, S, C);
          r.check(c.checks.size() == 3 && c.checks[1].pass && c.checks[2].pass,
                  f.name + ": structural conditions for " + C.L.str());
        }
      }
    }
  });
}

// ---------------------------------------------------------------------------
// groupext
// ---------------------------------------------------------------------------

inline BatteryResult battery_group_laws(std::mt19937_64& rng, const SuiteSizes& sizes) {
  return detail::run_battery("groupext.normal-form", [&](BatteryResult& r) {
    int seen = 0;
    auto visit = [&](const CentralExt& E) {
      if (seen++ >= sizes.extensions) return;
      const auto elems = E.elements();
      r.check(static_cast<std::int64_t>(elems.size()) == E.order(), E.str() + ": |G| != |A||B|");
      std::uniform_int_distribution<std::size_t> pick(0, elems.size() - 1);
      for (int i = 0; i < 20; ++i) {
        const auto& x = elems[pick(rng)];
        const auto& y = elems[pick(rng)];
        const auto& z = elems[pick(rng)];
        const auto l = E.mul(E.mul(x, y), z);
        const auto rr = E.mul(x, E.mul(y, z));
        r.check(l.alpha == rr.alpha && l.e == rr.e, E.str() + ": multiplication not associative");
      }
      bool all_cyclic = true;
      for (const auto& x : E.B().elements()) all_cyclic = all_cyclic && fiber_is_cyclic(E, x);
      if (all_cyclic)
        for (const auto& g : elems) r.check(commutator(E, E.central(1), g) == 0, E.str() + ": A not central");
    };
    for_each_extension(2, 2, 2, 2, visit);
    seen = 0;
    for_each_extension(3, 2, 1, 2, visit);
  });
}

// Pairing laws and the power-map criteria, with the pairing taken from hooks.
inline BatteryResult battery_pairings(const SuiteSizes& sizes, const SuiteHooks& hooks) {
  return detail::run_battery("groupext.pairings", [&](BatteryResult& r) {
    int seen = 0;
    auto visit = [&](const CentralExt& E) {
      if (seen >= sizes.extensions) return;
      ++seen;
      const auto laws = verify_beta_laws(E, hooks.beta);
      r.check(laws.ok(), E.str() + ": pairing not alternating, bimultiplicative and lift-independent");
      const auto pm = verify_power_map_criteria(E, hooks.beta);
      r.check(pm.ok(), E.str() + ": power map criteria inconsistent");
      for (const auto& x : E.B().elements())
        if (!E.B().is_zero(x)) r.check(verify_fiber_generator_criterion(E, x), E.str() + ": fiber generator criterion");
    };
    // the quaternion datum first, so that small sizes still cover it
    visit(CentralExt::build(2, 1, {2, 2}, {1, 1}, {{0, 1}, {0, 0}}));
    for (const auto& E : pairing_sample()) visit(E);
  });
}

inline BatteryResult battery_scan() {
  return detail::run_battery("groupext.cyclic-fiber-scan", [&](BatteryResult& r) {
    for (std::int64_t p : {2, 3}) {
      const ScanResult s = cyclic_fiber_scan(p, 3, 2, 3);
      r.check(s.enumerated > 0 && s.counterexamples == 0, "p=" + std::to_string(p) + ": counterexamples");
      for (const auto& E : s.hits)
        r.check(E.p() == 2 && E.A_order() == 2, E.str() + ": all fibers cyclic with |A| > 2");
      if (p == 2) {
        bool q8 = false;
        for (const auto& E : s.hits) q8 = q8 || is_quaternion_datum(E);
        r.check(q8, "quaternion datum missing from the hits");
      }
    }
  });
}

// ---------------------------------------------------------------------------
// reports
// ---------------------------------------------------------------------------

inline BatteryResult battery_reports(const SuiteSizes& sizes) {
  return detail::run_battery("reports", [&](BatteryResult& r) {
    auto same = [](const ExampleReport& a, const ExampleReport& b) {
      if (a.parameters != b.parameters || a.facts.size() != b.facts.size()) return false;
      for (std::size_t i = 0; i < a.facts.size(); ++i)
        if (a.facts[i].name != b.facts[i].name || a.facts[i].pass != b.facts[i].pass ||
            a.facts[i].detail != b.facts[i].detail)
          return false;
      return true;
    };
    for (auto [l, q] : {std::pair{3, 11}, {5, 7}, {7, 3}}) {
      const auto a = multiquadratic_example(l, q);
      r.check(a.verdict(), "multiquadratic example fails for (" + std::to_string(l) + ", " + std::to_string(q) + ")");
      r.check(same(a, multiquadratic_example(l, q)), "multiquadratic report not reproducible");
    }
    for (auto [p, q, a] : {std::tuple{3, 7, 2}, {2, 3, 2}}) {
      const auto rep = function_field_example(p, q, a);
      r.check(rep.verdict(), "function field example fails for p=" + std::to_string(p));
      r.check(same(rep, function_field_example(p, q, a)), "function field report not reproducible");
    }
    if (sizes.example_sweep)
      for (std::int64_t l : primes_up_to(50))
        for (std::int64_t q : primes_up_to(50)) {
          if (l == 2 || q == 2 || l == q) continue;
          r.check(multiquadratic_example(l, q).verdict() == multiquadratic_hypotheses(l, q),
                  "checklist and hypotheses disagree at (" + std::to_string(l) + ", " + std::to_string(q) + ")");
        }
  });
}

// ---------------------------------------------------------------------------

inline SuiteSummary run_property_suite(std::uint64_t seed = kDefaultSeed, const SuiteSizes& sizes = {},
                                       const SuiteHooks& hooks = {}) {
  SuiteSummary s;
  s.seed = seed;
  std::mt19937_64 rng(seed);
  const auto fixtures = standard_fixtures();
  std::vector<Fixture> isolated;
  for (const auto& f : fixtures)
    if (!isolated_places(f.M).empty()) isolated.push_back(f);
  s.batteries.push_back(battery_arith(rng));
  s.batteries.push_back(battery_places());
  s.batteries.push_back(battery_local_degrees(fixtures));
  s.batteries.push_back(battery_frobenius(fixtures, sizes));
  s.batteries.push_back(battery_isolation(fixtures, sizes, hooks));
  s.batteries.push_back(battery_brauer_invariants(rng, fixtures, sizes));
  s.batteries.push_back(battery_isolation_inequality(rng, isolated, sizes));
  s.batteries.push_back(battery_constructor(rng, fixtures, sizes, hooks));
  s.batteries.push_back(battery_covers(fixtures, hooks));
  s.batteries.push_back(battery_group_laws(rng, sizes));
  s.batteries.push_back(battery_pairings(sizes, hooks));
  if (sizes.exhaustive_scan) s.batteries.push_back(battery_scan());
  s.batteries.push_back(battery_reports(sizes));
  return s;
}

}  // namespace ncp
