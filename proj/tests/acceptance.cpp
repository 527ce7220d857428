// Acceptance runner: one PASS/FAIL line per criterion, nonzero exit on any FAIL.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "ncp/suite.hpp"

using namespace ncp;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;

  void need(bool cond, const std::string& what) {
    if (!cond && ok) detail = what;
    ok = ok && cond;
  }
};

struct Criterion {
  int id;
  std::string name;
  double limit_seconds;  // 0 for no limit
  std::function<Outcome()> run;
};

const BaseField Q = BaseField::rationals();
const BaseField F7 = BaseField::function_field(7);

Element z(std::int64_t v) { return Element::from_integer(v); }

std::int64_t lcm_by_addition(const std::vector<QZ>& xs) {
  std::int64_t l = 1;
  for (const auto& x : xs) {
    QZ acc = x;
    std::int64_t k = 1;
    while (!acc.is_zero()) {
      acc += x;
      ++k;
    }
    l = std::lcm(l, k);
  }
  return l;
}

Outcome multiquadratic_reproduction() {
  Outcome o;
  for (auto [l, q] : {std::pair<std::int64_t, std::int64_t>{3, 11}, {5, 7}, {7, 3}}) {
    const std::string tag = "(" + std::to_string(l) + "," + std::to_string(q) + ")";
    const ExampleReport r = multiquadratic_example(l, q, 1000);
    o.need(r.facts.size() == 8, tag + ": expected 8 checks, got " + std::to_string(r.facts.size()));
    for (const auto& f : r.facts) o.need(f.pass, tag + ": " + f.name + " (" + f.detail + ")");
    for (const char* name : {"[M:Q]_l = 4", "no isolated primes", "-1 non-square mod q",
                             "no abelian 2-cover with [L:M]_l = 2", "witness class of fiber index 8"})
      o.need(r.find(name) != nullptr, tag + ": missing check " + name);
    o.need(legendre(-1, q) == -1, tag + ": (-1|q) != -1");
  }
  return o;
}

Outcome function_field_reproduction() {
  Outcome o;
  for (auto [p, q, a] : {std::tuple<std::int64_t, std::int64_t, std::int64_t>{3, 7, 2}, {2, 3, 2}}) {
    const std::string tag = "(" + std::to_string(p) + "," + std::to_string(q) + "," + std::to_string(a) + ")";
    const ExampleReport r = function_field_example(p, q, a);
    int splitting = 0;
    for (const auto& f : r.facts) {
      o.need(f.pass, tag + ": " + f.name + " (" + f.detail + ")");
      if (f.name.find(" in K_") != std::string::npos) ++splitting;
    }
    o.need(splitting == 6, tag + ": expected 6 splitting facts, got " + std::to_string(splitting));
  }
  return o;
}

Outcome exhaustive_scan() {
  Outcome o;
  for (std::int64_t p : {2, 3}) {
    const ScanResult s = cyclic_fiber_scan(p, 3, 2, 3);
    o.need(s.enumerated > 0, "p=" + std::to_string(p) + ": nothing enumerated");
    o.need(s.counterexamples == 0, "p=" + std::to_string(p) + ": counterexamples");
    bool q8 = false;
    for (const auto& E : s.hits) {
      o.need(E.p() == 2 && E.A_order() == 2, E.str() + " has all fibers cyclic");
      // every fiber recomputed by closure
      bool all = true;
      for (const auto& x : E.B().elements()) all = all && fiber_is_cyclic_by_closure(E, x);
      o.need(all, E.str() + ": closure finds a non-cyclic fiber");
      q8 = q8 || is_quaternion_datum(E);
    }
    if (p == 2) o.need(q8, "quaternion datum missing from hits");
    if (p == 3) o.need(s.hits.empty(), "hits for p = 3");
  }
  return o;
}

Outcome pairing_consistency() {
  Outcome o;
  int count = 0;
  auto visit = [&](const CentralExt& E) {
    ++count;
    o.need(verify_beta_laws(E).ok(), E.str() + ": pairing laws");
    o.need(verify_power_map_criteria(E).ok(), E.str() + ": power map criteria");
    for (const auto& x : E.B().elements())
      if (!E.B().is_zero(x)) o.need(verify_fiber_generator_criterion(E, x), E.str() + ": fiber generator criterion");
  };
  for (const auto& E : pairing_sample()) visit(E);
  o.need(count >= 500, "only " + std::to_string(count) + " extensions");
  if (o.ok) o.detail = std::to_string(count) + " extensions";
  return o;
}

Outcome isolation_inequality_property() {
  Outcome o;
  std::mt19937_64 rng(kDefaultSeed);
  const auto fixtures = isolated_fixtures();
  o.need(fixtures.size() >= 3, "fewer than three fixtures with isolated places");
  bool has_base = false;
  for (const auto& f : fixtures) {
    const auto iso = isolated_places(f.M);
    if (f.M.radicands() == std::vector<Element>{z(-1), z(2)}) {
      has_base = true;
      o.need(isolation_report(f.M, 2).gap == 1, "gap of Q(sqrt(-1), sqrt(2)) is not 1");
    }
    const auto pool = enumerate_places(f.M.base(), 60, f.M.base().is_rationals());
    for (const auto& [P, p] : iso)
      for (int i = 0; i < 1000; ++i) {
        const BrauerClass a = random_class(f.M.base(), rng, pool, {P});
        const auto r = isolation_inequality(a, f.M, p);
        o.need(!r.vacuous && r.holds, f.name + ": violated on " + a.str());
        // recompute both sides from the invariants
        std::vector<QZ> restricted;
        for (const auto& [R, x] : a.invariants()) restricted.push_back(x * Integer(local_degree(f.M, R)));
        const int global = vp(lcm_by_addition(restricted), p);
        const int local = vp(lcm_by_addition({a.invariant(P) * Integer(local_degree(f.M, P))}), p);
        const int gap = isolation_report(f.M, p).gap;
        o.need(local <= std::max(global - gap, 0), f.name + ": oracle violation on " + a.str());
      }
  }
  o.need(has_base, "Q(sqrt(-1), sqrt(2)) missing");
  return o;
}

Outcome constructor_correctness() {
  Outcome o;
  std::mt19937_64 rng(kDefaultSeed);
  for (const auto& f : standard_fixtures()) {
    const AbExt& M = f.M;
    const auto pool = enumerate_places(M.base(), 60, M.base().is_rationals());
    const auto iso = isolated_places(M);
    for (std::int64_t m : {2, 3, 4, 8, 12}) {
      if (M.base().characteristic() > 0 && m % M.base().characteristic() == 0) continue;
      for (int i = 0; i < 20; ++i) {
        std::vector<Place> S = detail::random_subset(rng, pool, 4);
        if (i % 2 == 0)
          for (const auto& [P, p] : iso)
            if (std::find(S.begin(), S.end(), P) == S.end()) S.push_back(P);
        const BrauerClass a = construct_class(M, m, S);
        std::vector<QZ> restricted;
        for (const auto& [P, x] : a.invariants()) restricted.push_back(x * Integer(local_degree(M, P)));
        const std::string tag = f.name + " m=" + std::to_string(m) + " " + a.str();
        o.need(restricted_index(a, M) == m, tag + ": restricted index");
        o.need(lcm_by_addition(restricted) == m, tag + ": lcm oracle");
        for (const auto& P : S)
          o.need(restricted_local_index(a, M, P) % d_value(P, m, M) == 0, tag + ": d_P(m) at " + P.str());
      }
    }
  }
  return o;
}

Outcome isolation_detection() {
  Outcome o;
  const auto base = isolated_places(AbExt::build(Q, 2, {z(-1), z(2)}));
  o.need(base.size() == 1 && base[0].first == Place::prime(2) && base[0].second == 2,
         "Q(sqrt(-1), sqrt(2)) should give [(2,2)]");
  o.need(isolation_report(AbExt::build(Q, 2, {z(-1), z(2)}), 2).gap == 1, "gap should be 1");
  o.need(isolated_places(AbExt::build(Q, 2, {z(3), z(-7)})).empty(), "Q(sqrt(3), sqrt(-7)) not empty");
  for (const auto& f : standard_fixtures())
    if (f.cyclic) o.need(isolated_places(f.M).empty(), f.name + " not empty");
  const Element t = Element::from_polynomial(F7, {0, 1});
  const Element g = Element::from_polynomial(F7, poly::mul({6, 1}, {5, 1}, 7));
  o.need(isolated_places(AbExt::build(F7, 3, {t, g})).empty(), "function field example not empty");
  return o;
}

Outcome search_liveness() {
  Outcome o;
  for (const auto& f : standard_fixtures())
    for (const auto& sigma : f.M.galois()) {
      const auto hits = find_primes_with_frobenius(f.M, sigma, 5, 100'000);
      o.need(hits.size() >= 5, f.name + ": Frobenius " + zn::str(sigma));
      for (const auto& P : hits) o.need(frobenius_if_unramified(f.M, P) == sigma, f.name + ": wrong Frobenius at " + P.str());
      for (std::int64_t p : degree_primes(f.M)) {
        if (p == f.M.base().characteristic()) continue;
        o.need(qsigma_search(f.M, sigma, p, 5, 100'000).size() >= 5,
               f.name + ": Q_sigma for " + zn::str(sigma) + " p=" + std::to_string(p));
      }
    }
  return o;
}

Outcome index_formula_invariants() {
  Outcome o;
  std::mt19937_64 rng(kDefaultSeed);
  int classes = 0;
  for (const auto& f : standard_fixtures()) {
    const AbExt& M = f.M;
    const auto pool = enumerate_places(M.base(), 60, M.base().is_rationals());
    for (int i = 0; i < 200; ++i) {
      const BrauerClass a = random_class(M.base(), rng, pool);
      ++classes;
      const std::int64_t res = restricted_index(a, M);
      for (std::int64_t c = M.exponent(); c <= 4 * M.exponent(); c += M.exponent()) {
        const std::int64_t fi = fiber_index(a, M, c);
        o.need(fi % c == 0, f.name + ": fiber index not a multiple of |chi| on " + a.str());
        o.need((fi == c) == (res == 1), f.name + ": fiber index = |chi| iff restricted index 1 on " + a.str());
      }
    }
  }
  if (o.ok) o.detail = std::to_string(classes) + " classes";
  return o;
}

Outcome mutation_sensitivity() {
  Outcome o;
  const SuiteSizes sizes = SuiteSizes::quick();
  o.need(run_property_suite(kDefaultSeed, sizes).pass(), "unmutated suite fails");
  std::string caught;
  auto failing = [](const SuiteSummary& s) {
    std::string names;
    for (const auto& b : s.batteries)
      if (!b.pass()) names += (names.empty() ? "" : ",") + b.name;
    return names;
  };
  SuiteHooks gap;
  gap.d_value = mutants::d_value_without_gap;
  const auto s1 = run_property_suite(kDefaultSeed, sizes, gap);
  o.need(!s1.pass(), "dropping the gap in d_value is not caught");
  SuiteHooks cocycle;
  cocycle.beta = mutants::beta_as_cocycle;
  const auto s2 = run_property_suite(kDefaultSeed, sizes, cocycle);
  o.need(!s2.pass(), "changing the pairing convention is not caught");
  if (o.ok) o.detail = "gap -> " + failing(s1) + "; pairing -> " + failing(s2);
  return o;
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {1, "multiquadratic example, three parameter pairs", 10, multiquadratic_reproduction},
      {2, "function field example, splitting facts", 5, function_field_reproduction},
      {3, "cyclic fiber scan over p = 2, 3", 60, exhaustive_scan},
      {4, "pairing and power map consistency", 0, pairing_consistency},
      {5, "isolation inequality on random classes", 10, isolation_inequality_property},
      {6, "class constructor", 0, constructor_correctness},
      {7, "isolated place detection", 0, isolation_detection},
      {8, "Frobenius and Q_sigma search liveness", 30, search_liveness},
      {9, "fiber index invariants", 0, index_formula_invariants},
      {10, "mutation sensitivity", 0, mutation_sensitivity},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.ok = false;
      o.detail = std::string("exception: ") + e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (c.limit_seconds > 0 && secs >= c.limit_seconds) {
      o.need(false, "took " + std::to_string(secs) + " s, limit " + std::to_string(c.limit_seconds) + " s");
    }
    failed += !o.ok;
    std::printf("AC%-2d %s  %s (%.2f s)%s%s\n", c.id, o.ok ? "PASS" : "FAIL", c.name.c_str(), secs,
                o.detail.empty() ? "" : ": ", o.detail.c_str());
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
