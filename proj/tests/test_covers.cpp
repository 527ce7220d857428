#include <gtest/gtest.h>

#include "ncp/covers.hpp"

using namespace ncp;

namespace {

const BaseField Q = BaseField::rationals();
const BaseField F7 = BaseField::function_field(7);

Place pr(std::int64_t p) { return Place::prime(p); }
Element z(std::int64_t v) { return Element::from_integer(v); }
Element f7(poly::Poly a) { return Element::from_polynomial(F7, std::move(a)); }

AbExt quadratic(std::vector<std::int64_t> a) {
  std::vector<Element> rad;
  for (auto x : a) rad.push_back(z(x));
  return AbExt::build(Q, 2, rad);
}

AbExt cubic_pair() { return AbExt::build(F7, 3, {f7({0, 1}), f7(poly::mul({6, 1}, {5, 1}, 7))}); }

// x is a square in Q_3: even valuation and square unit part
bool square_in_Q3(std::int64_t x) {
  int v = 0;
  while (x % 3 == 0) {
    x /= 3;
    ++v;
  }
  return v % 2 == 0 && mod(x, 3) == 1;
}

bool squarefree(std::int64_t d) {
  for (std::int64_t p = 2; p * p <= std::abs(d); ++p)
    if (d % (p * p) == 0) return false;
  return true;
}

}  // namespace

TEST(Cover, Build) {
  const AbExt M = quadratic({3, -7});
  const Cover C = build_cover(M, {z(5)}, 2);
  EXPECT_EQ(C.rel_degree, 2);
  EXPECT_EQ(C.L.degree(), 8);
  EXPECT_THROW(build_cover(M, {z(3)}, 2), InvalidArgument);
  EXPECT_THROW(build_cover(M, {z(-21)}, 2), InvalidArgument);
  EXPECT_THROW(build_cover(M, {z(5)}, 3), InvalidArgument);
  const Cover E = build_cover(cubic_pair(), {f7({4, 1})}, 3);
  EXPECT_EQ(E.rel_degree, 3);
  EXPECT_EQ(identity_cover(M).rel_degree, 1);
}

TEST(Cover, LocalDegrees) {
  const AbExt M = quadratic({3, -7});
  const Cover C = build_cover(M, {z(5)}, 2);
  // Q_3^*/Q_3^{*2} has order 4 and M already fills it
  EXPECT_EQ(cover_local_degree(C, pr(3)), 1);
  const Cover E = build_cover(cubic_pair(), {f7({4, 1})}, 3);
  EXPECT_EQ(cover_local_degree(E, Place::polynomial(7, {0, 1})),
            local_degree(E.L, Place::polynomial(7, {0, 1})) / local_degree(E.M, Place::polynomial(7, {0, 1})));
  for (const auto& Cv : {C, E, build_cover(quadratic({11}), {z(-1), z(2)}, 2)})
    for (const auto& P : enumerate_places(Cv.M.base(), 400, Cv.M.base().is_rationals()))
      EXPECT_EQ(cover_local_degree(Cv, P) * local_degree(Cv.M, P), local_degree(Cv.L, P)) << P.str();
}

TEST(Cover, FullLocalDegree) {
  // 2 is not a square mod 11 and 11 splits in Q(sqrt 3, sqrt -7)
  const Cover C = build_cover(quadratic({3, -7}), {z(2)}, 2);
  EXPECT_TRUE(full_local_degree(C, pr(11)));
  EXPECT_FALSE(full_local_degree(build_cover(quadratic({3, -7}), {z(-1)}, 2), pr(37)));
  EXPECT_TRUE(full_local_degree(C, Place::real()));  // M is complex
  const Cover R = build_cover(quadratic({11}), {z(2)}, 2);
  EXPECT_FALSE(full_local_degree(R, Place::real()));
  EXPECT_TRUE(full_local_degree(build_cover(quadratic({11}), {z(-1)}, 2), Place::real()));
}

TEST(CheckBm, NoWitnessWhenLocalClassGroupIsFull) {
  const AbExt M = quadratic({3, -7});
  const auto rep = check_Bm(M, 2, {pr(3)}, CoverFamily{1000, 0, 1, 2'000'000});
  EXPECT_FALSE(rep.pass());
  EXPECT_FALSE(rep.witness.has_value());
  EXPECT_GT(rep.candidates_tried, 500);
  // independent: every squarefree d keeps [L:Q]_3 at 4, since 3, -7 and d give at most 4 classes
  for (std::int64_t d = -1000; d <= 1000; ++d) {
    if (d == 0 || d == 1 || !squarefree(d)) continue;
    int classes = 0;
    for (int mask = 0; mask < 8; ++mask) {
      std::int64_t x = 1;
      if (mask & 1) x *= 3;
      if (mask & 2) x *= -7;
      if (mask & 4) x *= d;
      if (square_in_Q3(x)) ++classes;
    }
    EXPECT_GE(classes, 2) << d;
  }
}

TEST(CheckBm, WitnessFound) {
  const auto rep = check_Bm(quadratic({11}), 2, {pr(3)}, CoverFamily{100, 0, 1, 100000});
  ASSERT_TRUE(rep.pass());
  ASSERT_TRUE(rep.witness.has_value());
  EXPECT_EQ(rep.witness->rel_degree, 2);
  EXPECT_EQ(cover_local_degree(*rep.witness, pr(3)), 2);
  const auto one = check_Bm(quadratic({3, -7}), 1, {pr(3), pr(7)});
  EXPECT_TRUE(one.pass());
  EXPECT_EQ(one.witness->rel_degree, 1);
}

TEST(CheckBm, WildCaseReportedUnconditionally) {
  const auto rep = check_Bm(cubic_pair(), 7, {Place::polynomial(7, {0, 1})});
  EXPECT_TRUE(rep.pass());
  EXPECT_FALSE(rep.note.empty());
}

TEST(RankTwo, Conditions) {
  const AbExt M = quadratic({11});
  const auto found = check_Bm(M, 2, {pr(3)}, CoverFamily{100, 0, 1, 100000});
  ASSERT_TRUE(found.witness.has_value());
  const auto good = check_rank_two_cover(M, 2, 1, {pr(3)}, *found.witness);
  EXPECT_TRUE(good.pass());
  ASSERT_EQ(good.checks.size(), 3u);
  // -1 and 11 share the class of a non-square unit at 3
  const auto bad = check_rank_two_cover(M, 2, 1, {pr(3)}, build_cover(M, {z(-1)}, 2));
  EXPECT_FALSE(bad.checks[0].pass);
  EXPECT_TRUE(bad.checks[1].pass);
  EXPECT_FALSE(bad.pass());
  const auto wide = check_rank_two_cover(M, 2, 3, {}, build_cover(M, {z(2), z(3), z(5)}, 2));
  EXPECT_TRUE(wide.checks[0].pass);
  EXPECT_FALSE(wide.checks[1].pass);
  EXPECT_THROW(check_rank_two_cover(M, 2, 2, {}, build_cover(M, {z(2)}, 2)), InvalidArgument);
}

TEST(RankTwo, AbelianRankAtMostTwoPassesStructuralChecks) {
  const AbExt M = quadratic({3, -7});
  for (const auto& extra : std::vector<std::vector<std::int64_t>>{{5}, {2}, {5, 13}, {-1, 5}, {2, 11}}) {
    std::vector<Element> e;
    for (auto x : extra) e.push_back(z(x));
    const Cover C = build_cover(M, e, 2);
    const int n = static_cast<int>(extra.size());
    const auto rep = check_rank_two_cover(M, 2, n, {}, C);
    EXPECT_TRUE(rep.checks[1].pass);
    EXPECT_TRUE(rep.checks[2].pass);
    EXPECT_EQ(group_rank(relative_galois(C), 2), n);
  }
}

TEST(S0, Examples) {
  const AbExt M = quadratic({3, -7});
  const auto s0 = s0_search(M, 2, 2, 1000);
  EXPECT_EQ(s0.size(), 2u);
  for (const auto& [sigma, P] : s0) {
    EXPECT_EQ(P.value % 4, 1);
    EXPECT_EQ(frobenius_if_unramified(M, P), sigma);
    // smallest prime = 1 mod 4 with the prescribed symbols
    for (std::int64_t p : primes_up_to(P.value - 1)) {
      if (p % 4 != 1 || p == 3 || p == 7) continue;
      const GalElt f{legendre(3, p) == 1 ? 0 : 1, legendre(-7, p) == 1 ? 0 : 1};
      EXPECT_NE(f, sigma) << p;
    }
  }
  const auto t = s0_search(quadratic({-1}), 2, 2, 1000);
  ASSERT_EQ(t.size(), 1u);
  EXPECT_EQ(t[0].first, GalElt{0});
  EXPECT_EQ(t[0].second, pr(5));
  const auto f = s0_search(cubic_pair(), 3, 1, 343);
  EXPECT_EQ(f.size(), 2u);
  for (const auto& [sigma, P] : f) {
    EXPECT_EQ(P.residue_norm() % 3, 1);
    EXPECT_EQ(frobenius_if_unramified(cubic_pair(), P), sigma);
  }
  EXPECT_THROW(s0_search(M, 2, 2, 10), SearchExhausted);
}

TEST(Inertia, Bound) {
  const Cover C = build_cover(quadratic({3, -7}), {z(2)}, 2);
  const auto at11 = inertia_bound_check(C, pr(11), 2);
  EXPECT_TRUE(at11.full_local_degree);
  EXPECT_EQ(at11.e, 1);
  EXPECT_EQ(at11.bound, 8);
  EXPECT_TRUE(at11.holds);
  EXPECT_TRUE(inertia_bound_check(C, pr(3), 2).holds);
  // tame counter-candidate: exponent 6 over F_7(t)(t^{1/3}) gives e = 6 at (t), beyond 3^s = 3
  const AbExt M = AbExt::build(F7, 3, {f7({0, 1})});
  const Cover wide = build_cover(M, {f7(poly::mul({0, 0, 0, 1}, poly::mul({1, 1}, {1, 1}, 7), 7))}, 6);
  const auto bad = inertia_bound_check(wide, Place::polynomial(7, {0, 1}), 3);
  EXPECT_EQ(bad.e, 6);
  EXPECT_EQ(bad.bound, 3);
  EXPECT_FALSE(bad.holds);
  EXPECT_FALSE(inertia_bound_holds(9, 3, 1, 0));
  EXPECT_TRUE(inertia_bound_holds(4, 2, 0, 1));
}

TEST(BoundReport, Examples) {
  const auto a = bound_report(quadratic({3, -7}), 2, 4);
  EXPECT_TRUE(a.sylow_noncyclic);
  EXPECT_EQ(a.s, 1);
  EXPECT_EQ(a.r, 2);
  EXPECT_EQ(a.ceiling, 8);
  EXPECT_FALSE(a.exact.has_value());
  EXPECT_EQ(bound_report(quadratic({3, -7}), 2, 4, true).exact, 0);
  const auto b = bound_report(quadratic({11}), 2, 2);
  EXPECT_FALSE(b.sylow_noncyclic);
  EXPECT_FALSE(b.ceiling.has_value());
  const auto c = bound_report(cubic_pair(), 3, 9);
  EXPECT_TRUE(c.sylow_noncyclic);
  EXPECT_EQ(c.s, 1);
  EXPECT_EQ(c.ceiling, 2);
  EXPECT_EQ(bound_report(cubic_pair(), 3, 9, true).exact, 0);
  EXPECT_THROW(bound_report(cubic_pair(), 7, 9), InvalidArgument);
  EXPECT_THROW(bound_report(quadratic({3, -7}), 2, 3), InvalidArgument);
  const auto d = bound_report(AbExt::build(F7, 2, {f7({0, 1}), f7({3, 1})}), 2, 2);
  EXPECT_TRUE(d.sylow_noncyclic);
  EXPECT_EQ(d.s, 1);
}

TEST(Property, SubCoverImplicationAtFinitePlaces) {
  const AbExt M = quadratic({11});
  const std::vector<Place> S = {pr(3), pr(5), pr(7)};
  for (const auto& extra : std::vector<std::vector<std::int64_t>>{{-1, 2}, {2, 3}, {-1, 5}, {5, 13}}) {
    std::vector<Element> e;
    for (auto x : extra) e.push_back(z(x));
    const Cover C = build_cover(M, e, 2);
    const DivisorProfile d4(M, 4), d2(M, 2);
    bool holds = true;
    for (const auto& P : S) holds = holds && cover_local_degree(C, P) % d4(P) == 0;
    if (!holds) continue;
    for (const auto& sub : sub_covers(C, 2))
      for (const auto& P : S) EXPECT_EQ(cover_local_degree(sub, P) % d2(P), 0) << P.str();
  }
}

TEST(Property, SubCoverImplicationFailsAtTheRealPlace) {
  // L = M(sqrt -1, sqrt 2) is complex, its sub-cover M(sqrt 2) is real
  const AbExt M = quadratic({11});
  const Cover C = build_cover(M, {z(-1), z(2)}, 2);
  EXPECT_EQ(cover_local_degree(C, Place::real()) % d_value(Place::real(), 4, M), 0);
  const Cover sub = build_cover(M, {z(2)}, 2);
  EXPECT_NE(cover_local_degree(sub, Place::real()) % d_value(Place::real(), 2, M), 0);
}
