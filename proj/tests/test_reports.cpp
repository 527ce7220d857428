#include <gtest/gtest.h>

#include "ncp/reports.hpp"

using namespace ncp;

namespace {

bool is_square_mod(std::int64_t a, std::int64_t p) {
  a = mod(a, p);
  for (std::int64_t x = 0; x < p; ++x)
    if (x * x % p == a) return true;
  return false;
}

// the stated hypotheses, with the quadratic character found by search
bool hypotheses_by_search(std::int64_t l, std::int64_t q) {
  return q % 4 == 3 && (q + l) % 8 != 0 && q != l && !is_square_mod(q, l);
}

}  // namespace

TEST(Multiquadratic, ListedParameters) {
  for (const auto& [l, q] : std::vector<std::pair<std::int64_t, std::int64_t>>{{3, 11}, {5, 7}, {7, 3}}) {
    const ExampleReport r = multiquadratic_example(l, q);
    EXPECT_TRUE(r.verdict()) << l << ", " << q;
    EXPECT_EQ(r.facts.size(), 8u);
    for (const auto& f : r.facts) EXPECT_TRUE(f.pass) << f.name << ": " << f.detail;
  }
}

TEST(Multiquadratic, WitnessClass) {
  const ExampleReport r = multiquadratic_example(7, 3);
  const Check* w = r.find("witness class of fiber index 8");
  ASSERT_NE(w, nullptr);
  EXPECT_TRUE(w->pass);
  EXPECT_NE(r.find("no abelian 2-cover with [L:M]_l = 2"), nullptr);
}

TEST(Multiquadratic, VerdictMatchesHypothesesForSmallPrimes) {
  const auto primes = primes_up_to(50);
  int agreeing = 0, hypothesis_pairs = 0;
  for (std::int64_t l : primes)
    for (std::int64_t q : primes) {
      if (l == 2 || q == 2 || l == q) continue;
      const bool hyp = hypotheses_by_search(l, q);
      EXPECT_EQ(multiquadratic_hypotheses(l, q), hyp);
      const ExampleReport r = multiquadratic_example(l, q, 200);
      EXPECT_EQ(r.verdict(), hyp) << "l = " << l << ", q = " << q;
      agreeing += r.verdict() == hyp;
      hypothesis_pairs += hyp;
    }
  EXPECT_GT(hypothesis_pairs, 20);
  EXPECT_GT(agreeing, 150);
}

TEST(Multiquadratic, FailingHypotheses) {
  const ExampleReport r = multiquadratic_example(3, 5);
  EXPECT_FALSE(r.verdict());
  EXPECT_FALSE(r.facts.at(0).pass);
  EXPECT_THROW(multiquadratic_example(2, 3), InvalidArgument);
  EXPECT_THROW(multiquadratic_example(9, 3), InvalidArgument);
}

TEST(FunctionField, Examples) {
  for (const auto& [p, q, a] : std::vector<std::array<std::int64_t, 3>>{{3, 7, 2}, {2, 3, 2}, {3, 13, 2}, {2, 5, 2}}) {
    const ExampleReport r = function_field_example(p, q, a);
    EXPECT_TRUE(r.verdict()) << p << " " << q << " " << a;
    for (const auto& f : r.facts) EXPECT_TRUE(f.pass) << f.name << ": " << f.detail;
    ASSERT_NE(r.find("b_p = 0"), nullptr);
  }
}

TEST(FunctionField, Errors) {
  EXPECT_THROW(function_field_example(3, 5, 2), InvalidArgument);  // 5 is not 1 mod 3
  EXPECT_THROW(function_field_example(4, 5, 2), InvalidArgument);
  EXPECT_THROW(function_field_example(3, 7, 1), InvalidArgument);
  EXPECT_THROW(function_field_example(3, 7, 0), InvalidArgument);
  EXPECT_THROW(function_field_example(3, 7, 6), InvalidArgument);  // 6 = (-1)^3 is a cube
}

TEST(Bicyclic, OverQ) {
  const ExampleReport r = bicyclic_realization(BaseField::rationals(), 2, Place::prime(5));
  EXPECT_TRUE(r.verdict());
  EXPECT_EQ(r.parameters.at("q1"), "3");
  EXPECT_EQ(r.parameters.at("q2"), "7");
  EXPECT_EQ(r.parameters.at("f1"), "-3");
  EXPECT_EQ(r.parameters.at("f2"), "35");
  // Q(sqrt -3): 5 inert, 7 split; Q(sqrt 35): 3 inert
  EXPECT_FALSE(is_square_mod(-3, 5));
  EXPECT_TRUE(is_square_mod(-3, 7));
  EXPECT_FALSE(is_square_mod(35, 3));
}

TEST(Bicyclic, OverFunctionField) {
  const BaseField K = BaseField::function_field(7);
  const ExampleReport r = bicyclic_realization(K, 2, Place::polynomial(7, {4, 1}));
  EXPECT_TRUE(r.verdict()) << r.note;
  EXPECT_EQ(r.parameters.at("q1"), "(t)");
  EXPECT_EQ(r.parameters.at("q2"), "(t+1)");
  // K(sqrt t) at t = 3: 3 is not a square mod 7
  EXPECT_FALSE(is_square_mod(3, 7));
}

TEST(Bicyclic, Errors) {
  EXPECT_THROW(bicyclic_realization(BaseField::rationals(), 2, Place::prime(2)), InvalidArgument);
  EXPECT_THROW(bicyclic_realization(BaseField::rationals(), 3, Place::prime(5)), InvalidArgument);
  EXPECT_THROW(bicyclic_realization(BaseField::rationals(), 2, Place::real()), InvalidArgument);
  EXPECT_THROW(bicyclic_realization(BaseField::function_field(7), 5, Place::polynomial(7, {4, 1})),
               InvalidArgument);
}
