#pragma once

// Class-2 central extensions 1 -> A -> G -> B -> 1 with A = C_{p^a} cyclic
// and B = C_{p^{b_1}} x ... x C_{p^{b_k}}.
//
// G is generated by z (a generator of A) and lifts x_i of the basis of B:
//
//     x_i^{p^{b_i}} = z^{t_i},   [x_i, x_j] = x_i x_j x_i^-1 x_j^-1 = z^{c_ij}  (i < j),
//
// with z central. Elements are normal forms z^alpha x_1^{e_1} ... x_k^{e_k}.
// Moving x_i^{e'} to the left across x_j^{e} (j > i) costs z^{-c_ij e e'}, and
// exponent overflow at x_i is paid with z^{t_i}. The relations are consistent
// iff p^{min(b_i, b_j)} c_ij = 0 in Z/p^a.
//
// The section is s(e) = (0, e). A is written additively as Z/p^a.

#include <array>
#include <cstdint>
#include <functional>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "ncp/arith.hpp"
#include "ncp/error.hpp"

namespace ncp {

struct GroupElt {
  int alpha = 0;
  std::vector<int> e;
  bool operator==(const GroupElt&) const = default;
  auto operator<=>(const GroupElt&) const = default;
};

// Finite abelian p-group C_{p^{b_1}} x ... x C_{p^{b_k}}.
class AbGroup {
 public:
  AbGroup() = default;
  AbGroup(std::int64_t p, std::vector<int> exps) : p_(p), b_(std::move(exps)) {
    for (int bi : b_) {
      require(bi >= 1, "AbGroup: factor exponents must be positive");
      orders_.push_back(static_cast<int>(ipow(p, static_cast<unsigned>(bi))));
    }
  }

  std::int64_t p() const { return p_; }
  int rank() const { return static_cast<int>(b_.size()); }
  const std::vector<int>& exponents() const { return b_; }
  const std::vector<int>& orders() const { return orders_; }

  std::int64_t size() const {
    std::int64_t s = 1;
    for (int o : orders_) s *= o;
    return s;
  }
  int exponent() const {
    int e = 1;
    for (int o : orders_) e = std::max(e, o);
    return e;
  }
  bool is_cyclic() const { return b_.size() <= 1; }

  std::vector<int> add(const std::vector<int>& x, const std::vector<int>& y) const {
    std::vector<int> r(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) r[i] = (x[i] + y[i]) % orders_[i];
    return r;
  }
  std::vector<int> scale(const std::vector<int>& x, std::int64_t k) const {
    std::vector<int> r(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) r[i] = static_cast<int>(mod(x[i] * k, orders_[i]));
    return r;
  }
  bool is_zero(const std::vector<int>& x) const {
    for (int v : x)
      if (v != 0) return false;
    return true;
  }
  int order(const std::vector<int>& x) const {
    int o = 1;
    for (std::size_t i = 0; i < x.size(); ++i) o = std::max(o, orders_[i] / std::gcd(x[i], orders_[i]));
    return o;
  }

  std::vector<std::vector<int>> elements() const {
    std::vector<std::vector<int>> out;
    std::vector<int> v(b_.size(), 0);
    const std::int64_t total = size();
    for (std::int64_t idx = 0; idx < total; ++idx) {
      std::int64_t x = idx;
      for (std::size_t i = b_.size(); i-- > 0;) {
        v[i] = static_cast<int>(x % orders_[i]);
        x /= orders_[i];
      }
      out.push_back(v);
    }
    return out;
  }

  // B[p]: elements killed by p.
  std::vector<std::vector<int>> p_torsion() const {
    std::vector<std::vector<int>> out;
    for (auto& x : elements())
      if (is_zero(scale(x, p_))) out.push_back(x);
    return out;
  }

 private:
  std::int64_t p_ = 2;
  std::vector<int> b_;
  std::vector<int> orders_;
};

class CentralExt {
 public:
  CentralExt() = default;

  // b_orders are the orders p^{b_i} of the cyclic factors of B; t and c are
  // exponents of z. c is a k x k matrix of which only the strict upper
  // triangle is read (or empty when k <= 1).
  static CentralExt build(std::int64_t p, int a, const std::vector<int>& b_orders, std::vector<int> t,
                          const std::vector<std::vector<int>>& c) {
    require(is_prime(p), "ext_build: p must be prime");
    require(a >= 0, "ext_build: a must be nonnegative");
    CentralExt E;
    E.p_ = p;
    E.a_ = a;
    E.A_order_ = static_cast<int>(ipow(p, static_cast<unsigned>(a)));
    std::vector<int> exps;
    for (int o : b_orders) {
      require(o > 1, "ext_build: factor orders of B must exceed 1");
      int e = 0;
      std::int64_t x = o;
      while (x % p == 0) {
        x /= p;
        ++e;
      }
      require(x == 1, "ext_build: " + std::to_string(o) + " is not a power of p");
      exps.push_back(e);
    }
    E.B_ = AbGroup(p, exps);
    const std::size_t k = exps.size();
    require(t.size() == k, "ext_build: need one power value t_i per factor of B");
    for (auto& ti : t) ti = static_cast<int>(mod(ti, E.A_order_));
    E.t_ = std::move(t);
    E.c_.assign(k, std::vector<int>(k, 0));
    if (!c.empty()) {
      require(c.size() == k, "ext_build: commutator matrix has the wrong size");
      for (std::size_t i = 0; i < k; ++i) {
        require(c[i].size() == k, "ext_build: commutator matrix has the wrong size");
        for (std::size_t j = i + 1; j < k; ++j) {
          const int cij = static_cast<int>(mod(c[i][j], E.A_order_));
          const std::int64_t m = std::min(E.B_.orders()[i], E.B_.orders()[j]);
          require(mod(m * cij, E.A_order_) == 0, "ext_build: order of c_" + std::to_string(i + 1) +
                                                      std::to_string(j + 1) + " does not divide gcd of factor orders");
          E.c_[i][j] = cij;
        }
      }
    }
    return E;
  }

  std::int64_t p() const { return p_; }
  int a() const { return a_; }
  int A_order() const { return A_order_; }
  const AbGroup& B() const { return B_; }
  const std::vector<int>& t() const { return t_; }
  const std::vector<std::vector<int>>& c() const { return c_; }
  std::int64_t order() const { return A_order_ * B_.size(); }

  GroupElt identity() const { return {0, std::vector<int>(static_cast<std::size_t>(B_.rank()), 0)}; }
  GroupElt central(int alpha) const {
    GroupElt g = identity();
    g.alpha = static_cast<int>(mod(alpha, A_order_));
    return g;
  }
  GroupElt section(const std::vector<int>& x) const { return {0, x}; }

  GroupElt mul(const GroupElt& g, const GroupElt& h) const {
    const std::size_t k = g.e.size();
    std::int64_t alpha = g.alpha + h.alpha;
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = i + 1; j < k; ++j) alpha -= static_cast<std::int64_t>(c_[i][j]) * g.e[j] * h.e[i];
    GroupElt r;
    r.e.resize(k);
    const auto& ord = B_.orders();
    for (std::size_t i = 0; i < k; ++i) {
      int s = g.e[i] + h.e[i];
      if (s >= ord[i]) {
        s -= ord[i];
        alpha += t_[i];
      }
      r.e[i] = s;
    }
    r.alpha = static_cast<int>(mod(alpha, A_order_));
    return r;
  }

  GroupElt pow(GroupElt g, std::int64_t n) const {
    if (n < 0) return pow(inverse(g), -n);
    GroupElt r = identity();
    while (n > 0) {
      if (n & 1) r = mul(r, g);
      g = mul(g, g);
      n >>= 1;
    }
    return r;
  }

  GroupElt inverse(const GroupElt& g) const {
    // g^{-1} = g^{ord(g) - 1}
    return pow_positive(g, element_order(g) - 1);
  }

  std::int64_t element_order(const GroupElt& g) const {
    // the image in B has order o; then g^o is central
    const int o = B_.order(g.e);
    const GroupElt go = pow_positive(g, o);
    return static_cast<std::int64_t>(o) * (A_order_ / std::gcd(go.alpha, A_order_));
  }

  // Order by repeated multiplication (test oracle for element_order).
  std::int64_t element_order_by_iteration(const GroupElt& g) const {
    GroupElt x = g;
    std::int64_t k = 1;
    while (!(x == identity())) {
      x = mul(x, g);
      ++k;
    }
    return k;
  }

  std::vector<GroupElt> elements() const {
    std::vector<GroupElt> out;
    for (const auto& x : B_.elements())
      for (int alpha = 0; alpha < A_order_; ++alpha) out.push_back({alpha, x});
    return out;
  }

  std::string str() const {
    std::string s = "p=" + std::to_string(p_) + " |A|=" + std::to_string(A_order_) + " B=(";
    for (std::size_t i = 0; i < B_.orders().size(); ++i) s += (i ? "," : "") + std::to_string(B_.orders()[i]);
    s += ") t=(";
    for (std::size_t i = 0; i < t_.size(); ++i) s += (i ? "," : "") + std::to_string(t_[i]);
    s += ") c=(";
    bool first = true;
    for (std::size_t i = 0; i < c_.size(); ++i)
      for (std::size_t j = i + 1; j < c_.size(); ++j) {
        s += (first ? "" : ",") + std::to_string(c_[i][j]);
        first = false;
      }
    return s + ")";
  }

 private:
  GroupElt pow_positive(GroupElt g, std::int64_t n) const {
    GroupElt r = identity();
    while (n > 0) {
      if (n & 1) r = mul(r, g);
      g = mul(g, g);
      n >>= 1;
    }
    return r;
  }

  std::int64_t p_ = 2;
  int a_ = 0;
  int A_order_ = 1;
  AbGroup B_;
  std::vector<int> t_;
  std::vector<std::vector<int>> c_;
};

inline CentralExt ext_build(std::int64_t p, int a, const std::vector<int>& b_orders, const std::vector<int>& t,
                            const std::vector<std::vector<int>>& c) {
  return CentralExt::build(p, a, b_orders, t, c);
}

inline GroupElt ext_mul(const CentralExt& E, const GroupElt& g, const GroupElt& h) { return E.mul(g, h); }
inline std::int64_t ext_order(const CentralExt& E, const GroupElt& g) { return E.element_order(g); }

// ---------------------------------------------------------------------------
// Fibers and the pairings
// ---------------------------------------------------------------------------

// pi^{-1}<x> by closure under multiplication from z and s(x).
inline std::vector<GroupElt> fiber(const CentralExt& E, const std::vector<int>& x) {
  const std::vector<GroupElt> gens{E.central(1), E.section(x)};
  std::set<GroupElt> seen{E.identity()};
  std::vector<GroupElt> frontier{E.identity()};
  while (!frontier.empty()) {
    std::vector<GroupElt> next;
    for (const auto& g : frontier)
      for (const auto& s : gens) {
        GroupElt h = E.mul(g, s);
        if (seen.insert(h).second) next.push_back(std::move(h));
      }
    frontier = std::move(next);
  }
  return {seen.begin(), seen.end()};
}

// Cyclicity of pi^{-1}<x> via the closure: some element has order |H|.
inline bool fiber_is_cyclic_by_closure(const CentralExt& E, const std::vector<int>& x) {
  const auto H = fiber(E, x);
  for (const auto& g : H)
    if (E.element_order(g) == static_cast<std::int64_t>(H.size())) return true;
  return false;
}

// Cyclicity of pi^{-1}<x> by counting its elements of order p. With
// g = s(x), o = ord(x) and g^o = z^lambda, the fiber is {z^u g^v : 0 <= v < o}
// and an abelian p-group is cyclic iff it has exactly p - 1 elements of order p.
inline bool fiber_is_cyclic(const CentralExt& E, const std::vector<int>& x) {
  const std::int64_t p = E.p();
  const int o = E.B().order(x);
  const int lambda = E.pow(E.section(x), o).alpha;
  const int Aord = E.A_order();
  std::int64_t order_p = 0;
  for (std::int64_t j = 0; j < (o == 1 ? 1 : p); ++j) {
    const std::int64_t v = o == 1 ? 0 : j * (o / p);
    // (z^u g^v)^p = z^{p u + lambda * (p v / o)}
    const std::int64_t carry = o == 1 ? 0 : (p * v) / o;
    for (std::int64_t u = 0; u < Aord; ++u) {
      if (u == 0 && v == 0) continue;
      if (mod(p * u + lambda * carry, Aord) == 0) ++order_p;
    }
  }
  return order_p == p - 1;
}

// beta(x, y) = [s(x), s(y)] in A.
inline int beta(const CentralExt& E, const std::vector<int>& x, const std::vector<int>& y) {
  const GroupElt g = E.section(x);
  const GroupElt h = E.section(y);
  return E.mul(E.mul(g, h), E.mul(E.inverse(g), E.inverse(h))).alpha;
}

// Commutator of two arbitrary elements (its alpha component).
inline int commutator(const CentralExt& E, const GroupElt& g, const GroupElt& h) {
  return E.mul(E.mul(g, h), E.mul(E.inverse(g), E.inverse(h))).alpha;
}

// gamma(x) = s(x)^p in A/A^p = Z/p, for x in B[p].
inline int gamma(const CentralExt& E, const std::vector<int>& x) {
  require(E.B().is_zero(E.B().scale(x, E.p())), "gamma: x is not in B[p]");
  return static_cast<int>(mod(E.pow(E.section(x), E.p()).alpha, E.p()));
}

using BetaFn = std::function<int(const CentralExt&, const std::vector<int>&, const std::vector<int>&)>;

// ---------------------------------------------------------------------------
// Fiber and power-map criteria
// ---------------------------------------------------------------------------

// Cyclic fiber over x != 1 iff A is trivial or generated by s(x)^{ord x}.
inline bool verify_fiber_generator_criterion(const CentralExt& E, const std::vector<int>& x) {
  require(!E.B().is_zero(x), "verify_fiber_generator_criterion: x must be nontrivial");
  const bool lhs = fiber_is_cyclic_by_closure(E, x);
  const int o = E.B().order(x);
  const int lambda = E.pow(E.section(x), o).alpha;
  const bool rhs = E.A_order() == 1 || std::gcd(lambda, E.A_order()) == 1;
  return lhs == rhs;
}

struct BetaLawsReport {
  std::int64_t pairs = 0;
  std::int64_t alternating_violations = 0;
  std::int64_t bimultiplicative_violations = 0;
  std::int64_t lift_violations = 0;
  bool ok() const { return alternating_violations == 0 && bimultiplicative_violations == 0 && lift_violations == 0; }
};

// beta alternating, bimultiplicative, and equal to the commutator of any
// lifts; `beta_fn` replaces the pairing (mutation fixtures).
inline BetaLawsReport verify_beta_laws(const CentralExt& E, const BetaFn& beta_fn = beta) {
  BetaLawsReport rep;
  const auto& B = E.B();
  const auto elems = B.elements();
  const int Aord = E.A_order();
  for (const auto& x : elems) {
    if (beta_fn(E, x, x) != 0) ++rep.alternating_violations;
    for (const auto& y : elems) {
      ++rep.pairs;
      const int bxy = beta_fn(E, x, y);
      for (const auto& w : {elems[elems.size() / 2], elems.back()}) {
        if (mod(beta_fn(E, B.add(x, w), y) - bxy - beta_fn(E, w, y), Aord) != 0) ++rep.bimultiplicative_violations;
        if (mod(beta_fn(E, x, B.add(y, w)) - bxy - beta_fn(E, x, w), Aord) != 0) ++rep.bimultiplicative_violations;
      }
      for (int u = 0; u < Aord; u += std::max(1, Aord / 2)) {
        const GroupElt gx{u, x};
        const GroupElt gy{(Aord - 1 - u + Aord) % Aord, y};
        if (commutator(E, gx, gy) != bxy) ++rep.lift_violations;
      }
    }
  }
  return rep;
}

struct PowerMapReport {
  bool gamma_homomorphism = true;
  bool criterion = true;  // p = 2: beta(x, y) in A^2 for all x, y in B[2]
  bool consistent = true;  // additivity of gamma vs. the criterion
  std::int64_t pair_identity_violations = 0;  // gamma(x+y) = gamma(x)+gamma(y)+p(p-1)/2 beta(x,y)
  std::int64_t cyclic_fiber_violations = 0;   // cyclic fiber vs. gamma != 0
  bool ok() const { return consistent && pair_identity_violations == 0 && cyclic_fiber_violations == 0; }
};

// On E: the fiber over x in B[p] \ 1 is cyclic iff gamma(x) != 1; gamma is
// additive for odd p; for p = 2, gamma is additive iff beta(B[2], B[2]) lies
// in A^2. Also checks the identity (s(x)s(y))^p = s(x)^p s(y)^p beta^{p(p-1)/2}
// behind the last two, pair by pair.
inline PowerMapReport verify_power_map_criteria(const CentralExt& E, const BetaFn& beta_fn = beta) {
  PowerMapReport rep;
  const std::int64_t p = E.p();
  const auto& B = E.B();
  const auto Bp = B.p_torsion();
  if (E.A_order() > 1)
    for (const auto& x : Bp) {
      if (B.is_zero(x)) continue;
      if (fiber_is_cyclic_by_closure(E, x) != (gamma(E, x) != 0)) ++rep.cyclic_fiber_violations;
    }
  const std::int64_t binom = p * (p - 1) / 2;
  for (const auto& x : Bp)
    for (const auto& y : Bp) {
      const int gx = gamma(E, x);
      const int gy = gamma(E, y);
      const int gxy = gamma(E, B.add(x, y));
      if (gxy != (gx + gy) % p) rep.gamma_homomorphism = false;
      const int bxy = beta_fn(E, x, y);
      if (p == 2 && bxy % 2 != 0) rep.criterion = false;
      if (mod(gxy - gx - gy - binom * bxy, p) != 0) ++rep.pair_identity_violations;
    }
  rep.consistent = p == 2 ? (rep.gamma_homomorphism == rep.criterion) : rep.gamma_homomorphism;
  return rep;
}

// ---------------------------------------------------------------------------
// Exhaustive scan
// ---------------------------------------------------------------------------

struct ScanResult {
  std::int64_t enumerated = 0;
  std::int64_t noncyclic_B = 0;
  std::vector<CentralExt> hits;  // B non-cyclic, every fiber cyclic
  std::int64_t counterexamples = 0;  // hits with (p, |A|) != (2, 2)
};

// Calls visit(E) on every extension with 1 <= a <= max_a and B of rank
// 1..max_rank with factor orders p^b, b <= max_b (profiles sorted), for all
// t_i mod p^{min(a, b_i)} and admissible c_ij.
template <class Visitor>
void for_each_extension(std::int64_t p, int max_a, int max_b, int max_rank, Visitor&& visit) {
  std::vector<std::vector<int>> profiles;
  std::function<void(std::vector<int>&)> grow = [&](std::vector<int>& cur) {
    if (!cur.empty()) profiles.push_back(cur);
    if (static_cast<int>(cur.size()) == max_rank) return;
    for (int b = cur.empty() ? 1 : cur.back(); b <= max_b; ++b) {
      cur.push_back(b);
      grow(cur);
      cur.pop_back();
    }
  };
  std::vector<int> start;
  grow(start);
  for (int a = 1; a <= max_a; ++a) {
    const int Aord = static_cast<int>(ipow(p, static_cast<unsigned>(a)));
    for (const auto& prof : profiles) {
      const std::size_t k = prof.size();
      std::vector<int> orders;
      for (int b : prof) orders.push_back(static_cast<int>(ipow(p, static_cast<unsigned>(b))));
      std::vector<int> t_range;
      for (int b : prof) t_range.push_back(static_cast<int>(ipow(p, static_cast<unsigned>(std::min(a, b)))));
      std::vector<std::pair<std::size_t, std::size_t>> pairs;
      std::vector<int> c_step;
      for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = i + 1; j < k; ++j) {
          pairs.emplace_back(i, j);
          const int m = std::min(prof[i], prof[j]);
          c_step.push_back(static_cast<int>(ipow(p, static_cast<unsigned>(std::max(0, a - m)))));
        }
      std::vector<int> t(k, 0);
      std::vector<int> cv(pairs.size(), 0);
      std::vector<std::vector<int>> c(k, std::vector<int>(k, 0));
      // odometer over t then c
      while (true) {
        for (std::size_t q = 0; q < pairs.size(); ++q) c[pairs[q].first][pairs[q].second] = cv[q];
        visit(CentralExt::build(p, a, orders, t, c));
        std::size_t pos = 0;
        bool done = true;
        while (pos < k + pairs.size()) {
          if (pos < k) {
            if (++t[pos] < t_range[pos]) {
              done = false;
              break;
            }
            t[pos] = 0;
          } else {
            const std::size_t q = pos - k;
            cv[q] += c_step[q];
            if (cv[q] < Aord) {
              done = false;
              break;
            }
            cv[q] = 0;
          }
          ++pos;
        }
        if (done) break;
      }
    }
  }
}

// A fixed sample for the pairing batteries: every extension over p = 2 with
// |A| <= 8 and B of rank <= 2 (factors up to 4), rank 3 with factors 2 and
// |A| <= 4, p = 3 with |A| <= 9 and B elementary of rank <= 2, and p = 5
// with |A| = 5 and B elementary of rank <= 2. Duplicates removed.
inline std::vector<CentralExt> pairing_sample() {
  std::vector<CentralExt> out;
  std::set<std::string> seen;
  auto keep = [&](const CentralExt& E) {
    if (seen.insert(E.str()).second) out.push_back(E);
  };
  for_each_extension(2, 3, 2, 2, keep);
  for_each_extension(2, 2, 1, 3, keep);
  for_each_extension(3, 2, 1, 2, keep);
  for_each_extension(5, 1, 1, 2, keep);
  return out;
}

// Every extension with B non-cyclic whose fibers pi^{-1}<x> are all cyclic.
inline ScanResult cyclic_fiber_scan(std::int64_t p, int max_a, int max_b, int max_rank = 3) {
  ScanResult res;
  for_each_extension(p, max_a, max_b, max_rank, [&](const CentralExt& E) {
    ++res.enumerated;
    if (E.B().is_cyclic()) return;
    ++res.noncyclic_B;
    // odometer over B, nonzero elements only (the fiber over 1 is A)
    const auto& ord = E.B().orders();
    std::vector<int> x(ord.size(), 0);
    while (true) {
      std::size_t i = x.size();
      while (i-- > 0) {
        if (++x[i] < ord[i]) break;
        x[i] = 0;
      }
      if (E.B().is_zero(x)) break;
      if (!fiber_is_cyclic(E, x)) return;
    }
    res.hits.push_back(E);
    if (!(E.p() == 2 && E.A_order() == 2)) ++res.counterexamples;
  });
  return res;
}

// Whether E is the quaternion datum (p = 2, |A| = 2, B = C_2 x C_2,
// t = (1, 1), c_12 = 1).
inline bool is_quaternion_datum(const CentralExt& E) {
  return E.p() == 2 && E.A_order() == 2 && E.B().orders() == std::vector<int>{2, 2} &&
         E.t() == std::vector<int>{1, 1} && E.c()[0][1] == 1;
}

// ---------------------------------------------------------------------------
// Invariant lines of abelian matrix groups over F_p
// ---------------------------------------------------------------------------

using Mat2 = std::array<std::int64_t, 4>;  // row-major [[m0, m1], [m2, m3]]

inline Mat2 mat_mul(const Mat2& x, const Mat2& y, std::int64_t p) {
  return {mod(x[0] * y[0] + x[1] * y[2], p), mod(x[0] * y[1] + x[1] * y[3], p), mod(x[2] * y[0] + x[3] * y[2], p),
          mod(x[2] * y[1] + x[3] * y[3], p)};
}

// The p + 1 lines of F_p^2 in the order (1,0), (1,1), ..., (1,p-1), (0,1).
inline std::vector<std::pair<std::int64_t, std::int64_t>> projective_lines(std::int64_t p) {
  std::vector<std::pair<std::int64_t, std::int64_t>> out{{1, 0}};
  for (std::int64_t c = 1; c < p; ++c) out.emplace_back(1, c);
  out.emplace_back(0, 1);
  return out;
}

// A line fixed by every generator, or none. Rejects singular or
// non-commuting generators.
inline std::optional<std::pair<std::int64_t, std::int64_t>> invariant_line(std::int64_t p,
                                                                           const std::vector<Mat2>& gens) {
  require(is_prime(p), "invariant_line: p must be prime");
  for (auto g : gens) {
    for (auto& v : g) v = mod(v, p);
    require(mod(g[0] * g[3] - g[1] * g[2], p) != 0, "invariant_line: singular matrix");
  }
  for (std::size_t i = 0; i < gens.size(); ++i)
    for (std::size_t j = i + 1; j < gens.size(); ++j)
      require(mat_mul(gens[i], gens[j], p) == mat_mul(gens[j], gens[i], p),
              "invariant_line: generators do not commute");
  for (const auto& [x, y] : projective_lines(p)) {
    bool fixed = true;
    for (const auto& g : gens) {
      const std::int64_t gx = mod(g[0] * x + g[1] * y, p);
      const std::int64_t gy = mod(g[2] * x + g[3] * y, p);
      if (mod(gx * y - gy * x, p) != 0) {
        fixed = false;
        break;
      }
    }
    if (fixed) return std::make_pair(x, y);
  }
  return std::nullopt;
}

}  // namespace ncp
