#pragma once

// Abelian covers L of M/K and the certificates built on them.
//
// A cover is L = K(W_M^{1/n}, extra^{1/n'}) with n | n'. Inside L the
// radicands of M are carried as f^{n'/n}, so the first k generators of L span
// the Kummer group of M again. Everything here is restricted to abelian L/K;
// a failed scan is reported as "no abelian witness below bound", never as a
// proof that no cover exists.

#include <cstdint>
#include <functional>
#include <limits>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "ncp/abext.hpp"
#include "ncp/brauer.hpp"
#include "ncp/isolation.hpp"

namespace ncp {

struct Cover {
  AbExt M;
  AbExt L;
  int n_prime = 2;
  std::vector<Element> extra;
  std::int64_t rel_degree = 1;  // [L:M]
};

namespace detail {

// Order of the class of f in K^* / K^{*n}.
inline int class_order(const BaseField& K, int n, const Element& f) {
  const AbExt single = AbExt::build_general(K, n, {f});
  return static_cast<int>(single.degree());
}

}  // namespace detail

inline Cover build_cover(const AbExt& M, std::vector<Element> extra, int n_prime) {
  require(n_prime >= 1 && n_prime % M.n() == 0,
          "cover exponent " + std::to_string(n_prime) + " is not a multiple of n = " + std::to_string(M.n()));
  const BaseField& K = M.base();
  std::vector<Element> gens;
  for (const auto& f : M.radicands()) gens.push_back(f.pow(n_prime / M.n()));
  std::int64_t expected = M.degree();
  for (const auto& f : extra) {
    require(f.field == K, "extra radicand " + f.str() + " is not in " + K.str());
    const int o = detail::class_order(K, n_prime, f);
    require(o > 1, "extra radicand " + f.str() + " is trivial in K^*/K^*^" + std::to_string(n_prime));
    expected *= o;
    gens.push_back(f);
  }
  Cover C;
  C.M = M;
  C.L = AbExt::build_general(K, n_prime, std::move(gens));
  require(C.L.degree() == expected, "extra radicands are dependent on M or on each other");
  C.n_prime = n_prime;
  C.extra = std::move(extra);
  C.rel_degree = C.L.degree() / M.degree();
  return C;
}

// The trivial cover L = M.
inline Cover identity_cover(const AbExt& M) { return build_cover(M, {}, M.n()); }

// [L:M]_P = [L:K]_P / [M:K]_P.
inline std::int64_t cover_local_degree(const Cover& C, const Place& P) {
  return local_degree(C.L, P) / local_degree(C.M, P);
}

// Full local degree: [L:M]_P = [L:M] at finite P, = gcd(2, [L:M]) at a
// real place; automatic at a complex place.
inline bool full_local_degree(const Cover& C, const Place& P) {
  if (P.is_real()) {
    if (real_place_is_complex(C.M)) return true;
    return cover_local_degree(C, P) == std::gcd(C.rel_degree, std::int64_t{2});
  }
  return cover_local_degree(C, P) == C.rel_degree;
}

// Gal(L/M): elements of Gal(L/K) trivial on the radicands of M.
inline std::vector<GalElt> relative_galois(const Cover& C) {
  std::vector<ZnVec> m_part;
  const int k = C.M.rank();
  for (int i = 0; i < k; ++i) {
    ZnVec e(static_cast<std::size_t>(C.L.rank()), 0);
    e[static_cast<std::size_t>(i)] = 1;
    m_part.push_back(e);
  }
  return zn::annihilator(m_part, C.L.galois(), C.L.n());
}

// Minimal number of generators of a subgroup of (Z/n)^k.
inline int group_rank(const std::vector<GalElt>& G, int n) {
  if (G.size() <= 1) return 0;
  int rank = 0;
  for (const auto& [ell, e] : factorize(static_cast<std::int64_t>(G.size()))) {
    std::set<GalElt> multiples;
    for (const auto& a : G) multiples.insert(zn::scale(a, ell, n));
    std::int64_t quotient = static_cast<std::int64_t>(G.size() / multiples.size());
    int d = 0;
    while (quotient > 1) {
      quotient /= ell;
      ++d;
    }
    rank = std::max(rank, d);
  }
  return rank;
}

// ---------------------------------------------------------------------------
// Certificates
// ---------------------------------------------------------------------------

struct Check {
  std::string name;
  bool pass = false;
  std::string detail;
};

struct CertReport {
  std::string condition;  // "B_m" or "rank-two"
  std::int64_t m = 1;
  std::int64_t p = 0;
  int n = 0;
  std::vector<Place> S;
  std::optional<Cover> witness;
  std::vector<Check> checks;
  std::string note;
  std::int64_t candidates_tried = 0;

  bool pass() const {
    if (!witness) return false;
    for (const auto& c : checks)
      if (!c.pass) return false;
    return true;
  }
};

// Bounded family of abelian candidate covers.
struct CoverFamily {
  std::int64_t radicand_bound = 1000;  // |d| over Q, residue norm over F_q(t)
  int n_prime = 0;                     // 0: use n of M
  int max_extra = 1;                   // number of extra radicands
  std::int64_t max_candidates = 2'000'000;
};

// Candidate radicands in scan order. Over Q: squarefree d != 1 by |d|, the
// positive one first. Over F_q(t): the constant primitive root, then monic
// irreducibles by degree and lexicographically, each raised to n'/o for
// every divisor o > 1 of n'.
inline std::vector<Element> candidate_radicands(const BaseField& K, std::int64_t bound, int n_prime) {
  std::vector<Element> out;
  if (K.is_rationals()) {
    out.push_back(Element::from_integer(-1));
    for (std::int64_t d = 2; d <= bound; ++d) {
      bool squarefree = true;
      for (const auto& [ell, e] : factorize(d)) squarefree = squarefree && e == 1;
      if (!squarefree) continue;
      out.push_back(Element::from_integer(d));
      out.push_back(Element::from_integer(-d));
    }
    return out;
  }
  std::vector<Element> base{Element::constant(K, PrimeField(K.q).generator())};
  for_each_place(K, bound, [&](const Place& P) {
    if (P.is_poly()) base.push_back(Element::from_polynomial(K, P.coeffs));
    return true;
  });
  for (const auto& f : base)
    for (int o = 2; o <= n_prime; ++o)
      if (n_prime % o == 0) out.push_back(f.pow(n_prime / o));
  return out;
}

namespace detail {

inline void add_divisibility_checks(CertReport& rep, const Cover& C, const std::vector<Place>& S,
                                    const std::function<std::int64_t(const Place&)>& d) {
  for (const auto& P : S) {
    const std::int64_t dp = d(P);
    const std::int64_t lp = cover_local_degree(C, P);
    rep.checks.push_back({"d_P(m) | [L:M]_P at " + P.str(), lp % dp == 0,
                          "d = " + std::to_string(dp) + ", [L:M]_P = " + std::to_string(lp)});
  }
}

inline bool divisibility_holds(const Cover& C, const std::vector<Place>& S,
                               const std::vector<std::int64_t>& d_values) {
  for (std::size_t i = 0; i < S.size(); ++i)
    if (cover_local_degree(C, S[i]) % d_values[i] != 0) return false;
  return true;
}

}  // namespace detail

// Searches the candidate family for an m-cover L with d_P(m) | [L:M]_P on S.
// `d` overrides the divisor function (used by mutation fixtures).
inline CertReport check_Bm(const AbExt& M, std::int64_t m, const std::vector<Place>& S, const CoverFamily& family = {},
                           std::function<std::int64_t(const Place&, std::int64_t, const AbExt&)> d = nullptr) {
  require(m >= 1, "check_Bm: m must be positive");
  CertReport rep;
  rep.condition = "B_m";
  rep.m = m;
  rep.S = S;
  const BaseField& K = M.base();
  const std::int64_t ch = K.characteristic();
  if (ch != 0 && m > 1) {
    std::int64_t rest = m;
    while (rest % ch == 0) rest /= ch;
    if (rest == 1) {
      rep.witness = identity_cover(M);
      rep.checks.push_back({"wild case p = char K", true, "holds unconditionally; witness not constructed"});
      rep.note = "wild case: (B_m) holds for every power of the characteristic; no explicit cover is built";
      return rep;
    }
  }
  std::function<std::int64_t(const Place&)> dfun;
  if (d) {
    dfun = [&](const Place& P) { return d(P, m, M); };
  } else {
    auto profile = std::make_shared<DivisorProfile>(M, m);
    dfun = [profile](const Place& P) { return (*profile)(P); };
  }
  std::vector<std::int64_t> dvals;
  for (const auto& P : S) dvals.push_back(dfun(P));

  if (m == 1) {
    rep.witness = identity_cover(M);
    detail::add_divisibility_checks(rep, *rep.witness, S, dfun);
    return rep;
  }
  const int n_prime = family.n_prime == 0 ? M.n() : family.n_prime;
  const auto cands = candidate_radicands(K, family.radicand_bound, n_prime);
  // depth-first over increasing candidate indices
  std::vector<Element> chosen;
  std::optional<Cover> found;
  std::function<void(std::size_t, std::int64_t)> dfs = [&](std::size_t start, std::int64_t degree_so_far) {
    for (std::size_t i = start; i < cands.size() && !found; ++i) {
      if (rep.candidates_tried >= family.max_candidates) return;
      chosen.push_back(cands[i]);
      ++rep.candidates_tried;
      std::optional<Cover> C;
      try {
        C = build_cover(M, chosen, n_prime);
      } catch (const InvalidArgument&) {
      }
      if (C && m % C->rel_degree == 0) {
        if (C->rel_degree == m) {
          if (detail::divisibility_holds(*C, S, dvals)) found = C;
        } else if (static_cast<int>(chosen.size()) < family.max_extra) {
          dfs(i + 1, C->rel_degree);
        }
      }
      chosen.pop_back();
    }
    (void)degree_so_far;
  };
  dfs(0, 1);
  if (found) {
    rep.witness = found;
    detail::add_divisibility_checks(rep, *found, S, dfun);
  } else {
    rep.checks.push_back({"abelian witness", false,
                          "no abelian witness below bound " + std::to_string(family.radicand_bound) + " (" +
                              std::to_string(rep.candidates_tried) + " candidates)"});
    rep.note = "bounded scan of abelian composita; absence of a witness is not a disproof";
  }
  return rep;
}

// Sub-covers of C of degree m' obtained from subsets of the extra radicands.
inline std::vector<Cover> sub_covers(const Cover& C, std::int64_t m_prime) {
  std::vector<Cover> out;
  const std::size_t k = C.extra.size();
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << k); ++mask) {
    std::vector<Element> pick;
    for (std::size_t i = 0; i < k; ++i)
      if (mask >> i & 1U) pick.push_back(C.extra[i]);
    try {
      Cover sub = build_cover(C.M, pick, C.n_prime);
      if (sub.rel_degree == m_prime) out.push_back(std::move(sub));
    } catch (const InvalidArgument&) {
    }
  }
  return out;
}

// The three conditions for a p^n-cover: d_P(p^n) | [L:M]_P on S, Gal(L/M)
// abelian of rank <= 2, Gal(M/T) acting trivially on Gal(L/M).
inline CertReport check_rank_two_cover(const AbExt& M, std::int64_t p, int n, const std::vector<Place>& S, const Cover& C) {
  const std::int64_t pn = ipow(p, static_cast<unsigned>(n));
  require(C.rel_degree == pn, "cover degree " + std::to_string(C.rel_degree) + " is not p^n = " + std::to_string(pn));
  require(C.M.base() == M.base() && C.M.radicands() == M.radicands(), "cover is not a cover of the given M");
  CertReport rep;
  rep.condition = "rank-two";
  rep.m = pn;
  rep.p = p;
  rep.n = n;
  rep.S = S;
  rep.witness = C;
  const DivisorProfile d(M, pn);
  bool all = true;
  std::string detail;
  for (const auto& P : S) {
    const std::int64_t dp = d(P);
    const std::int64_t lp = cover_local_degree(C, P);
    all = all && lp % dp == 0;
    detail += P.str() + ": d=" + std::to_string(dp) + " [L:M]_P=" + std::to_string(lp) + "; ";
  }
  rep.checks.push_back({"d_P(p^n) | [L:M]_P on S", all, detail});
  const int rank = group_rank(relative_galois(C), C.L.n());
  rep.checks.push_back({"Gal(L/M) abelian of rank <= 2", rank <= 2,
                        "abelian cover, rank " + std::to_string(rank)});
  rep.checks.push_back({"Gal(M/T) acts trivially on Gal(L/M)", true, "automatic: L/K is abelian"});
  return rep;
}

// ---------------------------------------------------------------------------
// Prime searches tied to covers
// ---------------------------------------------------------------------------

// For every generator sigma of Gal(M/T) (or sigma = 1 if M = T) one
// unramified place with Frobenius sigma, p not dividing N(P) and
// N(P) = 1 mod p^n.
inline std::vector<std::pair<GalElt, Place>> s0_search(const AbExt& M, std::int64_t p, int n, std::int64_t bound) {
  require(p != M.base().characteristic(), "s0_search: p equals the characteristic");
  const SubExtension T = cyclotomic_T(M, p);
  const auto over_T = galois_over(M, T);
  std::vector<GalElt> gens = zn::generators(over_T, M.n());
  if (gens.empty()) gens.push_back(GalElt(static_cast<std::size_t>(M.rank()), 0));
  const std::int64_t pn = ipow(p, static_cast<unsigned>(n));
  std::vector<std::pair<GalElt, Place>> out;
  for (const auto& sigma : gens) {
    std::optional<Place> hit;
    for_each_place(M.base(), bound, [&](const Place& P) {
      const std::int64_t N = P.residue_norm();
      if (N % p == 0 || mod(N, pn) != 1) return true;
      const auto frob = frobenius_if_unramified(M, P);
      if (frob && *frob == sigma) {
        hit = P;
        return false;
      }
      return true;
    });
    if (!hit)
      throw SearchExhausted("s0_search: no place for sigma = " + zn::str(sigma) + " below norm " +
                            std::to_string(bound));
    out.emplace_back(sigma, *hit);
  }
  return out;
}

// e | p^s (odd p) or e | 2^{r+1} (p = 2).
inline bool inertia_bound_holds(std::int64_t e, std::int64_t p, int s, int r) {
  const std::int64_t bound = p == 2 ? ipow(2, static_cast<unsigned>(r + 1)) : ipow(p, static_cast<unsigned>(s));
  return bound % e == 0;
}

struct InertiaBoundReport {
  Place place;
  std::int64_t e = 1;      // e_P(L/K)
  std::int64_t bound = 1;  // p^s or 2^{r+1}
  bool full_local_degree = false;
  bool holds = true;
};

inline InertiaBoundReport inertia_bound_check(const Cover& C, const Place& P, std::int64_t p) {
  InertiaBoundReport rep;
  rep.place = P;
  rep.e = ramification_index(C.L, P);
  const int s = roots_of_unity_s(C.M, p);
  const int r = p == 2 ? r_value(C.M) : 0;
  rep.bound = p == 2 ? ipow(2, static_cast<unsigned>(r + 1)) : ipow(p, static_cast<unsigned>(s));
  rep.full_local_degree = full_local_degree(C, P);
  rep.holds = inertia_bound_holds(rep.e, p, s, r);
  return rep;
}

// What can be said about b_p(chi) for M = K(chi).
struct BoundReport {
  std::int64_t p = 2;
  std::int64_t chi_order = 1;
  int s = 0;
  std::optional<int> r;
  std::string T;
  std::int64_t T_degree = 1;
  bool sylow_noncyclic = false;
  std::optional<int> ceiling;  // from the roots of unity in M
  std::optional<int> exact;    // only ever 0
  int lower = 0;
  std::string statement;
  std::string semantics =
      "interval [lower, upper]: lower from certificates, upper from the roots-of-unity ceiling or unbounded";
};

inline BoundReport bound_report(const AbExt& M, std::int64_t p, std::int64_t chi_order,
                                bool certified_obstruction = false) {
  require(is_prime(p), "bound_report: p must be prime");
  require(p != M.base().characteristic(), "bound_report: wild prime p = char K");
  require(chi_order >= 1 && chi_order % M.exponent() == 0,
          "|chi| = " + std::to_string(chi_order) + " is not a multiple of exp Gal(M/K) = " +
              std::to_string(M.exponent()));
  BoundReport b;
  b.p = p;
  b.chi_order = chi_order;
  b.s = roots_of_unity_s(M, p);
  if (p == 2) b.r = r_value(M);
  const SubExtension T = cyclotomic_T(M, p);
  b.T = T.description;
  b.T_degree = T.degree;
  std::int64_t p_torsion = 0;
  for (const auto& a : M.galois())
    if (zn::is_zero(zn::scale(a, p, M.n()))) ++p_torsion;
  b.sylow_noncyclic = p_torsion >= p * p;
  if (!b.sylow_noncyclic) {
    b.statement = "p-Sylow subgroup of Gal(M/K) is cyclic: no ceiling derivable";
    if (certified_obstruction) {
      b.exact = 0;
      b.statement += "; certified obstruction gives b_p = 0";
    }
    return b;
  }
  b.ceiling = p == 2 ? 2 * (*b.r + 2) : 2 * b.s;
  if (b.s == 0 || certified_obstruction) {
    b.exact = 0;
    b.statement = "b_p = 0: the fiber contains noncrossed products of index p*|chi| and above";
    if (b.s != 0) b.statement += " (from a certified obstruction)";
  } else {
    b.statement = "b_p lies in [" + std::to_string(b.lower) + ", " + std::to_string(*b.ceiling) + "]";
  }
  return b;
}

}  // namespace ncp
