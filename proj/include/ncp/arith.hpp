#pragma once

// Exact arithmetic: Q/Z, p-adic valuations of integers, prime fields
// and n-th power residue machinery.
//
// Hasse invariants live in Q/Z and are kept as reduced fractions backed by
// arbitrary precision integers. Everything that indexes primes, norms or
// residues uses 64-bit integers; products are taken through __int128.

#include <boost/multiprecision/cpp_int.hpp>

#include <algorithm>
#include <charconv>
#include <cstdint>
#include <map>
#include <numeric>
#include <ostream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "ncp/error.hpp"

namespace ncp {

using Integer = boost::multiprecision::cpp_int;

// ---------------------------------------------------------------------------
// Machine-integer number theory
// ---------------------------------------------------------------------------

inline std::int64_t mod(std::int64_t a, std::int64_t m) {
  const std::int64_t r = a % m;
  return r < 0 ? r + m : r;
}

inline std::int64_t mulmod(std::int64_t a, std::int64_t b, std::int64_t m) {
  return static_cast<std::int64_t>(static_cast<__int128>(mod(a, m)) * mod(b, m) % m);
}

inline std::int64_t powmod(std::int64_t base, std::uint64_t exp, std::int64_t m) {
  if (m == 1) return 0;
  std::int64_t result = 1;
  base = mod(base, m);
  while (exp > 0) {
    if (exp & 1U) result = mulmod(result, base, m);
    base = mulmod(base, base, m);
    exp >>= 1U;
  }
  return result;
}

inline std::int64_t lcm64(std::int64_t a, std::int64_t b) { return std::lcm(a, b); }

inline std::int64_t ipow(std::int64_t base, unsigned exp) {
  std::int64_t r = 1;
  while (exp-- > 0) r *= base;
  return r;
}

inline bool is_prime(std::int64_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::int64_t d = 3; d * d <= n; d += 2)
    if (n % d == 0) return false;
  return true;
}

// Prime factorization of |n| (n != 0) by trial division, ascending primes.
inline std::vector<std::pair<std::int64_t, int>> factorize(std::int64_t n) {
  require(n != 0, "factorize: zero has no factorization");
  if (n < 0) n = -n;
  std::vector<std::pair<std::int64_t, int>> out;
  for (std::int64_t d = 2; d * d <= n; d += (d == 2 ? 1 : 2)) {
    if (n % d != 0) continue;
    int e = 0;
    while (n % d == 0) {
      n /= d;
      ++e;
    }
    out.emplace_back(d, e);
  }
  if (n > 1) out.emplace_back(n, 1);
  return out;
}

inline std::vector<std::int64_t> primes_up_to(std::int64_t bound) {
  std::vector<std::int64_t> primes;
  if (bound < 2) return primes;
  std::vector<bool> composite(static_cast<std::size_t>(bound) + 1, false);
  for (std::int64_t i = 2; i <= bound; ++i) {
    if (composite[static_cast<std::size_t>(i)]) continue;
    primes.push_back(i);
    for (std::int64_t j = i * i; j <= bound; j += i) composite[static_cast<std::size_t>(j)] = true;
  }
  return primes;
}

// Largest e with p^e | n, for n >= 1.
inline int vp(std::int64_t n, std::int64_t p) {
  require(n >= 1, "vp: n must be positive");
  require(p >= 2, "vp: p must be a prime");
  int e = 0;
  while (n % p == 0) {
    n /= p;
    ++e;
  }
  return e;
}

inline int vp(const Integer& n, std::int64_t p) {
  require(n >= 1, "vp: n must be positive");
  Integer m = n;
  int e = 0;
  while (m % p == 0) {
    m /= p;
    ++e;
  }
  return e;
}

// Legendre symbol (a|p) for an odd prime p, via Euler's criterion.
inline int legendre(std::int64_t a, std::int64_t p) {
  require(p > 2 && is_prime(p), "legendre: p must be an odd prime");
  const std::int64_t r = powmod(a, static_cast<std::uint64_t>((p - 1) / 2), p);
  if (r == 0) return 0;
  return r == 1 ? 1 : -1;
}

// Order of a in (Z/m)^*; a must be a unit.
inline std::int64_t multiplicative_order(std::int64_t a, std::int64_t m) {
  require(m >= 1, "multiplicative_order: modulus must be positive");
  if (m == 1) return 1;
  a = mod(a, m);
  require(std::gcd(a, m) == 1, "multiplicative_order: not a unit");
  std::int64_t x = a;
  std::int64_t k = 1;
  while (x != 1) {
    x = mulmod(x, a, m);
    ++k;
  }
  return k;
}

// Additive order of a vector over Z/n: lcm of the component orders.
inline int additive_order(const std::vector<int>& v, int n) {
  int o = 1;
  for (int c : v) o = std::lcm(o, n / std::gcd(static_cast<int>(mod(c, n)), n));
  return o;
}

// ---------------------------------------------------------------------------
// Prime fields
// ---------------------------------------------------------------------------

// The finite field F_q for a prime q.
class PrimeField {
 public:
  explicit PrimeField(std::int64_t q) : q_(q) {
    require(is_prime(q), "PrimeField: q must be prime");
    generator_ = find_generator();
  }

  std::int64_t q() const { return q_; }
  std::int64_t reduce(std::int64_t a) const { return mod(a, q_); }
  std::int64_t mul(std::int64_t a, std::int64_t b) const { return mulmod(a, b, q_); }
  std::int64_t pow(std::int64_t a, std::uint64_t e) const { return powmod(a, e, q_); }
  std::int64_t inv(std::int64_t a) const {
    require(reduce(a) != 0, "PrimeField: zero is not invertible");
    return pow(a, static_cast<std::uint64_t>(q_ - 2));
  }

  // Smallest primitive root modulo q.
  std::int64_t generator() const { return generator_; }

  // The fixed primitive n-th root of unity g^((q-1)/n); n must divide q-1.
  std::int64_t root_of_unity(std::int64_t n) const {
    require(n >= 1 && (q_ - 1) % n == 0, "root_of_unity: n must divide q-1");
    return pow(generator_, static_cast<std::uint64_t>((q_ - 1) / n));
  }

  // Discrete log j in [0, n) with zeta_n^j = x; x must be an n-th root of unity.
  int dlog_root(std::int64_t x, std::int64_t n) const {
    const std::int64_t zeta = root_of_unity(n);
    x = reduce(x);
    std::int64_t y = 1;
    for (int j = 0; j < n; ++j) {
      if (y == x) return j;
      y = mul(y, zeta);
    }
    fail("dlog_root: element is not an n-th root of unity");
  }

  // Order of the class of a in F_q^* / (F_q^*)^n. Equals the residue degree
  // of a degree-one place in a Kummer extension whose radicand reduces to a.
  std::int64_t power_class_order(std::int64_t a, std::int64_t n) const {
    require(reduce(a) != 0, "power_class_order: a must be nonzero");
    require(n >= 1 && (q_ - 1) % n == 0, "power_class_order: n must divide q-1");
    return multiplicative_order(pow(a, static_cast<std::uint64_t>((q_ - 1) / n)), q_);
  }

 private:
  std::int64_t find_generator() const {
    if (q_ == 2) return 1;
    const auto factors = factorize(q_ - 1);
    for (std::int64_t g = 2; g < q_; ++g) {
      bool ok = true;
      for (const auto& [ell, e] : factors) {
        if (powmod(g, static_cast<std::uint64_t>((q_ - 1) / ell), q_) == 1) {
          ok = false;
          break;
        }
      }
      if (ok) return g;
    }
    return 1;
  }

  std::int64_t q_;
  std::int64_t generator_ = 1;
};

// ---------------------------------------------------------------------------
// Q/Z
// ---------------------------------------------------------------------------

// An element of Q/Z stored as a reduced fraction num/den with 0 <= num < den.
// den is the additive order.
class QZ {
 public:
  QZ() = default;
  QZ(Integer num, Integer den) {
    require(den != 0, "QZ: zero denominator");
    if (den < 0) {
      den = -den;
      num = -num;
    }
    num %= den;
    if (num < 0) num += den;
    const Integer g = boost::multiprecision::gcd(num, den);
    if (g > 1) {
      num /= g;
      den /= g;
    }
    if (num == 0) den = 1;
    num_ = std::move(num);
    den_ = std::move(den);
  }
  QZ(std::int64_t num, std::int64_t den) : QZ(Integer(num), Integer(den)) {}

  // Parses "a/b" (or a bare integer, read as a/1).
  static QZ parse(std::string_view text) {
    const auto slash = text.find('/');
    auto parse_int = [&](std::string_view s) {
      require(!s.empty(), "QZ: cannot parse '" + std::string(text) + "'");
      std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
      require(i < s.size(), "QZ: cannot parse '" + std::string(text) + "'");
      for (std::size_t j = i; j < s.size(); ++j)
        require(s[j] >= '0' && s[j] <= '9', "QZ: cannot parse '" + std::string(text) + "'");
      return Integer(std::string(s));
    };
    if (slash == std::string_view::npos) return QZ(parse_int(text), Integer(1));
    return QZ(parse_int(text.substr(0, slash)), parse_int(text.substr(slash + 1)));
  }

  const Integer& num() const { return num_; }
  const Integer& den() const { return den_; }
  const Integer& order() const { return den_; }
  bool is_zero() const { return num_ == 0; }

  QZ operator+(const QZ& o) const { return QZ(num_ * o.den_ + o.num_ * den_, den_ * o.den_); }
  QZ operator-(const QZ& o) const { return QZ(num_ * o.den_ - o.num_ * den_, den_ * o.den_); }
  QZ operator-() const { return QZ(-num_, den_); }
  QZ operator*(const Integer& k) const { return QZ(num_ * k, den_); }
  QZ& operator+=(const QZ& o) { return *this = *this + o; }

  bool operator==(const QZ& o) const { return num_ == o.num_ && den_ == o.den_; }
  bool operator!=(const QZ& o) const { return !(*this == o); }

  std::string str() const { return num_.str() + "/" + den_.str(); }

  // Primary decomposition: components of prime-power order summing to *this.
  std::map<std::int64_t, QZ> p_primary() const {
    std::map<std::int64_t, QZ> out;
    if (is_zero()) return out;
    Integer rest = den_;
    for (std::int64_t p = 2; rest > 1; ++p) {
      if (rest % p != 0) continue;
      Integer pe = 1;
      while (rest % p == 0) {
        rest /= p;
        pe *= p;
      }
      const Integer cofactor = den_ / pe;
      out.emplace(p, QZ(num_ * inverse_mod(cofactor % pe, pe), pe));
    }
    return out;
  }

 private:
  static Integer inverse_mod(Integer a, const Integer& m) {
    // extended Euclid; a and m coprime
    Integer old_r = a, r = m, old_s = 1, s = 0;
    while (r != 0) {
      const Integer qt = old_r / r;
      Integer tmp = old_r - qt * r;
      old_r = r;
      r = tmp;
      tmp = old_s - qt * s;
      old_s = s;
      s = tmp;
    }
    old_s %= m;
    if (old_s < 0) old_s += m;
    return old_s;
  }

  Integer num_ = 0;
  Integer den_ = 1;
};

inline std::ostream& operator<<(std::ostream& os, const QZ& x) { return os << x.str(); }

inline Integer lcm(const Integer& a, const Integer& b) { return boost::multiprecision::lcm(a, b); }

}  // namespace ncp
