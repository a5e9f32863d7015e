#include "elitist/arith.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <stdexcept>

#include "elitist/primes.hpp"

namespace elitist::arith {

uint64_t mod_pow(uint64_t base, uint64_t exponent, uint64_t modulus) {
  if (modulus < 2) throw std::invalid_argument("mod_pow: modulus must be >= 2");
  uint64_t result = 1;
  uint64_t b = base % modulus;
  while (exponent != 0) {
    if (exponent & 1) result = mul_mod(result, b, modulus);
    b = mul_mod(b, b, modulus);
    exponent >>= 1;
  }
  return result;
}

namespace {

bool strong_probable_prime(uint64_t n, uint64_t base, uint64_t d, int s) {
  uint64_t x = mod_pow(base % n, d, n);
  if (x == 1 || x == n - 1) return true;
  for (int i = 1; i < s; ++i) {
    x = mul_mod(x, x, n);
    if (x == n - 1) return true;
  }
  return false;
}

}  // namespace

bool is_prime_u64(uint64_t n) {
  if (n < 2) return false;
  for (const uint64_t p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    if (n == p) return true;
    if (n % p == 0) return false;
  }
  const int s = std::countr_zero(n - 1);
  const uint64_t d = (n - 1) >> s;
  // The first twelve primes form a deterministic base set for all n < 2^64.
  for (const uint64_t base : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    if (!strong_probable_prime(n, base, d, s)) return false;
  }
  return true;
}

int kronecker(int64_t a, int64_t m) {
  if (m == 0) return (a == 1 || a == -1) ? 1 : 0;

  int result = 1;
  // (a / -1) = -1 for a < 0.
  if (m < 0 && a < 0) result = -result;
  uint64_t n = m < 0 ? ~static_cast<uint64_t>(m) + 1 : static_cast<uint64_t>(m);

  const int s = std::countr_zero(n);
  n >>= s;
  if (s != 0) {
    if ((a & 1) == 0) return 0;
    // (a / 2) = +1 iff a = +-1 mod 8.
    const unsigned a8 = static_cast<uint64_t>(a) & 7;
    if ((s & 1) != 0 && (a8 == 3 || a8 == 5)) result = -result;
  }

  // Jacobi step: n is now odd and positive, and (a / n) depends only on
  // a mod n.
  uint64_t u;
  if (a >= 0) {
    u = static_cast<uint64_t>(a) % n;
  } else {
    const uint64_t r = (~static_cast<uint64_t>(a) + 1) % n;  // |a| mod n
    u = r == 0 ? 0 : n - r;
  }
  while (u != 0) {
    const int z = std::countr_zero(u);
    u >>= z;
    const unsigned n8 = n & 7;
    if ((z & 1) != 0 && (n8 == 3 || n8 == 5)) result = -result;
    // Quadratic reciprocity for odd coprime u, n.
    if ((u & 3) == 3 && (n & 3) == 3) result = -result;
    std::swap(u, n);
    u %= n;
  }
  return n == 1 ? result : 0;
}

TwoAdicSplit two_adic_decompose(uint64_t n) {
  if (n == 0) throw std::invalid_argument("two_adic_decompose: n must be >= 1");
  const int e = std::countr_zero(n);
  return TwoAdicSplit{static_cast<unsigned>(e), n >> e};
}

namespace {

// Shared smallest-prime-factor sieve for small factorizations. Built once
// on first use, immutable afterwards.
constexpr uint32_t kSharedSpfLimit = 1u << 20;

const primes::SpfSieve& shared_spf() {
  static const primes::SpfSieve sieve(kSharedSpfLimit);
  return sieve;
}

uint64_t rho_step(uint64_t x, uint64_t c, uint64_t n) {
  return static_cast<uint64_t>((static_cast<__uint128_t>(mul_mod(x, x, n)) + c) % n);
}

// Brent's cycle variant of Pollard rho. n must be composite, odd and not
// a prime power handled elsewhere; returns a nontrivial factor.
uint64_t pollard_rho(uint64_t n) {
  for (uint64_t c = 1;; ++c) {
    uint64_t x = 2, y = 2, d = 1;
    uint64_t ys = y, q = 1;
    const unsigned m = 128;
    for (uint64_t r = 1; d == 1; r <<= 1) {
      x = y;
      for (uint64_t i = 0; i < r; ++i) y = rho_step(y, c, n);
      for (uint64_t k = 0; k < r && d == 1; k += m) {
        ys = y;
        const uint64_t chunk = std::min<uint64_t>(m, r - k);
        for (uint64_t i = 0; i < chunk; ++i) {
          y = rho_step(y, c, n);
          q = mul_mod(q, x > y ? x - y : y - x, n);
        }
        d = std::gcd(q, n);
      }
    }
    if (d == n) {
      // Backtrack one step at a time.
      d = 1;
      while (d == 1) {
        ys = rho_step(ys, c, n);
        d = std::gcd(x > ys ? x - ys : ys - x, n);
      }
    }
    if (d != n) return d;
  }
}

void factor_recursive(uint64_t n, FactorMap& out) {
  if (n == 1) return;
  if (is_prime_u64(n)) {
    ++out[n];
    return;
  }
  const uint64_t d = pollard_rho(n);
  factor_recursive(d, out);
  factor_recursive(n / d, out);
}

void factorize_into(uint64_t n, const primes::SpfSieve* spf, FactorMap& out) {
  // Walk the SPF chain while the remainder is in range.
  auto chain = [&out](uint64_t& v, const primes::SpfSieve& sieve) {
    while (v > 1 && v <= sieve.limit()) {
      const uint64_t p = sieve.spf(static_cast<uint32_t>(v));
      do {
        ++out[p];
        v /= p;
      } while (v % p == 0);
    }
  };
  if (spf != nullptr && n <= spf->limit()) {
    chain(n, *spf);
    return;
  }

  // Strip small primes first; rho only sees odd composites without small
  // factors.
  const int e2 = std::countr_zero(n);
  if (e2 != 0) {
    out[2] += static_cast<unsigned>(e2);
    n >>= e2;
  }
  for (uint64_t p = 3; p * p <= n && p < 1000; p += 2) {
    while (n % p == 0) {
      ++out[p];
      n /= p;
    }
  }
  if (n == 1) return;
  if (n <= shared_spf().limit()) {
    chain(n, shared_spf());
    return;
  }
  factor_recursive(n, out);
}

}  // namespace

FactorMap factorize(uint64_t n) { return detail::factorize_with(n, nullptr); }

uint64_t carmichael_lambda(uint64_t n) {
  if (n == 0) throw std::invalid_argument("carmichael_lambda: n must be >= 1");
  uint64_t lambda = 1;
  for (const auto& [p, e] : factorize(n)) {
    uint64_t comp;
    if (p == 2) {
      comp = e == 1 ? 1 : e == 2 ? 2 : uint64_t{1} << (e - 2);
    } else {
      comp = p - 1;
      for (unsigned i = 1; i < e; ++i) comp *= p;
    }
    lambda = std::lcm(lambda, comp);
  }
  return lambda;
}

uint64_t multiplicative_order(int64_t a, uint64_t n) {
  return detail::multiplicative_order_with(a, n, nullptr);
}

namespace detail {

FactorMap factorize_with(uint64_t n, const primes::SpfSieve* spf) {
  if (n == 0) throw std::invalid_argument("factorize: n must be >= 1");
  FactorMap out;
  factorize_into(n, spf, out);
  return out;
}

uint64_t multiplicative_order_with(int64_t a, uint64_t n, const primes::SpfSieve* spf) {
  if (n == 0) throw std::invalid_argument("multiplicative_order: n must be >= 1");
  if (n == 1) return 1;  // ord(a mod 1) := 1 by convention
  uint64_t u;
  if (a >= 0) {
    u = static_cast<uint64_t>(a) % n;
  } else {
    const uint64_t r = (~static_cast<uint64_t>(a) + 1) % n;
    u = r == 0 ? 0 : n - r;
  }
  if (std::gcd(u, n) != 1)
    throw std::invalid_argument("multiplicative_order: arguments are not coprime");

  // lambda(n) and its factorization, assembled component-wise so each
  // factored quantity stays small.
  uint64_t lambda = 1;
  FactorMap lambda_factors;
  auto fold = [&](uint64_t comp) {
    for (const auto& [q, e] : factorize_with(comp, spf)) {
      auto it = lambda_factors.find(q);
      if (it == lambda_factors.end())
        lambda_factors.emplace(q, e);
      else if (it->second < e)
        it->second = e;
    }
  };
  for (const auto& [p, e] : factorize_with(n, spf)) {
    if (p == 2) {
      const unsigned pow = e == 1 ? 0 : e == 2 ? 1 : e - 2;
      if (pow != 0) {
        auto it = lambda_factors.find(2);
        if (it == lambda_factors.end())
          lambda_factors.emplace(2, pow);
        else if (it->second < pow)
          it->second = pow;
      }
    } else {
      fold(p - 1);
      if (e > 1) {
        auto it = lambda_factors.find(p);
        unsigned add = e - 1;
        if (it == lambda_factors.end())
          lambda_factors.emplace(p, add);
        else
          it->second = std::max(it->second, add);
      }
    }
  }
  lambda = 1;
  for (const auto& [q, e] : lambda_factors)
    for (unsigned i = 0; i < e; ++i) lambda *= q;

  // Descend: divide out every prime power that keeps a^d = 1.
  uint64_t d = lambda;
  for (const auto& [q, e] : lambda_factors) {
    for (unsigned i = 0; i < e && d % q == 0; ++i) {
      if (mod_pow(u, d / q, n) == 1)
        d /= q;
      else
        break;
    }
  }
  return d;
}

}  // namespace detail

}  // namespace elitist::arith
