#pragma once

#include <cstdint>
#include <map>

#include "elitist/natural.hpp"

namespace elitist::arith {

// Quadratic character value: -1, 0 or +1. Zero exactly when the two
// arguments share a factor.
using SymbolValue = int8_t;

// (a * b) mod m, correct for any m < 2^64.
inline uint64_t mul_mod(uint64_t a, uint64_t b, uint64_t m) {
  return static_cast<uint64_t>((static_cast<__uint128_t>(a) * b) % m);
}

// base^exponent mod modulus by square-and-multiply. Requires modulus >= 2.
uint64_t mod_pow(uint64_t base, uint64_t exponent, uint64_t modulus);

// Deterministic Miller-Rabin over the first twelve prime bases; exact for
// every 64-bit input.
bool is_prime_u64(uint64_t n);

// Kronecker symbol (a/m), total over all integer pairs. GCD-like binary
// algorithm, no factorization. Agrees with the Legendre symbol when m is
// an odd prime.
int kronecker(int64_t a, int64_t m);

// n = 2^exponent * odd with odd ... odd. n >= 1.
struct TwoAdicSplit {
  unsigned exponent = 0;
  uint64_t odd = 1;
  friend bool operator==(const TwoAdicSplit&, const TwoAdicSplit&) = default;
};
TwoAdicSplit two_adic_decompose(uint64_t n);

// prime -> exponent, product reassembles the input exactly.
using FactorMap = std::map<uint64_t, unsigned>;

// Exact factorization of any 64-bit n >= 1. Small inputs walk a shared
// smallest-prime-factor sieve; larger ones fall back to trial division
// plus Brent-rho splitting with Miller-Rabin certificates.
FactorMap factorize(uint64_t n);

// Carmichael function from the factorization of n.
uint64_t carmichael_lambda(uint64_t n);

// Least d >= 1 with a^d = 1 mod n. Requires gcd(a, n) = 1; ord(a mod 1) := 1.
// Computed by factoring lambda(n) and descending over its prime divisors.
uint64_t multiplicative_order(int64_t a, uint64_t n);

}  // namespace elitist::arith

namespace elitist::primes {
class SpfSieve;
}

namespace elitist::arith::detail {
// Factorization helpers that reuse a caller-provided smallest-prime-factor
// sieve when the input is within its range (census hot path).
FactorMap factorize_with(uint64_t n, const primes::SpfSieve* spf);
uint64_t multiplicative_order_with(int64_t a, uint64_t n, const primes::SpfSieve* spf);
}  // namespace elitist::arith::detail
