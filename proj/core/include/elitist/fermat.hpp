#pragma once

#include <cstdint>
#include <vector>

#include "elitist/natural.hpp"

namespace elitist::fermat {

// Exact values F_n = 2^(2^n) + 1 are exposed only up to this index; every
// analytic consumer works with residues instead.
inline constexpr unsigned kMaxExactIndex = 6;

// 2^(2^n) + 1 exactly. n <= kMaxExactIndex, std::out_of_range otherwise.
arith::Natural fermat_exact(unsigned n);

// Distinct prime factors of F_n, ascending. n <= kMaxExactIndex; every
// factor fits in 64 bits at these indices.
std::vector<uint64_t> fermat_prime_factors(unsigned n);

// The generalized Fermat residues base^(2^m) + 1 mod p as a stream.
// Stepping squares the previous power: r <- (r-1)^2 + 1 mod p.
class ResidueStream {
 public:
  // p odd, p not dividing base, base >= 2. The stream starts at index
  // `start` with the residue computed by modular exponentiation.
  ResidueStream(uint64_t p, uint64_t base, uint64_t start);

  uint64_t modulus() const { return p_; }
  uint64_t base() const { return base_; }
  uint64_t index() const { return index_; }
  uint64_t value() const { return residue_; }  // base^(2^index) + 1 mod p

  // Advances to index+1 and returns the new residue.
  uint64_t advance();

 private:
  uint64_t p_, base_, index_, residue_;
};

struct PepinVerdict {
  unsigned index = 0;
  bool is_prime = false;
  arith::Natural residue;  // 3^((F_n-1)/2) mod F_n; prime iff residue == F_n - 1
};

struct PepinOptions {
  uint64_t max_bits = uint64_t{1} << 14;  // cap on 2^n, i.e. on bits(F_n) - 1
};

// Pepin's test for F_n. Requires n >= 1 (std::invalid_argument) and
// 2^n <= max_bits (ResourceLimitError).
PepinVerdict pepin_test(unsigned n, const PepinOptions& options = {});

struct ProductIdentity {
  arith::Natural lhs;  // F_0 * F_1 * ... * F_n
  arith::Natural rhs;  // 2^(2^(n+1)) - 1
  bool equal = false;
};

// Exact check of prod_{i<=n} F_i = 2^(2^(n+1)) - 1. n <= kMaxExactIndex.
ProductIdentity product_identity_check(unsigned n);

}  // namespace elitist::fermat
