#pragma once

#include <cstdint>
#include <vector>

#include "elitist/census.hpp"

namespace elitist::charsum {

struct Options {
  unsigned threads = 0;               // 0 = hardware concurrency
  uint64_t sieve_limit = 10'000'000;  // cap on x (ResourceLimitError)
  uint32_t segment_odds = 1u << 18;
};

struct CharSumRecord {
  int64_t a = 0;          // character parameter, nonzero
  uint64_t x = 0;         // checkpoint
  int64_t sum = 0;        // S = sum of kronecker(a, p) over primes p <= x
  uint64_t q_eff = 0;     // |a|, or 4|a| when a = 2 mod 4
  double grh_ratio = 0.0; // |S| / (sqrt(x) * ln(q_eff * x))
  // a is a perfect square: the character is principal-like and the
  // conditional bound does not apply.
  bool principal_like = false;
  // a = 3 mod 4 falls outside the Dirichlet-character setup; the ratio is
  // still computed but labeled informal.
  bool informal_ratio = false;

  friend bool operator==(const CharSumRecord&, const CharSumRecord&) = default;
};

// One record per checkpoint (ascending, all > 0). a must be nonzero.
// The sum includes p = 2 (the Kronecker symbol is total).
std::vector<CharSumRecord> char_sum(int64_t a, const std::vector<uint64_t>& checkpoints,
                                    const Options& options = {});

// sum over primes p <= x of prod_{b in subset} (F_(t+b) / p), the symbols
// computed factor-wise mod p so the product of Fermat numbers is never
// materialized. subset must be within {0..T} and t + T <= 30.
int64_t subset_char_sum(unsigned t, unsigned T, const std::vector<unsigned>& subset,
                        uint64_t x, const Options& options = {});

// Both sides of the inclusion-exclusion expansion of
//   sum_p prod_{i=0..T} (1 - (F_(t+i)/p)),
// kept as exact integers (2^(T+1) times the normalized quantity):
// lhs from per-prime products, rhs from subset sums plus pi(x).
struct ExpansionCheck {
  int64_t lhs = 0;
  int64_t rhs = 0;
  bool equal = false;
};
// Requires t + T <= 10 and x <= 10^6.
ExpansionCheck expansion_check(unsigned t, unsigned T, uint64_t x,
                               const Options& options = {});

struct SandwichReport {
  unsigned t = 0;
  unsigned T = 0;
  uint64_t x = 0;
  int64_t n_numerator = 0;   // sum_p prod (1 - symbol), exact
  double n_sandwich = 0.0;   // n_numerator / 2^(T+1)
  uint64_t omega_a = 0;      // primes dividing prod F_(t+i): exact or 2^(t+T+1) bound
  bool omega_exact = false;  // exact requires t + T <= kMaxExactIndex
  double bt_term = 0.0;      // Brun-Titchmarsh bound for the e_p > t primes
  uint64_t e_low = 0;        // elite p <= x with two_adic_exp <= t
  bool inequality_holds = false;  // e_low <= n_sandwich + omega_a
  // The unoptimized bound pieces, reported not minimized:
  // sqrt(x) ln x, sqrt(x) 2^(t+T), x / 2^T, x / 2^t.
  double bound_terms[4] = {0, 0, 0, 0};
};

// Assembles every finite ingredient of the sandwich bound at (t, T, x).
// Requires 2^t <= sqrt(x) (mirrors progression_count).
SandwichReport sandwich_report(unsigned t, unsigned T, uint64_t x,
                               const Options& options = {});

// Parameter choice floor(ln x / (6 ln 2)) used for t = T when no explicit
// values are given.
unsigned default_parameter(uint64_t x);

}  // namespace elitist::charsum
