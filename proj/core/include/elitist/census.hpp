#pragma once

#include <cstdint>
#include <vector>

#include "elitist/elite.hpp"

namespace elitist::census {

struct Options {
  uint64_t base = 2;
  unsigned threads = 0;               // 0 = hardware concurrency
  uint64_t sieve_limit = 10'000'000;  // cap on x_max (ResourceLimitError)
  uint32_t segment_odds = 1u << 18;
};

struct CensusRow {
  uint64_t x = 0;            // checkpoint
  uint64_t elite_count = 0;  // E(x)
  uint64_t anti_count = 0;   // A(x)
  double ratio_thm1 = 0.0;   // E(x) * (ln x)^(3/2) / x
  double ratio_thm2 = 0.0;   // E(x) / x^(5/6)
  double recip_sum = 0.0;    // sum of 1/p over elite p <= x

  friend bool operator==(const CensusRow&, const CensusRow&) = default;
};

// Every elite and anti-elite prime <= x_max with its full classification,
// ascending. Deterministic for any worker count: per-segment results are
// merged in segment order.
struct SurveyResult {
  std::vector<elite::PrimeClassification> elites;
  std::vector<elite::PrimeClassification> anti_elites;
};
SurveyResult survey(uint64_t x_max, const Options& options = {});

// One row per checkpoint. Checkpoints must be ascending and lie in
// (2, x_max]; std::invalid_argument otherwise.
std::vector<CensusRow> run_census(uint64_t x_max, const std::vector<uint64_t>& checkpoints,
                                  const Options& options = {});

// Log-spaced default checkpoints {10^3, 10^4, ...} capped at and always
// including `limit`.
std::vector<uint64_t> default_checkpoints(uint64_t limit);

struct ProgressionCount {
  uint64_t x = 0;
  unsigned t = 0;
  uint64_t count = 0;      // primes p <= x with p = 1 mod 2^t
  double bt_bound = 0.0;   // 2x / (phi(2^t) * (ln x - t ln 2))
};

// Exact count of primes = 1 mod 2^t up to x plus the Brun-Titchmarsh
// bound. Requires 2^t <= sqrt(x) (std::invalid_argument), the bound's
// validity condition.
ProgressionCount progression_count(uint64_t x, unsigned t, const Options& options = {});

}  // namespace elitist::census
