#pragma once

#include <cstdint>
#include <functional>
#include <vector>

namespace elitist::primes {

// Primes <= limit by a plain sieve of Eratosthenes. Intended for base
// primes (limit around sqrt of the census range).
std::vector<uint32_t> primes_up_to(uint32_t limit);

// Smallest-prime-factor table for 2..limit. Built once, immutable after;
// safe to share across threads.
class SpfSieve {
 public:
  explicit SpfSieve(uint32_t limit);
  uint32_t limit() const { return limit_; }
  uint32_t spf(uint32_t n) const { return spf_[n]; }  // n in [2, limit]

 private:
  uint32_t limit_;
  std::vector<uint32_t> spf_;
};

struct SieveConfig {
  unsigned threads = 0;              // 0 = hardware concurrency
  uint32_t segment_odds = 1u << 18;  // odd numbers per segment
};

// Cache-sized segmented sieve over [lo, hi] (inclusive). Segment
// materialization is const and thread-safe; segments are indexed so
// parallel consumers can merge results in a fixed order.
class SegmentedSieve {
 public:
  SegmentedSieve(uint64_t lo, uint64_t hi, uint32_t segment_odds = 1u << 18);
  size_t segment_count() const { return segment_count_; }
  // Primes of segment idx in ascending order (includes 2 when in range).
  std::vector<uint64_t> segment_primes(size_t idx) const;

 private:
  uint64_t lo_, hi_;
  uint64_t first_odd_;
  uint32_t segment_odds_;
  size_t segment_count_;
  std::vector<uint32_t> base_primes_;
};

// Calls fn(p) for every prime in [lo, hi] in ascending order.
void for_each_prime(uint64_t lo, uint64_t hi, const SieveConfig& cfg,
                    const std::function<void(uint64_t)>& fn);

uint64_t count_primes(uint64_t lo, uint64_t hi, const SieveConfig& cfg = {});

}  // namespace elitist::primes
