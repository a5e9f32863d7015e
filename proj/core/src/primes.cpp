#include "elitist/primes.hpp"

#include <cmath>
#include <stdexcept>

#include "elitist/detail/parallel.hpp"

namespace elitist::primes {

std::vector<uint32_t> primes_up_to(uint32_t limit) {
  std::vector<uint32_t> out;
  if (limit < 2) return out;
  std::vector<bool> composite(limit + 1, false);
  for (uint32_t i = 2; static_cast<uint64_t>(i) * i <= limit; ++i) {
    if (composite[i]) continue;
    for (uint64_t j = static_cast<uint64_t>(i) * i; j <= limit; j += i)
      composite[static_cast<size_t>(j)] = true;
  }
  out.reserve(static_cast<size_t>(limit > 16 ? limit / (std::log(limit) - 1.2) : 8));
  for (uint32_t i = 2; i <= limit; ++i)
    if (!composite[i]) out.push_back(i);
  return out;
}

SpfSieve::SpfSieve(uint32_t limit) : limit_(limit), spf_(static_cast<size_t>(limit) + 1, 0) {
  for (uint32_t i = 2; i <= limit; ++i) {
    if (spf_[i] == 0) {
      for (uint64_t j = i; j <= limit; j += i)
        if (spf_[static_cast<size_t>(j)] == 0) spf_[static_cast<size_t>(j)] = i;
    }
  }
}

SegmentedSieve::SegmentedSieve(uint64_t lo, uint64_t hi, uint32_t segment_odds)
    : lo_(lo), hi_(hi), segment_odds_(segment_odds) {
  if (lo_ < 2) lo_ = 2;
  if (segment_odds_ == 0) throw std::invalid_argument("SegmentedSieve: segment_odds must be > 0");
  if (hi_ < lo_) {
    first_odd_ = 3;
    segment_count_ = 0;
    return;
  }
  first_odd_ = lo_ | 1;  // first odd candidate >= lo
  if (first_odd_ == 1) first_odd_ = 3;
  const uint64_t root = static_cast<uint64_t>(std::sqrt(static_cast<double>(hi_))) + 2;
  base_primes_ = primes_up_to(static_cast<uint32_t>(root));
  if (first_odd_ > hi_) {
    segment_count_ = lo_ <= 2 ? 1 : 0;  // only p = 2 can be in range
    return;
  }
  const uint64_t n_odds = (hi_ - first_odd_) / 2 + 1;
  segment_count_ = static_cast<size_t>((n_odds + segment_odds_ - 1) / segment_odds_);
}

std::vector<uint64_t> SegmentedSieve::segment_primes(size_t idx) const {
  std::vector<uint64_t> out;
  if (idx >= segment_count_) throw std::out_of_range("SegmentedSieve: segment index");
  const uint64_t seg_first = first_odd_ + 2 * static_cast<uint64_t>(idx) * segment_odds_;
  if (idx == 0 && lo_ <= 2 && hi_ >= 2) out.push_back(2);
  if (seg_first > hi_) return out;
  uint64_t count = segment_odds_;
  const uint64_t max_in_seg = (hi_ - seg_first) / 2 + 1;
  if (count > max_in_seg) count = max_in_seg;
  const uint64_t seg_last = seg_first + 2 * (count - 1);

  std::vector<bool> composite(static_cast<size_t>(count), false);
  for (const uint32_t p : base_primes_) {
    if (p == 2) continue;
    const uint64_t p2 = static_cast<uint64_t>(p) * p;
    if (p2 > seg_last) break;
    uint64_t start = p2;
    if (start < seg_first) {
      uint64_t first_multiple = ((seg_first + p - 1) / p) * p;
      if ((first_multiple & 1) == 0) first_multiple += p;  // odd multiples only
      start = std::max(p2, first_multiple);
    }
    for (uint64_t m = start; m <= seg_last; m += 2 * static_cast<uint64_t>(p))
      composite[static_cast<size_t>((m - seg_first) / 2)] = true;
  }
  for (uint64_t i = 0; i < count; ++i) {
    if (!composite[static_cast<size_t>(i)]) {
      const uint64_t v = seg_first + 2 * i;
      if (v >= 3) out.push_back(v);  // 1 is not prime
    }
  }
  return out;
}

void for_each_prime(uint64_t lo, uint64_t hi, const SieveConfig& cfg,
                    const std::function<void(uint64_t)>& fn) {
  const SegmentedSieve sieve(lo, hi, cfg.segment_odds);
  for (size_t i = 0; i < sieve.segment_count(); ++i)
    for (const uint64_t p : sieve.segment_primes(i)) fn(p);
}

uint64_t count_primes(uint64_t lo, uint64_t hi, const SieveConfig& cfg) {
  const SegmentedSieve sieve(lo, hi, cfg.segment_odds);
  const auto counts = detail::parallel_indexed<uint64_t>(
      sieve.segment_count(), cfg.threads,
      [&](size_t i) { return static_cast<uint64_t>(sieve.segment_primes(i).size()); });
  uint64_t total = 0;
  for (const uint64_t c : counts) total += c;
  return total;
}

}  // namespace elitist::primes
