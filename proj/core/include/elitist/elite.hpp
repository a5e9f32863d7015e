#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string_view>
#include <vector>

#include "elitist/arith.hpp"

namespace elitist::elite {

enum class Label { Elite, AntiElite, Mixed };

std::string_view to_string(Label label);

// Indices witnessing a Mixed classification: one window position whose
// Fermat residue is a quadratic residue, one whose residue is not.
struct MixedWitness {
  uint64_t residue_index = 0;
  uint64_t nonresidue_index = 0;
  friend bool operator==(const MixedWitness&, const MixedWitness&) = default;
};

// Result of scanning one full period of Fermat residues mod p.
// p - 1 = 2^two_adic_exp * odd_part with odd_part odd, and period is the
// multiplicative order of 2 mod odd_part: for m >= two_adic_exp the
// residues base^(2^m) + 1 mod p repeat with that period, so the window
// m = two_adic_exp .. two_adic_exp + period - 1 decides the class.
struct PrimeClassification {
  uint64_t p = 0;
  uint64_t base = 2;
  unsigned two_adic_exp = 0;  // e
  uint64_t odd_part = 1;      // k
  uint64_t period = 1;        // f
  Label label = Label::Mixed;
  // Symbols of the window residues, starting at m = two_adic_exp. Full
  // length `period` when the label is Elite or AntiElite; may stop at the
  // witness for Mixed (scanned records how far the scan went).
  std::vector<arith::SymbolValue> window;
  uint64_t scanned = 0;
  std::optional<MixedWitness> witness;

  friend bool operator==(const PrimeClassification&, const PrimeClassification&) = default;
};

enum class ScanMode {
  EarlyExit,   // stop as soon as both a residue and a nonresidue are seen
  FullWindow,  // always materialize all `period` symbols
};

// Classifies an odd prime as Elite / AntiElite / Mixed. Validates that p
// is an odd 64-bit prime (deterministic Miller-Rabin), base >= 2 and
// p does not divide base; std::invalid_argument otherwise.
PrimeClassification classify(uint64_t p, uint64_t base = 2,
                             ScanMode mode = ScanMode::EarlyExit);

struct RangeOptions {
  uint64_t base = 2;
  unsigned threads = 0;                     // 0 = hardware concurrency
  uint64_t sieve_limit = 10'000'000;        // hard cap on hi (ResourceLimitError)
  uint32_t segment_odds = 1u << 18;
};

// One classification per odd prime in [lo, hi], delivered to sink in
// ascending order regardless of thread count. p = 2 is silently skipped.
void classify_range(uint64_t lo, uint64_t hi, const RangeOptions& options,
                    const std::function<void(const PrimeClassification&)>& sink);

std::vector<PrimeClassification> classify_range(uint64_t lo, uint64_t hi,
                                                const RangeOptions& options = {});

namespace detail {
// Hot path for census/range scans: p must already be a verified odd prime.
PrimeClassification classify_known_prime(uint64_t p, uint64_t base, ScanMode mode,
                                         const primes::SpfSieve* spf);
}  // namespace detail

}  // namespace elitist::elite
