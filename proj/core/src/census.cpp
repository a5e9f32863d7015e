#include "elitist/census.hpp"

#include <cmath>
#include <stdexcept>

#include "elitist/detail/parallel.hpp"
#include "elitist/errors.hpp"
#include "elitist/primes.hpp"

namespace elitist::census {

namespace {

void check_limit(uint64_t x_max, const Options& options) {
  if (x_max < 3) throw std::invalid_argument("census: x_max must be >= 3");
  if (x_max > options.sieve_limit)
    throw ResourceLimitError("census: x_max = " + std::to_string(x_max) +
                             " exceeds the sieve limit " + std::to_string(options.sieve_limit));
}

}  // namespace

SurveyResult survey(uint64_t x_max, const Options& options) {
  check_limit(x_max, options);
  if (options.base < 2) throw std::invalid_argument("census: base must be >= 2");

  struct Segment {
    std::vector<elite::PrimeClassification> elites;
    std::vector<elite::PrimeClassification> antis;
  };
  const primes::SpfSieve spf(static_cast<uint32_t>(x_max / 2 + 2));
  const primes::SegmentedSieve sieve(3, x_max, options.segment_odds);
  const auto segments = detail::parallel_indexed<Segment>(
      sieve.segment_count(), options.threads, [&](size_t i) {
        Segment seg;
        for (const uint64_t p : sieve.segment_primes(i)) {
          if (options.base % p == 0) continue;
          auto record =
              elite::detail::classify_known_prime(p, options.base, elite::ScanMode::EarlyExit, &spf);
          if (record.label == elite::Label::Elite)
            seg.elites.push_back(std::move(record));
          else if (record.label == elite::Label::AntiElite)
            seg.antis.push_back(std::move(record));
        }
        return seg;
      });

  SurveyResult out;
  for (const auto& seg : segments) {
    out.elites.insert(out.elites.end(), seg.elites.begin(), seg.elites.end());
    out.anti_elites.insert(out.anti_elites.end(), seg.antis.begin(), seg.antis.end());
  }
  return out;
}

std::vector<CensusRow> run_census(uint64_t x_max, const std::vector<uint64_t>& checkpoints,
                                  const Options& options) {
  check_limit(x_max, options);
  if (checkpoints.empty()) throw std::invalid_argument("census: no checkpoints");
  for (size_t i = 0; i < checkpoints.size(); ++i) {
    if (checkpoints[i] <= 2 || checkpoints[i] > x_max)
      throw std::invalid_argument("census: checkpoints must lie in (2, x_max]");
    if (i > 0 && checkpoints[i] <= checkpoints[i - 1])
      throw std::invalid_argument("census: checkpoints must be strictly ascending");
  }

  const SurveyResult result = survey(x_max, options);
  std::vector<CensusRow> rows;
  rows.reserve(checkpoints.size());
  size_t ei = 0, ai = 0;
  uint64_t elite_count = 0, anti_count = 0;
  double recip = 0.0;
  for (const uint64_t x : checkpoints) {
    // Reciprocals accumulate in ascending-prime order, so the float
    // result does not depend on segmentation or worker count.
    while (ei < result.elites.size() && result.elites[ei].p <= x) {
      recip += 1.0 / static_cast<double>(result.elites[ei].p);
      ++elite_count;
      ++ei;
    }
    while (ai < result.anti_elites.size() && result.anti_elites[ai].p <= x) {
      ++anti_count;
      ++ai;
    }
    CensusRow row;
    row.x = x;
    row.elite_count = elite_count;
    row.anti_count = anti_count;
    const double lx = std::log(static_cast<double>(x));
    row.ratio_thm1 = static_cast<double>(elite_count) * std::pow(lx, 1.5) / static_cast<double>(x);
    row.ratio_thm2 = static_cast<double>(elite_count) / std::pow(static_cast<double>(x), 5.0 / 6.0);
    row.recip_sum = recip;
    rows.push_back(row);
  }
  return rows;
}

std::vector<uint64_t> default_checkpoints(uint64_t limit) {
  std::vector<uint64_t> out;
  for (uint64_t c = 1000; c < limit; c *= 10) out.push_back(c);
  if (out.empty() || out.back() != limit) out.push_back(limit);
  return out;
}

ProgressionCount progression_count(uint64_t x, unsigned t, const Options& options) {
  if (x < 3) throw std::invalid_argument("progression_count: x must be >= 3");
  if (x > options.sieve_limit)
    throw ResourceLimitError("progression_count: x exceeds the sieve limit");
  // Validity condition of the bound: 2^t <= sqrt(x), checked exactly.
  if (2 * t >= 127 || (static_cast<__uint128_t>(1) << (2 * t)) > x)
    throw std::invalid_argument("progression_count: requires 2^t <= sqrt(x)");

  const uint64_t modulus = uint64_t{1} << t;
  const primes::SegmentedSieve sieve(2, x, options.segment_odds);
  const auto counts = detail::parallel_indexed<uint64_t>(
      sieve.segment_count(), options.threads, [&](size_t i) {
        uint64_t c = 0;
        for (const uint64_t p : sieve.segment_primes(i))
          if (p % modulus == 1) ++c;
        return c;
      });
  ProgressionCount out;
  out.x = x;
  out.t = t;
  for (const uint64_t c : counts) out.count += c;
  const double phi = t == 0 ? 1.0 : static_cast<double>(uint64_t{1} << (t - 1));
  out.bt_bound = 2.0 * static_cast<double>(x) /
                 (phi * (std::log(static_cast<double>(x)) - static_cast<double>(t) * std::log(2.0)));
  return out;
}

}  // namespace elitist::census
