#include "elitist/elite.hpp"

#include <stdexcept>
#include <string>

#include "elitist/detail/parallel.hpp"
#include "elitist/errors.hpp"
#include "elitist/fermat.hpp"
#include "elitist/primes.hpp"

namespace elitist::elite {

std::string_view to_string(Label label) {
  switch (label) {
    case Label::Elite: return "Elite";
    case Label::AntiElite: return "AntiElite";
    case Label::Mixed: return "Mixed";
  }
  return "?";
}

namespace detail {

PrimeClassification classify_known_prime(uint64_t p, uint64_t base, ScanMode mode,
                                         const primes::SpfSieve* spf) {
  PrimeClassification out;
  out.p = p;
  out.base = base;

  const auto split = arith::two_adic_decompose(p - 1);
  out.two_adic_exp = split.exponent;
  out.odd_part = split.odd;
  // The residues base^(2^m) + 1 repeat mod p with this period once
  // m >= two_adic_exp, for any base coprime to p.
  out.period = arith::detail::multiplicative_order_with(2, split.odd, spf);

  fermat::ResidueStream stream(p, base, split.exponent);
  uint64_t first_plus = 0, first_minus = 0;
  bool seen_plus = false, seen_minus = false;
  for (uint64_t step = 0; step < out.period; ++step) {
    const uint64_t r = stream.value();
    const int sym = arith::kronecker(static_cast<int64_t>(r), static_cast<int64_t>(p));
    if (sym == 0)
      throw std::runtime_error("classify: zero symbol inside the window at p = " +
                               std::to_string(p) + ", m = " + std::to_string(stream.index()));
    out.window.push_back(static_cast<arith::SymbolValue>(sym));
    if (sym > 0 && !seen_plus) {
      seen_plus = true;
      first_plus = stream.index();
    }
    if (sym < 0 && !seen_minus) {
      seen_minus = true;
      first_minus = stream.index();
    }
    if (mode == ScanMode::EarlyExit && seen_plus && seen_minus) break;
    stream.advance();
  }
  out.scanned = out.window.size();
  if (seen_plus && seen_minus) {
    out.label = Label::Mixed;
    out.witness = MixedWitness{first_plus, first_minus};
  } else {
    out.label = seen_plus ? Label::AntiElite : Label::Elite;
  }
  return out;
}

}  // namespace detail

PrimeClassification classify(uint64_t p, uint64_t base, ScanMode mode) {
  if (p < 3 || p % 2 == 0)
    throw std::invalid_argument("classify: p must be an odd prime (p = 2 is excluded)");
  if (p > static_cast<uint64_t>(INT64_MAX))
    throw std::invalid_argument("classify: p must fit in a signed 64-bit word");
  if (!arith::is_prime_u64(p))
    throw std::invalid_argument("classify: " + std::to_string(p) + " is not prime");
  if (base < 2) throw std::invalid_argument("classify: base must be >= 2");
  if (base % p == 0) throw std::invalid_argument("classify: p divides the base");
  return detail::classify_known_prime(p, base, mode, nullptr);
}

void classify_range(uint64_t lo, uint64_t hi, const RangeOptions& options,
                    const std::function<void(const PrimeClassification&)>& sink) {
  if (lo < 2 || lo > hi) throw std::invalid_argument("classify_range: need 2 <= lo <= hi");
  if (hi > options.sieve_limit)
    throw ResourceLimitError("classify_range: hi = " + std::to_string(hi) +
                             " exceeds the sieve limit " + std::to_string(options.sieve_limit));
  if (options.base < 2) throw std::invalid_argument("classify_range: base must be >= 2");

  // k_p and every lambda component stay below hi/2, so one SPF table
  // covers all order computations.
  const primes::SpfSieve spf(static_cast<uint32_t>(hi / 2 + 2));
  const primes::SegmentedSieve sieve(lo < 3 ? 3 : lo, hi, options.segment_odds);
  const auto segments = elitist::detail::parallel_indexed<std::vector<PrimeClassification>>(
      sieve.segment_count(), options.threads, [&](size_t i) {
        std::vector<PrimeClassification> result;
        for (const uint64_t p : sieve.segment_primes(i)) {
          if (options.base % p == 0) continue;  // p divides the base: undefined, skip
          result.push_back(detail::classify_known_prime(p, options.base, ScanMode::EarlyExit, &spf));
        }
        return result;
      });
  for (const auto& segment : segments)
    for (const auto& record : segment) sink(record);
}

std::vector<PrimeClassification> classify_range(uint64_t lo, uint64_t hi,
                                                const RangeOptions& options) {
  std::vector<PrimeClassification> out;
  classify_range(lo, hi, options, [&out](const PrimeClassification& r) { out.push_back(r); });
  return out;
}

}  // namespace elitist::elite
