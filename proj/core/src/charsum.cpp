#include "elitist/charsum.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdlib>
#include <set>
#include <stdexcept>

#include "elitist/detail/parallel.hpp"
#include "elitist/errors.hpp"
#include "elitist/fermat.hpp"
#include "elitist/primes.hpp"

namespace elitist::charsum {

namespace {

// F_m mod 8 is 3, 5, 1, 1, ... so the symbol (F_m / 2) is -1, -1, +1, +1, ...
int fermat_symbol_at_two(unsigned m) { return m >= 2 ? 1 : -1; }

// (F_m / p) for an odd prime p via Euler's criterion on the residue
// 2^(2^m) + 1 mod p. The modulus of the would-be character is never
// materialized.
int fermat_symbol_euler(unsigned m, uint64_t p) {
  const uint64_t r = (arith::mod_pow(2, uint64_t{1} << m, p) + 1) % p;
  const uint64_t s = arith::mod_pow(r, (p - 1) / 2, p);
  if (s == 0) return 0;
  if (s == 1) return 1;
  if (s == p - 1) return -1;
  throw std::runtime_error("fermat_symbol: Euler criterion failed; p is not prime?");
}

// Same value through the binary Kronecker algorithm; independent of the
// Euler route above.
int fermat_symbol_kronecker(unsigned m, uint64_t p) {
  if (p == 2) return fermat_symbol_at_two(m);
  const uint64_t r = (arith::mod_pow(2, uint64_t{1} << m, p) + 1) % p;
  return arith::kronecker(static_cast<int64_t>(r), static_cast<int64_t>(p));
}

int fermat_symbol(unsigned m, uint64_t p) {
  if (p == 2) return fermat_symbol_at_two(m);
  return fermat_symbol_euler(m, p);
}

void check_x(uint64_t x, const Options& options) {
  if (x > options.sieve_limit)
    throw ResourceLimitError("charsum: x = " + std::to_string(x) +
                             " exceeds the sieve limit " + std::to_string(options.sieve_limit));
}

uint64_t magnitude(int64_t a) {
  return a < 0 ? ~static_cast<uint64_t>(a) + 1 : static_cast<uint64_t>(a);
}

bool is_perfect_square(int64_t a) {
  if (a < 0) return false;
  const auto r = static_cast<uint64_t>(std::sqrt(static_cast<double>(a)));
  for (uint64_t s = r > 1 ? r - 1 : 0; s <= r + 1; ++s)
    if (s * s == static_cast<uint64_t>(a)) return true;
  return false;
}

}  // namespace

std::vector<CharSumRecord> char_sum(int64_t a, const std::vector<uint64_t>& checkpoints,
                                    const Options& options) {
  if (a == 0) throw std::invalid_argument("char_sum: a must be nonzero");
  if (checkpoints.empty()) throw std::invalid_argument("char_sum: no checkpoints");
  for (size_t i = 0; i < checkpoints.size(); ++i) {
    if (checkpoints[i] < 2) throw std::invalid_argument("char_sum: checkpoints must be >= 2");
    if (i > 0 && checkpoints[i] <= checkpoints[i - 1])
      throw std::invalid_argument("char_sum: checkpoints must be strictly ascending");
  }
  const uint64_t x_max = checkpoints.back();
  check_x(x_max, options);

  // Per-segment partial sums bucketed by checkpoint interval; exact
  // integers, so the merged result is independent of worker count.
  const primes::SegmentedSieve sieve(2, x_max, options.segment_odds);
  const auto partials = detail::parallel_indexed<std::vector<int64_t>>(
      sieve.segment_count(), options.threads, [&](size_t i) {
        std::vector<int64_t> buckets(checkpoints.size(), 0);
        size_t j = 0;
        for (const uint64_t p : sieve.segment_primes(i)) {
          while (checkpoints[j] < p) ++j;  // primes ascend within a segment
          buckets[j] += arith::kronecker(a, static_cast<int64_t>(p));
        }
        return buckets;
      });

  std::vector<int64_t> totals(checkpoints.size(), 0);
  for (const auto& b : partials)
    for (size_t j = 0; j < b.size(); ++j) totals[j] += b[j];

  const uint64_t mag = magnitude(a);
  const bool two_mod_four = ((a % 4) + 4) % 4 == 2;
  const bool three_mod_four = ((a % 4) + 4) % 4 == 3;
  const uint64_t q_eff = two_mod_four ? 4 * mag : mag;
  const bool square = is_perfect_square(a);

  std::vector<CharSumRecord> out;
  out.reserve(checkpoints.size());
  int64_t running = 0;
  for (size_t j = 0; j < checkpoints.size(); ++j) {
    running += totals[j];
    CharSumRecord rec;
    rec.a = a;
    rec.x = checkpoints[j];
    rec.sum = running;
    rec.q_eff = q_eff;
    const double xd = static_cast<double>(rec.x);
    rec.grh_ratio = std::abs(static_cast<double>(running)) /
                    (std::sqrt(xd) * std::log(static_cast<double>(q_eff) * xd));
    rec.principal_like = square;
    rec.informal_ratio = three_mod_four;
    out.push_back(rec);
  }
  return out;
}

namespace {

void check_indices(unsigned t, unsigned T, unsigned cap, const char* who) {
  if (t + T > cap)
    throw std::invalid_argument(std::string(who) + ": requires t + T <= " + std::to_string(cap));
}

// sum over primes p <= x of prod_{i=0..T} (1 - (F_(t+i)/p)), exact.
// The per-prime symbols go through `sym`, so callers can pick the route.
template <class SymbolFn>
int64_t indicator_product_sum(unsigned t, unsigned T, uint64_t x, const Options& options,
                              SymbolFn sym) {
  const primes::SegmentedSieve sieve(2, x, options.segment_odds);
  const auto partials = detail::parallel_indexed<int64_t>(
      sieve.segment_count(), options.threads, [&](size_t i) {
        int64_t acc = 0;
        for (const uint64_t p : sieve.segment_primes(i)) {
          int64_t prod = 1;
          for (unsigned k = 0; k <= T && prod != 0; ++k)
            prod *= 1 - sym(t + k, p);
          acc += prod;
        }
        return acc;
      });
  int64_t total = 0;
  for (const int64_t v : partials) total += v;
  return total;
}

}  // namespace

int64_t subset_char_sum(unsigned t, unsigned T, const std::vector<unsigned>& subset,
                        uint64_t x, const Options& options) {
  check_indices(t, T, 30, "subset_char_sum");
  check_x(x, options);
  std::set<unsigned> seen;
  for (const unsigned b : subset) {
    if (b > T) throw std::invalid_argument("subset_char_sum: subset element exceeds T");
    if (!seen.insert(b).second)
      throw std::invalid_argument("subset_char_sum: subset elements must be distinct");
  }

  const primes::SegmentedSieve sieve(2, x, options.segment_odds);
  const auto partials = detail::parallel_indexed<int64_t>(
      sieve.segment_count(), options.threads, [&](size_t i) {
        int64_t acc = 0;
        for (const uint64_t p : sieve.segment_primes(i)) {
          int prod = 1;
          for (const unsigned b : subset) {
            prod *= fermat_symbol(t + b, p);
            if (prod == 0) break;
          }
          acc += prod;
        }
        return acc;
      });
  int64_t total = 0;
  for (const int64_t v : partials) total += v;
  return total;
}

ExpansionCheck expansion_check(unsigned t, unsigned T, uint64_t x, const Options& options) {
  check_indices(t, T, 10, "expansion_check");
  if (x > 1'000'000) throw std::invalid_argument("expansion_check: requires x <= 10^6");
  check_x(x, options);

  ExpansionCheck out;
  // Left side: per-prime products with binary-Kronecker symbols.
  out.lhs = indicator_product_sum(t, T, x, options, fermat_symbol_kronecker);

  // Right side: pi(x) plus the signed subset sums, with Euler-criterion
  // symbols. All 2^(T+1) subset sums come from one pass: per prime the
  // subset products are filled in by bitmask DP.
  const unsigned n_masks = 1u << (T + 1);
  const primes::SegmentedSieve sieve(2, x, options.segment_odds);
  const auto partials = detail::parallel_indexed<std::vector<int64_t>>(
      sieve.segment_count(), options.threads, [&](size_t i) {
        std::vector<int64_t> acc(n_masks, 0);
        std::vector<int> prod(n_masks);
        std::vector<int> syms(T + 1);
        for (const uint64_t p : sieve.segment_primes(i)) {
          for (unsigned k = 0; k <= T; ++k) syms[k] = fermat_symbol(t + k, p);
          prod[0] = 1;
          for (unsigned mask = 1; mask < n_masks; ++mask) {
            const unsigned low = static_cast<unsigned>(std::countr_zero(mask));
            prod[mask] = prod[mask & (mask - 1)] * syms[low];
          }
          for (unsigned mask = 0; mask < n_masks; ++mask) acc[mask] += prod[mask];
        }
        return acc;
      });
  std::vector<int64_t> subset_sums(n_masks, 0);
  for (const auto& part : partials)
    for (unsigned mask = 0; mask < n_masks; ++mask) subset_sums[mask] += part[mask];

  // subset_sums[0] is pi(x); group the rest by |B| as in the expansion.
  int64_t rhs = subset_sums[0];
  for (unsigned j = 1; j <= T + 1; ++j) {
    int64_t level = 0;
    for (unsigned mask = 1; mask < n_masks; ++mask)
      if (static_cast<unsigned>(std::popcount(mask)) == j) level += subset_sums[mask];
    rhs += (j % 2 == 1 ? -1 : 1) * level;
  }
  out.rhs = rhs;
  out.equal = out.lhs == out.rhs;
  return out;
}

SandwichReport sandwich_report(unsigned t, unsigned T, uint64_t x, const Options& options) {
  check_indices(t, T, 30, "sandwich_report");
  check_x(x, options);

  SandwichReport report;
  report.t = t;
  report.T = T;
  report.x = x;

  // Brun-Titchmarsh piece; also enforces 2^t <= sqrt(x).
  census::Options census_options;
  census_options.threads = options.threads;
  census_options.sieve_limit = options.sieve_limit;
  census_options.segment_odds = options.segment_odds;
  report.bt_term = census::progression_count(x, t, census_options).bt_bound;

  report.n_numerator = indicator_product_sum(t, T, x, options, fermat_symbol);
  const double scale = static_cast<double>(uint64_t{1} << (T + 1));
  report.n_sandwich = static_cast<double>(report.n_numerator) / scale;

  if (t + T <= fermat::kMaxExactIndex) {
    report.omega_exact = true;
    uint64_t omega = 0;
    // Fermat numbers are pairwise coprime: distinct factors just add up.
    for (unsigned i = 0; i <= T; ++i)
      omega += fermat::fermat_prime_factors(t + i).size();
    report.omega_a = omega;
  } else {
    report.omega_exact = false;
    report.omega_a = uint64_t{1} << (t + T + 1);  // log2(A) bound
  }

  uint64_t e_low = 0;
  census::SurveyResult classified = census::survey(x, census_options);
  for (const auto& record : classified.elites)
    if (record.two_adic_exp <= t) ++e_low;
  report.e_low = e_low;

  // Compare 2^(T+1)-scaled integers, no float in the inequality.
  const __int128 lhs = static_cast<__int128>(e_low) << (T + 1);
  const __int128 rhs = static_cast<__int128>(report.n_numerator) +
                       (static_cast<__int128>(report.omega_a) << (T + 1));
  report.inequality_holds = lhs <= rhs;

  const double xd = static_cast<double>(x);
  report.bound_terms[0] = std::sqrt(xd) * std::log(xd);
  report.bound_terms[1] = std::sqrt(xd) * std::pow(2.0, static_cast<double>(t) + T);
  report.bound_terms[2] = xd / std::pow(2.0, static_cast<double>(T));
  report.bound_terms[3] = xd / std::pow(2.0, static_cast<double>(t));
  return report;
}

unsigned default_parameter(uint64_t x) {
  if (x < 2) return 0;
  const double v = std::log(static_cast<double>(x)) / (6.0 * std::log(2.0));
  return static_cast<unsigned>(std::floor(v + 1e-9));
}

}  // namespace elitist::charsum
