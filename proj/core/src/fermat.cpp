#include "elitist/fermat.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>
#include <string>

#include "elitist/arith.hpp"
#include "elitist/errors.hpp"

namespace elitist::fermat {

using arith::Natural;

namespace {

void require_exact_index(unsigned n) {
  if (n > kMaxExactIndex)
    throw std::out_of_range("fermat: exact values are capped at index " +
                            std::to_string(kMaxExactIndex));
}

}  // namespace

Natural fermat_exact(unsigned n) {
  require_exact_index(n);
  return Natural::pow2(uint64_t{1} << n) + Natural(1);
}

std::vector<uint64_t> fermat_prime_factors(unsigned n) {
  require_exact_index(n);
  // F_6 = 2^64 + 1 is the largest case and fits a 128-bit word.
  __uint128_t f = (static_cast<__uint128_t>(1) << (uint64_t{1} << n)) + 1;
  std::vector<uint64_t> out;
  for (uint64_t q = 3; f > std::numeric_limits<uint64_t>::max(); q += 2) {
    if (f % q == 0) {
      out.push_back(q);
      while (f % q == 0) f /= q;
    }
  }
  if (f > 1) {
    for (const auto& [p, e] : arith::factorize(static_cast<uint64_t>(f))) out.push_back(p);
  }
  std::sort(out.begin(), out.end());
  return out;
}

ResidueStream::ResidueStream(uint64_t p, uint64_t base, uint64_t start)
    : p_(p), base_(base), index_(start) {
  if (p % 2 == 0) throw std::invalid_argument("ResidueStream: modulus must be odd");
  if (p < 3) throw std::invalid_argument("ResidueStream: modulus must be an odd prime");
  if (base < 2) throw std::invalid_argument("ResidueStream: base must be >= 2");
  if (base % p == 0) throw std::invalid_argument("ResidueStream: p divides base");
  // base^(2^start) mod p. The exponent is taken directly while it fits a
  // word; beyond that it is reduced mod p-1 (Fermat's little theorem,
  // gcd(base, p) = 1).
  uint64_t exponent;
  if (start < 64) {
    exponent = uint64_t{1} << start;
  } else {
    exponent = arith::mod_pow(2, start, p - 1);
  }
  residue_ = (arith::mod_pow(base, exponent, p) + 1) % p;
}

uint64_t ResidueStream::advance() {
  // (b^(2^m))^2 = b^(2^(m+1)): square the previous power.
  const uint64_t power = (residue_ + p_ - 1) % p_;
  residue_ = (arith::mul_mod(power, power, p_) + 1) % p_;
  ++index_;
  return residue_;
}

PepinVerdict pepin_test(unsigned n, const PepinOptions& options) {
  if (n == 0) throw std::invalid_argument("pepin_test: index must be >= 1");
  if (n >= 64 || (uint64_t{1} << n) > options.max_bits)
    throw ResourceLimitError("pepin_test: 2^" + std::to_string(n) + " exceeds the " +
                             std::to_string(options.max_bits) + "-bit cap");
  const uint64_t bits = uint64_t{1} << n;
  const Natural modulus = Natural::pow2(bits) + Natural(1);  // F_n
  const Natural exponent = Natural::pow2(bits - 1);          // (F_n - 1) / 2
  PepinVerdict verdict;
  verdict.index = n;
  verdict.residue = arith::mod_pow(Natural(3), exponent, modulus);
  verdict.is_prime = (verdict.residue == modulus - Natural(1));
  return verdict;
}

ProductIdentity product_identity_check(unsigned n) {
  require_exact_index(n);
  ProductIdentity result;
  result.lhs = Natural(1);
  for (unsigned i = 0; i <= n; ++i) result.lhs = result.lhs * fermat_exact(i);
  result.rhs = Natural::pow2(uint64_t{1} << (n + 1)) - Natural(1);
  result.equal = (result.lhs == result.rhs);
  return result;
}

}  // namespace elitist::fermat
