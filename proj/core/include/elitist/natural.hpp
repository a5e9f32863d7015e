#pragma once

#include <gmp.h>

#include <compare>
#include <cstdint>
#include <string>

namespace elitist::arith {

// Arbitrary-precision non-negative integer. Value type over GMP's mpz_t;
// the non-negative invariant is enforced on every mutating path, and
// decimal serialization round-trips exactly.
class Natural {
 public:
  Natural() { mpz_init(v_); }
  Natural(uint64_t v) {  // NOLINT: implicit by design, Natural(3) reads naturally
    mpz_init(v_);
    set_u64(v_, v);
  }
  // Parses a decimal string. Rejects signs, whitespace and non-digits.
  explicit Natural(const std::string& decimal);

  Natural(const Natural& o) { mpz_init_set(v_, o.v_); }
  Natural(Natural&& o) noexcept {
    mpz_init(v_);
    mpz_swap(v_, o.v_);
  }
  Natural& operator=(const Natural& o) {
    if (this != &o) mpz_set(v_, o.v_);
    return *this;
  }
  Natural& operator=(Natural&& o) noexcept {
    mpz_swap(v_, o.v_);
    return *this;
  }
  ~Natural() { mpz_clear(v_); }

  std::string str() const;
  bool fits_u64() const;
  uint64_t to_u64() const;  // throws std::overflow_error if the value exceeds 2^64-1
  size_t bit_length() const { return mpz_sgn(v_) == 0 ? 0 : mpz_sizeinbase(v_, 2); }

  static Natural pow2(uint64_t k);  // 2^k

  friend Natural operator+(const Natural& a, const Natural& b);
  friend Natural operator*(const Natural& a, const Natural& b);
  // Subtraction throws std::invalid_argument if b > a (result would be negative).
  friend Natural operator-(const Natural& a, const Natural& b);
  friend Natural operator%(const Natural& a, const Natural& b);  // b >= 1

  friend bool operator==(const Natural& a, const Natural& b) { return mpz_cmp(a.v_, b.v_) == 0; }
  friend std::strong_ordering operator<=>(const Natural& a, const Natural& b) {
    const int c = mpz_cmp(a.v_, b.v_);
    return c < 0 ? std::strong_ordering::less
                 : c > 0 ? std::strong_ordering::greater
                         : std::strong_ordering::equal;
  }

  static Natural gcd(const Natural& a, const Natural& b);

  // Read-only handle for interoperating with GMP directly (tests, fermat module).
  const mpz_t& raw() const { return v_; }

 private:
  static void set_u64(mpz_t rop, uint64_t v);
  friend Natural mod_pow(const Natural& base, const Natural& exponent, const Natural& modulus);
  mpz_t v_;
};

// base^exponent mod modulus. Requires modulus >= 2 (std::invalid_argument
// otherwise). O(bits(exponent)) modular multiplications.
Natural mod_pow(const Natural& base, const Natural& exponent, const Natural& modulus);

}  // namespace elitist::arith
