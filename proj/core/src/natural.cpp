#include "elitist/natural.hpp"

#include <cctype>
#include <stdexcept>

namespace elitist::arith {

void Natural::set_u64(mpz_t rop, uint64_t v) {
  // mp_limb_t is 64-bit on this platform, but go through import to stay
  // correct if it is not.
  mpz_import(rop, 1, -1, sizeof(v), 0, 0, &v);
}

Natural::Natural(const std::string& decimal) {
  if (decimal.empty()) throw std::invalid_argument("Natural: empty decimal string");
  for (const char c : decimal) {
    if (!std::isdigit(static_cast<unsigned char>(c)))
      throw std::invalid_argument("Natural: not a non-negative decimal integer: " + decimal);
  }
  mpz_init(v_);
  if (mpz_set_str(v_, decimal.c_str(), 10) != 0) {
    mpz_clear(v_);
    throw std::invalid_argument("Natural: unparsable decimal string: " + decimal);
  }
}

std::string Natural::str() const {
  const size_t len = mpz_sizeinbase(v_, 10) + 2;
  std::string buf(len, '\0');
  mpz_get_str(buf.data(), 10, v_);
  buf.resize(buf.find('\0'));
  return buf;
}

bool Natural::fits_u64() const { return mpz_sizeinbase(v_, 2) <= 64; }

uint64_t Natural::to_u64() const {
  if (!fits_u64()) throw std::overflow_error("Natural::to_u64: value exceeds 64 bits");
  uint64_t out = 0;
  mpz_export(&out, nullptr, -1, sizeof(out), 0, 0, v_);
  return out;
}

Natural Natural::pow2(uint64_t k) {
  Natural r;
  mpz_set_ui(r.v_, 1);
  mpz_mul_2exp(r.v_, r.v_, k);
  return r;
}

Natural operator+(const Natural& a, const Natural& b) {
  Natural r;
  mpz_add(r.v_, a.v_, b.v_);
  return r;
}

Natural operator*(const Natural& a, const Natural& b) {
  Natural r;
  mpz_mul(r.v_, a.v_, b.v_);
  return r;
}

Natural operator-(const Natural& a, const Natural& b) {
  if (mpz_cmp(a.v_, b.v_) < 0)
    throw std::invalid_argument("Natural: subtraction would be negative");
  Natural r;
  mpz_sub(r.v_, a.v_, b.v_);
  return r;
}

Natural operator%(const Natural& a, const Natural& b) {
  if (mpz_sgn(b.v_) == 0) throw std::invalid_argument("Natural: modulo by zero");
  Natural r;
  mpz_mod(r.v_, a.v_, b.v_);
  return r;
}

Natural Natural::gcd(const Natural& a, const Natural& b) {
  Natural r;
  mpz_gcd(r.v_, a.v_, b.v_);
  return r;
}

Natural mod_pow(const Natural& base, const Natural& exponent, const Natural& modulus) {
  if (mpz_cmp_ui(modulus.v_, 2) < 0)
    throw std::invalid_argument("mod_pow: modulus must be >= 2");
  Natural r;
  mpz_powm(r.v_, base.v_, exponent.v_, modulus.v_);
  return r;
}

}  // namespace elitist::arith
