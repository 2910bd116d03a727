#pragma once

// Independent reference computations for the test suites. Nothing here calls
// into pnt_core; each routine is the slow, obvious way to get the same answer.

#include <cstdint>
#include <numeric>
#include <string>
#include <vector>

#include <gmpxx.h>
#include <mpfr.h>

namespace oracle {

inline bool is_prime_trial(std::uint64_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::uint64_t d = 3; d <= n / d; d += 2)
    if (n % d == 0) return false;
  return true;
}

inline std::vector<std::uint64_t> primes_upto(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t k = 2; k <= n; ++k)
    if (is_prime_trial(k)) out.push_back(k);
  return out;
}

inline std::uint64_t prev_prime_trial(std::uint64_t x) {
  while (!is_prime_trial(x)) --x;
  return x;
}

inline std::uint64_t next_prime_trial(std::uint64_t x) {
  ++x;
  while (!is_prime_trial(x)) ++x;
  return x;
}

/// #{ m in [lo, hi] : gcd(m, modulus) = 1 }
inline std::uint64_t coprime_count(std::uint64_t lo, std::uint64_t hi, std::uint64_t modulus) {
  std::uint64_t c = 0;
  for (std::uint64_t m = lo; m <= hi; ++m)
    if (std::gcd(m, modulus) == 1) ++c;
  return c;
}

/// ln of a decimal integer at 256-bit precision, rounded to double.
inline double ln_mpfr(const mpz_class& v) {
  mpfr_t t;
  mpfr_init2(t, 256);
  mpfr_set_z(t, v.get_mpz_t(), MPFR_RNDN);
  mpfr_log(t, t, MPFR_RNDN);
  const double out = mpfr_get_d(t, MPFR_RNDN);
  mpfr_clear(t);
  return out;
}

/// ln(num/den) at 256-bit precision.
inline double ln_mpfr(const mpz_class& num, const mpz_class& den) {
  mpfr_t a, b;
  mpfr_init2(a, 256);
  mpfr_init2(b, 256);
  mpfr_set_z(a, num.get_mpz_t(), MPFR_RNDN);
  mpfr_set_z(b, den.get_mpz_t(), MPFR_RNDN);
  mpfr_div(a, a, b, MPFR_RNDN);
  mpfr_log(a, a, MPFR_RNDN);
  const double out = mpfr_get_d(a, MPFR_RNDN);
  mpfr_clear(a);
  mpfr_clear(b);
  return out;
}

}  // namespace oracle
