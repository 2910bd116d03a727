#include "pnt/primality.hpp"

#include <array>

namespace pnt {

namespace {

using u64 = std::uint64_t;
__extension__ typedef unsigned __int128 u128;

u64 mul_mod(u64 a, u64 b, u64 m) noexcept { return static_cast<u64>(static_cast<u128>(a) * b % m); }

u64 pow_mod(u64 base, u64 exp, u64 m) noexcept {
  u64 result = 1;
  base %= m;
  while (exp != 0) {
    if (exp & 1) result = mul_mod(result, base, m);
    base = mul_mod(base, base, m);
    exp >>= 1;
  }
  return result;
}

constexpr std::array<u64, 12> kWitnesses{2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};

constexpr std::array<unsigned, 54> kSmallPrimes{
    2,   3,   5,   7,   11,  13,  17,  19,  23,  29,  31,  37,  41,  43,  47,  53,  59,  61,
    67,  71,  73,  79,  83,  89,  97,  101, 103, 107, 109, 113, 127, 131, 137, 139, 149, 151,
    157, 163, 167, 173, 179, 181, 191, 193, 197, 199, 211, 223, 227, 229, 233, 239, 241, 251};

}  // namespace

bool is_prime_u64(u64 n) noexcept {
  if (n < 2) return false;
  for (u64 p : kWitnesses) {
    if (n % p == 0) return n == p;
  }
  u64 d = n - 1;
  unsigned s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (u64 a : kWitnesses) {
    u64 x = pow_mod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (unsigned r = 1; r < s; ++r) {
      x = mul_mod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

namespace detail {

bool strong_fermat_base2(const mpz_class& n) {
  const mpz_class n_minus_1 = n - 1;
  mpz_class d = n_minus_1;
  const auto s = mpz_scan1(d.get_mpz_t(), 0);
  mpz_tdiv_q_2exp(d.get_mpz_t(), d.get_mpz_t(), s);
  mpz_class x;
  const mpz_class two = 2;
  mpz_powm(x.get_mpz_t(), two.get_mpz_t(), d.get_mpz_t(), n.get_mpz_t());
  if (x == 1 || x == n_minus_1) return true;
  for (mp_bitcnt_t r = 1; r < s; ++r) {
    x = x * x % n;
    if (x == n_minus_1) return true;
    if (x == 1) return false;
  }
  return false;
}

// Strong Lucas probable prime test, Selfridge's method A for (D, P, Q).
// Requires odd n > 2 that is not a perfect square.
bool strong_lucas_selfridge(const mpz_class& n) {
  long d_param = 5;
  for (;;) {
    const mpz_class d_mpz = d_param;
    const int j = mpz_jacobi(d_mpz.get_mpz_t(), n.get_mpz_t());
    if (j == -1) break;
    if (j == 0) {
      // D shares a factor with n; n is prime only if it equals |D|.
      mpz_class abs_d = d_param < 0 ? -d_param : d_param;
      return n == abs_d;
    }
    d_param = d_param > 0 ? -(d_param + 2) : -d_param + 2;
  }
  const long p = 1;
  const long q = (1 - d_param) / 4;

  // n + 1 = d * 2^s with d odd.
  mpz_class d = n + 1;
  const auto s = mpz_scan1(d.get_mpz_t(), 0);
  mpz_tdiv_q_2exp(d.get_mpz_t(), d.get_mpz_t(), s);

  auto mod = [&n](mpz_class v) {
    v %= n;
    if (sgn(v) < 0) v += n;
    return v;
  };
  auto half = [&n](mpz_class v) {
    if (mpz_odd_p(v.get_mpz_t())) v += n;
    mpz_tdiv_q_2exp(v.get_mpz_t(), v.get_mpz_t(), 1);
    return v;
  };

  // Left-to-right binary ladder computing U_d, V_d, Q^d mod n.
  mpz_class u = 1;
  mpz_class v = p;
  mpz_class qk = mod(q);
  const mpz_class dd = d_param;
  const auto bits = mpz_sizeinbase(d.get_mpz_t(), 2);
  for (auto i = static_cast<long>(bits) - 2; i >= 0; --i) {
    u = mod(u * v);
    v = mod(v * v - 2 * qk);
    qk = mod(qk * qk);
    if (mpz_tstbit(d.get_mpz_t(), static_cast<mp_bitcnt_t>(i))) {
      mpz_class u_next = half(mod(p * u + v));
      mpz_class v_next = half(mod(dd * u + p * v));
      u = std::move(u_next);
      v = std::move(v_next);
      qk = mod(qk * q);
    }
  }
  if (sgn(u) == 0 || sgn(v) == 0) return true;
  for (mp_bitcnt_t r = 1; r < s; ++r) {
    v = mod(v * v - 2 * qk);
    if (sgn(v) == 0) return true;
    qk = mod(qk * qk);
  }
  return false;
}

}  // namespace detail

bool is_probable_prime(const Natural& n) {
  if (n.fits_u64()) return is_prime_u64(n.to_u64());
  const mpz_class& z = n.mpz();
  for (unsigned p : kSmallPrimes) {
    if (mpz_divisible_ui_p(z.get_mpz_t(), p)) return false;
  }
  if (mpz_perfect_square_p(z.get_mpz_t())) return false;
  return detail::strong_fermat_base2(z) && detail::strong_lucas_selfridge(z);
}

}  // namespace pnt
