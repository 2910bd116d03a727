#include "pnt/prime_count.hpp"

#include <cmath>
#include <vector>

namespace pnt {

namespace {

using u64 = std::uint64_t;

u64 isqrt(u64 n) {
  auto r = static_cast<u64>(std::sqrt(static_cast<double>(n)));
  while (r * r > n) --r;
  while ((r + 1) * (r + 1) <= n) ++r;
  return r;
}

}  // namespace

u64 count_primes_combinatorial(u64 x) {
  if (x < 2) return 0;
  const u64 root = isqrt(x);
  // small[v] = S(v) for v <= root; large[k] = S(x / k) for k <= root.
  // S(v) starts as the count of integers in [2, v] and ends as π(v).
  std::vector<u64> small(root + 1);
  std::vector<u64> large(root + 1);
  for (u64 v = 1; v <= root; ++v) {
    small[v] = v - 1;
    large[v] = x / v - 1;
  }
  for (u64 p = 2; p <= root; ++p) {
    if (small[p] == small[p - 1]) continue;  // p composite
    const u64 primes_below = small[p - 1];
    const u64 p2 = p * p;
    // Large values x/k >= p^2, i.e. k <= x / p^2.
    const u64 k_end = std::min(root, x / p2);
    for (u64 k = 1; k <= k_end; ++k) {
      const u64 kp = k * p;
      const u64 sub = kp <= root ? large[kp] : small[x / kp];
      large[k] -= sub - primes_below;
    }
    for (u64 v = root; v >= p2; --v) small[v] -= small[v / p] - primes_below;
  }
  return large[1];
}

std::optional<Natural> checkpoint_pi(unsigned exponent) {
  if (exponent < 1 || exponent > kPiPowersOfTen.size()) return std::nullopt;
  return Natural::parse(kPiPowersOfTen[exponent - 1]);
}

std::optional<unsigned> checkpoint_exponent(const Natural& x) {
  for (unsigned k = 1; k <= kPiPowersOfTen.size(); ++k)
    if (x == Natural::pow10(k)) return k;
  return std::nullopt;
}

}  // namespace pnt
