#include "pnt/sieve.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>
#include <thread>

#include "pnt/errors.hpp"

namespace pnt {

namespace {

using u64 = std::uint64_t;

u64 isqrt(u64 n) {
  auto r = static_cast<u64>(std::sqrt(static_cast<double>(n)));
  while (r * r > n) --r;
  while ((r + 1) * (r + 1) <= n) ++r;
  return r;
}

// Odd primes up to `limit` with a plain sieve; used as sieving primes.
std::vector<u64> odd_base_primes(u64 limit) {
  std::vector<u64> out;
  if (limit < 3) return out;
  std::vector<bool> composite(limit + 1, false);
  for (u64 i = 3; i * i <= limit; i += 2) {
    if (composite[i]) continue;
    for (u64 j = i * i; j <= limit; j += 2 * i) composite[j] = true;
  }
  for (u64 i = 3; i <= limit; i += 2)
    if (!composite[i]) out.push_back(i);
  return out;
}

// Sieves the odd numbers of [lo, hi] segment by segment. For each segment the
// sink receives the odd value of flags[0] and the flags (1 = prime).
template <class Sink>
void sieve_odd_range(u64 lo, u64 hi, u64 segment_size, const std::vector<u64>& base, Sink&& sink) {
  if (lo > hi) return;
  if ((lo & 1) == 0) ++lo;
  if (lo < 3) lo = 3;
  if (lo > hi) return;
  segment_size = std::max<u64>(segment_size, 64);
  std::vector<std::uint8_t> flags(segment_size);
  for (u64 seg_lo = lo; seg_lo <= hi;) {
    // seg_lo is odd; the segment covers seg_lo, seg_lo+2, ..., seg_lo+2(len-1).
    const u64 span_len = (hi - seg_lo) / 2 + 1;
    const u64 len = std::min<u64>(segment_size, span_len);
    const u64 seg_hi = seg_lo + 2 * (len - 1);
    std::fill_n(flags.begin(), len, std::uint8_t{1});
    for (u64 p : base) {
      const u64 p2 = p * p;
      if (p2 > seg_hi) break;
      u64 start = std::max(p2, (seg_lo + p - 1) / p * p);
      if ((start & 1) == 0) start += p;
      for (u64 m = start; m <= seg_hi; m += 2 * p) flags[(m - seg_lo) / 2] = 0;
    }
    sink(seg_lo, std::span<const std::uint8_t>(flags.data(), len));
    if (seg_hi >= hi) break;
    seg_lo = seg_hi + 2;
  }
}

}  // namespace

PrimeTable::PrimeTable(std::vector<u64> primes, u64 bound) : primes_(std::move(primes)), bound_(bound) {}

u64 PrimeTable::nth(u64 n) const {
  if (n == 0) throw IndexError("prime index must be >= 1");
  if (n > primes_.size())
    throw IndexError("prime index " + std::to_string(n) + " beyond table of " +
                     std::to_string(primes_.size()) + " primes");
  return primes_[n - 1];
}

bool PrimeTable::contains(u64 x) const noexcept {
  return x <= bound_ && std::binary_search(primes_.begin(), primes_.end(), x);
}

std::optional<u64> PrimeTable::index_of(u64 p) const noexcept {
  const auto it = std::lower_bound(primes_.begin(), primes_.end(), p);
  if (it == primes_.end() || *it != p) return std::nullopt;
  return static_cast<u64>(it - primes_.begin()) + 1;
}

u64 PrimeTable::count_up_to(u64 x) const {
  if (x > bound_)
    throw RangeError("count_up_to(" + std::to_string(x) + ") beyond table bound " + std::to_string(bound_));
  return static_cast<u64>(std::upper_bound(primes_.begin(), primes_.end(), x) - primes_.begin());
}

PrimeTable sieve(u64 bound, u64 segment_size) {
  if (bound < 2) throw DomainError("sieve bound must be >= 2, got " + std::to_string(bound));
  std::vector<u64> primes;
  if (bound >= 100) {
    const double b = static_cast<double>(bound);
    primes.reserve(static_cast<std::size_t>(1.26 * b / std::log(b)));
  }
  primes.push_back(2);
  const auto base = odd_base_primes(isqrt(bound));
  sieve_odd_range(3, bound, segment_size, base, [&](u64 seg_lo, std::span<const std::uint8_t> flags) {
    for (std::size_t i = 0; i < flags.size(); ++i)
      if (flags[i]) primes.push_back(seg_lo + 2 * i);
  });
  return PrimeTable(std::move(primes), bound);
}

u64 count_primes_sieve(u64 x, u64 segment_size, unsigned threads) {
  if (x < 2) return 0;
  const auto base = odd_base_primes(isqrt(x));
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  const u64 odd_count = (x - 1) / 2;  // odd numbers in [3, x]
  threads = static_cast<unsigned>(std::min<u64>(threads, std::max<u64>(1, odd_count / (4 * segment_size))));

  auto count_range = [&](u64 lo, u64 hi) {
    u64 c = 0;
    sieve_odd_range(lo, hi, segment_size, base, [&](u64, std::span<const std::uint8_t> flags) {
      c += static_cast<u64>(std::accumulate(flags.begin(), flags.end(), std::size_t{0}));
    });
    return c;
  };

  if (threads <= 1) return 1 + count_range(3, x);

  std::vector<u64> partial(threads, 0);
  {
    std::vector<std::jthread> workers;
    const u64 per = odd_count / threads;
    for (unsigned t = 0; t < threads; ++t) {
      const u64 lo = 3 + 2 * (per * t);
      const u64 hi = t + 1 == threads ? x : 3 + 2 * (per * (t + 1)) - 2;
      workers.emplace_back([&, t, lo, hi] { partial[t] = count_range(lo, hi); });
    }
  }
  return 1 + std::accumulate(partial.begin(), partial.end(), u64{0});
}

void for_each_prime(u64 lo, u64 hi, const std::function<void(u64)>& visit, u64 segment_size) {
  if (hi < 2 || lo > hi) return;
  if (lo <= 2) visit(2);
  const auto base = odd_base_primes(isqrt(hi));
  sieve_odd_range(std::max<u64>(lo, 3), hi, segment_size, base,
                  [&](u64 seg_lo, std::span<const std::uint8_t> flags) {
                    for (std::size_t i = 0; i < flags.size(); ++i)
                      if (flags[i]) visit(seg_lo + 2 * i);
                  });
}

}  // namespace pnt
