#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <vector>

namespace pnt {

inline constexpr std::uint64_t kDefaultSegmentSize = std::uint64_t{1} << 18;

/// All primes up to a bound, strictly increasing, starting at 2.
class PrimeTable {
 public:
  PrimeTable() = default;
  PrimeTable(std::vector<std::uint64_t> primes, std::uint64_t bound);

  std::span<const std::uint64_t> primes() const noexcept { return primes_; }
  std::uint64_t bound() const noexcept { return bound_; }
  std::size_t size() const noexcept { return primes_.size(); }
  bool empty() const noexcept { return primes_.empty(); }

  /// p_n, 1-based. Throws IndexError when n is 0 or beyond the table.
  std::uint64_t nth(std::uint64_t n) const;

  /// True iff x ≤ bound() and x is prime.
  bool contains(std::uint64_t x) const noexcept;

  /// 1-based index of a prime in the table.
  std::optional<std::uint64_t> index_of(std::uint64_t p) const noexcept;

  /// π(x); requires x ≤ bound().
  std::uint64_t count_up_to(std::uint64_t x) const;

 private:
  std::vector<std::uint64_t> primes_;
  std::uint64_t bound_ = 0;
};

/// Segmented sieve of Eratosthenes over [2, bound]. Working memory is one
/// segment plus the base primes up to sqrt(bound). Throws DomainError when bound < 2.
PrimeTable sieve(std::uint64_t bound, std::uint64_t segment_size = kDefaultSegmentSize);

/// π(x) by segmented sieve without materialising the primes. Segments are
/// distributed over `threads` workers (0 = hardware concurrency).
std::uint64_t count_primes_sieve(std::uint64_t x, std::uint64_t segment_size = kDefaultSegmentSize,
                                 unsigned threads = 0);

/// Calls `visit(p)` for every prime p in [lo, hi], in increasing order.
void for_each_prime(std::uint64_t lo, std::uint64_t hi,
                    const std::function<void(std::uint64_t)>& visit,
                    std::uint64_t segment_size = kDefaultSegmentSize);

}  // namespace pnt
