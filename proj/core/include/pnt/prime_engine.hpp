#pragma once

#include <cstdint>
#include <memory>
#include <shared_mutex>
#include <string_view>
#include <utility>

#include "pnt/config.hpp"
#include "pnt/exactnum.hpp"
#include "pnt/sieve.hpp"

namespace pnt {

/// Upper bound for p_n (Rosser–Dusart style n(ln n + ln ln n), padded).
std::uint64_t nth_prime_upper_bound(std::uint64_t n) noexcept;

enum class CountMethod { sieve, combinatorial, checkpoint, automatic };

std::string_view to_string(CountMethod m) noexcept;
CountMethod parse_count_method(std::string_view text);  // throws DomainError

/// Source of p_n and π(x) for every other module.
///
/// Owns a lazily grown PrimeTable. Queries take an immutable snapshot, so any
/// number of readers may run concurrently; growth swaps in a new table under
/// an exclusive lock (single writer).
class PrimeEngine {
 public:
  explicit PrimeEngine(EngineConfig config = {});

  const EngineConfig& config() const noexcept { return config_; }

  /// Current table snapshot.
  std::shared_ptr<const PrimeTable> table() const;

  /// Grows the table until it covers [2, bound]; returns the resulting snapshot.
  std::shared_ptr<const PrimeTable> ensure_bound(std::uint64_t bound);

  /// Grows the table until it holds at least `count` primes.
  std::shared_ptr<const PrimeTable> ensure_count(std::uint64_t count);

  /// p_n, n ≥ 1. Throws IndexError for n = 0.
  std::uint64_t nth_prime(std::uint64_t n);

  /// The concrete method `automatic` resolves to for x: sieve or combinatorial
  /// (whichever is cheaper) up to sieve_threshold, then a checkpoint when x is
  /// a published power of ten, then combinatorial up to its threshold.
  /// Throws RangeError when nothing covers x.
  CountMethod resolve_method(const Natural& x) const;

  /// Exact π(x). Throws DomainError for x < 2 and RangeError when no method
  /// covers x (see EngineConfig thresholds and the 10^1..10^25 checkpoints).
  Natural count_primes(const Natural& x, CountMethod method = CountMethod::automatic) const;

  /// (p, q): p the largest prime ≤ x, q the smallest prime > x. x ≥ 2.
  std::pair<Natural, Natural> neighbor_primes(const Natural& x) const;

  /// Largest prime < p for a prime p ≥ 3. Throws IndexError for p = 2.
  Natural prev_prime_before(const Natural& p) const;

  /// Smallest prime > x.
  Natural next_prime_after(const Natural& x) const;

  /// Largest prime ≤ x; x ≥ 2.
  Natural prime_at_or_below(const Natural& x) const;

 private:
  EngineConfig config_;
  mutable std::shared_mutex mutex_;
  std::shared_ptr<const PrimeTable> table_;
};

}  // namespace pnt
