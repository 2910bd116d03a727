#include "pnt/prime_engine.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <mutex>
#include <string>

#include "pnt/errors.hpp"
#include "pnt/primality.hpp"
#include "pnt/prime_count.hpp"

namespace pnt {

namespace {

using u64 = std::uint64_t;

constexpr u64 kInitialBound = u64{1} << 16;
// Above this the u64 scan could step past 2^64; switch to Natural arithmetic.
constexpr u64 kWordScanLimit = std::numeric_limits<u64>::max() - 4096;
// Below this the sieve beats the combinatorial counter in practice.
constexpr u64 kSieveCrossover = u64{1} << 22;

}  // namespace

u64 nth_prime_upper_bound(u64 n) noexcept {
  if (n < 6) return 13;
  const double dn = static_cast<double>(n);
  return static_cast<u64>(dn * (std::log(dn) + std::log(std::log(dn)))) + 16;
}

void EngineConfig::validate() const {
  if (sieve_threshold == 0 || combinatorial_threshold == 0 || segment_size == 0 ||
      totative_enumeration_bound == 0)
    throw ConfigError("configuration values must be positive");
  if (sieve_threshold > combinatorial_threshold)
    throw ConfigError("sieve_threshold (" + std::to_string(sieve_threshold) +
                      ") exceeds combinatorial_threshold (" + std::to_string(combinatorial_threshold) + ")");
}

std::string_view to_string(CountMethod m) noexcept {
  switch (m) {
    case CountMethod::sieve: return "sieve";
    case CountMethod::combinatorial: return "combinatorial";
    case CountMethod::checkpoint: return "checkpoint";
    case CountMethod::automatic: return "auto";
  }
  return "auto";
}

CountMethod parse_count_method(std::string_view text) {
  if (text == "sieve") return CountMethod::sieve;
  if (text == "combinatorial") return CountMethod::combinatorial;
  if (text == "checkpoint") return CountMethod::checkpoint;
  if (text == "auto") return CountMethod::automatic;
  throw DomainError("unknown counting method '" + std::string(text) + "'");
}

PrimeEngine::PrimeEngine(EngineConfig config) : config_(config) {
  config_.validate();
  table_ = std::make_shared<const PrimeTable>(sieve(kInitialBound, config_.segment_size));
}

std::shared_ptr<const PrimeTable> PrimeEngine::table() const {
  std::shared_lock lock(mutex_);
  return table_;
}

std::shared_ptr<const PrimeTable> PrimeEngine::ensure_bound(u64 bound) {
  {
    std::shared_lock lock(mutex_);
    if (table_->bound() >= bound) return table_;
  }
  std::unique_lock lock(mutex_);
  if (table_->bound() < bound) {
    const u64 grown = std::max(bound, table_->bound() * 2);
    table_ = std::make_shared<const PrimeTable>(sieve(grown, config_.segment_size));
  }
  return table_;
}

std::shared_ptr<const PrimeTable> PrimeEngine::ensure_count(u64 count) {
  auto snapshot = table();
  if (snapshot->size() >= count) return snapshot;
  return ensure_bound(nth_prime_upper_bound(count));
}

u64 PrimeEngine::nth_prime(u64 n) {
  if (n == 0) throw IndexError("nth_prime: index must be >= 1");
  return ensure_count(n)->nth(n);
}

CountMethod PrimeEngine::resolve_method(const Natural& x) const {
  const bool word = x.fits_u64();
  const u64 xv = word ? x.to_u64() : 0;
  if (word && xv <= config_.sieve_threshold)
    return xv <= kSieveCrossover ? CountMethod::sieve : CountMethod::combinatorial;
  if (checkpoint_exponent(x)) return CountMethod::checkpoint;
  if (word && xv <= config_.combinatorial_threshold) return CountMethod::combinatorial;
  throw RangeError("x = " + x.to_string() +
                   " is beyond every counting threshold and is not a checkpoint power of ten");
}

Natural PrimeEngine::count_primes(const Natural& x, CountMethod method) const {
  if (x < Natural(2)) throw DomainError("count_primes requires x >= 2, got " + x.to_string());
  const bool word = x.fits_u64();
  const u64 xv = word ? x.to_u64() : 0;

  switch (method) {
    case CountMethod::sieve:
      if (!word || xv > config_.sieve_threshold)
        throw RangeError("x = " + x.to_string() + " exceeds sieve_threshold " +
                         std::to_string(config_.sieve_threshold));
      return Natural(count_primes_sieve(xv, config_.segment_size));
    case CountMethod::combinatorial:
      if (!word || xv > config_.combinatorial_threshold)
        throw RangeError("x = " + x.to_string() + " exceeds combinatorial_threshold " +
                         std::to_string(config_.combinatorial_threshold));
      return Natural(count_primes_combinatorial(xv));
    case CountMethod::checkpoint: {
      const auto k = checkpoint_exponent(x);
      if (!k) throw RangeError("checkpoint counting needs x = 10^k with 1 <= k <= 25, got " + x.to_string());
      return *checkpoint_pi(*k);
    }
    case CountMethod::automatic:
      break;
  }

  return count_primes(x, resolve_method(x));
}

Natural PrimeEngine::next_prime_after(const Natural& x) const {
  const auto snapshot = table();
  if (x.fits_u64()) {
    const u64 xv = x.to_u64();
    const auto primes = snapshot->primes();
    if (xv < primes.back()) return Natural(*std::upper_bound(primes.begin(), primes.end(), xv));
    if (xv < kWordScanLimit) {
      u64 c = xv + 1;
      if (c > 2 && (c & 1) == 0) ++c;
      while (!is_prime_u64(c)) c += 2;
      return Natural(c);
    }
  }
  Natural c = x + Natural(1);
  if (mpz_even_p(c.mpz().get_mpz_t())) c += Natural(1);
  while (!is_probable_prime(c)) c += Natural(2);
  return c;
}

Natural PrimeEngine::prime_at_or_below(const Natural& x) const {
  if (x < Natural(2)) throw DomainError("no prime at or below " + x.to_string());
  const auto snapshot = table();
  if (x.fits_u64()) {
    u64 c = x.to_u64();
    if (c <= snapshot->bound()) {
      const auto primes = snapshot->primes();
      return Natural(*(std::upper_bound(primes.begin(), primes.end(), c) - 1));
    }
    if ((c & 1) == 0) --c;
    while (!is_prime_u64(c)) c -= 2;
    return Natural(c);
  }
  Natural c = x;
  if (mpz_even_p(c.mpz().get_mpz_t())) c -= Natural(1);
  while (!is_probable_prime(c)) c -= Natural(2);
  return c;
}

std::pair<Natural, Natural> PrimeEngine::neighbor_primes(const Natural& x) const {
  if (x < Natural(2)) throw DomainError("neighbor_primes requires x >= 2, got " + x.to_string());
  return {prime_at_or_below(x), next_prime_after(x)};
}

Natural PrimeEngine::prev_prime_before(const Natural& p) const {
  if (p == Natural(2)) throw IndexError("2 has no preceding prime");
  if (p < Natural(2) || !is_probable_prime(p))
    throw DomainError("prev_prime_before expects a prime, got " + p.to_string());
  return prime_at_or_below(p - Natural(1));
}

}  // namespace pnt
