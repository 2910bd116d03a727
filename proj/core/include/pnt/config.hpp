#pragma once

#include <cstdint>

#include "pnt/sieve.hpp"

namespace pnt {

/// Tunables shared by the counting engine and the enumeration helpers.
struct EngineConfig {
  std::uint64_t sieve_threshold = 1'000'000'000;              // largest x counted by sieve
  std::uint64_t combinatorial_threshold = 1'000'000'000'000;  // largest x counted combinatorially
  std::uint64_t segment_size = kDefaultSegmentSize;           // odd numbers per sieve segment
  std::uint64_t totative_enumeration_bound = 100'000'000;     // max #(n) for enumeration

  /// Throws ConfigError unless every value is positive and sieve ≤ combinatorial.
  void validate() const;
};

}  // namespace pnt
