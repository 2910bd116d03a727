#pragma once

#include <cstdint>
#include <vector>

#include "pnt/exactnum.hpp"
#include "pnt/prime_engine.hpp"

namespace pnt {

/// #(n) = p_1 · … · p_n, with #(0) = 1.
Natural primorial(PrimeEngine& engine, std::uint64_t n);

/// φ(#(n)) = ∏ (p_i − 1), taken from the prime table. n ≥ 1.
Natural totient_of_primorial(PrimeEngine& engine, std::uint64_t n);

/// Number of n-totatives: elements of {2, …, #(n)+1} coprime to #(n). Equals φ(#(n)).
Natural totative_count(PrimeEngine& engine, std::uint64_t n);

/// The n-totatives in increasing order.
struct TotativeSet {
  std::uint64_t n = 0;
  std::vector<std::uint64_t> members;
};

/// Enumerates the n-totatives. Only meant for small n: throws ResourceError when
/// #(n) exceeds the engine's totative_enumeration_bound.
TotativeSet enumerate_totatives(PrimeEngine& engine, std::uint64_t n);

}  // namespace pnt
