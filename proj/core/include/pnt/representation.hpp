#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "pnt/exactnum.hpp"
#include "pnt/prime_engine.hpp"

namespace pnt {

enum class SuccessionKind { prime, primorial };

std::string_view to_string(SuccessionKind kind) noexcept;
SuccessionKind parse_succession(std::string_view text);  // throws DomainError

/// A strictly increasing integer sequence a_1 < a_2 < … with a_1 = 2:
/// the primes (a_n = p_n) or the primorials (a_n = #(n)).
class Succession {
 public:
  Succession(PrimeEngine& engine, SuccessionKind kind) : engine_(&engine), kind_(kind) {}

  SuccessionKind kind() const noexcept { return kind_; }
  PrimeEngine& engine() const noexcept { return *engine_; }

  /// a_n for n ≥ 1.
  Natural element(std::uint64_t n) const;
  Natural first() const { return Natural(2); }

 private:
  PrimeEngine* engine_;
  SuccessionKind kind_;
};

/// x = a_n · s with a_n ≤ x < a_{n+1}, r = (x − a_n)/(a_{n+1} − a_n) ∈ [0, 1)
/// and s = 1 + (a_{n+1}/a_n − 1)·r, all exact.
///
/// For the prime succession the index n is only known while a_n lies inside
/// the engine's current prime table; beyond it n is empty and the neighbour
/// values alone describe the decomposition.
struct Representation {
  std::optional<std::uint64_t> n;
  Natural a_n;
  Natural a_next;
  Ratio r;
  Ratio s;

  /// y(n, r) = a_n · s.
  Ratio value() const { return Ratio(a_n) * s; }
};

/// s(n, r) = 1 + (a_next/a_n − 1)·r.
Ratio multiplicative_fraction(const Natural& a_n, const Natural& a_next, const Ratio& r);

/// Locates x within the succession. Throws DomainError when x < a_1.
Representation decompose(const Succession& succ, const Natural& x);

/// y(n, r) = a_{n+1}·r + a_n·(1 − r). Throws DomainError unless n ≥ 1 and 0 ≤ r < 1.
Ratio compose(const Succession& succ, std::uint64_t n, const Ratio& r);

/// `n=2 a_n=6 a_next=30 r=1/6 s=5/3`; an unknown index prints as `n=?`.
std::string format_representation(const Representation& rep);

}  // namespace pnt
