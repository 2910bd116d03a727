#include "pnt/primorial.hpp"

#include <string>

#include "pnt/errors.hpp"

namespace pnt {

Natural primorial(PrimeEngine& engine, std::uint64_t n) {
  Natural value(1);
  if (n == 0) return value;
  const auto table = engine.ensure_count(n);
  for (std::uint64_t i = 1; i <= n; ++i) value *= Natural(table->nth(i));
  return value;
}

Natural totient_of_primorial(PrimeEngine& engine, std::uint64_t n) {
  if (n == 0) throw IndexError("totient_of_primorial: n must be >= 1");
  Natural value(1);
  const auto table = engine.ensure_count(n);
  for (std::uint64_t i = 1; i <= n; ++i) value *= Natural(table->nth(i) - 1);
  return value;
}

Natural totative_count(PrimeEngine& engine, std::uint64_t n) {
  if (n == 0) throw IndexError("totative_count: n must be >= 1");
  // #(n) and #(n)+1 are coprime, so moving {0, 1} to {#(n), #(n)+1} keeps the count at φ(#(n)).
  return totient_of_primorial(engine, n);
}

TotativeSet enumerate_totatives(PrimeEngine& engine, std::uint64_t n) {
  if (n == 0) throw IndexError("enumerate_totatives: n must be >= 1");
  const std::uint64_t bound = engine.config().totative_enumeration_bound;
  const Natural modulus = primorial(engine, n);
  if (modulus > Natural(bound))
    throw ResourceError("#(" + std::to_string(n) + ") = " + modulus.to_string() +
                        " exceeds totative_enumeration_bound " + std::to_string(bound));

  const std::uint64_t top = modulus.to_u64() + 1;
  std::vector<bool> shares_factor(top + 1, false);
  const auto table = engine.ensure_count(n);
  for (std::uint64_t i = 1; i <= n; ++i) {
    const std::uint64_t p = table->nth(i);
    for (std::uint64_t m = p; m <= top; m += p) shares_factor[m] = true;
  }

  TotativeSet out{n, {}};
  for (std::uint64_t m = 2; m <= top; ++m)
    if (!shares_factor[m]) out.members.push_back(m);
  return out;
}

}  // namespace pnt
