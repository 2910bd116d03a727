#pragma once

#include <cstdint>

#include "pnt/exactnum.hpp"

namespace pnt {

/// Deterministic Miller-Rabin for the full 64-bit range (first twelve prime bases).
bool is_prime_u64(std::uint64_t n) noexcept;

/// Baillie-PSW: small-prime trial division, strong base-2 Fermat test, then a
/// strong Lucas test with Selfridge parameters. No known counterexample exists;
/// values below 2^64 are answered by is_prime_u64 and are therefore exact.
bool is_probable_prime(const Natural& n);

namespace detail {
bool strong_fermat_base2(const mpz_class& n);
bool strong_lucas_selfridge(const mpz_class& n);
}  // namespace detail

}  // namespace pnt
