#include <doctest.h>

#include <numeric>

#include "oracles.hpp"
#include "pnt/errors.hpp"
#include "pnt/primorial.hpp"

using pnt::Natural;
using pnt::PrimeEngine;

TEST_CASE("primorial examples") {
  PrimeEngine engine;
  CHECK(pnt::primorial(engine, 0) == Natural(1));
  CHECK(pnt::primorial(engine, 5) == Natural(2310));
  CHECK(pnt::primorial(engine, 3) == Natural(30));
  CHECK(pnt::primorial(engine, 1) == Natural(2));
}

TEST_CASE("primorial recursion #(n) = p_n · #(n−1) for n = 1..50") {
  PrimeEngine engine;
  for (std::uint64_t n = 1; n <= 50; ++n)
    REQUIRE(pnt::primorial(engine, n) / pnt::primorial(engine, n - 1) == Natural(engine.nth_prime(n)));
  CHECK(pnt::primorial(engine, 19) == Natural::parse("7858321551080267055879090"));
}

TEST_CASE("totient_of_primorial examples") {
  PrimeEngine engine;
  CHECK(pnt::totient_of_primorial(engine, 3) == Natural(8));
  CHECK(pnt::totient_of_primorial(engine, 1) == Natural(1));
  CHECK(pnt::totient_of_primorial(engine, 4) == Natural(48));
  CHECK(oracle::coprime_count(0, 209, 210) == 48);
  CHECK_THROWS_AS(pnt::totient_of_primorial(engine, 0), pnt::IndexError);
}

TEST_CASE("totative_count examples") {
  PrimeEngine engine;
  CHECK(pnt::totative_count(engine, 2) == Natural(2));
  CHECK(pnt::totative_count(engine, 3) == Natural(8));
  CHECK(pnt::totative_count(engine, 1) == Natural(1));
}

TEST_CASE("enumerate_totatives examples") {
  PrimeEngine engine;
  using V = std::vector<std::uint64_t>;
  CHECK(pnt::enumerate_totatives(engine, 3).members == V{7, 11, 13, 17, 19, 23, 29, 31});
  CHECK(pnt::enumerate_totatives(engine, 1).members == V{3});
  CHECK(pnt::enumerate_totatives(engine, 2).members == V{5, 7});
}

TEST_CASE("enumerated totatives satisfy the counting identity and membership rules for n = 1..6") {
  PrimeEngine engine;
  for (std::uint64_t n = 1; n <= 6; ++n) {
    const auto set = pnt::enumerate_totatives(engine, n);
    const std::uint64_t modulus = pnt::primorial(engine, n).to_u64();
    REQUIRE(Natural(set.members.size()) == pnt::totative_count(engine, n));
    REQUIRE(set.members.size() == oracle::coprime_count(2, modulus + 1, modulus));
    for (std::uint64_t m : set.members) {
      REQUIRE(std::gcd(m, modulus) == 1);
      REQUIRE(m >= 2);
      REQUIRE(m <= modulus + 1);
    }
    // #(n)+1 is always a member, #(n) never.
    CHECK(set.members.back() == modulus + 1);
    // Every prime strictly between p_n and #(n)+1 (inclusive) is a totative.
    for (std::uint64_t p : oracle::primes_upto(modulus + 1)) {
      if (p <= engine.nth_prime(n)) continue;
      REQUIRE(std::binary_search(set.members.begin(), set.members.end(), p));
    }
  }
}

TEST_CASE("enumerate_totatives refuses primorials beyond the bound") {
  PrimeEngine engine;
  CHECK_THROWS_AS(pnt::enumerate_totatives(engine, 9), pnt::ResourceError);  // #(9) = 223092870 > 10^8
  pnt::EngineConfig small;
  small.totative_enumeration_bound = 1000;
  PrimeEngine tight(small);
  CHECK_NOTHROW(pnt::enumerate_totatives(tight, 4));
  CHECK_THROWS_AS(pnt::enumerate_totatives(tight, 5), pnt::ResourceError);
  CHECK_THROWS_AS(pnt::enumerate_totatives(engine, 0), pnt::IndexError);
}
