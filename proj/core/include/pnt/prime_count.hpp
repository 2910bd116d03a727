#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string_view>

#include "pnt/exactnum.hpp"

namespace pnt {

/// π(x) by the Lucy_Hedgehog recurrence over the O(sqrt x) distinct values
/// floor(x/k): O(x^{3/4}) time, O(sqrt x) memory.
std::uint64_t count_primes_combinatorial(std::uint64_t x);

/// Published π(10^k), k = 1..25.
inline constexpr std::array<std::string_view, 25> kPiPowersOfTen{
    "4",
    "25",
    "168",
    "1229",
    "9592",
    "78498",
    "664579",
    "5761455",
    "50847534",
    "455052511",
    "4118054813",
    "37607912018",
    "346065536839",
    "3204941750802",
    "29844570422669",
    "279238341033925",
    "2623557157654233",
    "24739954287740860",
    "234047667276344607",
    "2220819602560918840",
    "21127269486018731928",
    "201467286689315906290",
    "1925320391606803968923",
    "18435599767349200867866",
    "176846309399143769411680",
};

/// π(10^exponent) from the embedded constants; nullopt outside 1..25.
std::optional<Natural> checkpoint_pi(unsigned exponent);

/// k when x = 10^k with 1 ≤ k ≤ 25.
std::optional<unsigned> checkpoint_exponent(const Natural& x);

}  // namespace pnt
