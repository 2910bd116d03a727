#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <string>

#include "pnt/exactnum.hpp"
#include "pnt/prime_engine.hpp"

namespace pnt {

/// Outcome of scanning a proved statement over a finite range. Any nonzero
/// violation count means an implementation defect, not a counterexample.
struct CheckReport {
  std::string check_name;
  Natural range_lo;
  Natural range_hi;
  std::uint64_t cases = 0;
  std::uint64_t violations = 0;
  std::optional<Natural> witness;  // first violating input
  std::chrono::duration<double> elapsed{};
};

std::string format_report(const CheckReport& report);

/// p_{n+1} ≤ 2p_n − 1 and ln(p_{n+2}/p_n) < 2 for n = 1..max_n.
/// Throws ResourceError when p_{max_n+2} may exceed the sieve threshold.
CheckReport check_bertrand(PrimeEngine& engine, std::uint64_t max_n);

/// Empirical threshold for p_{n+1}^m < #(n).
struct SuzukiResult {
  std::uint64_t threshold = 0;  // smallest N with the inequality on every n in [N, scan_limit]
  CheckReport log_form;         // ln p_{n+1} / ln #(n) < 1/m on the same range
};

/// Exact big-integer scan of n = 1..scan_limit. Throws NotFoundError when the
/// inequality fails at n = scan_limit, DomainError for m = 0.
SuzukiResult suzuki_threshold(PrimeEngine& engine, std::uint64_t m, std::uint64_t scan_limit);

/// ∏_{p ≤ x} p/(p−1) ÷ (e^γ ln x), with compensated summation of the log factors.
/// x ≥ 2; throws ResourceError above the sieve threshold.
double mertens_ratio(PrimeEngine& engine, std::uint64_t x);

inline constexpr std::uint64_t kDefaultSqueezeSeed = 20231101;

/// Random-sample squeeze suite. The first sample is x_max itself, the rest are
/// uniform in [3, x_max]. Each sample checks, on exact ln-arguments:
///   log⁻ ≤ every prime-family variant ≤ log⁺ (parametric at a ∈ {1, mid, max}),
///   log₋ ≤ every primorial-family variant ≤ log₊ (same),
///   ln x inside both brackets, and f(x) ≤ x/tot*(x) < g(x);
/// plus agreement of the double-precision values with that ordering.
CheckReport check_squeeze_brackets(PrimeEngine& engine, std::uint64_t samples, const Natural& x_max,
                                   std::uint64_t seed = kDefaultSqueezeSeed);

}  // namespace pnt
