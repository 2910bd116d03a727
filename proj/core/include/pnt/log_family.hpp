#pragma once

#include <array>
#include <optional>
#include <string_view>
#include <utility>
#include <vector>

#include "pnt/exactnum.hpp"
#include "pnt/prime_engine.hpp"
#include "pnt/representation.hpp"

namespace pnt {

enum class LogFamily { prime, primorial };

/// Which member of a family. Not every name exists in both families:
/// star_center is prime-only, hash_center and diamond are primorial-only.
enum class LogName { minus, plus, star_center, hash_center, star_blend, diamond, parametric };

struct LogVariant {
  LogFamily family;
  LogName name;
  friend bool operator==(const LogVariant&, const LogVariant&) = default;
};

/// The eleven variants: five prime-indexed, six primorial-indexed.
inline constexpr std::array<LogVariant, 11> kAllLogVariants{{
    {LogFamily::prime, LogName::minus},
    {LogFamily::prime, LogName::parametric},
    {LogFamily::prime, LogName::star_center},
    {LogFamily::prime, LogName::star_blend},
    {LogFamily::prime, LogName::plus},
    {LogFamily::primorial, LogName::minus},
    {LogFamily::primorial, LogName::parametric},
    {LogFamily::primorial, LogName::hash_center},
    {LogFamily::primorial, LogName::star_blend},
    {LogFamily::primorial, LogName::diamond},
    {LogFamily::primorial, LogName::plus},
}};

bool is_valid(LogVariant v) noexcept;
std::string_view to_string(LogFamily f) noexcept;
std::string_view to_string(LogName n) noexcept;
LogFamily parse_log_family(std::string_view text);  // throws DomainError

/// Exact argument of a variant: the positive rational A with variant(x) = ln A.
///
/// prime family (p = p_{n*(x)}, p⁻ the prime before p, p⁺ the prime after,
/// r* the prime-representation remainder):
///   minus        p⁻
///   plus         p⁺
///   star_center  p
///   star_blend   p⁻ · (1 + (p/p⁻ − 1)·r*)
///   parametric   p⁻ · a,  1 ≤ a ≤ p⁺/p⁻
///
/// primorial family (n = n'(x), r' the primorial-representation remainder):
///   minus        #(n−1)              (#(0) = 1)
///   plus         #(n+1)
///   hash_center  #(n)
///   star_blend   #(n−1) · (1 + (p_n − 1)·r')
///   diamond      #(n−1) · (n + r')
///   parametric   #(n−1) · a,  1 ≤ a ≤ p_n·p_{n+1}
///
/// Prime-family variants need a predecessor prime, so x ≥ 3 (DomainError at x = 2).
/// Parametric variants require `a`, checked against parametric_bounds.
Ratio log_argument(PrimeEngine& engine, const Natural& x, LogVariant v,
                   const std::optional<Ratio>& a = std::nullopt);

/// ln(log_argument(...)).
double eval_log(PrimeEngine& engine, const Natural& x, LogVariant v,
                const std::optional<Ratio>& a = std::nullopt);

double eval_prime_family(PrimeEngine& engine, const Natural& x, LogName name,
                         const std::optional<Ratio>& a = std::nullopt);
double eval_primorial_family(PrimeEngine& engine, const Natural& x, LogName name,
                             const std::optional<Ratio>& a = std::nullopt);

/// Every variant of one family at x from a single decomposition, in kAllLogVariants
/// order. The parametric variant is included only when `a` is given.
std::vector<std::pair<LogName, Ratio>> family_arguments(PrimeEngine& engine, const Natural& x, LogFamily family,
                                                        const std::optional<Ratio>& a = std::nullopt);

/// Admissible [lower, upper] range for a(x) in the parametric variant.
std::pair<Ratio, Ratio> parametric_bounds(PrimeEngine& engine, const Natural& x, LogFamily family);

}  // namespace pnt
