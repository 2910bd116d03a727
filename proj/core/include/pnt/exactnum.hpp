#pragma once

#include <compare>
#include <concepts>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <type_traits>

#include <gmpxx.h>

namespace pnt {

/// Arbitrary-precision non-negative integer.
///
/// Thin value wrapper around GMP that enforces non-negativity: subtraction
/// that would go below zero throws DomainError instead of wrapping.
class Natural {
 public:
  Natural() = default;
  Natural(std::uint64_t v);  // NOLINT(google-explicit-constructor)
  explicit Natural(const mpz_class& v);
  explicit Natural(mpz_class&& v);

  /// Parses a decimal literal or the scientific short form `<d>e<k>` (e.g. `1e25`).
  static Natural parse(std::string_view text);

  /// 10^k.
  static Natural pow10(unsigned k);

  const mpz_class& mpz() const noexcept { return value_; }

  bool is_zero() const noexcept { return sgn(value_) == 0; }
  bool fits_u64() const noexcept;
  std::uint64_t to_u64() const;  // throws RangeError when it does not fit
  double to_double() const noexcept { return value_.get_d(); }
  std::size_t bit_length() const noexcept;
  std::string to_string() const { return value_.get_str(); }

  Natural pow(unsigned e) const;

  Natural& operator+=(const Natural& o);
  Natural& operator-=(const Natural& o);
  Natural& operator*=(const Natural& o);
  Natural& operator/=(const Natural& o);
  Natural& operator%=(const Natural& o);

  friend Natural operator+(Natural a, const Natural& b) { return a += b; }
  friend Natural operator-(Natural a, const Natural& b) { return a -= b; }
  friend Natural operator*(Natural a, const Natural& b) { return a *= b; }
  friend Natural operator/(Natural a, const Natural& b) { return a /= b; }
  friend Natural operator%(Natural a, const Natural& b) { return a %= b; }

  friend bool operator==(const Natural& a, const Natural& b) noexcept {
    return cmp(a.value_, b.value_) == 0;
  }
  friend std::strong_ordering operator<=>(const Natural& a, const Natural& b) noexcept {
    const int c = cmp(a.value_, b.value_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

 private:
  mpz_class value_{0};
};

Natural gcd(const Natural& a, const Natural& b);

std::ostream& operator<<(std::ostream& os, const Natural& n);

/// Exact signed rational, always in lowest terms with a positive denominator.
class Ratio {
 public:
  Ratio() = default;
  Ratio(const Natural& n);  // NOLINT(google-explicit-constructor)
  template <std::integral I>
  Ratio(I n)  // NOLINT(google-explicit-constructor)
      : value_(static_cast<std::conditional_t<std::is_signed_v<I>, long, unsigned long>>(n)) {}
  Ratio(const Natural& num, const Natural& den);  // throws DomainError on den = 0
  explicit Ratio(const mpq_class& q);

  /// Parses `p/q`, `p`, or `-p/q`.
  static Ratio parse(std::string_view text);

  const mpq_class& mpq() const noexcept { return value_; }

  int sign() const noexcept { return sgn(value_); }
  Natural numerator() const;    // |numerator|
  Natural denominator() const;
  bool is_integer() const noexcept;
  double to_double() const noexcept { return value_.get_d(); }
  /// Always `p/q`, including integers (`5/1`) and zero (`0/1`).
  std::string to_string() const;

  Ratio& operator+=(const Ratio& o);
  Ratio& operator-=(const Ratio& o);
  Ratio& operator*=(const Ratio& o);
  Ratio& operator/=(const Ratio& o);  // throws DomainError on division by zero

  friend Ratio operator+(Ratio a, const Ratio& b) { return a += b; }
  friend Ratio operator-(Ratio a, const Ratio& b) { return a -= b; }
  friend Ratio operator*(Ratio a, const Ratio& b) { return a *= b; }
  friend Ratio operator/(Ratio a, const Ratio& b) { return a /= b; }
  friend Ratio operator-(Ratio a) {
    a.value_ = -a.value_;
    return a;
  }

  friend bool operator==(const Ratio& a, const Ratio& b) noexcept {
    return cmp(a.value_, b.value_) == 0;
  }
  friend std::strong_ordering operator<=>(const Ratio& a, const Ratio& b) noexcept {
    const int c = cmp(a.value_, b.value_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

 private:
  mpq_class value_{0};
};

std::ostream& operator<<(std::ostream& os, const Ratio& q);

/// Natural logarithm of a big integer.
///
/// Values that are exactly representable as a double go straight to std::log;
/// larger values are split as m·2^k with m in [0.5, 1) so the relative error
/// stays at double precision regardless of magnitude. Throws DomainError on 0.
double ln_natural(const Natural& x);

/// ln(numerator) − ln(denominator). Throws DomainError unless q > 0.
double ln_ratio(const Ratio& q);

}  // namespace pnt
