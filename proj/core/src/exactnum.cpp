#include "pnt/exactnum.hpp"

#include <cctype>
#include <cmath>
#include <limits>
#include <numbers>
#include <ostream>

#include "pnt/errors.hpp"

namespace pnt {

namespace {

mpz_class from_u64(std::uint64_t v) {
  static_assert(sizeof(unsigned long) == sizeof(std::uint64_t));
  return mpz_class(static_cast<unsigned long>(v));
}

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

}  // namespace

Natural::Natural(std::uint64_t v) : value_(from_u64(v)) {}

Natural::Natural(const mpz_class& v) : value_(v) {
  if (sgn(value_) < 0) throw DomainError("Natural: negative value " + v.get_str());
}

Natural::Natural(mpz_class&& v) : value_(std::move(v)) {
  if (sgn(value_) < 0) throw DomainError("Natural: negative value " + value_.get_str());
}

Natural Natural::parse(std::string_view text) {
  const auto e = text.find_first_of("eE");
  if (e == std::string_view::npos) {
    if (!all_digits(text)) throw DomainError("not a natural number: '" + std::string(text) + "'");
    return Natural(mpz_class(std::string(text), 10));
  }
  const auto mantissa = text.substr(0, e);
  const auto exponent = text.substr(e + 1);
  if (!all_digits(mantissa) || !all_digits(exponent) || exponent.size() > 4)
    throw DomainError("not a natural number: '" + std::string(text) + "'");
  const auto k = static_cast<unsigned>(std::stoul(std::string(exponent)));
  return Natural(mpz_class(std::string(mantissa), 10)) * pow10(k);
}

Natural Natural::pow10(unsigned k) {
  mpz_class r;
  mpz_ui_pow_ui(r.get_mpz_t(), 10, k);
  return Natural(std::move(r));
}

bool Natural::fits_u64() const noexcept { return mpz_fits_ulong_p(value_.get_mpz_t()) != 0; }

std::uint64_t Natural::to_u64() const {
  if (!fits_u64()) throw RangeError("value does not fit in 64 bits: " + to_string());
  return mpz_get_ui(value_.get_mpz_t());
}

std::size_t Natural::bit_length() const noexcept {
  return is_zero() ? 0 : mpz_sizeinbase(value_.get_mpz_t(), 2);
}

Natural Natural::pow(unsigned e) const {
  mpz_class r;
  mpz_pow_ui(r.get_mpz_t(), value_.get_mpz_t(), e);
  return Natural(std::move(r));
}

Natural& Natural::operator+=(const Natural& o) {
  value_ += o.value_;
  return *this;
}

Natural& Natural::operator-=(const Natural& o) {
  if (cmp(value_, o.value_) < 0)
    throw DomainError("Natural subtraction underflow: " + to_string() + " - " + o.to_string());
  value_ -= o.value_;
  return *this;
}

Natural& Natural::operator*=(const Natural& o) {
  value_ *= o.value_;
  return *this;
}

Natural& Natural::operator/=(const Natural& o) {
  if (o.is_zero()) throw DomainError("Natural division by zero");
  mpz_fdiv_q(value_.get_mpz_t(), value_.get_mpz_t(), o.value_.get_mpz_t());
  return *this;
}

Natural& Natural::operator%=(const Natural& o) {
  if (o.is_zero()) throw DomainError("Natural modulo by zero");
  mpz_fdiv_r(value_.get_mpz_t(), value_.get_mpz_t(), o.value_.get_mpz_t());
  return *this;
}

Natural gcd(const Natural& a, const Natural& b) {
  mpz_class r;
  mpz_gcd(r.get_mpz_t(), a.mpz().get_mpz_t(), b.mpz().get_mpz_t());
  return Natural(std::move(r));
}

std::ostream& operator<<(std::ostream& os, const Natural& n) { return os << n.to_string(); }

Ratio::Ratio(const Natural& n) : value_(n.mpz()) {}

Ratio::Ratio(const Natural& num, const Natural& den) {
  if (den.is_zero()) throw DomainError("Ratio with zero denominator");
  value_ = mpq_class(num.mpz(), den.mpz());
  value_.canonicalize();
}

Ratio::Ratio(const mpq_class& q) : value_(q) {
  if (sgn(value_.get_den()) == 0) throw DomainError("Ratio with zero denominator");
  value_.canonicalize();
}

Ratio Ratio::parse(std::string_view text) {
  bool negative = false;
  if (!text.empty() && text.front() == '-') {
    negative = true;
    text.remove_prefix(1);
  }
  const auto slash = text.find('/');
  Ratio q = slash == std::string_view::npos
                ? Ratio(Natural::parse(text))
                : Ratio(Natural::parse(text.substr(0, slash)), Natural::parse(text.substr(slash + 1)));
  return negative ? -q : q;
}

Natural Ratio::numerator() const { return Natural(mpz_class(abs(value_.get_num()))); }

Natural Ratio::denominator() const { return Natural(value_.get_den()); }

bool Ratio::is_integer() const noexcept { return cmp(value_.get_den(), 1) == 0; }

std::string Ratio::to_string() const {
  return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

Ratio& Ratio::operator+=(const Ratio& o) {
  value_ += o.value_;
  return *this;
}

Ratio& Ratio::operator-=(const Ratio& o) {
  value_ -= o.value_;
  return *this;
}

Ratio& Ratio::operator*=(const Ratio& o) {
  value_ *= o.value_;
  return *this;
}

Ratio& Ratio::operator/=(const Ratio& o) {
  if (o.sign() == 0) throw DomainError("Ratio division by zero");
  value_ /= o.value_;
  return *this;
}

std::ostream& operator<<(std::ostream& os, const Ratio& q) { return os << q.to_string(); }

double ln_natural(const Natural& x) {
  if (x.is_zero()) throw DomainError("ln of zero");
  if (x.bit_length() <= std::numeric_limits<double>::digits) return std::log(x.to_double());
  long exp2 = 0;
  const double mantissa = mpz_get_d_2exp(&exp2, x.mpz().get_mpz_t());
  return std::log(mantissa) + static_cast<double>(exp2) * std::numbers::ln2;
}

double ln_ratio(const Ratio& q) {
  if (q.sign() <= 0) throw DomainError("ln of non-positive ratio " + q.to_string());
  return ln_natural(q.numerator()) - ln_natural(q.denominator());
}

}  // namespace pnt
