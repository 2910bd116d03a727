#include "pnt/theorem_checks.hpp"

#include <cmath>
#include <limits>
#include <sstream>
#include <vector>

#include "pnt/errors.hpp"
#include "pnt/log_family.hpp"
#include "pnt/primorial.hpp"
#include "pnt/sieve.hpp"
#include "pnt/totative_estimator.hpp"

namespace pnt {

namespace {

using u64 = std::uint64_t;
using Clock = std::chrono::steady_clock;

// Kahan-Babuska summation.
class CompensatedSum {
 public:
  void add(double v) {
    const double t = sum_ + v;
    if (std::abs(sum_) >= std::abs(v))
      carry_ += (sum_ - t) + v;
    else
      carry_ += (v - t) + sum_;
    sum_ = t;
  }
  double value() const { return sum_ + carry_; }

 private:
  double sum_ = 0;
  double carry_ = 0;
};

void record(CheckReport& report, bool ok, const Natural& input) {
  ++report.cases;
  if (ok) return;
  ++report.violations;
  if (!report.witness) report.witness = input;
}

// Floating counterpart of an exact bracket; slack covers the rounding of ln.
bool within(double lo, double v, double hi) {
  const double slack = 8 * std::numeric_limits<double>::epsilon() * std::max({1.0, std::abs(lo), std::abs(hi)});
  return lo - slack <= v && v <= hi + slack;
}

}  // namespace

std::string format_report(const CheckReport& report) {
  std::ostringstream os;
  os << report.check_name << ": range=[" << report.range_lo << ", " << report.range_hi << "]"
     << " cases=" << report.cases << " violations=" << report.violations;
  if (report.witness) os << " witness=" << *report.witness;
  os << " elapsed=" << report.elapsed.count() << "s";
  return os.str();
}

CheckReport check_bertrand(PrimeEngine& engine, u64 max_n) {
  if (max_n == 0) throw DomainError("check_bertrand: max_n must be >= 1");
  if (nth_prime_upper_bound(max_n + 2) > engine.config().sieve_threshold)
    throw ResourceError("check_bertrand: p_" + std::to_string(max_n + 2) + " may exceed sieve_threshold " +
                        std::to_string(engine.config().sieve_threshold));
  const auto start = Clock::now();
  const auto table = engine.ensure_count(max_n + 2);
  CheckReport report{"bertrand", Natural(1), Natural(max_n), 0, 0, std::nullopt, {}};
  for (u64 n = 1; n <= max_n; ++n) {
    const u64 p = table->nth(n);
    const u64 next = table->nth(n + 1);
    const u64 next2 = table->nth(n + 2);
    const bool postulate = next <= 2 * p - 1;
    const bool log_gap = std::log(static_cast<double>(next2) / static_cast<double>(p)) < 2.0;
    record(report, postulate && log_gap, Natural(n));
  }
  report.elapsed = Clock::now() - start;
  return report;
}

SuzukiResult suzuki_threshold(PrimeEngine& engine, u64 m, u64 scan_limit) {
  if (m == 0) throw DomainError("suzuki_threshold: m must be >= 1");
  if (scan_limit == 0) throw DomainError("suzuki_threshold: scan_limit must be >= 1");
  const auto start = Clock::now();
  const auto table = engine.ensure_count(scan_limit + 1);

  std::vector<Natural> primorials;  // primorials[n-1] = #(n)
  primorials.reserve(scan_limit);
  Natural acc(1);
  u64 last_failure = 0;
  for (u64 n = 1; n <= scan_limit; ++n) {
    acc *= Natural(table->nth(n));
    primorials.push_back(acc);
    if (!(Natural(table->nth(n + 1)).pow(static_cast<unsigned>(m)) < acc)) last_failure = n;
  }
  if (last_failure == scan_limit)
    throw NotFoundError("suzuki_threshold: p_{n+1}^" + std::to_string(m) + " < #(n) still fails at n = " +
                        std::to_string(scan_limit));

  SuzukiResult result;
  result.threshold = last_failure + 1;
  result.log_form = CheckReport{"suzuki_log_form(m=" + std::to_string(m) + ")", Natural(result.threshold),
                                Natural(scan_limit), 0, 0, std::nullopt, {}};
  const double bound = 1.0 / static_cast<double>(m);
  for (u64 n = result.threshold; n <= scan_limit; ++n) {
    const double ratio = std::log(static_cast<double>(table->nth(n + 1))) / ln_natural(primorials[n - 1]);
    record(result.log_form, ratio < bound, Natural(n));
  }
  result.log_form.elapsed = Clock::now() - start;
  return result;
}

double mertens_ratio(PrimeEngine& engine, u64 x) {
  if (x < 2) throw DomainError("mertens_ratio requires x >= 2");
  if (x > engine.config().sieve_threshold)
    throw ResourceError("mertens_ratio: x = " + std::to_string(x) + " exceeds sieve_threshold");
  CompensatedSum log_product;
  for_each_prime(
      2, x, [&](u64 p) { log_product.add(-std::log1p(-1.0 / static_cast<double>(p))); },
      engine.config().segment_size);
  return std::exp(log_product.value()) / (kExpEulerGamma * std::log(static_cast<double>(x)));
}

CheckReport check_squeeze_brackets(PrimeEngine& engine, u64 samples, const Natural& x_max, u64 seed) {
  if (samples == 0) throw DomainError("check_squeeze_brackets: samples must be >= 1");
  if (x_max < Natural(3)) throw DomainError("check_squeeze_brackets: x_max must be >= 3");
  const auto start = Clock::now();
  CheckReport report{"squeeze", Natural(3), x_max, 0, 0, std::nullopt, {}};

  gmp_randclass rng(gmp_randinit_mt);
  rng.seed(static_cast<unsigned long>(seed));
  const mpz_class span = x_max.mpz() - 2;  // draws 0..x_max-3

  for (u64 i = 0; i < samples; ++i) {
    const Natural x = i == 0 ? x_max : Natural(mpz_class(rng.get_z_range(span) + 3));
    const Ratio xr(x);
    const double ln_x = ln_natural(x);
    bool ok = true;

    for (LogFamily family : {LogFamily::prime, LogFamily::primorial}) {
      const auto args = family_arguments(engine, x, family);
      const Ratio* lo = nullptr;
      const Ratio* hi = nullptr;
      for (const auto& [name, arg] : args) {
        if (name == LogName::minus) lo = &arg;
        if (name == LogName::plus) hi = &arg;
      }
      const double ln_lo = ln_ratio(*lo);
      const double ln_hi = ln_ratio(*hi);

      auto check = [&](const Ratio& arg) {
        ok = ok && *lo <= arg && arg <= *hi && within(ln_lo, ln_ratio(arg), ln_hi);
      };
      for (const auto& [name, arg] : args) check(arg);

      const auto [a_lo, a_hi] = parametric_bounds(engine, x, family);
      for (const Ratio& a : {a_lo, a_hi, (a_lo + a_hi) / Ratio(2)})
        check(log_argument(engine, x, {family, LogName::parametric}, a));

      ok = ok && *lo <= xr && xr <= *hi && within(ln_lo, ln_x, ln_hi);
    }

    const auto [f, g] = mertens_products_exact(engine, x);
    const Ratio f_circ = xr / tot_star(engine, x);
    record(report, ok && f <= f_circ && f_circ < g, x);
  }
  report.elapsed = Clock::now() - start;
  return report;
}

}  // namespace pnt
