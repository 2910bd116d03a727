#include "pnt/log_family.hpp"

#include <string>

#include "pnt/errors.hpp"

namespace pnt {

namespace {

struct PrimeContext {
  Natural before;  // p⁻
  Natural center;  // p = p_{n*(x)}
  Natural after;   // p⁺
  Ratio r;
};

struct PrimorialContext {
  std::uint64_t n;
  Natural previous;  // #(n−1)
  Natural center;    // #(n)
  Natural next;      // #(n+1)
  Natural p_n;
  Natural p_next;
  Ratio r;
};

PrimeContext prime_context(PrimeEngine& engine, const Natural& x) {
  if (x < Natural(3))
    throw DomainError("prime-family log variants need x >= 3 (no prime precedes p_1 = 2)");
  Representation rep = decompose(Succession(engine, SuccessionKind::prime), x);
  Natural before = engine.prev_prime_before(rep.a_n);
  return {std::move(before), std::move(rep.a_n), std::move(rep.a_next), std::move(rep.r)};
}

PrimorialContext primorial_context(PrimeEngine& engine, const Natural& x) {
  Representation rep = decompose(Succession(engine, SuccessionKind::primorial), x);
  const std::uint64_t n = *rep.n;
  Natural p_n(engine.nth_prime(n));
  Natural p_next = rep.a_next / rep.a_n;
  Natural previous = rep.a_n / p_n;
  return {n, std::move(previous), std::move(rep.a_n), std::move(rep.a_next), std::move(p_n), std::move(p_next),
          std::move(rep.r)};
}

void require_in_bounds(const std::optional<Ratio>& a, const std::pair<Ratio, Ratio>& bounds) {
  if (!a) throw DomainError("parametric log variant needs a(x)");
  if (*a < bounds.first || *a > bounds.second)
    throw DomainError("a(x) = " + a->to_string() + " outside [" + bounds.first.to_string() + ", " +
                      bounds.second.to_string() + "]");
}

Ratio prime_argument(const PrimeContext& c, LogName name, const std::optional<Ratio>& a) {
  switch (name) {
    case LogName::minus: return Ratio(c.before);
    case LogName::plus: return Ratio(c.after);
    case LogName::star_center: return Ratio(c.center);
    case LogName::star_blend:
      return Ratio(c.before) * (Ratio(1) + (Ratio(c.center, c.before) - Ratio(1)) * c.r);
    case LogName::parametric:
      require_in_bounds(a, {Ratio(1), Ratio(c.after, c.before)});
      return Ratio(c.before) * *a;
    default: break;
  }
  throw DomainError("log variant '" + std::string(to_string(name)) + "' is not in the prime family");
}

Ratio primorial_argument(const PrimorialContext& c, LogName name, const std::optional<Ratio>& a) {
  switch (name) {
    case LogName::minus: return Ratio(c.previous);
    case LogName::plus: return Ratio(c.next);
    case LogName::hash_center: return Ratio(c.center);
    case LogName::star_blend: return Ratio(c.previous) * (Ratio(1) + Ratio(c.p_n - Natural(1)) * c.r);
    case LogName::diamond: return Ratio(c.previous) * (Ratio(c.n) + c.r);
    case LogName::parametric:
      require_in_bounds(a, {Ratio(1), Ratio(c.p_n * c.p_next)});
      return Ratio(c.previous) * *a;
    default: break;
  }
  throw DomainError("log variant '" + std::string(to_string(name)) + "' is not in the primorial family");
}

}  // namespace

bool is_valid(LogVariant v) noexcept {
  switch (v.name) {
    case LogName::star_center: return v.family == LogFamily::prime;
    case LogName::hash_center:
    case LogName::diamond: return v.family == LogFamily::primorial;
    default: return true;
  }
}

std::string_view to_string(LogFamily f) noexcept { return f == LogFamily::prime ? "prime" : "primorial"; }

std::string_view to_string(LogName n) noexcept {
  switch (n) {
    case LogName::minus: return "minus";
    case LogName::plus: return "plus";
    case LogName::star_center: return "star_center";
    case LogName::hash_center: return "hash_center";
    case LogName::star_blend: return "star_blend";
    case LogName::diamond: return "diamond";
    case LogName::parametric: return "parametric";
  }
  return "?";
}

LogFamily parse_log_family(std::string_view text) {
  if (text == "prime") return LogFamily::prime;
  if (text == "primorial") return LogFamily::primorial;
  throw DomainError("unknown log family '" + std::string(text) + "' (expected prime|primorial)");
}

Ratio log_argument(PrimeEngine& engine, const Natural& x, LogVariant v, const std::optional<Ratio>& a) {
  if (v.family == LogFamily::prime) return prime_argument(prime_context(engine, x), v.name, a);
  return primorial_argument(primorial_context(engine, x), v.name, a);
}

double eval_log(PrimeEngine& engine, const Natural& x, LogVariant v, const std::optional<Ratio>& a) {
  return ln_ratio(log_argument(engine, x, v, a));
}

double eval_prime_family(PrimeEngine& engine, const Natural& x, LogName name, const std::optional<Ratio>& a) {
  return eval_log(engine, x, {LogFamily::prime, name}, a);
}

double eval_primorial_family(PrimeEngine& engine, const Natural& x, LogName name,
                             const std::optional<Ratio>& a) {
  return eval_log(engine, x, {LogFamily::primorial, name}, a);
}

std::vector<std::pair<LogName, Ratio>> family_arguments(PrimeEngine& engine, const Natural& x, LogFamily family,
                                                        const std::optional<Ratio>& a) {
  std::vector<std::pair<LogName, Ratio>> out;
  if (family == LogFamily::prime) {
    const auto c = prime_context(engine, x);
    for (const auto& v : kAllLogVariants) {
      if (v.family != family || (v.name == LogName::parametric && !a)) continue;
      out.emplace_back(v.name, prime_argument(c, v.name, a));
    }
    return out;
  }
  const auto c = primorial_context(engine, x);
  for (const auto& v : kAllLogVariants) {
    if (v.family != family || (v.name == LogName::parametric && !a)) continue;
    out.emplace_back(v.name, primorial_argument(c, v.name, a));
  }
  return out;
}

std::pair<Ratio, Ratio> parametric_bounds(PrimeEngine& engine, const Natural& x, LogFamily family) {
  if (family == LogFamily::prime) {
    const auto c = prime_context(engine, x);
    return {Ratio(1), Ratio(c.after, c.before)};
  }
  const auto c = primorial_context(engine, x);
  return {Ratio(1), Ratio(c.p_n * c.p_next)};
}

}  // namespace pnt
