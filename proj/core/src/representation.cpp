#include "pnt/representation.hpp"

#include "pnt/errors.hpp"
#include "pnt/primorial.hpp"

namespace pnt {

std::string_view to_string(SuccessionKind kind) noexcept {
  return kind == SuccessionKind::prime ? "prime" : "primorial";
}

SuccessionKind parse_succession(std::string_view text) {
  if (text == "prime") return SuccessionKind::prime;
  if (text == "primorial") return SuccessionKind::primorial;
  throw DomainError("unknown succession '" + std::string(text) + "' (expected prime|primorial)");
}

Natural Succession::element(std::uint64_t n) const {
  if (n == 0) throw IndexError("succession index must be >= 1");
  return kind_ == SuccessionKind::prime ? Natural(engine_->nth_prime(n)) : primorial(*engine_, n);
}

Ratio multiplicative_fraction(const Natural& a_n, const Natural& a_next, const Ratio& r) {
  return Ratio(1) + (Ratio(a_next, a_n) - Ratio(1)) * r;
}

namespace {

Representation make(std::optional<std::uint64_t> n, Natural a_n, Natural a_next, const Natural& x) {
  Ratio r(x - a_n, a_next - a_n);
  Ratio s = multiplicative_fraction(a_n, a_next, r);
  return Representation{n, std::move(a_n), std::move(a_next), std::move(r), std::move(s)};
}

}  // namespace

Representation decompose(const Succession& succ, const Natural& x) {
  if (x < succ.first())
    throw DomainError("x = " + x.to_string() + " lies below the first succession element 2");

  PrimeEngine& engine = succ.engine();
  if (succ.kind() == SuccessionKind::prime) {
    auto [p, q] = engine.neighbor_primes(x);
    std::optional<std::uint64_t> n;
    if (p.fits_u64()) {
      const auto table = engine.table();
      if (p.to_u64() <= table->bound()) n = table->index_of(p.to_u64());
    }
    return make(n, std::move(p), std::move(q), x);
  }

  // Gallop along #(1), #(2), … until the next primorial overshoots x.
  std::uint64_t n = 1;
  Natural a_n(2);
  for (;;) {
    const auto snapshot = engine.ensure_count(n + 1);
    Natural a_next = a_n * Natural(snapshot->nth(n + 1));
    if (x < a_next) return make(n, std::move(a_n), std::move(a_next), x);
    a_n = std::move(a_next);
    ++n;
  }
}

Ratio compose(const Succession& succ, std::uint64_t n, const Ratio& r) {
  if (n == 0) throw DomainError("compose: n must be >= 1");
  if (r < Ratio(0) || r >= Ratio(1)) throw DomainError("compose: r = " + r.to_string() + " outside [0, 1)");
  const Natural a_n = succ.element(n);
  const Natural a_next = succ.element(n + 1);
  return Ratio(a_next) * r + Ratio(a_n) * (Ratio(1) - r);
}

std::string format_representation(const Representation& rep) {
  std::string out = "n=";
  out += rep.n ? std::to_string(*rep.n) : std::string("?");
  out += " a_n=" + rep.a_n.to_string();
  out += " a_next=" + rep.a_next.to_string();
  out += " r=" + rep.r.to_string();
  out += " s=" + rep.s.to_string();
  return out;
}

}  // namespace pnt
