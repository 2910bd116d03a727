#include "pnt/totative_estimator.hpp"

#include "pnt/errors.hpp"
#include "pnt/primorial.hpp"
#include "pnt/representation.hpp"

namespace pnt {

namespace {

struct PrimorialPosition {
  std::uint64_t n;
  Natural p_n;
  Natural p_next;
  Ratio r;
};

PrimorialPosition locate(PrimeEngine& engine, const Natural& x) {
  const Representation rep = decompose(Succession(engine, SuccessionKind::primorial), x);
  const std::uint64_t n = *rep.n;
  return {n, Natural(engine.nth_prime(n)), rep.a_next / rep.a_n, rep.r};
}

Ratio t_star_at(const PrimorialPosition& pos) {
  return Ratio(1) + Ratio(pos.p_next - Natural(2)) * pos.r;
}

}  // namespace

Ratio t_star(PrimeEngine& engine, const Natural& x) { return t_star_at(locate(engine, x)); }

Ratio tot_star(PrimeEngine& engine, const Natural& x) {
  const auto pos = locate(engine, x);
  return Ratio(totative_count(engine, pos.n)) * t_star_at(pos);
}

std::pair<Ratio, Ratio> mertens_products_exact(PrimeEngine& engine, const Natural& x) {
  const auto pos = locate(engine, x);
  const auto table = engine.ensure_count(pos.n + 1);
  Ratio f(1);
  for (std::uint64_t i = 1; i <= pos.n; ++i) {
    const std::uint64_t p = table->nth(i);
    f *= Ratio(Natural(p), Natural(p - 1));
  }
  Ratio g = f * Ratio(pos.p_next, pos.p_next - Natural(1));
  return {std::move(f), std::move(g)};
}

std::pair<double, double> mertens_products(PrimeEngine& engine, const Natural& x) {
  const auto [f, g] = mertens_products_exact(engine, x);
  return {f.to_double(), g.to_double()};
}

Ratio y_of_x(PrimeEngine& engine, const Natural& x) {
  const auto pos = locate(engine, x);
  return Ratio(pos.p_n) * (Ratio(1) + (Ratio(pos.p_next, pos.p_n) - Ratio(1)) * pos.r);
}

EstimatorBundle estimator_bundle(PrimeEngine& engine, const Natural& x) {
  const auto pos = locate(engine, x);
  EstimatorBundle b;
  b.x = x;
  b.t_star = t_star_at(pos);
  b.tot_star = Ratio(totative_count(engine, pos.n)) * b.t_star;
  b.y_val = Ratio(pos.p_n) * (Ratio(1) + (Ratio(pos.p_next, pos.p_n) - Ratio(1)) * pos.r);
  const auto [f, g] = mertens_products_exact(engine, x);
  b.f_val = f.to_double();
  b.g_val = g.to_double();
  b.f_circ = (Ratio(x) / b.tot_star).to_double();
  b.g_circ = kExpEulerGamma * ln_ratio(b.y_val);
  b.h_circ = b.tot_star.to_double() * b.g_circ;
  return b;
}

}  // namespace pnt
