#pragma once

#include <utility>

#include "pnt/exactnum.hpp"
#include "pnt/prime_engine.hpp"

namespace pnt {

inline constexpr double kEulerGamma = 0.577215664901533;
inline constexpr double kExpEulerGamma = 1.781072417990198;  // e^γ

/// t*(x) = 1 + (p_{n'+1} − 2)·r'(x).
Ratio t_star(PrimeEngine& engine, const Natural& x);

/// tot*(x) = tot(n'(x)) · t*(x), the totative-count estimate. x ≥ 2.
Ratio tot_star(PrimeEngine& engine, const Natural& x);

/// f(x) = ∏_{i ≤ n'} p_i/(p_i − 1) and g(x) = f(x) · p_{n'+1}/(p_{n'+1} − 1), exact.
std::pair<Ratio, Ratio> mertens_products_exact(PrimeEngine& engine, const Natural& x);

/// mertens_products_exact converted to double.
std::pair<double, double> mertens_products(PrimeEngine& engine, const Natural& x);

/// y(x) = p_{n'} · (1 + (p_{n'+1}/p_{n'} − 1)·r'(x)): prime values blended with
/// the primorial remainder. Always lies in [p_{n'}, p_{n'+1}).
Ratio y_of_x(PrimeEngine& engine, const Natural& x);

struct EstimatorBundle {
  Natural x;
  Ratio t_star;
  Ratio tot_star;
  Ratio y_val;
  double f_val = 0;
  double g_val = 0;
  double f_circ = 0;  // x / tot*(x)
  double g_circ = 0;  // e^γ · ln y(x)
  double h_circ = 0;  // tot*(x) · e^γ · ln y(x), asymptotic to x
};

EstimatorBundle estimator_bundle(PrimeEngine& engine, const Natural& x);

}  // namespace pnt
