#pragma once

// Umbrella header.
#include "pnt/config.hpp"
#include "pnt/errors.hpp"
#include "pnt/exactnum.hpp"
#include "pnt/log_family.hpp"
#include "pnt/pnt_report.hpp"
#include "pnt/primality.hpp"
#include "pnt/prime_count.hpp"
#include "pnt/prime_engine.hpp"
#include "pnt/primorial.hpp"
#include "pnt/representation.hpp"
#include "pnt/sieve.hpp"
#include "pnt/theorem_checks.hpp"
#include "pnt/totative_estimator.hpp"
