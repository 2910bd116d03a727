#include "pnt/errors.hpp"

// Out-of-line home for the error hierarchy; keeps the vtables in one TU.
