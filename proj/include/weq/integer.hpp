#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace weq {

/// Exact arbitrary-precision integer used for letters and coefficients.
using Int = boost::multiprecision::cpp_int;

/// Exact rational, used internally for division over the fraction field.
using Rat = boost::multiprecision::cpp_rational;

} // namespace weq
