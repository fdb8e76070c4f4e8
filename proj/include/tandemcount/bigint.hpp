#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace tandemcount {

/// Exact integer type for walk counts and weights. Coefficients exceed 64
/// bits near n = 40, so everything countable is arbitrary precision.
using BigInt = boost::multiprecision::cpp_int;

/// log(x) for values far beyond double range (p_n at n = 300 has ~650 bits).
double bigint_log(const BigInt& x);

}  // namespace tandemcount
