#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace hdeg {

// Exact integer used for all counts, polynomial coefficients and ranks.
// Values stay small in practice but e.g. D_s ladders on 64-vertex graphs
// exceed 64 bits, so everything user-facing is arbitrary precision.
using BigInt = boost::multiprecision::cpp_int;

// Binomial coefficient with the usual convention C(n,k) = 0 for k < 0 or
// k > n.  n must be >= 0.
BigInt binomial(long long n, long long k);

}  // namespace hdeg
