#pragma once

#include "lowgenus/rational.hpp"

namespace lowgenus {

// C(n,k) for 0 <= k <= n, and 0 for every other (n,k).  The recursions rely
// on out-of-range terms vanishing rather than being filtered.
BigInt binom(long n, long k);

// Exact base^exp; negative exponents give reciprocals.
// Throws ZeroToNegativePower for base 0 and exp < 0.
ExactRational ipow(long base, long exp);

// n! for n >= 0; throws std::domain_error for n < 0.
BigInt factorial(long n);

}  // namespace lowgenus
