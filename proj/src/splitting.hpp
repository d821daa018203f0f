#pragma once

#include "lowgenus/errors.hpp"
#include "lowgenus/rational.hpp"

namespace lowgenus::detail {

inline void require_degree(int d, int minimum = 1) {
  if (d < minimum) throw InvalidDegree(d, minimum);
}

inline ExactRational fraction(long num, long den) { return ExactRational(BigInt(num), BigInt(den)); }

// Sums term(a_i, b_i, a_j, b_j) over the ways of distributing a_total points
// and b_total lines between two components that need dim_i and dim_j
// conditions respectively.  Assignments with a negative count are skipped.
template <typename Term>
ExactRational sum_splittings(int dim_i, int dim_j, int a_total, int b_total, Term&& term) {
  ExactRational sum;
  if (dim_i < 0 || dim_j < 0 || a_total + b_total != dim_i + dim_j) return sum;
  for (int a_i = 0; a_i <= dim_i; ++a_i) {
    const int b_i = dim_i - a_i;
    const int a_j = a_total - a_i;
    const int b_j = b_total - b_i;
    if (a_j < 0 || b_j < 0) continue;
    sum += term(a_i, b_i, a_j, b_j);
  }
  return sum;
}

}  // namespace lowgenus::detail
