#pragma once

/**
 * @file genus0.hpp
 * @brief Counts of rational plane curves.
 *
 * All functions take the memo store explicitly and throw InvalidDegree for
 * d < 1.  Characteristic numbers are 0 off their dimension law:
 * R_d(a,b) needs a+b = 3d-1, NL_d(a,b) needs 3d-2, NP_d(a,b) needs 3d-3.
 */

#include "lowgenus/memo_store.hpp"
#include "lowgenus/rational.hpp"

namespace lowgenus::genus0 {

/// Irreducible rational degree-d curves through 3d-1 general points.
ExactRational rd(MemoStore& store, int d);

/// Rational degree-d curves through 3d-3 points with a node at a fixed point.
ExactRational npd(MemoStore& store, int d);

/// Rational curves through a points, tangent to b lines, with a node on a
/// fixed line: (d-1) R_d(a+1,b) - R_d(a,b+1)/2.  Not memoized.
ExactRational nl(MemoStore& store, int d, int a, int b);

/// R_d(a,b): through a general points and tangent to b general lines.
/// Each extra tangency is traded for an incidence plus reducible-boundary
/// corrections, descending in b down to rd().
ExactRational rchar(MemoStore& store, int d, int a, int b);

/// NP_d(a,b): node at a fixed point, through a points, tangent to b lines.
/// Nonzero values occur for d = 2 even though NP_2 = 0.
ExactRational npchar(MemoStore& store, int d, int a, int b);

}  // namespace lowgenus::genus0
