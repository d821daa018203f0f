#pragma once

#include "lowgenus/memo_store.hpp"
#include "lowgenus/rational.hpp"

namespace lowgenus::genus1 {

/// Irreducible elliptic degree-d curves through 3d general points.  E_1 = 0
/// is the only seed; E_2 = 0 falls out of the recursion.
ExactRational ed(MemoStore& store, int d);

/// E_d(a,b) for a + b = 3d, 0 otherwise.
ExactRational echar(MemoStore& store, int d, int a, int b);

/// J_d(a,b) = C(d-1,2) R_d(a,b) + 2b NL_d(a,b-1) + 4 C(b,2) NP_d(a,b-2):
/// characteristic numbers of elliptic curves with a fixed generic j-invariant
/// (a + b = 3d - 1).  Enumerative only for d >= 3.
ExactRational jchar(MemoStore& store, int d, int a, int b);

enum class JClass { Generic, J0, J1728 };

/// jchar() scaled for the extra automorphisms at j = 0 (1/3) and j = 1728 (1/2).
ExactRational jchar_special(MemoStore& store, JClass j_class, int d, int a, int b);

inline bool fixed_j_is_enumerative(int d) { return d >= 3; }

}  // namespace lowgenus::genus1
