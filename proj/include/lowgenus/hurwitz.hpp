#pragma once

#include <map>

#include "lowgenus/memo_store.hpp"
#include "lowgenus/rational.hpp"

namespace lowgenus::hurwitz {

/// M^0_d: degree-d covers of the line by a genus-0 curve with 2d-2 fixed
/// simple branch points.  M^0_1 = 1.
ExactRational m0(MemoStore& store, int d);

/// d^(d-3) (2d-2)! / d!.
ExactRational m0_closed(int d);

/// Genus-1 covers, 2d fixed branch points.  M^1_1 = 0.
ExactRational m1(MemoStore& store, int d);

/// Genus-2 covers by the conjectured recursion.  Always report as conjectural.
ExactRational m2(MemoStore& store, int d);

struct HurwitzTable {
  int genus = 0;
  std::map<int, ExactRational> values;
  bool conjectural = false;
};

// Degrees 1..max_d for genus 0, 1 or 2.  Throws InvalidGenus / InvalidDegree.
HurwitzTable table(MemoStore& store, int genus, int max_d);

}  // namespace lowgenus::hurwitz
