#pragma once

#include <string>
#include <vector>

#include "lowgenus/memo_store.hpp"
#include "lowgenus/output.hpp"
#include "lowgenus/severi_inputs.hpp"

namespace lowgenus {

struct CheckResult {
  std::string name;
  std::size_t cells = 0;
  std::vector<std::string> mismatches;
  bool passed() const { return mismatches.empty(); }
};

struct VerifyReport {
  std::vector<CheckResult> checks;
  // Every computed record, in check order.
  std::vector<OutputRecord> records;
  bool passed() const;
};

/// Recomputes every published table and compares cell by cell, exactly:
/// elliptic characteristic numbers (d = 2..5), fixed-j characteristic
/// numbers (d = 2..4), genus-1 sectional genera (d = 3..7), the genus-2/3
/// codimension-one table (d = 4..6), and the genus-0 Hurwitz closed form
/// (d = 1..15).
VerifyReport verify_golden(MemoStore& store, const SeveriInputs& inputs = SeveriInputs::embedded(),
                           unsigned jobs = 1);

}  // namespace lowgenus
