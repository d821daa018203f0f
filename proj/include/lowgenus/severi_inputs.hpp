#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>

#include "lowgenus/rational.hpp"

namespace lowgenus {

// Counts of irreducible genus-g degree-d curves: n through 3d+g-1 points,
// tl through 3d+g-2 points and tangent to a fixed line.
struct SeveriRecord {
  ExactRational n;
  ExactRational tl;
  friend bool operator==(const SeveriRecord&, const SeveriRecord&) = default;
};

/// Externally computed genus-2/3 counts and genus-3 hyperelliptic counts H_d.
///
/// Degrees with no curves of the genus (C(d-1,2) < g) implicitly hold zero,
/// as does H_d for d < 5.  Everything else must be supplied.
class SeveriInputs {
 public:
  SeveriInputs() = default;

  // The published values for d = 4, 5, 6 and H_5, H_6, H_7.
  static SeveriInputs embedded();

  // Throw InputError on a genus other than 2/3, d < 1, a negative count, or a
  // nonzero count where the count must vanish.
  void set_record(int genus, int d, SeveriRecord record);
  void set_hyperelliptic(int d, ExactRational h);

  std::optional<SeveriRecord> record(int genus, int d) const;
  std::optional<ExactRational> hyperelliptic(int d) const;

  // Records of `overrides` replace ours one by one.
  void merge(const SeveriInputs& overrides);

  const std::map<std::pair<int, int>, SeveriRecord>& records() const { return records_; }
  const std::map<int, ExactRational>& hyperelliptic_counts() const { return hyperelliptic_; }

 private:
  std::map<std::pair<int, int>, SeveriRecord> records_;
  std::map<int, ExactRational> hyperelliptic_;
};

/// Parses a Severi input document: a JSON array whose elements are
/// {"g": int, "d": int, "n": "<decimal>", "tl": "<decimal>"} or
/// {"d": int, "h": "<decimal>"}.  Blank text is an empty document.
/// Throws InputError naming the line or record at fault.
SeveriInputs parse_inputs(std::string_view text);

/// Reads and parses `path`, merging it over `base`.
SeveriInputs ingest_inputs(const std::string& path, const SeveriInputs& base = SeveriInputs::embedded());

}  // namespace lowgenus
