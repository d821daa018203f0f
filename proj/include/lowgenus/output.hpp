#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>

#include <json.hpp>

#include "lowgenus/rational.hpp"

namespace lowgenus {

enum Flag : unsigned {
  kConjectural = 1u << 0,   // rests on a conjectured formula
  kReconstructed = 1u << 1, // uses the reconstructed genus-3 boundary formula
  kFormal = 1u << 2,        // outside the enumeratively meaningful range
};

// One computed value.  Quantity tags: R, NP, NL, E, J, J0, J1728 (with a, b
// for characteristic numbers), M (Hurwitz), and the codimension-one tags
// A, B, C, Delta, TL, CU, triple, g_hat, g_arith, g_tilde.
struct OutputRecord {
  std::string quantity;
  int genus = 0;
  int d = 0;
  std::optional<int> a;
  std::optional<int> b;
  ExactRational value;
  unsigned flags = 0;
  friend bool operator==(const OutputRecord&, const OutputRecord&) = default;
};

enum class Format { Table, Json, Csv };

std::optional<Format> parse_format(std::string_view name);

// "conjectural;reconstructed;formal" subset, in that order.
std::string flag_names(unsigned flags);

// "R_3 = 12", "E_2(0,6) = 45/2", "M^2_3 = 364  [conjectural]", "CU[g=2,d=4] = 72".
std::string table_line(const OutputRecord& rec);

nlohmann::json to_json(const OutputRecord& rec);
OutputRecord record_from_json(const nlohmann::json& j);

inline constexpr std::string_view kCsvHeader = "quantity,genus,d,a,b,num,den,flags";
std::string csv_line(const OutputRecord& rec);
OutputRecord record_from_csv(std::string_view line);

// Whole document in the given format, newline terminated.
std::string render(std::span<const OutputRecord> records, Format format);

}  // namespace lowgenus
