#include "lowgenus/output.hpp"

#include <array>
#include <sstream>
#include <stdexcept>
#include <vector>

namespace lowgenus {

namespace {

struct FlagName {
  Flag flag;
  const char* name;
};

constexpr std::array<FlagName, 3> kFlagNames{{
    {kConjectural, "conjectural"},
    {kReconstructed, "reconstructed"},
    {kFormal, "formal"},
}};

unsigned flag_from_name(std::string_view name) {
  for (const auto& f : kFlagNames) {
    if (name == f.name) return f.flag;
  }
  throw std::invalid_argument("unknown flag '" + std::string(name) + "'");
}

bool is_codim1_quantity(std::string_view q) {
  static constexpr std::array<std::string_view, 10> kNames{
      "A", "B", "C", "Delta", "TL", "CU", "triple", "g_hat", "g_arith", "g_tilde"};
  for (auto n : kNames) {
    if (q == n) return true;
  }
  return false;
}

std::vector<std::string_view> split(std::string_view text, char sep) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  while (true) {
    const auto pos = text.find(sep, start);
    parts.push_back(text.substr(start, pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return parts;
}

int to_int(std::string_view s) {
  std::size_t used = 0;
  const std::string str(s);
  const int v = std::stoi(str, &used);
  if (used != str.size()) throw std::invalid_argument("bad integer '" + str + "'");
  return v;
}

}  // namespace

std::optional<Format> parse_format(std::string_view name) {
  if (name == "table") return Format::Table;
  if (name == "json") return Format::Json;
  if (name == "csv") return Format::Csv;
  return std::nullopt;
}

std::string flag_names(unsigned flags) {
  std::string out;
  for (const auto& f : kFlagNames) {
    if ((flags & f.flag) == 0) continue;
    if (!out.empty()) out += ';';
    out += f.name;
  }
  return out;
}

std::string table_line(const OutputRecord& rec) {
  std::ostringstream os;
  if (rec.quantity == "M") {
    os << "M^" << rec.genus << "_" << rec.d;
  } else if (is_codim1_quantity(rec.quantity)) {
    os << rec.quantity << "[g=" << rec.genus << ",d=" << rec.d << "]";
  } else {
    os << rec.quantity << "_" << rec.d;
    if (rec.a && rec.b) os << "(" << *rec.a << "," << *rec.b << ")";
  }
  os << " = " << rec.value;
  if (rec.flags != 0) os << "  [" << flag_names(rec.flags) << "]";
  return os.str();
}

nlohmann::json to_json(const OutputRecord& rec) {
  nlohmann::json flags = nlohmann::json::array();
  for (const auto& f : kFlagNames) {
    if (rec.flags & f.flag) flags.push_back(f.name);
  }
  return {
      {"quantity", rec.quantity},
      {"genus", rec.genus},
      {"d", rec.d},
      {"a", rec.a ? nlohmann::json(*rec.a) : nlohmann::json(nullptr)},
      {"b", rec.b ? nlohmann::json(*rec.b) : nlohmann::json(nullptr)},
      {"value", {{"num", rec.value.numerator().get_str()}, {"den", rec.value.denominator().get_str()}}},
      {"flags", flags},
  };
}

OutputRecord record_from_json(const nlohmann::json& j) {
  OutputRecord rec;
  rec.quantity = j.at("quantity").get<std::string>();
  rec.genus = j.at("genus").get<int>();
  rec.d = j.at("d").get<int>();
  if (!j.at("a").is_null()) rec.a = j.at("a").get<int>();
  if (!j.at("b").is_null()) rec.b = j.at("b").get<int>();
  const auto& v = j.at("value");
  rec.value = ExactRational::parse(v.at("num").get<std::string>() + "/" + v.at("den").get<std::string>());
  for (const auto& f : j.at("flags")) rec.flags |= flag_from_name(f.get<std::string>());
  return rec;
}

std::string csv_line(const OutputRecord& rec) {
  std::ostringstream os;
  os << rec.quantity << ',' << rec.genus << ',' << rec.d << ',';
  if (rec.a) os << *rec.a;
  os << ',';
  if (rec.b) os << *rec.b;
  os << ',' << rec.value.numerator().get_str() << ',' << rec.value.denominator().get_str() << ','
     << flag_names(rec.flags);
  return os.str();
}

OutputRecord record_from_csv(std::string_view line) {
  const auto cols = split(line, ',');
  if (cols.size() != 8) throw std::invalid_argument("expected 8 CSV columns");
  OutputRecord rec;
  rec.quantity = std::string(cols[0]);
  rec.genus = to_int(cols[1]);
  rec.d = to_int(cols[2]);
  if (!cols[3].empty()) rec.a = to_int(cols[3]);
  if (!cols[4].empty()) rec.b = to_int(cols[4]);
  rec.value = ExactRational::parse(std::string(cols[5]) + "/" + std::string(cols[6]));
  if (!cols[7].empty()) {
    for (auto name : split(cols[7], ';')) rec.flags |= flag_from_name(name);
  }
  return rec;
}

std::string render(std::span<const OutputRecord> records, Format format) {
  std::ostringstream os;
  switch (format) {
    case Format::Table:
      for (const auto& r : records) os << table_line(r) << '\n';
      break;
    case Format::Json: {
      nlohmann::json doc = nlohmann::json::array();
      for (const auto& r : records) doc.push_back(to_json(r));
      os << doc.dump(2) << '\n';
      break;
    }
    case Format::Csv:
      os << kCsvHeader << '\n';
      for (const auto& r : records) os << csv_line(r) << '\n';
      break;
  }
  return os.str();
}

}  // namespace lowgenus
