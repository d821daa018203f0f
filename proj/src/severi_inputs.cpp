#include "lowgenus/severi_inputs.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "lowgenus/combinatorics.hpp"
#include "lowgenus/errors.hpp"

namespace lowgenus {

namespace {

bool curves_exist(int genus, int d) { return binom(d - 1, 2) >= genus; }

ExactRational count(const char* text) { return ExactRational::parse(text); }

}  // namespace

SeveriInputs SeveriInputs::embedded() {
  SeveriInputs inputs;
  inputs.set_record(2, 4, {count("27"), count("144")});
  inputs.set_record(2, 5, {count("36855"), count("203616")});
  inputs.set_record(2, 6, {count("58444767"), count("326594238")});
  inputs.set_record(3, 4, {count("1"), count("6")});
  inputs.set_record(3, 5, {count("7915"), count("49580")});
  inputs.set_record(3, 6, {count("34435125"), count("216569034")});
  inputs.set_hyperelliptic(5, count("135"));
  inputs.set_hyperelliptic(6, count("3929499"));
  inputs.set_hyperelliptic(7, count("23875461099"));
  return inputs;
}

void SeveriInputs::set_record(int genus, int d, SeveriRecord record) {
  const std::string where = "g=" + std::to_string(genus) + " d=" + std::to_string(d);
  if (genus != 2 && genus != 3) throw InputError(where + ": genus must be 2 or 3");
  if (d < 1) throw InputError(where + ": degree must be >= 1");
  if (record.n.sign() < 0 || record.tl.sign() < 0) throw InputError(where + ": negative count");
  if (!curves_exist(genus, d) && (!record.n.is_zero() || !record.tl.is_zero())) {
    throw InputError(where + ": no such curves exist, counts must be 0");
  }
  records_.insert_or_assign({genus, d}, std::move(record));
}

void SeveriInputs::set_hyperelliptic(int d, ExactRational h) {
  const std::string where = "H_" + std::to_string(d);
  if (d < 1) throw InputError(where + ": degree must be >= 1");
  if (h.sign() < 0) throw InputError(where + ": negative count");
  if (d < 5 && !h.is_zero()) throw InputError(where + ": must be 0 below degree 5");
  hyperelliptic_.insert_or_assign(d, std::move(h));
}

std::optional<SeveriRecord> SeveriInputs::record(int genus, int d) const {
  if (auto it = records_.find({genus, d}); it != records_.end()) return it->second;
  if (d >= 1 && !curves_exist(genus, d)) return SeveriRecord{};
  return std::nullopt;
}

std::optional<ExactRational> SeveriInputs::hyperelliptic(int d) const {
  if (auto it = hyperelliptic_.find(d); it != hyperelliptic_.end()) return it->second;
  if (d >= 1 && d < 5) return ExactRational();
  return std::nullopt;
}

void SeveriInputs::merge(const SeveriInputs& overrides) {
  for (const auto& [key, rec] : overrides.records_) records_.insert_or_assign(key, rec);
  for (const auto& [d, h] : overrides.hyperelliptic_) hyperelliptic_.insert_or_assign(d, h);
}

namespace {

using nlohmann::json;

std::string line_context(std::string_view text, std::size_t byte) {
  byte = std::min(byte, text.size());
  const auto line = 1 + std::count(text.begin(), text.begin() + static_cast<long>(byte), '\n');
  return "line " + std::to_string(line);
}

int int_field(const json& rec, const char* name, const std::string& where) {
  if (!rec.contains(name)) throw InputError(where + ": missing field \"" + name + "\"");
  const json& v = rec.at(name);
  if (!v.is_number_integer()) throw InputError(where + ": field \"" + name + "\" must be an integer");
  return v.get<int>();
}

ExactRational count_field(const json& rec, const char* name, const std::string& where) {
  if (!rec.contains(name)) throw InputError(where + ": missing field \"" + name + "\"");
  const json& v = rec.at(name);
  if (!v.is_string()) throw InputError(where + ": field \"" + name + "\" must be a decimal string");
  const auto& s = v.get_ref<const std::string&>();
  std::string_view digits = s;
  const bool negative = !digits.empty() && digits.front() == '-';
  if (negative) digits.remove_prefix(1);
  if (digits.empty() || !std::all_of(digits.begin(), digits.end(),
                                     [](unsigned char c) { return std::isdigit(c) != 0; })) {
    throw InputError(where + ": field \"" + name + "\" is not a decimal integer: \"" + s + "\"");
  }
  if (negative && digits.find_first_not_of('0') != std::string_view::npos) {
    throw InputError(where + ": field \"" + name + "\" is negative");
  }
  return ExactRational::parse(s);
}

}  // namespace

SeveriInputs parse_inputs(std::string_view text) {
  SeveriInputs out;
  if (std::all_of(text.begin(), text.end(), [](unsigned char c) { return std::isspace(c) != 0; })) {
    return out;
  }
  json doc;
  try {
    doc = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    throw InputError("Severi inputs: parse error at " + line_context(text, e.byte) + ": " + e.what());
  }
  if (!doc.is_array()) throw InputError("Severi inputs: top level must be an array of records");

  for (std::size_t idx = 0; idx < doc.size(); ++idx) {
    const json& rec = doc[idx];
    const std::string where = "Severi inputs record #" + std::to_string(idx + 1);
    if (!rec.is_object()) throw InputError(where + ": not an object");
    try {
      if (rec.contains("h")) {
        out.set_hyperelliptic(int_field(rec, "d", where), count_field(rec, "h", where));
      } else {
        out.set_record(int_field(rec, "g", where), int_field(rec, "d", where),
                       {count_field(rec, "n", where), count_field(rec, "tl", where)});
      }
    } catch (const InputError& e) {
      const std::string msg = e.what();
      if (msg.rfind(where, 0) == 0) throw;
      throw InputError(where + ": " + msg);
    }
  }
  return out;
}

SeveriInputs ingest_inputs(const std::string& path, const SeveriInputs& base) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open Severi inputs file: " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  SeveriInputs merged = base;
  merged.merge(parse_inputs(buffer.str()));
  return merged;
}

}  // namespace lowgenus
