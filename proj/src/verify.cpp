#include "lowgenus/verify.hpp"

#include <algorithm>
#include <functional>

#include "lowgenus/codim1.hpp"
#include "lowgenus/hurwitz.hpp"
#include "lowgenus/tables.hpp"

namespace lowgenus {

namespace {

struct GoldenTable {
  std::string name;
  std::vector<std::string> expected;
  tables::Task compute;
};

const std::vector<std::string> kEllipticConics{"0", "0", "0", "0", "2", "10", "45/2"};
const std::vector<std::string> kEllipticCubics{"1",    "4",    "16",   "64",    "256",
                                               "976",  "3424", "9766", "21004", "33616"};
const std::vector<std::string> kEllipticQuartics{
    "225",     "1010",    "4396",     "18432",    "73920",    "280560",   "994320",
    "3230956", "9409052", "23771160", "50569520", "89120080", "129996216"};
const std::vector<std::string> kEllipticQuintics{
    "87192",        "411376",       "1873388",      "8197344",      "34294992",     "136396752",
    "512271756",    "1802742368",   "5889847264",   "17668868832",  "48034104112",  "116575540736",
    "248984451648", "463227482784", "747546215472", "1048687299072"};

const std::vector<std::string> kFixedJConics{"0", "0", "0", "12", "48", "75"};
const std::vector<std::string> kFixedJCubics{"12", "48", "192", "768", "2784", "8832", "21828", "39072", "50448"};
const std::vector<std::string> kFixedJQuartics{
    "1860",    "8088",     "33792",    "134208",   "497952",   "1696320",
    "5193768", "13954512", "31849968", "60019872", "92165280", "115892448"};

const std::vector<std::string> kGenus1GeometricSectional{"0", "486", "410439", "395296561", "534578574561"};
const std::vector<std::string> kGenus1ArithmeticSectional{"0", "2676", "1440874", "1117718773",
                                                          "1317320595961"};

// Rows |A|, |B|, |C|, |Delta|, |TL|, |CU|, g_hat, g for one (genus, degree).
struct Codim1Column {
  int genus;
  int d;
  std::vector<std::string> rows;
};

const std::vector<Codim1Column> kCodim1Table{
    {2, 4, {"27", "117", "90", "450", "144", "72", "28", "325"}},
    {2, 5, {"36855", "166761", "75852", "447300", "203616", "239400", "166321", "762994"}},
    {2, 6,
     {"58444767", "268149471", "73644975", "547180713", "326594238", "506246976", "420645826",
      "1410743814"}},
    {3, 4, {"1", "5", "9", "27", "6", "0", "0", "0"}},
    {3, 5, {"7915", "41665", "48840", "147900", "49580", "49680", "30906", "191511"}},
    {3, 6,
     {"34435125", "182133909", "154231695", "474418485", "216569034", "329520312", "251620624",
      "995749561"}},
};

std::vector<OutputRecord> pick(const std::vector<OutputRecord>& records, const std::string& quantity) {
  std::vector<OutputRecord> out;
  std::copy_if(records.begin(), records.end(), std::back_inserter(out),
               [&](const OutputRecord& r) { return r.quantity == quantity; });
  return out;
}

}  // namespace

bool VerifyReport::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.passed(); });
}

VerifyReport verify_golden(MemoStore& store, const SeveriInputs& inputs, unsigned jobs) {
  Codim1Calculator calc(store, inputs);
  std::vector<GoldenTable> golden;

  const auto elliptic = [&](int d) { return [&store, d] { return tables::elliptic(store, d, true); }; };
  golden.push_back({"elliptic characteristic numbers, conics", kEllipticConics, elliptic(2)});
  golden.push_back({"elliptic characteristic numbers, cubics", kEllipticCubics, elliptic(3)});
  golden.push_back({"elliptic characteristic numbers, quartics", kEllipticQuartics, elliptic(4)});
  golden.push_back({"elliptic characteristic numbers, quintics", kEllipticQuintics, elliptic(5)});

  const auto fixed_j = [&](int d) { return [&store, d] { return tables::fixed_j(store, d, true); }; };
  golden.push_back({"fixed-j characteristic numbers, conics", kFixedJConics, fixed_j(2)});
  golden.push_back({"fixed-j characteristic numbers, cubics", kFixedJCubics, fixed_j(3)});
  golden.push_back({"fixed-j characteristic numbers, quartics", kFixedJQuartics, fixed_j(4)});

  const auto genus1_sectional = [&calc](const std::string& quantity) {
    return [&calc, quantity] {
      std::vector<OutputRecord> out;
      for (int d = 3; d <= 7; ++d) {
        auto picked = pick(tables::codim1(calc, 1, d), quantity);
        out.insert(out.end(), picked.begin(), picked.end());
      }
      return out;
    };
  };
  golden.push_back({"genus-1 geometric sectional genus, d=3..7", kGenus1GeometricSectional,
                    genus1_sectional("g_hat")});
  golden.push_back({"genus-1 arithmetic sectional genus, d=3..7", kGenus1ArithmeticSectional,
                    genus1_sectional("g_arith")});

  for (const auto& col : kCodim1Table) {
    golden.push_back({"codimension-one table, g=" + std::to_string(col.genus) + " d=" + std::to_string(col.d),
                      col.rows, [&calc, col] {
                        const auto all = tables::codim1(calc, col.genus, col.d);
                        std::vector<OutputRecord> out;
                        for (const char* q : {"A", "B", "C", "Delta", "TL", "CU", "g_hat", "g_arith"}) {
                          auto picked = pick(all, q);
                          out.insert(out.end(), picked.begin(), picked.end());
                        }
                        return out;
                      }});
  }

  std::vector<std::string> closed_form;
  for (int d = 1; d <= 15; ++d) closed_form.push_back(hurwitz::m0_closed(d).to_string());
  golden.push_back({"genus-0 Hurwitz numbers equal d^(d-3)(2d-2)!/d!, d=1..15", closed_form, [&store] {
                      std::vector<OutputRecord> out;
                      for (int d = 1; d <= 15; ++d) {
                        auto recs = tables::hurwitz(store, 0, d);
                        out.insert(out.end(), recs.begin(), recs.end());
                      }
                      return out;
                    }});

  std::vector<tables::Task> tasks;
  for (const auto& g : golden) tasks.push_back(g.compute);
  const auto computed = tables::run_grouped(tasks, jobs);

  VerifyReport report;
  for (std::size_t i = 0; i < golden.size(); ++i) {
    CheckResult check;
    check.name = golden[i].name;
    const auto& expected = golden[i].expected;
    const auto& got = computed[i];
    check.cells = expected.size();
    if (got.size() != expected.size()) {
      check.mismatches.push_back("expected " + std::to_string(expected.size()) + " values, computed " +
                                 std::to_string(got.size()));
    }
    for (std::size_t k = 0; k < std::min(got.size(), expected.size()); ++k) {
      if (got[k].value != ExactRational::parse(expected[k])) {
        check.mismatches.push_back(table_line(got[k]) + " (expected " + expected[k] + ")");
      }
    }
    report.records.insert(report.records.end(), got.begin(), got.end());
    report.checks.push_back(std::move(check));
  }
  return report;
}

}  // namespace lowgenus
