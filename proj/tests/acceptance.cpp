// Acceptance suite: one PASS/FAIL line per criterion, exact comparisons only.
// Exit status is nonzero if any criterion fails.

#include <chrono>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "lowgenus/codim1.hpp"
#include "lowgenus/combinatorics.hpp"
#include "lowgenus/genus0.hpp"
#include "lowgenus/genus1.hpp"
#include "lowgenus/hurwitz.hpp"
#include "lowgenus/output.hpp"
#include "lowgenus/tables.hpp"

using namespace lowgenus;

namespace {

using Clock = std::chrono::steady_clock;

struct Outcome {
  std::size_t cells = 0;
  std::vector<std::string> problems;
};

void expect(Outcome& o, const std::string& label, const ExactRational& got, const ExactRational& want) {
  ++o.cells;
  if (got != want) o.problems.push_back(label + ": got " + got.to_string() + ", expected " + want.to_string());
}

void expect_list(Outcome& o, const std::string& label, const std::vector<OutputRecord>& got,
                 const std::vector<std::string>& want) {
  if (got.size() != want.size()) {
    o.problems.push_back(label + ": " + std::to_string(got.size()) + " values, expected " +
                         std::to_string(want.size()));
    return;
  }
  for (std::size_t i = 0; i < want.size(); ++i) expect(o, table_line(got[i]), got[i].value, ExactRational::parse(want[i]));
}

void expect_true(Outcome& o, const std::string& label, bool ok) {
  ++o.cells;
  if (!ok) o.problems.push_back(label);
}

// 1
Outcome elliptic_numbers(MemoStore& store, double& quintic_seconds) {
  Outcome o;
  expect_list(o, "conics", tables::elliptic(store, 2, true), {"0", "0", "0", "0", "2", "10", "45/2"});
  expect_list(o, "cubics", tables::elliptic(store, 3, true),
              {"1", "4", "16", "64", "256", "976", "3424", "9766", "21004", "33616"});
  expect_list(o, "quartics", tables::elliptic(store, 4, true),
              {"225", "1010", "4396", "18432", "73920", "280560", "994320", "3230956", "9409052", "23771160",
               "50569520", "89120080", "129996216"});
  const auto start = Clock::now();
  const auto quintics = tables::elliptic(store, 5, true);
  quintic_seconds = std::chrono::duration<double>(Clock::now() - start).count();
  expect_list(o, "quintics", quintics,
              {"87192", "411376", "1873388", "8197344", "34294992", "136396752", "512271756", "1802742368",
               "5889847264", "17668868832", "48034104112", "116575540736", "248984451648", "463227482784",
               "747546215472", "1048687299072"});
  expect_true(o, "quintic table took " + std::to_string(quintic_seconds) + " s (budget 30 s)", quintic_seconds <= 30.0);
  return o;
}

// 2
Outcome fixed_j_numbers(MemoStore& store) {
  Outcome o;
  expect_list(o, "conics", tables::fixed_j(store, 2, true), {"0", "0", "0", "12", "48", "75"});
  expect_list(o, "cubics", tables::fixed_j(store, 3, true),
              {"12", "48", "192", "768", "2784", "8832", "21828", "39072", "50448"});
  expect_list(o, "quartics", tables::fixed_j(store, 4, true),
              {"1860", "8088", "33792", "134208", "497952", "1696320", "5193768", "13954512", "31849968",
               "60019872", "92165280", "115892448"});
  return o;
}

// 3
Outcome genus1_sectional(Codim1Calculator& calc) {
  Outcome o;
  const std::vector<std::string> g_hat{"0", "486", "410439", "395296561", "534578574561"};
  const std::vector<std::string> g_arith{"0", "2676", "1440874", "1117718773", "1317320595961"};
  for (int d = 3; d <= 7; ++d) {
    const auto i = static_cast<std::size_t>(d - 3);
    expect(o, "g_hat d=" + std::to_string(d), calc.sectional_geometric(1, d), ExactRational::parse(g_hat[i]));
    expect(o, "g d=" + std::to_string(d), calc.sectional_arithmetic(1, d), ExactRational::parse(g_arith[i]));
  }
  return o;
}

// 4
Outcome genus23_table(Codim1Calculator& calc) {
  struct Column {
    int genus;
    int d;
    const char* B;
    const char* C;
    const char* Delta;
    const char* CU;
    const char* g_hat;
    const char* g;
  };
  const std::vector<Column> table{
      {2, 4, "117", "90", "450", "72", "28", "325"},
      {2, 5, "166761", "75852", "447300", "239400", "166321", "762994"},
      {2, 6, "268149471", "73644975", "547180713", "506246976", "420645826", "1410743814"},
      {3, 4, "5", "9", "27", "0", "0", "0"},
      {3, 5, "41665", "48840", "147900", "49680", "30906", "191511"},
      {3, 6, "182133909", "154231695", "474418485", "329520312", "251620624", "995749561"},
  };
  Outcome o;
  for (const auto& col : table) {
    const std::string at = "[g=" + std::to_string(col.genus) + ",d=" + std::to_string(col.d) + "]";
    const auto r = calc.report(col.genus, col.d);
    expect(o, "B" + at, r.degrees.B, ExactRational::parse(col.B));
    expect(o, "C" + at, r.degrees.C, ExactRational::parse(col.C));
    expect(o, "Delta" + at, r.degrees.Delta, ExactRational::parse(col.Delta));
    expect(o, "CU" + at, r.cusps, ExactRational::parse(col.CU));
    expect(o, "g_hat" + at, r.g_hat, ExactRational::parse(col.g_hat));
    expect(o, "g" + at, r.g_arith, ExactRational::parse(col.g));
  }
  return o;
}

// 5
Outcome identities(Codim1Calculator& calc) {
  Outcome o;
  for (int d = 3; d <= 8; ++d) {
    const std::string at = " d=" + std::to_string(d);
    const auto g0 = calc.degrees(0, d);
    expect(o, "g=0 TL-A-B" + at, g0.TL - g0.A - g0.B, 0);
    expect(o, "g=0 C+Delta" + at, g0.C + g0.Delta, 0);
    expect(o, "g=0 9(d-2)A-3(d+2)B-2dC" + at, g0.A * (9 * (d - 2)) - g0.B * (3 * (d + 2)) - g0.C * (2 * d), 0);
    const auto g1 = calc.degrees(1, d);
    expect(o, "g=1 TL-A-B" + at, g1.TL - g1.A - g1.B, 0);
    expect(o, "g=1 9A-3B-2C" + at, g1.A * 9 - g1.B * 3 - g1.C * 2, 0);
  }
  // Genus 2 and 3 are defined as far as the embedded inputs reach.
  for (int genus : {2, 3}) {
    for (int d = 3; d <= 6; ++d) {
      const auto deg = calc.degrees(genus, d);
      expect(o, "g=" + std::to_string(genus) + " TL-A-B d=" + std::to_string(d), deg.TL - deg.A - deg.B, 0);
    }
  }
  return o;
}

// 6
Outcome hurwitz_numbers(MemoStore& store) {
  Outcome o;
  for (int d = 1; d <= 15; ++d) {
    const ExactRational closed = lowgenus::ipow(d, d - 3) * lowgenus::factorial(2 * d - 2) / lowgenus::factorial(d);
    expect(o, "m0(" + std::to_string(d) + ")", hurwitz::m0(store, d), closed);
  }
  expect(o, "m1(1)", hurwitz::m1(store, 1), 0);
  expect(o, "m1(2)", hurwitz::m1(store, 2), ExactRational::parse("1/2"));
  for (int d = 1; d <= 10; ++d) {
    const auto recs = tables::hurwitz(store, 2, d);
    expect_true(o, "M^2_" + std::to_string(d) + " flagged conjectural",
                recs.size() == 1 && (recs[0].flags & kConjectural) != 0);
  }
  expect_true(o, "genus-2 table flagged conjectural", hurwitz::table(store, 2, 10).conjectural);
  return o;
}

// 7
Outcome spot_checks(MemoStore& store, Codim1Calculator& calc) {
  Outcome o;
  expect(o, "R_3", genus0::rd(store, 3), 12);
  expect(o, "NP_3", genus0::npd(store, 3), 1);
  expect(o, "NP_2(1,2)", genus0::npchar(store, 2, 1, 2), 1);
  expect(o, "NP_2(0,3)", genus0::npchar(store, 2, 0, 3), ExactRational::parse("3/2"));
  expect(o, "NL_2(2,2)", genus0::nl(store, 2, 2, 2), 2);
  expect(o, "cusp_count(0,3)", calc.cusp_count(0, 3), 24);
  expect(o, "triple_count(3)", calc.triple_count(3), 0);
  const auto deg = calc.degrees(0, 3);
  expect(o, "degrees(0,3).A", deg.A, 12);
  expect(o, "degrees(0,3).B", deg.B, 24);
  expect(o, "degrees(0,3).C", deg.C, -42);
  expect(o, "degrees(0,3).Delta", deg.Delta, 42);
  expect(o, "degrees(0,3).TL", deg.TL, 36);
  return o;
}

// Every record the criteria above touch, as one JSON document.
std::string suite_json(unsigned jobs) {
  MemoStore store;
  Codim1Calculator calc(store);
  std::vector<tables::Task> tasks;
  for (int d = 1; d <= 5; ++d) tasks.push_back([&store, d] { return tables::elliptic(store, d, true); });
  for (int d = 1; d <= 4; ++d) {
    for (auto j : {genus1::JClass::Generic, genus1::JClass::J0, genus1::JClass::J1728}) {
      tasks.push_back([&store, d, j] { return tables::fixed_j(store, d, true, j); });
    }
  }
  for (int d = 1; d <= 4; ++d) {
    tasks.push_back([&store, d] { return tables::rational(store, d, true); });
    tasks.push_back([&store, d] { return tables::node_point(store, d, true); });
    tasks.push_back([&store, d] { return tables::node_line(store, d, true); });
  }
  for (int genus = 0; genus <= 3; ++genus) {
    const int max_d = genus <= 1 ? 8 : 6;
    for (int d = 1; d <= max_d; ++d) tasks.push_back([&calc, genus, d] { return tables::codim1(calc, genus, d); });
  }
  for (int genus = 0; genus <= 2; ++genus) {
    for (int d = 1; d <= 15; ++d) {
      if (genus > 0 && d > 10) break;
      tasks.push_back([&store, genus, d] { return tables::hurwitz(store, genus, d); });
    }
  }
  return render(tables::run_tasks(tasks, jobs), Format::Json);
}

Outcome determinism() {
  Outcome o;
  const auto first = suite_json(1);
  const auto second = suite_json(1);
  const auto parallel = suite_json(8);
  expect_true(o, "second fresh run differs from the first", first == second);
  expect_true(o, "parallel run differs from the sequential one", first == parallel);
  expect_true(o, "suite output is empty", first.size() > 2);
  return o;
}

}  // namespace

int main() {
  struct Criterion {
    std::string name;
    std::function<Outcome()> run;
  };

  MemoStore store;
  Codim1Calculator calc(store);
  double quintic_seconds = 0;

  const std::vector<Criterion> criteria{
      {"elliptic characteristic numbers, d=2..5", [&] { return elliptic_numbers(store, quintic_seconds); }},
      {"fixed-j characteristic numbers, d=2..4", [&] { return fixed_j_numbers(store); }},
      {"genus-1 sectional genera, d=3..7", [&] { return genus1_sectional(calc); }},
      {"genus-2/3 codimension-one table, d=4..6", [&] { return genus23_table(calc); }},
      {"divisor identities, d=3..8", [&] { return identities(calc); }},
      {"Hurwitz numbers", [&] { return hurwitz_numbers(store); }},
      {"hand-evaluated spot checks", [&] { return spot_checks(store, calc); }},
      {"determinism across fresh and parallel runs", [] { return determinism(); }},
  };

  int failed = 0;
  const auto suite_start = Clock::now();
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    const auto start = Clock::now();
    try {
      o = criteria[i].run();
    } catch (const std::exception& e) {
      o.problems.push_back(std::string("exception: ") + e.what());
    }
    const double seconds = std::chrono::duration<double>(Clock::now() - start).count();
    const bool ok = o.problems.empty();
    failed += ok ? 0 : 1;

    std::ostringstream line;
    line.precision(2);
    line << std::fixed << (ok ? "PASS" : "FAIL") << "  [" << (i + 1) << "] " << criteria[i].name << " (" << o.cells
         << " checks, " << seconds << " s";
    if (i == 0) line << "; quintic table " << quintic_seconds << " s";
    line << ")";
    std::cout << line.str() << '\n';
    for (const auto& p : o.problems) std::cout << "        " << p << '\n';
  }
  const double total = std::chrono::duration<double>(Clock::now() - suite_start).count();
  std::cout << (failed == 0 ? "acceptance: all " : "acceptance: ") << (failed == 0 ? criteria.size() : failed)
            << (failed == 0 ? " criteria passed" : " criteria failed") << " in " << total << " s\n";
  return failed == 0 ? 0 : 1;
}
