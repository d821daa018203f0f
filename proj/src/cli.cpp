#include "lowgenus/cli.hpp"

#include <algorithm>
#include <optional>
#include <ostream>

#include <CLI11.hpp>

#include "lowgenus/codim1.hpp"
#include "lowgenus/errors.hpp"
#include "lowgenus/output.hpp"
#include "lowgenus/severi_inputs.hpp"
#include "lowgenus/tables.hpp"
#include "lowgenus/verify.hpp"

namespace lowgenus::cli {

namespace {

struct Options {
  std::optional<int> d;
  std::optional<int> max_d;
  bool characteristic = false;
  int genus = 0;
  std::string j_class = "generic";
  std::string format = "table";
  unsigned jobs = 1;
  std::optional<std::string> severi_inputs;
};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

void add_common(CLI::App& cmd, Options& opt) {
  cmd.add_option("--format", opt.format, "Output format")
      ->check(CLI::IsMember({"table", "json", "csv"}))
      ->capture_default_str();
  cmd.add_option("--jobs", opt.jobs, "Worker threads for independent tables")
      ->check(CLI::Range(1u, 256u))
      ->capture_default_str();
}

void add_degree(CLI::App& cmd, Options& opt) {
  auto* d = cmd.add_option("--d", opt.d, "Degree");
  auto* max_d = cmd.add_option("--max-d", opt.max_d, "All degrees 1..N");
  d->excludes(max_d);
}

std::vector<int> degrees(const Options& opt) {
  if (opt.d) return {*opt.d};
  if (!opt.max_d) throw UsageError("one of --d or --max-d is required");
  if (*opt.max_d < 1) throw InvalidDegree(*opt.max_d, 1);
  std::vector<int> out(static_cast<std::size_t>(*opt.max_d));
  for (int d = 1; d <= *opt.max_d; ++d) out[static_cast<std::size_t>(d - 1)] = d;
  return out;
}

genus1::JClass parse_j(const std::string& name) {
  if (name == "0") return genus1::JClass::J0;
  if (name == "1728") return genus1::JClass::J1728;
  return genus1::JClass::Generic;
}

SeveriInputs load_inputs(const Options& opt) {
  if (opt.severi_inputs) return ingest_inputs(*opt.severi_inputs);
  return SeveriInputs::embedded();
}

int run_verify(const Options& opt, Format format, std::ostream& out) {
  MemoStore store;
  const VerifyReport report = verify_golden(store, load_inputs(opt), opt.jobs);
  const auto failed = static_cast<std::size_t>(
      std::count_if(report.checks.begin(), report.checks.end(), [](const CheckResult& c) { return !c.passed(); }));

  switch (format) {
    case Format::Table:
      for (const auto& c : report.checks) {
        out << (c.passed() ? "PASS  " : "FAIL  ") << c.name << " (" << c.cells << " values)\n";
        for (const auto& m : c.mismatches) out << "        " << m << '\n';
      }
      if (failed == 0) {
        out << "verify: all " << report.checks.size() << " checks passed\n";
      } else {
        out << "verify: " << failed << " of " << report.checks.size() << " checks failed\n";
      }
      break;
    case Format::Json: {
      nlohmann::json checks = nlohmann::json::array();
      for (const auto& c : report.checks) {
        checks.push_back({{"name", c.name}, {"cells", c.cells}, {"passed", c.passed()}, {"mismatches", c.mismatches}});
      }
      out << nlohmann::json{{"passed", failed == 0}, {"checks", checks}}.dump(2) << '\n';
      break;
    }
    case Format::Csv:
      out << "check,cells,passed\n";
      for (const auto& c : report.checks) out << '"' << c.name << "\"," << c.cells << ',' << c.passed() << '\n';
      break;
  }
  return failed == 0 ? kOk : kVerificationFailed;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact enumerative invariants of low-genus plane curves", "lowgenus"};
  app.require_subcommand(1);
  Options opt;

  auto* rational = app.add_subcommand("rational", "Rational curves R_d and R_d(a,b)");
  auto* node_point = app.add_subcommand("node-point", "Rational curves with a node at a fixed point");
  auto* node_line = app.add_subcommand("node-line", "Rational curves with a node on a fixed line");
  auto* elliptic = app.add_subcommand("elliptic", "Elliptic curves E_d and E_d(a,b)");
  for (auto* cmd : {rational, node_point, node_line, elliptic}) {
    add_degree(*cmd, opt);
    cmd->add_flag("--char", opt.characteristic, "Full characteristic-number table");
    add_common(*cmd, opt);
  }

  auto* fixed_j = app.add_subcommand("fixed-j", "Elliptic curves with fixed j-invariant");
  add_degree(*fixed_j, opt);
  fixed_j->add_flag("--char", opt.characteristic, "Full characteristic-number table");
  fixed_j->add_option("--j", opt.j_class, "j-invariant class")
      ->check(CLI::IsMember({"generic", "0", "1728"}))
      ->capture_default_str();
  add_common(*fixed_j, opt);

  auto* hurwitz = app.add_subcommand("hurwitz", "Simple Hurwitz numbers of the line");
  add_degree(*hurwitz, opt);
  hurwitz->add_option("--genus", opt.genus, "Genus of the cover (0, 1, or 2; 2 is conjectural)")
      ->capture_default_str();
  add_common(*hurwitz, opt);

  auto* codim1 = app.add_subcommand("codim1", "Divisor degrees, cusps, triple points, sectional genera");
  add_degree(*codim1, opt);
  codim1->add_option("--genus", opt.genus, "Geometric genus 0..3")->capture_default_str();
  codim1->add_option("--severi-inputs", opt.severi_inputs, "JSON file overriding genus-2/3 inputs");
  add_common(*codim1, opt);

  auto* verify = app.add_subcommand("verify", "Recompute every published table and compare exactly");
  verify->add_option("--severi-inputs", opt.severi_inputs, "JSON file overriding genus-2/3 inputs");
  add_common(*verify, opt);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      app.exit(e, out, err);
      return kOk;
    }
    err << "usage error: " << e.what() << "\n" << "run with --help for the command grammar\n";
    return kUsageError;
  }

  const Format format = *parse_format(opt.format);
  try {
    if (verify->parsed()) return run_verify(opt, format, out);

    MemoStore store;
    std::vector<tables::Task> tasks;
    const std::vector<int> ds = degrees(opt);
    std::optional<Codim1Calculator> calc;
    if (codim1->parsed()) calc.emplace(store, load_inputs(opt));

    for (int d : ds) {
      const bool ch = opt.characteristic;
      tables::Task task;
      if (rational->parsed()) {
        task = [&store, d, ch] { return tables::rational(store, d, ch); };
      } else if (node_point->parsed()) {
        task = [&store, d, ch] { return tables::node_point(store, d, ch); };
      } else if (node_line->parsed()) {
        task = [&store, d, ch] { return tables::node_line(store, d, ch); };
      } else if (elliptic->parsed()) {
        task = [&store, d, ch] { return tables::elliptic(store, d, ch); };
      } else if (fixed_j->parsed()) {
        const genus1::JClass j = parse_j(opt.j_class);
        task = [&store, d, ch, j] { return tables::fixed_j(store, d, ch, j); };
      } else if (hurwitz->parsed()) {
        const int g = opt.genus;
        task = [&store, g, d] { return tables::hurwitz(store, g, d); };
      } else {
        const int g = opt.genus;
        task = [&calc, g, d] { return tables::codim1(*calc, g, d); };
      }
      tasks.push_back(std::move(task));
    }
    out << render(tables::run_tasks(tasks, opt.jobs), format);
    return kOk;
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return kUsageError;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kDomainError;
  }
}

}  // namespace lowgenus::cli
