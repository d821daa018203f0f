#include "lowgenus/tables.hpp"

#include <atomic>
#include <exception>
#include <thread>

#include "lowgenus/genus0.hpp"
#include "lowgenus/hurwitz.hpp"

namespace lowgenus::tables {

namespace {

template <typename Value>
std::vector<OutputRecord> family_table(const char* tag, int genus, int d, int dimension,
                                       bool characteristic, unsigned flags, Value&& value) {
  std::vector<OutputRecord> out;
  if (!characteristic) {
    out.push_back({tag, genus, d, std::nullopt, std::nullopt, value(dimension, 0), flags});
    return out;
  }
  for (int b = 0; b <= dimension; ++b) {
    const int a = dimension - b;
    out.push_back({tag, genus, d, a, b, value(a, b), flags});
  }
  return out;
}

const char* j_tag(genus1::JClass j_class) {
  switch (j_class) {
    case genus1::JClass::J0:
      return "J0";
    case genus1::JClass::J1728:
      return "J1728";
    default:
      return "J";
  }
}

}  // namespace

std::vector<OutputRecord> rational(MemoStore& store, int d, bool characteristic) {
  return family_table("R", 0, d, 3 * d - 1, characteristic, 0,
                      [&](int a, int b) { return genus0::rchar(store, d, a, b); });
}

std::vector<OutputRecord> node_point(MemoStore& store, int d, bool characteristic) {
  return family_table("NP", 0, d, 3 * d - 3, characteristic, 0,
                      [&](int a, int b) { return genus0::npchar(store, d, a, b); });
}

std::vector<OutputRecord> node_line(MemoStore& store, int d, bool characteristic) {
  return family_table("NL", 0, d, 3 * d - 2, characteristic, 0,
                      [&](int a, int b) { return genus0::nl(store, d, a, b); });
}

std::vector<OutputRecord> elliptic(MemoStore& store, int d, bool characteristic) {
  return family_table("E", 1, d, 3 * d, characteristic, 0,
                      [&](int a, int b) { return genus1::echar(store, d, a, b); });
}

std::vector<OutputRecord> fixed_j(MemoStore& store, int d, bool characteristic, genus1::JClass j_class) {
  const unsigned flags = genus1::fixed_j_is_enumerative(d) ? 0u : kFormal;
  return family_table(j_tag(j_class), 1, d, 3 * d - 1, characteristic, flags,
                      [&](int a, int b) { return genus1::jchar_special(store, j_class, d, a, b); });
}

std::vector<OutputRecord> hurwitz(MemoStore& store, int genus, int d) {
  const auto table = hurwitz::table(store, genus, d);
  return {{"M", genus, d, std::nullopt, std::nullopt, table.values.at(d),
           table.conjectural ? static_cast<unsigned>(kConjectural) : 0u}};
}

std::vector<OutputRecord> codim1(Codim1Calculator& calc, int genus, int d) {
  const Codim1Report rep = calc.report(genus, d);
  const unsigned base = rep.formal ? static_cast<unsigned>(kFormal) : 0u;
  const unsigned rebuilt = base | (rep.reconstructed ? static_cast<unsigned>(kReconstructed) : 0u);
  const auto rec = [&](const char* tag, const ExactRational& v, unsigned flags) {
    return OutputRecord{tag, genus, d, std::nullopt, std::nullopt, v, flags};
  };
  const auto& deg = rep.degrees;
  std::vector<OutputRecord> out{
      rec("A", deg.A, base),          rec("B", deg.B, base),   rec("C", deg.C, base),
      rec("Delta", deg.Delta, rebuilt), rec("TL", deg.TL, base), rec("CU", rep.cusps, rebuilt),
  };
  if (rep.triple) out.push_back(rec("triple", *rep.triple, base | (rep.triple_formal ? kFormal : 0u)));
  out.push_back(rec("g_hat", rep.g_hat, rebuilt));
  out.push_back(rec("g_arith", rep.g_arith, rebuilt));
  if (rep.g_tilde) out.push_back(rec("g_tilde", *rep.g_tilde, base));
  return out;
}

std::vector<std::vector<OutputRecord>> run_grouped(const std::vector<Task>& tasks, unsigned jobs) {
  std::vector<std::vector<OutputRecord>> results(tasks.size());
  std::vector<std::exception_ptr> errors(tasks.size());
  const auto work = [&](std::size_t idx) {
    try {
      results[idx] = tasks[idx]();
    } catch (...) {
      errors[idx] = std::current_exception();
    }
  };

  if (jobs <= 1 || tasks.size() <= 1) {
    for (std::size_t i = 0; i < tasks.size(); ++i) work(i);
  } else {
    std::atomic<std::size_t> next{0};
    std::vector<std::jthread> pool;
    const std::size_t threads = std::min<std::size_t>(jobs, tasks.size());
    for (std::size_t t = 0; t < threads; ++t) {
      pool.emplace_back([&] {
        for (std::size_t i = next++; i < tasks.size(); i = next++) work(i);
      });
    }
  }

  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  return results;
}

std::vector<OutputRecord> run_tasks(const std::vector<Task>& tasks, unsigned jobs) {
  std::vector<OutputRecord> out;
  for (auto& group : run_grouped(tasks, jobs)) {
    out.insert(out.end(), std::make_move_iterator(group.begin()), std::make_move_iterator(group.end()));
  }
  return out;
}

}  // namespace lowgenus::tables
