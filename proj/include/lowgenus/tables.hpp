#pragma once

#include <functional>
#include <vector>

#include "lowgenus/codim1.hpp"
#include "lowgenus/genus1.hpp"
#include "lowgenus/memo_store.hpp"
#include "lowgenus/output.hpp"

namespace lowgenus::tables {

// With `characteristic` set, every (a,b) on the dimension law in order of
// descending a (incidences only first, tangencies only last); otherwise the
// single incidence-only number.
std::vector<OutputRecord> rational(MemoStore& store, int d, bool characteristic);
std::vector<OutputRecord> node_point(MemoStore& store, int d, bool characteristic);
std::vector<OutputRecord> node_line(MemoStore& store, int d, bool characteristic);
std::vector<OutputRecord> elliptic(MemoStore& store, int d, bool characteristic);
std::vector<OutputRecord> fixed_j(MemoStore& store, int d, bool characteristic,
                                  genus1::JClass j_class = genus1::JClass::Generic);

std::vector<OutputRecord> hurwitz(MemoStore& store, int genus, int d);

// A, B, C, Delta, TL, CU, [triple], g_hat, g_arith, [g_tilde].
std::vector<OutputRecord> codim1(Codim1Calculator& calc, int genus, int d);

using Task = std::function<std::vector<OutputRecord>()>;

// Runs the tasks on up to `jobs` threads; result i is the output of task i,
// so nothing depends on scheduling.  The first failing task's exception (in
// task order) is rethrown.
std::vector<std::vector<OutputRecord>> run_grouped(const std::vector<Task>& tasks, unsigned jobs);

// run_grouped() concatenated in task order.
std::vector<OutputRecord> run_tasks(const std::vector<Task>& tasks, unsigned jobs);

}  // namespace lowgenus::tables
