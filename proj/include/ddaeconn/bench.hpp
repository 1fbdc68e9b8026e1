#pragma once

#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

#include "ddaeconn/scenario.hpp"

namespace ddaeconn {

enum class BenchMethod { Grow, Naive };

std::string to_string(BenchMethod m);

struct BenchRecord {
  ScenarioKind kind = ScenarioKind::Banded;
  int n = 0;
  BenchMethod method = BenchMethod::Grow;
  /// Number of connections; a lower bound when !completed.
  std::uint64_t count = 0;
  double elapsed_s = 0.0;
  bool completed = true;
};

/// Connection count for one scenario size. Grow counts trees of the
/// connection graph without materializing them; the time limit aborts the
/// cell cleanly and marks it incomplete.
BenchRecord run_bench_cell(ScenarioKind kind, int n, BenchMethod method, double time_limit_s);

/// One record per (n, method), ordered by n then method. Throws BadSize if
/// n_from > n_to or n_from < 2.
std::vector<BenchRecord> run_bench(ScenarioKind kind, int n_from, int n_to,
                                   const std::vector<BenchMethod>& methods,
                                   double time_limit_s = 600.0);

/// Header "kind,n,method,count,elapsed_s,completed" followed by one row per
/// record.
void write_bench_csv(std::ostream& out, const std::vector<BenchRecord>& records);

}  // namespace ddaeconn
