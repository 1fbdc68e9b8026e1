#include "ddaeconn/bench.hpp"

#include <chrono>
#include <iomanip>

#include "ddaeconn/arborescence_enum.hpp"
#include "ddaeconn/connection_graph.hpp"
#include "ddaeconn/errors.hpp"
#include "ddaeconn/naive.hpp"

namespace ddaeconn {

std::string to_string(BenchMethod m) { return m == BenchMethod::Grow ? "grow" : "naive"; }

BenchRecord run_bench_cell(ScenarioKind kind, int n, BenchMethod method, double time_limit_s) {
  using clock = std::chrono::steady_clock;
  const Scenario sc = generate_scenario(kind, n);

  BenchRecord rec;
  rec.kind = kind;
  rec.n = n;
  rec.method = method;

  const auto start = clock::now();
  const auto deadline = start + std::chrono::duration_cast<clock::duration>(
                                    std::chrono::duration<double>(time_limit_s));
  auto expired = [deadline] { return clock::now() >= deadline; };

  if (method == BenchMethod::Grow) {
    const ReachReport reach = alternating_reach(sc.graph, sc.matching, sc.exposed);
    const ConnectionGraph h = build_connection_graph(sc.graph, sc.matching, reach);
    ArborescenceEnumerator enumerator(h.graph);
    EnumOptions options;
    options.cancel = expired;
    rec.count = enumerator.run(h.root, [](const Arborescence&) {}, options);
    rec.completed = enumerator.completed();
  } else {
    NaiveOptions options;
    options.cancel = expired;
    const NaiveResult r = naive_search(sc.graph, sc.matching, sc.exposed, options);
    rec.count = r.connections.size();
    rec.completed = r.completed;
  }
  rec.elapsed_s = std::chrono::duration<double>(clock::now() - start).count();
  return rec;
}

std::vector<BenchRecord> run_bench(ScenarioKind kind, int n_from, int n_to,
                                   const std::vector<BenchMethod>& methods, double time_limit_s) {
  if (n_from < 2 || n_from > n_to) {
    throw BadSize("bench range " + std::to_string(n_from) + ".." + std::to_string(n_to) + " is invalid");
  }
  std::vector<BenchRecord> out;
  for (int n = n_from; n <= n_to; ++n) {
    for (BenchMethod method : methods) out.push_back(run_bench_cell(kind, n, method, time_limit_s));
  }
  return out;
}

void write_bench_csv(std::ostream& out, const std::vector<BenchRecord>& records) {
  out << "kind,n,method,count,elapsed_s,completed\n";
  for (const BenchRecord& r : records) {
    out << to_string(r.kind) << ',' << r.n << ',' << to_string(r.method) << ',' << r.count << ','
        << std::fixed << std::setprecision(6) << r.elapsed_s << std::defaultfloat << ','
        << (r.completed ? "true" : "false") << '\n';
  }
}

}  // namespace ddaeconn
