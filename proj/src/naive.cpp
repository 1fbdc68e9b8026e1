#include "ddaeconn/naive.hpp"

#include <algorithm>
#include <set>

#include "ddaeconn/errors.hpp"

namespace ddaeconn {

namespace {

class SequenceSearch {
 public:
  SequenceSearch(const ShiftingGraph& g, const Matching& m, EqId j, const NaiveOptions& options)
      : g_(g), m_(m), options_(options), covered_{j} {}

  bool run() {
    try {
      extend();
    } catch (const Abort&) {
      return false;
    }
    return true;
  }

  const std::set<Connection>& found() const { return found_; }
  std::uint64_t states() const { return states_; }

 private:
  struct Abort {};

  void extend() {
    ++states_;
    if (options_.max_states != 0 && states_ > options_.max_states) throw Abort{};
    if ((states_ & 0x3ff) == 0 && options_.cancel && options_.cancel()) throw Abort{};

    bool extended = false;
    // Snapshot: covered_ grows during recursion but is restored on return.
    const std::size_t covered_now = covered_.size();
    for (std::size_t c = 0; c < covered_now; ++c) {
      const EqId i = covered_[c];
      const auto own = m_.group_of(i);
      for (const VariableGroup& v : g_.neighbors(i)) {
        if (own && *own == v) continue;
        const auto holder = m_.equation_of(v);
        if (!holder || is_covered(*holder)) continue;
        extended = true;
        sequence_.push_back({i, v, *holder});
        covered_.push_back(*holder);
        extend();
        covered_.pop_back();
        sequence_.pop_back();
      }
    }
    if (!extended) found_.insert(make_connection(sequence_));
  }

  bool is_covered(EqId e) const { return std::find(covered_.begin(), covered_.end(), e) != covered_.end(); }

  const ShiftingGraph& g_;
  const Matching& m_;
  const NaiveOptions& options_;
  std::vector<EqId> covered_;
  std::vector<Triple> sequence_;
  std::set<Connection> found_;
  std::uint64_t states_ = 0;
};

}  // namespace

NaiveResult naive_search(const ShiftingGraph& g, const Matching& m, EqId j, const NaiveOptions& options) {
  if (j < 1 || j > g.n_equations()) throw IndexOutOfRange("equation " + std::to_string(j) + " not in graph");
  if (!is_exposed(g, m, j)) throw NotExposed("F" + std::to_string(j) + " is not exposed");

  SequenceSearch search(g, m, j, options);
  NaiveResult result;
  result.completed = search.run();
  result.states = search.states();

  const ReachReport reach = alternating_reach(g, m, j);
  for (const Connection& c : search.found()) {
    if (verify_connection(c, g, m, j, reach)) result.connections.push_back(c);
  }
  return result;
}

std::vector<Connection> naive_all_connections(const ShiftingGraph& g, const Matching& m, EqId j,
                                              const NaiveOptions& options) {
  NaiveResult r = naive_search(g, m, j, options);
  if (!r.completed) {
    throw LimitExceeded("naive search stopped after " + std::to_string(r.states) + " states");
  }
  return std::move(r.connections);
}

}  // namespace ddaeconn
