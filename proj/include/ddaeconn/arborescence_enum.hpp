#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "ddaeconn/digraph.hpp"

namespace ddaeconn {

using TreeVisitor = std::function<void(const Arborescence&)>;

class ArborescenceEnumerator;

/// Fired after every bridge test. `arc` has already been deleted from the
/// working graph; the enumerator can be inspected for the current state.
using BridgeObserver =
    std::function<void(const ArborescenceEnumerator&, const Arc& arc, bool is_bridge)>;

struct EnumOptions {
  /// Maximum number of emitted trees; 0 means unlimited.
  std::uint64_t limit = 0;
  /// Polled before every emission; returning true aborts the run.
  std::function<bool()> cancel;
  BridgeObserver on_bridge;
};

/// Enumerates every spanning arborescence of a digraph rooted at a given node
/// by depth-first growth of a partial tree with a frontier stack, deleting
/// processed arcs and stopping at the first arc that the last emitted tree
/// proves to be a bridge (Gabow-Myers). Each tree is emitted exactly once.
///
/// Working memory is O(|V| + |E|) and allocated up front; nothing is
/// allocated per tree. The working graph is restored after every run,
/// including runs aborted through a limit or cancellation.
class ArborescenceEnumerator {
 public:
  explicit ArborescenceEnumerator(const Digraph& g);

  /// Returns the number of emitted trees. Throws RootNotInGraph.
  std::uint64_t run(NodeId root, const TreeVisitor& visit, const EnumOptions& options = {});

  /// False if the last run stopped early because of the limit or cancel.
  bool completed() const { return completed_; }

  const Digraph& graph() const { return graph_; }
  /// Input graph minus the arcs currently deleted by the enumeration.
  Digraph working_graph() const;
  /// Arcs of the partial tree currently being grown.
  std::vector<Arc> partial_tree() const;
  /// Last tree emitted (the L of the bridge test).
  Arborescence last_tree() const;

 private:
  void grow();
  void emit();
  bool bridge_test(int arc_index) const;
  Arc arc_at(int a) const { return {node_id(from_[a]), node_id(to_[a])}; }
  NodeId node_id(int v) const { return graph_.nodes()[static_cast<std::size_t>(v)]; }

  struct Removed {
    std::size_t position;
    int arc;
  };

  Digraph graph_;
  int n_ = 0;
  int root_ = -1;
  std::vector<int> from_, to_;
  std::vector<std::vector<int>> out_desc_;  // out-arcs by descending head
  std::vector<std::vector<int>> in_;        // in-arcs
  std::vector<char> alive_;
  std::vector<char> in_tree_;
  std::vector<int> parent_;       // arc into node in T, -1 if none
  std::vector<int> last_parent_;  // arc into node in L
  int tree_size_ = 0;

  std::vector<int> frontier_;
  std::vector<Removed> removed_;
  std::vector<int> processed_;

  Arborescence scratch_;
  const TreeVisitor* visit_ = nullptr;
  const EnumOptions* options_ = nullptr;
  std::uint64_t count_ = 0;
  bool stop_ = false;
  bool completed_ = true;
};

/// Convenience wrapper around ArborescenceEnumerator.
std::uint64_t enumerate_arborescences(const Digraph& g, NodeId root, const TreeVisitor& visit,
                                      const EnumOptions& options = {});

}  // namespace ddaeconn
