#include "ddaeconn/arborescence_enum.hpp"

#include <algorithm>

#include "ddaeconn/errors.hpp"

namespace ddaeconn {

ArborescenceEnumerator::ArborescenceEnumerator(const Digraph& g)
    : graph_(g), n_(static_cast<int>(g.node_count())) {
  const auto n = static_cast<std::size_t>(n_);
  const std::size_t m = g.arc_count();
  from_.reserve(m);
  to_.reserve(m);
  out_desc_.resize(n);
  in_.resize(n);
  for (const Arc& a : g.arcs()) {
    const int id = static_cast<int>(from_.size());
    from_.push_back(g.index_of(a.from));
    to_.push_back(g.index_of(a.to));
    out_desc_[static_cast<std::size_t>(from_.back())].push_back(id);
    in_[static_cast<std::size_t>(to_.back())].push_back(id);
  }
  // Arcs are pushed in descending head order so that they pop ascending.
  for (auto& out : out_desc_) {
    std::sort(out.begin(), out.end(), [&](int a, int b) { return to_[a] > to_[b]; });
  }
  alive_.assign(m, 1);
  in_tree_.assign(n, 0);
  parent_.assign(n, -1);
  last_parent_.assign(n, -1);
  frontier_.reserve(m);
  removed_.reserve(m);
  processed_.reserve(m);
  scratch_.arcs.reserve(n);
}

std::uint64_t ArborescenceEnumerator::run(NodeId root, const TreeVisitor& visit,
                                          const EnumOptions& options) {
  const int r = graph_.index_of(root);
  if (r < 0) throw RootNotInGraph("root " + std::to_string(root) + " is not a node");

  root_ = r;
  visit_ = &visit;
  options_ = &options;
  count_ = 0;
  stop_ = false;
  completed_ = true;
  scratch_.root = root;
  std::fill(last_parent_.begin(), last_parent_.end(), -1);

  // Growth assumes the graph is rooted at r; otherwise there is no tree.
  std::vector<char> seen(static_cast<std::size_t>(n_), 0);
  std::vector<int> stack{r};
  seen[static_cast<std::size_t>(r)] = 1;
  int reached = 1;
  while (!stack.empty()) {
    const int u = stack.back();
    stack.pop_back();
    for (int a : out_desc_[static_cast<std::size_t>(u)]) {
      auto& s = seen[static_cast<std::size_t>(to_[a])];
      if (!s) {
        s = 1;
        ++reached;
        stack.push_back(to_[a]);
      }
    }
  }

  if (reached == n_) {
    in_tree_[static_cast<std::size_t>(r)] = 1;
    tree_size_ = 1;
    for (int a : out_desc_[static_cast<std::size_t>(r)]) frontier_.push_back(a);
    grow();
    frontier_.clear();
    in_tree_[static_cast<std::size_t>(r)] = 0;
    tree_size_ = 0;
  }

  visit_ = nullptr;
  options_ = nullptr;
  return count_;
}

void ArborescenceEnumerator::emit() {
  if ((options_->limit != 0 && count_ >= options_->limit) || (options_->cancel && options_->cancel())) {
    stop_ = true;
    completed_ = false;
    return;
  }
  last_parent_ = parent_;
  scratch_.arcs.clear();
  for (int v = 0; v < n_; ++v) {
    const int a = parent_[static_cast<std::size_t>(v)];
    if (a >= 0) scratch_.arcs.push_back(arc_at(a));
  }
  std::sort(scratch_.arcs.begin(), scratch_.arcs.end());
  ++count_;
  (*visit_)(scratch_);
}

void ArborescenceEnumerator::grow() {
  if (tree_size_ == n_) {
    emit();
    return;
  }

  const std::size_t processed_mark = processed_.size();
  bool bridge = false;
  do {
    const int e = frontier_.back();
    frontier_.pop_back();
    const int v = to_[e];
    in_tree_[static_cast<std::size_t>(v)] = 1;
    parent_[static_cast<std::size_t>(v)] = e;
    ++tree_size_;

    // Drop every other frontier arc entering v, remembering its position.
    const std::size_t removed_mark = removed_.size();
    std::size_t keep = 0;
    for (std::size_t pos = 0; pos < frontier_.size(); ++pos) {
      const int a = frontier_[pos];
      if (to_[a] == v) {
        removed_.push_back({pos, a});
      } else {
        frontier_[keep++] = a;
      }
    }
    frontier_.resize(keep);

    std::size_t pushed = 0;
    for (int a : out_desc_[static_cast<std::size_t>(v)]) {
      if (alive_[static_cast<std::size_t>(a)] && !in_tree_[static_cast<std::size_t>(to_[a])]) {
        frontier_.push_back(a);
        ++pushed;
      }
    }

    grow();

    frontier_.resize(frontier_.size() - pushed);

    // Merge the removed arcs back in at their original positions.
    const std::size_t k = removed_.size() - removed_mark;
    if (k > 0) {
      std::size_t src = frontier_.size();
      std::size_t dst = src + k;
      std::size_t pending = k;
      frontier_.resize(dst);
      while (pending > 0) {
        --dst;
        const Removed& r = removed_[removed_mark + pending - 1];
        if (r.position == dst) {
          frontier_[dst] = r.arc;
          --pending;
        } else {
          frontier_[dst] = frontier_[--src];
        }
      }
      removed_.resize(removed_mark);
    }

    in_tree_[static_cast<std::size_t>(v)] = 0;
    parent_[static_cast<std::size_t>(v)] = -1;
    --tree_size_;
    alive_[static_cast<std::size_t>(e)] = 0;
    processed_.push_back(e);

    if (stop_) break;
    bridge = bridge_test(e);
    if (options_->on_bridge) options_->on_bridge(*this, arc_at(e), bridge);
  } while (!bridge);

  while (processed_.size() > processed_mark) {
    const int e = processed_.back();
    processed_.pop_back();
    frontier_.push_back(e);
    alive_[static_cast<std::size_t>(e)] = 1;
  }
}

bool ArborescenceEnumerator::bridge_test(int arc_index) const {
  const int v = to_[arc_index];
  for (int a : in_[static_cast<std::size_t>(v)]) {
    if (!alive_[static_cast<std::size_t>(a)]) continue;
    // Walk from the tail up the last tree; meeting v means it is a descendant.
    int u = from_[a];
    bool descendant = false;
    while (u != root_) {
      if (u == v) {
        descendant = true;
        break;
      }
      u = from_[last_parent_[static_cast<std::size_t>(u)]];
    }
    if (!descendant) return false;
  }
  return true;
}

Digraph ArborescenceEnumerator::working_graph() const {
  std::vector<Arc> arcs;
  for (std::size_t a = 0; a < alive_.size(); ++a) {
    if (alive_[a]) arcs.push_back(arc_at(static_cast<int>(a)));
  }
  return Digraph(std::vector<NodeId>(graph_.nodes().begin(), graph_.nodes().end()), std::move(arcs));
}

std::vector<Arc> ArborescenceEnumerator::partial_tree() const {
  std::vector<Arc> arcs;
  for (int a : parent_) {
    if (a >= 0) arcs.push_back(arc_at(a));
  }
  std::sort(arcs.begin(), arcs.end());
  return arcs;
}

Arborescence ArborescenceEnumerator::last_tree() const {
  Arborescence t;
  t.root = root_ >= 0 ? node_id(root_) : 0;
  for (int a : last_parent_) {
    if (a >= 0) t.arcs.push_back(arc_at(a));
  }
  std::sort(t.arcs.begin(), t.arcs.end());
  return t;
}

std::uint64_t enumerate_arborescences(const Digraph& g, NodeId root, const TreeVisitor& visit,
                                      const EnumOptions& options) {
  ArborescenceEnumerator e(g);
  return e.run(root, visit, options);
}

}  // namespace ddaeconn
