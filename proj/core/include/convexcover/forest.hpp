#pragma once

#include <vector>

namespace convexcover {

// Union-find over input ids plus a binary reverse-tree merge history.
// Leaves 0..n-1 are the input ids; every merge adds one internal node whose
// children are the merged components' previous history nodes.
class MergeForest {
 public:
  struct Node {
    int left = -1;   // history node ids; -1 for leaves
    int right = -1;
  };

  explicit MergeForest(int n_leaves);

  int leaves() const { return n_leaves_; }
  int node_count() const { return static_cast<int>(nodes_.size()); }
  int merge_count() const { return node_count() - n_leaves_; }

  int find(int id) const;
  bool same(int a, int b) const { return find(a) == find(b); }

  // Unions the two components and records a history node; returns its id.
  // The components must be distinct.
  int merge(int a, int b);

  const Node& node(int id) const { return nodes_.at(static_cast<std::size_t>(id)); }

  // Live history node of id's component.
  int history_root(int id) const;

  // All leaf ids under one history node, ascending.
  std::vector<int> leaves_under(int node_id) const;

  // Leaf ids of every live component, each ascending, ordered by least leaf.
  std::vector<std::vector<int>> groups() const;

 private:
  int n_leaves_;
  mutable std::vector<int> parent_;  // union-find, path halving
  std::vector<int> size_;
  std::vector<Node> nodes_;
  std::vector<int> hist_of_root_;  // union-find root -> history node id
};

}  // namespace convexcover
