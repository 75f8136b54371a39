#include "convexcover/forest.hpp"

#include <algorithm>
#include <stdexcept>

namespace convexcover {

MergeForest::MergeForest(int n_leaves) : n_leaves_(n_leaves) {
  if (n_leaves < 0) throw std::invalid_argument("MergeForest: negative leaf count");
  parent_.resize(static_cast<std::size_t>(n_leaves));
  size_.assign(static_cast<std::size_t>(n_leaves), 1);
  nodes_.assign(static_cast<std::size_t>(n_leaves), Node{});
  hist_of_root_.resize(static_cast<std::size_t>(n_leaves));
  for (int i = 0; i < n_leaves; ++i) {
    parent_[static_cast<std::size_t>(i)] = i;
    hist_of_root_[static_cast<std::size_t>(i)] = i;
  }
}

int MergeForest::find(int id) const {
  if (id < 0 || id >= n_leaves_) throw std::out_of_range("MergeForest::find: bad id");
  int x = id;
  while (parent_[static_cast<std::size_t>(x)] != x) {
    // path halving
    int p = parent_[static_cast<std::size_t>(x)];
    parent_[static_cast<std::size_t>(x)] = parent_[static_cast<std::size_t>(p)];
    x = parent_[static_cast<std::size_t>(x)];
  }
  return x;
}

int MergeForest::merge(int a, int b) {
  int ra = find(a);
  int rb = find(b);
  if (ra == rb) throw std::invalid_argument("MergeForest::merge: same component");
  int id = node_count();
  nodes_.push_back(Node{hist_of_root_[static_cast<std::size_t>(ra)],
                        hist_of_root_[static_cast<std::size_t>(rb)]});
  if (size_[static_cast<std::size_t>(ra)] < size_[static_cast<std::size_t>(rb)]) std::swap(ra, rb);
  parent_[static_cast<std::size_t>(rb)] = ra;
  size_[static_cast<std::size_t>(ra)] += size_[static_cast<std::size_t>(rb)];
  hist_of_root_[static_cast<std::size_t>(ra)] = id;
  return id;
}

int MergeForest::history_root(int id) const {
  return hist_of_root_[static_cast<std::size_t>(find(id))];
}

std::vector<int> MergeForest::leaves_under(int node_id) const {
  if (node_id < 0 || node_id >= node_count())
    throw std::out_of_range("MergeForest::leaves_under: bad node");
  std::vector<int> out;
  std::vector<int> stack{node_id};
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    const Node& n = nodes_[static_cast<std::size_t>(v)];
    if (n.left < 0) {
      out.push_back(v);
    } else {
      stack.push_back(n.left);
      stack.push_back(n.right);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::vector<int>> MergeForest::groups() const {
  std::vector<std::vector<int>> by_root(static_cast<std::size_t>(n_leaves_));
  for (int i = 0; i < n_leaves_; ++i) by_root[static_cast<std::size_t>(find(i))].push_back(i);
  std::vector<std::vector<int>> out;
  for (auto& g : by_root)
    if (!g.empty()) out.push_back(std::move(g));
  // by_root is indexed by root id; each group's least leaf is ordered with it
  std::sort(out.begin(), out.end(),
            [](const std::vector<int>& a, const std::vector<int>& b) { return a[0] < b[0]; });
  return out;
}

}  // namespace convexcover
