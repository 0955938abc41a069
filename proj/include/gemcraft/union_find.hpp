#pragma once

#include <numeric>
#include <vector>

namespace gemcraft {

class UnionFind {
 public:
  explicit UnionFind(int n = 0) : parent_(n), rank_(n, 0), components_(n) {
    std::iota(parent_.begin(), parent_.end(), 0);
  }

  void reset() {
    std::iota(parent_.begin(), parent_.end(), 0);
    std::fill(rank_.begin(), rank_.end(), 0);
    components_ = static_cast<int>(parent_.size());
  }

  int find(int x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }

  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    if (rank_[a] < rank_[b]) std::swap(a, b);
    parent_[b] = a;
    if (rank_[a] == rank_[b]) ++rank_[a];
    --components_;
    return true;
  }

  int size() const { return static_cast<int>(parent_.size()); }
  int components() const { return components_; }

  /// Dense relabelling 0..k-1 of the classes, ordered by least member.
  std::vector<int> labels() {
    std::vector<int> out(parent_.size(), -1), root_label(parent_.size(), -1);
    int next = 0;
    for (int i = 0; i < size(); ++i) {
      int r = find(i);
      if (root_label[r] < 0) root_label[r] = next++;
      out[i] = root_label[r];
    }
    return out;
  }

 private:
  std::vector<int> parent_;
  std::vector<int> rank_;
  int components_;
};

}  // namespace gemcraft
