#pragma once

#include <numeric>
#include <vector>

namespace cellab {

class UnionFind {
 public:
  explicit UnionFind(int n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }

  int find(int x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }

  // merges so that the smaller index stays the representative
  void merge(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    if (b < a) std::swap(a, b);
    parent_[b] = a;
  }

  bool connected(int a, int b) { return find(a) == find(b); }

  // classes ordered by representative, members ascending
  std::vector<std::vector<int>> classes() {
    int n = static_cast<int>(parent_.size());
    std::vector<std::vector<int>> by_rep(n);
    for (int i = 0; i < n; ++i) by_rep[find(i)].push_back(i);
    std::vector<std::vector<int>> out;
    for (auto& c : by_rep)
      if (!c.empty()) out.push_back(std::move(c));
    return out;
  }

 private:
  std::vector<int> parent_;
};

}  // namespace cellab
