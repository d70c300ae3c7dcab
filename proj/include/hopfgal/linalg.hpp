#pragma once

#include <map>
#include <vector>

#include "hopfgal/scalar.hpp"

namespace hopfgal {

// Incremental row echelon form over Q(i)(q) for sparse vectors indexed by an ordered key.
// Each stored row has its largest key as pivot with coefficient 1; pivots are distinct.
template <class Key, class Cmp = std::less<Key>>
class Echelon {
 public:
  using Vec = std::map<Key, Scalar, Cmp>;
  // Combination of inserted vectors, by insertion index.
  using Comb = std::map<size_t, Scalar>;

  struct Reduced {
    Vec residue;
    Comb comb;  // residue = input - sum comb[j] * input_j ... expressed on inserted inputs
  };

  // Reduces v against the stored rows. residue = v - sum_j comb[j] * inserted_j.
  Reduced reduce(Vec v) const {
    Comb comb;
    auto it = v.end();
    while (it != v.begin()) {
      --it;
      auto row = rows_.find(it->first);
      if (row == rows_.end()) continue;
      Key key = it->first;
      Scalar c = it->second;
      for (const auto& [k, a] : row->second.vec) add(v, k, -(c * a));
      for (const auto& [j, a] : row->second.comb) add(comb, j, c * a);
      it = v.lower_bound(key);
    }
    return {std::move(v), std::move(comb)};
  }

  // Inserts v; returns false (and fills the dependency) when v lies in the current span.
  bool insert(const Vec& v, Comb* dependency = nullptr) {
    size_t index = count_++;
    Reduced r = reduce(v);
    if (r.residue.empty()) {
      if (dependency) *dependency = std::move(r.comb);
      return false;
    }
    Scalar inv = r.residue.rbegin()->second.inverse();
    Row row;
    for (auto& [k, a] : r.residue) row.vec.emplace(k, a * inv);
    for (auto& [j, a] : r.comb) row.comb.emplace(j, -(a * inv));
    row.comb[index] = inv;
    Key pivot = r.residue.rbegin()->first;
    rows_.emplace(pivot, std::move(row));
    return true;
  }

  bool contains(const Vec& v) const { return reduce(v).residue.empty(); }
  size_t rank() const { return rows_.size(); }

 private:
  struct Row {
    Vec vec;
    Comb comb;  // vec = sum comb[j] * inserted_j
  };

  template <class M, class K>
  static void add(M& m, const K& k, const Scalar& c) {
    if (c.is_zero()) return;
    auto [it, fresh] = m.try_emplace(k, c);
    if (!fresh) {
      it->second += c;
      if (it->second.is_zero()) m.erase(it);
    }
  }

  std::map<Key, Row, Cmp> rows_;
  size_t count_ = 0;
};

}  // namespace hopfgal
