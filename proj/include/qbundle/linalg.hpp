#ifndef QBUNDLE_LINALG_HPP
#define QBUNDLE_LINALG_HPP

#include <algorithm>
#include <functional>
#include <map>
#include <utility>
#include <vector>

#include "qbundle/presentation.hpp"

namespace qb {

// Row echelon form over the parameter field for sparse vectors keyed by K.
// Rows are kept with leading coefficient 1; reduction walks keys from the
// largest down, so each row only ever touches smaller keys.
template <class K, class Less = std::less<K>>
class Echelon {
 public:
  using Vec = std::map<K, ParamScalar, Less>;

  explicit Echelon(Less less = Less()) : less_(less), pivots_(less) {}

  Vec reduce(const Vec& v) const {
    Vec work = v;
    Vec out(less_);
    while (!work.empty()) {
      auto it = std::prev(work.end());
      K k = it->first;
      ParamScalar c = it->second;
      work.erase(it);
      auto p = pivots_.find(k);
      if (p == pivots_.end()) {
        out.emplace(k, c);
        continue;
      }
      for (const auto& [k2, c2] : p->second) {
        if (!less_(k2, k)) continue;
        ParamScalar d = c * c2;
        auto [jt, inserted] = work.try_emplace(k2, -d);
        if (!inserted) {
          jt->second -= d;
          if (jt->second.is_zero()) work.erase(jt);
        }
      }
    }
    return out;
  }

  // Adds v to the span; false if it was already there.
  bool insert(const Vec& v) {
    Vec r = reduce(v);
    if (r.empty()) return false;
    auto lead = std::prev(r.end());
    ParamScalar inv = lead->second.inverse();
    for (auto& [k, c] : r) c *= inv;
    K key = lead->first;
    pivots_.emplace(key, std::move(r));
    return true;
  }

  bool contains(const Vec& v) const { return reduce(v).empty(); }
  std::size_t rank() const { return pivots_.size(); }
  Less less() const { return less_; }

 private:
  Less less_;
  std::map<K, Vec, Less> pivots_;
};

using WordEchelon = Echelon<Word, OrderLess>;

inline WordEchelon::Vec as_vec(const NCPoly& e, const Presentation& P) {
  WordEchelon::Vec v{OrderLess{&P}};
  for (const auto& [w, c] : e.terms()) v.emplace(w, c);
  return v;
}

// Basis of the kernel of the linear map sending unit vector j to cols[j].
template <class K, class Less>
std::vector<std::vector<ParamScalar>> nullspace(const std::vector<std::map<K, ParamScalar, Less>>& cols) {
  std::vector<K> keys;
  for (const auto& c : cols)
    for (const auto& [k, v] : c)
      if (std::find(keys.begin(), keys.end(), k) == keys.end()) keys.push_back(k);
  const std::size_t n = cols.size(), m = keys.size();
  std::vector<std::vector<ParamScalar>> a(m, std::vector<ParamScalar>(n));
  for (std::size_t j = 0; j < n; ++j)
    for (const auto& [k, v] : cols[j])
      a[static_cast<std::size_t>(std::find(keys.begin(), keys.end(), k) - keys.begin())][j] = v;
  std::vector<std::size_t> pivot_col;
  std::size_t row = 0;
  for (std::size_t j = 0; j < n && row < m; ++j) {
    std::size_t r = row;
    while (r < m && a[r][j].is_zero()) ++r;
    if (r == m) continue;
    std::swap(a[r], a[row]);
    ParamScalar inv = a[row][j].inverse();
    for (auto& x : a[row]) x *= inv;
    for (std::size_t i = 0; i < m; ++i) {
      if (i == row || a[i][j].is_zero()) continue;
      ParamScalar f = a[i][j];
      for (std::size_t k = 0; k < n; ++k)
        if (!a[row][k].is_zero()) a[i][k] -= f * a[row][k];
    }
    pivot_col.push_back(j);
    ++row;
  }
  std::vector<std::vector<ParamScalar>> basis;
  for (std::size_t j = 0; j < n; ++j) {
    if (std::find(pivot_col.begin(), pivot_col.end(), j) != pivot_col.end()) continue;
    std::vector<ParamScalar> v(n);
    v[j] = 1;
    for (std::size_t r = 0; r < pivot_col.size(); ++r) v[pivot_col[r]] = -a[r][j];
    basis.push_back(std::move(v));
  }
  return basis;
}

}  // namespace qb

#endif
