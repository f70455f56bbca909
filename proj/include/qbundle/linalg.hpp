#pragma once

#include <functional>
#include <iterator>
#include <map>
#include <vector>

#include "qbundle/element.hpp"
#include "qbundle/tensor.hpp"

namespace qbundle {

// Sparse exact linear algebra over Q(q, s). Vectors are Elements or
// TensorElements; the coordinates are their words. Rows are kept monic and
// keyed by their largest coordinate, so pivot choice is deterministic and
// remainders are canonical.

template <class Vec>
class EchelonBasis {
 public:
  using Key = typename Vec::Terms::key_type;

  std::size_t size() const { return rows_.size(); }
  const std::map<Key, Vec>& rows() const { return rows_; }
  bool is_pivot(const Key& k) const { return rows_.count(k) > 0; }

  /// Remainder of v with every pivot coordinate cleared.
  Vec reduce(Vec v) const {
    if (v.is_zero()) return v;
    auto it = v.terms().end();
    while (true) {
      // Largest coordinate of v that is a pivot, scanning downwards.
      bool found = false;
      while (it != v.terms().begin()) {
        --it;
        if (rows_.count(it->first)) {
          found = true;
          break;
        }
      }
      if (!found) return v;
      Key k = it->first;
      const Vec& row = rows_.at(k);
      v.add_scaled(row, -v.terms().at(k));
      it = v.terms().lower_bound(k);
    }
  }

  /// Adds v to the span; returns false when v was already in it.
  bool insert(const Vec& v) {
    Vec r = reduce(v);
    if (r.is_zero()) return false;
    Key k = std::prev(r.terms().end())->first;
    r *= std::prev(r.terms().end())->second.inverse();
    rows_.emplace(k, std::move(r));
    return true;
  }

  bool contains(const Vec& v) const { return reduce(v).is_zero(); }

 private:
  std::map<Key, Vec> rows_;
};

template <class Vec>
std::size_t rank(const std::vector<Vec>& vectors) {
  EchelonBasis<Vec> b;
  for (const auto& v : vectors) b.insert(v);
  return b.size();
}

/// Reduced row echelon form (monic, every pivot cleared from the other rows),
/// ordered by increasing pivot.
template <class Vec>
std::vector<Vec> reduced_echelon(const std::vector<Vec>& vectors) {
  EchelonBasis<Vec> b;
  for (const auto& v : vectors) b.insert(v);
  auto rows = b.rows();
  for (auto it = rows.begin(); it != rows.end(); ++it) {
    for (auto jt = std::next(it); jt != rows.end(); ++jt) {
      auto c = jt->second.terms().find(it->first);
      if (c != jt->second.terms().end()) jt->second.add_scaled(it->second, -Scalar(c->second));
    }
  }
  std::vector<Vec> out;
  for (auto& [k, v] : rows) out.push_back(std::move(v));
  return out;
}

/// Basis of { x in span(basis) : f(x) = 0 } for a linear map given on the
/// basis keys, in reduced echelon form. `Comb` is the vector type of the
/// domain (Element for words, TensorElement for tuples of words).
template <class Vec, class Comb = Element>
std::vector<Comb> kernel(const std::vector<typename Comb::Terms::key_type>& basis,
                         const std::function<Vec(const typename Comb::Terms::key_type&)>& f) {
  using Key = typename Vec::Terms::key_type;
  // Rows carry the combination of basis keys that produced them.
  std::map<Key, std::pair<Vec, Comb>> rows;
  std::vector<Comb> found;
  for (const auto& w : basis) {
    Vec v = f(w);
    Comb comb;
    comb.add(w, Scalar(1));
    while (!v.is_zero()) {
      auto it = v.terms().end();
      bool hit = false;
      while (it != v.terms().begin()) {
        --it;
        if (rows.count(it->first)) {
          hit = true;
          break;
        }
      }
      if (!hit) break;
      const auto& [rv, rc] = rows.at(it->first);
      Scalar c = -it->second;
      v.add_scaled(rv, c);
      comb.add_scaled(rc, c);
    }
    if (v.is_zero()) {
      found.push_back(std::move(comb));
    } else {
      Scalar inv = std::prev(v.terms().end())->second.inverse();
      Key k = std::prev(v.terms().end())->first;
      v *= inv;
      comb *= inv;
      rows.emplace(k, std::make_pair(std::move(v), std::move(comb)));
    }
  }
  return reduced_echelon(found);
}

}  // namespace qbundle
