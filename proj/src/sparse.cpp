#include "dgq/sparse.hpp"

namespace dgq {

SparseVector SparseVector::unit(Index i, const Rational& c) {
  SparseVector v;
  v.add(i, c);
  return v;
}

Rational SparseVector::coeff(Index i) const {
  auto it = entries_.find(i);
  return it == entries_.end() ? Rational(0) : it->second;
}

void SparseVector::add(Index i, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = entries_.try_emplace(i, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) entries_.erase(it);
  }
}

void SparseVector::axpy(const Rational& c, const SparseVector& x) {
  if (c == 0) return;
  for (const auto& [i, v] : x.entries_) add(i, c * v);
}

void SparseVector::scale(const Rational& c) {
  if (c == 0) {
    entries_.clear();
    return;
  }
  for (auto& entry : entries_) entry.second *= c;
}

SparseVector& SparseVector::operator+=(const SparseVector& x) {
  for (const auto& [i, v] : x.entries_) add(i, v);
  return *this;
}

SparseVector& SparseVector::operator-=(const SparseVector& x) {
  for (const auto& [i, v] : x.entries_) add(i, -v);
  return *this;
}

SparseVector SparseVector::operator-() const {
  SparseVector r = *this;
  for (auto& entry : r.entries_) entry.second = -entry.second;
  return r;
}

SparseVector EchelonBasis::reduce(SparseVector v, SparseVector* combination) const {
  if (combination) *combination = SparseVector();
  auto it = v.begin();
  while (it != v.end()) {
    auto row = rows_.find(it->first);
    if (row == rows_.end()) {
      ++it;
      continue;
    }
    const Index pivot = it->first;
    const Rational factor = it->second;  // rows are normalized to pivot 1
    v.axpy(-factor, row->second.vec);
    if (combination) combination->axpy(factor, row->second.combination);
    it = v.entries().lower_bound(pivot);
  }
  return v;
}

bool EchelonBasis::insert(const SparseVector& v, Index id) {
  SparseVector combination;
  SparseVector rest = reduce(v, id >= 0 ? &combination : nullptr);
  if (rest.empty()) return false;
  Row row;
  if (id >= 0) {
    row.combination = SparseVector::unit(id);
    row.combination -= combination;
  }
  const Rational inv = Rational(1) / rest.leading_coeff();
  rest.scale(inv);
  row.combination.scale(inv);
  const Index pivot = rest.leading_index();
  row.vec = std::move(rest);
  rows_.emplace(pivot, std::move(row));
  return true;
}

std::vector<SparseVector> kernel_basis(const std::vector<SparseVector>& columns) {
  EchelonBasis basis;
  std::vector<SparseVector> kernel;
  for (Index k = 0; k < static_cast<Index>(columns.size()); ++k) {
    SparseVector combination;
    if (basis.reduce(columns[k], &combination).empty()) {
      SparseVector kv = SparseVector::unit(k);
      kv -= combination;
      kernel.push_back(std::move(kv));
    } else {
      basis.insert(columns[k], k);
    }
  }
  return kernel;
}

Index rank_of(const std::vector<SparseVector>& vectors) {
  EchelonBasis basis;
  for (const auto& v : vectors) basis.insert(v);
  return basis.rank();
}

}  // namespace dgq
