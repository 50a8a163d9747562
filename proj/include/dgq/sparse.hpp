#pragma once

#include <cstddef>
#include <map>
#include <vector>

#include "dgq/rational.hpp"

namespace dgq {

using Index = std::ptrdiff_t;

/// Exact sparse vector; zero coefficients are never stored.
class SparseVector {
 public:
  using Storage = std::map<Index, Rational>;
  using const_iterator = Storage::const_iterator;

  SparseVector() = default;
  static SparseVector unit(Index i, const Rational& c = Rational(1));

  bool empty() const { return entries_.empty(); }
  std::size_t size() const { return entries_.size(); }
  const_iterator begin() const { return entries_.begin(); }
  const_iterator end() const { return entries_.end(); }

  Rational coeff(Index i) const;
  Index leading_index() const { return entries_.begin()->first; }
  const Rational& leading_coeff() const { return entries_.begin()->second; }

  void add(Index i, const Rational& c);
  void axpy(const Rational& c, const SparseVector& x);
  void scale(const Rational& c);

  SparseVector& operator+=(const SparseVector& x);
  SparseVector& operator-=(const SparseVector& x);
  friend SparseVector operator+(SparseVector a, const SparseVector& b) { return a += b; }
  friend SparseVector operator-(SparseVector a, const SparseVector& b) { return a -= b; }
  friend SparseVector operator*(const Rational& c, SparseVector a) {
    a.scale(c);
    return a;
  }
  SparseVector operator-() const;
  friend bool operator==(const SparseVector& a, const SparseVector& b) { return a.entries_ == b.entries_; }

  const Storage& entries() const { return entries_; }

 private:
  Storage entries_;
};

/// Incremental row echelon basis of a subspace. Each stored row keeps, when
/// ids are supplied on insertion, its expansion in the inserted vectors so
/// that reductions report coordinates.
class EchelonBasis {
 public:
  /// Returns true when `v` was independent of the current span.
  bool insert(const SparseVector& v, Index id = -1);

  /// Reduces `v` against the basis. On return
  /// v = remainder + sum_k combination[k] * (vector inserted with id k).
  SparseVector reduce(SparseVector v, SparseVector* combination = nullptr) const;

  bool contains(const SparseVector& v) const { return reduce(v).empty(); }
  Index rank() const { return static_cast<Index>(rows_.size()); }

 private:
  struct Row {
    SparseVector vec;
    SparseVector combination;
  };
  std::map<Index, Row> rows_;  // keyed by pivot
};

/// Basis of the kernel of the map sending e_k to columns[k].
std::vector<SparseVector> kernel_basis(const std::vector<SparseVector>& columns);

Index rank_of(const std::vector<SparseVector>& vectors);

}  // namespace dgq
