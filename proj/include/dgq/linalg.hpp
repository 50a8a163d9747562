#pragma once

#include <map>
#include <utility>
#include <vector>

#include <Eigen/Core>
#include <boost/multiprecision/eigen.hpp>

#include "dgq/errors.hpp"
#include "dgq/rational.hpp"
#include "dgq/sparse.hpp"

namespace dgq {

template <typename Scalar>
using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
template <typename Scalar>
using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

using QMatrix = Matrix<Rational>;
using QVector = Vector<Rational>;

/// Reduced row echelon form together with the pivot columns. Exact only for
/// exact field scalars (Rational); no pivoting strategy beyond "first nonzero".
template <typename Derived>
std::pair<Matrix<typename Derived::Scalar>, std::vector<Eigen::Index>> reduced_row_echelon(
    const Eigen::MatrixBase<Derived>& input) {
  using Scalar = typename Derived::Scalar;
  Matrix<Scalar> m = input;
  std::vector<Eigen::Index> pivots;
  Eigen::Index row = 0;
  for (Eigen::Index col = 0; col < m.cols() && row < m.rows(); ++col) {
    Eigen::Index pivot = row;
    while (pivot < m.rows() && m(pivot, col) == Scalar(0)) ++pivot;
    if (pivot == m.rows()) continue;
    m.row(row).swap(m.row(pivot));
    const Scalar inv = Scalar(1) / m(row, col);
    for (Eigen::Index c = col; c < m.cols(); ++c) m(row, c) *= inv;
    for (Eigen::Index r = 0; r < m.rows(); ++r) {
      if (r == row || m(r, col) == Scalar(0)) continue;
      const Scalar f = m(r, col);
      for (Eigen::Index c = col; c < m.cols(); ++c) m(r, c) -= f * m(row, c);
    }
    pivots.push_back(col);
    ++row;
  }
  return {std::move(m), std::move(pivots)};
}

template <typename Derived>
Eigen::Index rank(const Eigen::MatrixBase<Derived>& m) {
  return static_cast<Eigen::Index>(reduced_row_echelon(m).second.size());
}

/// Basis of the right kernel; its size is cols - rank.
template <typename Derived>
std::vector<Vector<typename Derived::Scalar>> nullspace_basis(const Eigen::MatrixBase<Derived>& m) {
  using Scalar = typename Derived::Scalar;
  auto [rref, pivots] = reduced_row_echelon(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : pivots) is_pivot[p] = true;
  std::vector<Vector<Scalar>> basis;
  for (Eigen::Index free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    Vector<Scalar> v = Vector<Scalar>::Zero(m.cols());
    v(free) = Scalar(1);
    for (std::size_t r = 0; r < pivots.size(); ++r) v(pivots[r]) = -rref(r, free);
    basis.push_back(std::move(v));
  }
  return basis;
}

QMatrix to_dense(const std::vector<SparseVector>& columns, Index rows);

/// One term of a cochain complex: the space in `degree` and its map to the
/// next degree (rows = dimension of the next space).
struct ChainSpace {
  int degree = 0;
  Index dim = 0;
  QMatrix to_next;
};

/// Consecutive degrees, ascending. The last map has zero rows.
using ChainSpaces = std::vector<ChainSpace>;

/// dim H^n for every degree in the complex. Throws InvalidInput if the
/// maps do not compose to zero or have the wrong shape.
std::map<int, Index> cohomology_dims(const ChainSpaces& c);

/// Multiplication table of a finite-dimensional algebra with basis b_0..b_{n-1}:
/// products[i * dim + j] = b_i * b_j.
struct StructureConstants {
  Index dim = 0;
  std::vector<SparseVector> products;
  SparseVector unit;

  const SparseVector& product(Index i, Index j) const { return products[i * dim + j]; }
  SparseVector multiply(const SparseVector& x, const SparseVector& y) const;
};

/// Throws InvalidInput unless the table is associative with the given unit.
void check_associative_unital(const StructureConstants& a);

/// Jacobson radical as the kernel of the trace form (x, y) -> tr(L_{xy}),
/// which is exact in characteristic zero.
std::vector<SparseVector> algebra_radical(const StructureConstants& a);

}  // namespace dgq
