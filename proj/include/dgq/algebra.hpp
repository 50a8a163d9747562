#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "dgq/quiver.hpp"
#include "dgq/sparse.hpp"

namespace dgq {

/// Basis element of e_left A e_right. For a path algebra a path i -> j has
/// right = i and left = j.
struct BasisElement {
  int degree = 0;
  int left = 0;
  int right = 0;
  std::string name;
};

/// Nonzero products b_a * b_b, keyed by (a, b).
using ProductTable = std::map<std::pair<Index, Index>, SparseVector>;

/// Finite-dimensional dg algebra with a basis adapted to a complete set of
/// orthogonal idempotents. Products are "a after b"; d(ab) = d(a)b + (-1)^{|a|} a d(b).
class FinDimDgAlgebra {
 public:
  FinDimDgAlgebra(std::vector<std::string> vertices, std::vector<BasisElement> basis, std::vector<Index> idempotents,
                  const ProductTable& products, std::vector<SparseVector> differential,
                  std::optional<int> gl_dim_hint = std::nullopt);

  Index dim() const { return static_cast<Index>(basis_.size()); }
  int vertex_count() const { return static_cast<int>(vertices_.size()); }
  const std::vector<std::string>& vertices() const { return vertices_; }
  int vertex(const std::string& label) const;  // throws InvalidInput

  const BasisElement& element(Index a) const { return basis_[a]; }
  const std::vector<BasisElement>& basis() const { return basis_; }
  Index idempotent(int v) const { return idempotents_[v]; }
  std::optional<int> gl_dim_hint() const { return gl_dim_hint_; }

  /// b_a * b_b; an empty vector when the product vanishes.
  const SparseVector& product(Index a, Index b) const;
  /// Nonzero products b_a * b_x, over x.
  const std::vector<std::pair<Index, SparseVector>>& products_from_left(Index a) const { return by_left_[a]; }
  /// Nonzero products b_x * b_a, over x.
  const std::vector<std::pair<Index, SparseVector>>& products_from_right(Index a) const { return by_right_[a]; }
  SparseVector multiply(const SparseVector& x, const SparseVector& y) const;

  const SparseVector& d(Index a) const { return differential_[a]; }
  SparseVector d(const SparseVector& x) const;

  /// Basis indices of e_left A e_right.
  const std::vector<Index>& block(int left, int right) const { return blocks_[left * vertex_count() + right]; }
  /// Basis of the right module e_v A, and its position lookup.
  const std::vector<Index>& left_part(int v) const { return left_parts_[v]; }
  Index left_position(Index a) const { return left_position_[a]; }
  /// Basis of the left module A e_v, and its position lookup.
  const std::vector<Index>& right_part(int v) const { return right_parts_[v]; }
  Index right_position(Index a) const { return right_position_[a]; }

  std::string describe(const SparseVector& x) const;

  /// Throws InvalidInput on a broken axiom (unit, idempotents, blocks,
  /// degrees, associativity, Leibniz rule, d^2 = 0).
  void validate() const;

 private:
  std::vector<std::string> vertices_;
  std::vector<BasisElement> basis_;
  std::vector<Index> idempotents_;
  std::vector<std::vector<std::pair<Index, SparseVector>>> by_left_, by_right_;
  std::vector<SparseVector> differential_;
  std::optional<int> gl_dim_hint_;
  std::vector<std::vector<Index>> blocks_, left_parts_, right_parts_;
  std::vector<Index> left_position_, right_position_;
};

using AlgebraPtr = std::shared_ptr<const FinDimDgAlgebra>;

/// Path algebra with the Leibniz differential. Idempotents come first, in
/// vertex order. Throws EngineIneligible (with the cycle) on cyclic quivers
/// and InvalidInput on invalid ones.
AlgebraPtr algebra_from_quiver(const DgQuiver& q);

/// dim H^0(e_j A e_i).
Index h0_dimension(const FinDimDgAlgebra& a, int i, int j);

/// Degree-zero cohomology of a connective algebra, with the Jacobson radical
/// lifted to degree-zero cochains.
struct H0Structure {
  /// Lifts of a basis of H^0, one block at a time, idempotents first.
  std::vector<SparseVector> representatives;
  std::vector<std::pair<int, int>> representative_block;  // (left, right)
  /// Block-homogeneous degree-zero elements whose classes span rad H^0.
  std::vector<SparseVector> radical;
  std::vector<std::pair<int, int>> radical_block;
  /// Per vertex v: dim e_v H^0 e_v and dim of its radical part.
  std::vector<Index> local_dim, local_radical_dim;

  bool elementary() const;
};

/// Throws InvalidInput when the algebra has positive-degree cochains.
H0Structure h0_structure(const FinDimDgAlgebra& a);

}  // namespace dgq
