#pragma once

#include <utility>
#include <vector>

#include "dgq/algebra.hpp"
#include "dgq/complex.hpp"

namespace dgq {

/// Finite-dimensional right dg module given on a basis. Each basis element x
/// carries a label v with x * e_v = x. The action has no Koszul sign:
/// d(x a) = d(x) a + (-1)^{|x|} x d(a).
struct DgModule {
  AlgebraPtr algebra;
  std::vector<int> degrees;
  std::vector<int> labels;
  std::vector<SparseVector> differential;
  /// action[x] lists the nonzero products (a, x * b_a), sorted by a.
  std::vector<std::vector<std::pair<Index, SparseVector>>> action;

  Index dim() const { return static_cast<Index>(degrees.size()); }
  SparseVector act(Index x, Index a) const;
  SparseVector act(const SparseVector& x, Index a) const;
  SparseVector act(const SparseVector& x, const SparseVector& a) const;
  GradedComplex complex() const { return {degrees, differential}; }

  /// Throws InvalidInput unless this is a dg module (labels, homogeneity,
  /// unit, associativity, Leibniz rule, d^2 = 0).
  void validate() const;
};

/// Builds the action table from a callback returning x * b_a.
template <typename F>
void fill_action(DgModule& m, F&& times) {
  m.action.assign(m.degrees.size(), {});
  for (Index x = 0; x < m.dim(); ++x) {
    for (Index a : m.algebra->left_part(m.labels[x])) {
      SparseVector r = times(x, a);
      if (!r.empty()) m.action[x].emplace_back(a, std::move(r));
    }
  }
}

/// One-dimensional module in degree 0 on which e_i acts as identity and
/// the radical of H^0 together with all other idempotents act as zero.
/// Throws InvalidInput when e_i H^0 e_i is not local of dimension one over its radical.
DgModule simple_module(const AlgebraPtr& a, int i);
DgModule simple_module(const AlgebraPtr& a, const H0Structure& h0, int i);

/// X[k]: degrees lowered by k, differential multiplied by (-1)^k.
DgModule shifted(const DgModule& m, int k);

/// Lowest and highest degree carrying a nonzero space; nothing for the zero module.
std::optional<std::pair<int, int>> degree_span(const DgModule& m);

}  // namespace dgq
