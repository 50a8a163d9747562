#pragma once

#include <map>
#include <tuple>
#include <utility>
#include <vector>

#include "dgq/algebra.hpp"
#include "dgq/complex.hpp"
#include "dgq/module.hpp"

namespace dgq {

/// Generator e_v A[shift]; as an element it sits in degree -shift.
struct Generator {
  int vertex = 0;
  int shift = 0;
  friend bool operator==(const Generator&, const Generator&) = default;
};

/// Matrix of algebra elements indexed (row, column).
using AlgebraMatrix = std::map<std::pair<int, int>, SparseVector>;

/// Twisted complex of shifted indecomposable projectives. The twist entry
/// (r, c) lies in e_{v_r} A e_{v_c}, has degree s_r - s_c + 1 and vanishes
/// unless r < c. The differential of the generator g_c is sum_r g_r * twist(r, c).
struct SemifreeModule {
  AlgebraPtr algebra;
  std::vector<Generator> generators;
  AlgebraMatrix twist;

  int size() const { return static_cast<int>(generators.size()); }
  /// Throws InvalidInput on a degree, block, triangularity or
  /// Maurer-Cartan violation.
  void validate() const;
  /// d(twist) + twist^2, with d(twist)(r, c) = (-1)^{s_r} d(twist(r, c)).
  AlgebraMatrix maurer_cartan_defect() const;
};

SemifreeModule free_module(const AlgebraPtr& a, int vertex, int shift = 0);
SemifreeModule shifted(const SemifreeModule& m, int k);
SemifreeModule direct_sum(const std::vector<SemifreeModule>& parts);

/// Morphism of right modules sending g_c to sum_r g_r * entries(r, c).
struct Morphism {
  int degree = 0;
  AlgebraMatrix entries;
};

Morphism identity(const SemifreeModule& m);
Morphism compose(const FinDimDgAlgebra& a, const Morphism& later, const Morphism& earlier);

/// Hom complex between twisted complexes, on cells (row generator of the
/// target, column generator of the source, basis element).
struct HomComplex {
  GradedComplex complex;
  std::vector<std::tuple<int, int, Index>> cells;

  Morphism to_morphism(const SparseVector& v) const;
  /// Throws InvalidInput if an entry leaves the cell space.
  SparseVector from_morphism(const Morphism& f) const;
  std::map<std::tuple<int, int, Index>, Index> index;
};

HomComplex hom_complex(const SemifreeModule& source, const SemifreeModule& target);

/// Hom complex from a twisted complex into a dg module, on cells
/// (generator, module basis element).
struct HomToModule {
  GradedComplex complex;
  std::vector<std::pair<int, Index>> cells;
};

HomToModule hom_complex(const SemifreeModule& source, const DgModule& target);

bool is_closed(const SemifreeModule& source, const SemifreeModule& target, const Morphism& f);

/// Generators of the target followed by those of source[1]; twist
/// [[twist_target, f], [0, -twist_source]]. Throws InvalidInput unless f is
/// closed of degree 0.
SemifreeModule cone(const SemifreeModule& source, const SemifreeModule& target, const Morphism& f);

/// Underlying dg module: cells (r, a) with a in e_{v_r} A, degree |a| - s_r.
struct ModuleCells {
  std::vector<Index> offsets;
  Index cell(int r, Index a) const;
};
DgModule as_module(const SemifreeModule& m, ModuleCells* cells = nullptr);

/// Serre functor on a twisted complex: the sum of D(A e_{v_r})[s_r] with the
/// twist acting on the left of the duals.
DgModule serre_twist(const SemifreeModule& m);

/// dim H^n for the degrees where it is nonzero.
std::map<int, Index> nonzero_cohomology(const GradedComplex& c);

}  // namespace dgq
