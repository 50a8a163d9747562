#pragma once

#include <map>
#include <string>
#include <vector>

#include "dgq/algebra.hpp"
#include "dgq/criteria.hpp"
#include "dgq/semifree.hpp"

namespace dgq {

/// A basic silting object given by its indecomposable summands, with the
/// mutation history that produced it.
struct SiltingPresentation {
  AlgebraPtr algebra;
  std::vector<std::string> labels;
  std::vector<SemifreeModule> summands;
  std::vector<std::string> provenance;

  int size() const { return static_cast<int>(summands.size()); }
  int index(const std::string& label) const;  // throws InvalidInput
};

/// The algebra itself: summands e_v A.
SiltingPresentation seed(const AlgebraPtr& a);

/// Minimal left approximation of summand i by the others: f: M_i -> X'_0.
struct Approximation {
  SemifreeModule target;
  Morphism map;
  /// Summand index of each copy in the target, in order.
  std::vector<int> components;
};

Approximation left_approximation(const SiltingPresentation& s, int i);

/// Replaces summand i by the cone of its left approximation.
SiltingPresentation mutate(const SiltingPresentation& s, int i);

/// Truncation to degrees <= 0 of the sum of Hom complexes between summands.
/// Vertices are the summand labels; idempotents are the identities.
AlgebraPtr endomorphism_algebra(const SiltingPresentation& s);

/// dim H^n Hom(resolution of S_i, S_j), from a resolution truncated to what
/// degree n needs.
long ext_engine(const AlgebraPtr& a, int i, int j, int n);

struct MinimalModel {
  /// entries[n][i][j] = dim Ext^n(S_i, S_j) = number of arrows j -> i of degree 1 - n.
  ExtTable table;
  /// Arrow-only quiver with those counts.
  DgQuiver quiver;
};

MinimalModel minimal_model_quiver(const AlgebraPtr& e, int n_max);

/// Hom(nu M_i, M_j) has no cohomology above degree d for all i, j.
bool is_d_silting(const SiltingPresentation& s, int d);

/// M >= N: Hom(M_i, N_j) has no cohomology in positive degrees.
bool silt_order_check(const SiltingPresentation& m, const SiltingPresentation& n);

/// H^d Hom(resolution of S_i, e_j A) = 0 for all j != i, on the seed.
bool fine_mutation_check(const SiltingPresentation& seed, int i, int d);

struct WindowStep {
  int n = 0;
  bool concentrated = false;
  /// Nonzero cohomology degrees of Hom(nu^n M, M), summed over summand pairs.
  std::map<int, Index> degrees;
};

struct WindowReport {
  bool ok = true;
  std::vector<WindowStep> steps;
};

/// For 1 <= n <= n_max: Hom(nu^n M, M) is concentrated in degree n*d.
WindowReport dri_window(const SiltingPresentation& s, int d, int n_max);

}  // namespace dgq
