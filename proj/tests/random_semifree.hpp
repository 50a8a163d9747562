#pragma once

#include <random>

#include "dgq/semifree.hpp"

namespace dgq::testing {

/// Random closed degree-0 map source -> target (possibly zero).
inline Morphism random_closed_map(std::mt19937& rng, const SemifreeModule& source, const SemifreeModule& target) {
  const HomComplex h = hom_complex(source, target);
  SparseVector v;
  for (const auto& z : cocycle_basis(h.complex, 0)) v.axpy(Rational(std::uniform_int_distribution<int>(-2, 2)(rng)), z);
  Morphism f = h.to_morphism(v);
  f.degree = 0;
  return f;
}

/// Iterated cone of random closed maps between shifted indecomposable
/// projectives.
inline SemifreeModule random_semifree(std::mt19937& rng, const AlgebraPtr& a, int max_cones = 2) {
  auto uniform = [&](int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); };
  auto projective = [&] { return free_module(a, uniform(0, a->vertex_count() - 1), uniform(-1, 1)); };
  SemifreeModule x = projective();
  const int cones = uniform(0, max_cones);
  for (int k = 0; k < cones; ++k) {
    SemifreeModule y = projective();
    if (uniform(0, 1) == 0)
      x = cone(x, y, random_closed_map(rng, x, y));
    else
      x = cone(y, x, random_closed_map(rng, y, x));
  }
  return x;
}

}  // namespace dgq::testing
