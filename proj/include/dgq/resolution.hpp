#pragma once

#include <optional>
#include <vector>

#include "dgq/module.hpp"
#include "dgq/semifree.hpp"

namespace dgq {

struct ResolutionOptions {
  /// Maximum number of attachment rounds; defaults to default_resolution_cap.
  std::optional<int> cap;
  /// Stop once every cell in degrees >= stop_degree has been attached.
  /// Enough for Hom into modules concentrated in degree 0 up to degree -stop_degree - 1.
  std::optional<int> stop_degree;
};

struct Resolution {
  SemifreeModule module;
  /// Image of each generator in the resolved module.
  std::vector<SparseVector> augmentation;
  bool complete = false;
  int rounds = 0;
};

/// gl.dim hint (or 8 when unknown) + degree span of the module + 2;
/// the environment variable DGQ_RESOLUTION_CAP overrides it.
int default_resolution_cap(const FinDimDgAlgebra& a, const DgModule& x);

/// Minimal semifree resolution, built top-down: each round attaches
/// generators mapping onto a minimal generating set of the top cohomology of
/// the mapping cone. Throws ResolutionCapExceeded when the cap is reached.
Resolution semifree_resolution(const DgModule& x, const ResolutionOptions& options = {});

/// The resolving twisted complex alone.
SemifreeModule resolve(const DgModule& x, const ResolutionOptions& options = {});

}  // namespace dgq
