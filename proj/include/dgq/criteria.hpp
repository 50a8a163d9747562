#pragma once

#include <optional>
#include <string>
#include <vector>

#include "dgq/quiver.hpp"

namespace dgq {

/// dim Ext^n(S_i, S_j) for 0 <= n <= window, indexed entries[n][i][j] by vertex index.
struct ExtTable {
  int window = 0;
  std::vector<std::string> vertices;
  std::vector<std::vector<std::vector<long>>> entries;

  long at(int i, int j, int n) const { return entries.at(n).at(i).at(j); }
  friend bool operator==(const ExtTable&, const ExtTable&) = default;
};

enum class VerdictReason { NoOffendingArrow, OffendingArrows, LoopPresent };

std::string to_string(VerdictReason r);

struct MutationVerdict {
  std::string vertex;
  int d = 1;
  bool admissible = false;
  VerdictReason reason = VerdictReason::NoOffendingArrow;
  std::vector<std::string> offending;  // arrow ids (or the loops, for LoopPresent)
};

struct CycleCertificate {
  std::vector<std::string> arrows;
  std::vector<std::string> vertices;  // vertices[k] is the source of arrows[k]
};

/// Throws InvalidInput if the quiver fails validation.
long ext_simples(const DgQuiver& q, int i, int j, int n);

int projdim_simple(const DgQuiver& q, int i);

/// Inputs are finite, so the value is always finite.
int global_dimension(const DgQuiver& q);

/// Throws InvalidInput for d < 1 and GlobalDimensionExceeded when an arrow
/// of degree <= -d exists.
MutationVerdict mutation_check(const DgQuiver& q, int i, int d);

/// A cycle of degree -d+1 arrows (loops included) if one exists. Absence
/// proves nothing.
std::optional<CycleCertificate> nu_obstruction_cycle(const DgQuiver& q, int d);

/// Window defaults to the global dimension.
ExtTable ext_table(const DgQuiver& q, std::optional<int> n_max = std::nullopt);

/// Number of arrows j -> i of each degree, as an ExtTable indexed by n = 1 - degree.
/// Convenience for comparing quivers against minimal models.
ExtTable arrow_count_table(const DgQuiver& q, int n_max);

}  // namespace dgq
