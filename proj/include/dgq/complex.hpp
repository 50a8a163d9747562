#pragma once

#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "dgq/linalg.hpp"
#include "dgq/sparse.hpp"

namespace dgq {

/// Finite graded vector space with a basis and a degree +1 differential,
/// stored column-wise: differential[k] is the image of basis element k.
struct GradedComplex {
  std::vector<int> degrees;
  std::vector<SparseVector> differential;

  Index dim() const { return static_cast<Index>(degrees.size()); }
  std::vector<Index> basis_in_degree(int n) const;
  std::optional<std::pair<int, int>> degree_range() const;
};

/// Subcomplex spanned by `subset` (must be closed under the differential);
/// indices are renumbered by position in `subset`.
GradedComplex restrict_to(const GradedComplex& c, const std::vector<Index>& subset);

bool squares_to_zero(const GradedComplex& c);

Index cohomology_dim(const GradedComplex& c, int n);

/// dim H^n over the degree range of `c` (zero entries included).
std::map<int, Index> cohomology_dims(const GradedComplex& c);

ChainSpaces to_chain_spaces(const GradedComplex& c);

/// Basis of Z^n in global coordinates. `preferred` cocycles come first.
std::vector<SparseVector> cocycle_basis(const GradedComplex& c, int n,
                                        const std::vector<SparseVector>& preferred = {});

/// Images of the degree n-1 basis: a spanning set of B^n.
std::vector<SparseVector> coboundaries(const GradedComplex& c, int n);

/// A chosen basis of H^n by cocycle representatives, with coordinates of
/// arbitrary cocycles modulo coboundaries.
class CohomologyBasis {
 public:
  CohomologyBasis(const GradedComplex& c, int n, const std::vector<SparseVector>& preferred = {});

  int degree() const { return degree_; }
  Index dim() const { return static_cast<Index>(representatives_.size()); }
  const std::vector<SparseVector>& representatives() const { return representatives_; }

  /// Coordinates over representatives(). Throws InvalidInput if `cocycle`
  /// is not a cocycle of the complex.
  SparseVector coordinates(const SparseVector& cocycle) const;
  bool is_coboundary(const SparseVector& cocycle) const;

 private:
  int degree_;
  std::vector<SparseVector> representatives_;
  EchelonBasis reducer_;  // boundaries (ids >= dim) then representatives
};

}  // namespace dgq
