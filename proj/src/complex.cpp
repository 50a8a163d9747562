#include "dgq/complex.hpp"

#include <algorithm>
#include <unordered_map>

namespace dgq {

std::vector<Index> GradedComplex::basis_in_degree(int n) const {
  std::vector<Index> out;
  for (Index k = 0; k < dim(); ++k)
    if (degrees[k] == n) out.push_back(k);
  return out;
}

std::optional<std::pair<int, int>> GradedComplex::degree_range() const {
  if (degrees.empty()) return std::nullopt;
  auto [lo, hi] = std::minmax_element(degrees.begin(), degrees.end());
  return std::make_pair(*lo, *hi);
}

GradedComplex restrict_to(const GradedComplex& c, const std::vector<Index>& subset) {
  std::unordered_map<Index, Index> position;
  for (Index k = 0; k < static_cast<Index>(subset.size()); ++k) position[subset[k]] = k;
  GradedComplex out;
  out.degrees.reserve(subset.size());
  out.differential.reserve(subset.size());
  for (Index g : subset) {
    out.degrees.push_back(c.degrees[g]);
    SparseVector image;
    for (const auto& [i, v] : c.differential[g]) {
      auto it = position.find(i);
      if (it == position.end()) throw InvalidInput("subset is not closed under the differential");
      image.add(it->second, v);
    }
    out.differential.push_back(std::move(image));
  }
  return out;
}

namespace {

SparseVector apply(const GradedComplex& c, const SparseVector& x) {
  SparseVector r;
  for (const auto& [k, v] : x) r.axpy(v, c.differential[k]);
  return r;
}

std::vector<SparseVector> images(const GradedComplex& c, const std::vector<Index>& basis) {
  std::vector<SparseVector> cols;
  cols.reserve(basis.size());
  for (Index k : basis) cols.push_back(c.differential[k]);
  return cols;
}

}  // namespace

bool squares_to_zero(const GradedComplex& c) {
  for (Index k = 0; k < c.dim(); ++k) {
    if (!apply(c, c.differential[k]).empty()) return false;
  }
  return true;
}

Index cohomology_dim(const GradedComplex& c, int n) {
  const auto here = c.basis_in_degree(n);
  if (here.empty()) return 0;
  const Index out_rank = rank_of(images(c, here));
  const Index in_rank = rank_of(images(c, c.basis_in_degree(n - 1)));
  return static_cast<Index>(here.size()) - out_rank - in_rank;
}

std::map<int, Index> cohomology_dims(const GradedComplex& c) {
  std::map<int, Index> out;
  auto range = c.degree_range();
  if (!range) return out;
  std::map<int, std::vector<Index>> by_degree;
  for (Index k = 0; k < c.dim(); ++k) by_degree[c.degrees[k]].push_back(k);
  std::map<int, Index> out_rank;
  for (const auto& [n, basis] : by_degree) out_rank[n] = rank_of(images(c, basis));
  for (int n = range->first; n <= range->second; ++n) {
    auto it = by_degree.find(n);
    const Index size = it == by_degree.end() ? 0 : static_cast<Index>(it->second.size());
    const Index r_out = out_rank.count(n) ? out_rank[n] : 0;
    const Index r_in = out_rank.count(n - 1) ? out_rank[n - 1] : 0;
    out[n] = size - r_out - r_in;
  }
  return out;
}

ChainSpaces to_chain_spaces(const GradedComplex& c) {
  ChainSpaces out;
  auto range = c.degree_range();
  if (!range) return out;
  std::map<int, std::vector<Index>> by_degree;
  std::vector<Index> local(c.dim());
  for (Index k = 0; k < c.dim(); ++k) {
    auto& bucket = by_degree[c.degrees[k]];
    local[k] = static_cast<Index>(bucket.size());
    bucket.push_back(k);
  }
  for (int n = range->first; n <= range->second; ++n) {
    const auto& here = by_degree[n];
    const auto& next = n == range->second ? std::vector<Index>{} : by_degree[n + 1];
    ChainSpace space;
    space.degree = n;
    space.dim = static_cast<Index>(here.size());
    space.to_next = QMatrix::Zero(static_cast<Index>(next.size()), space.dim);
    for (Index col = 0; col < space.dim; ++col) {
      for (const auto& [i, v] : c.differential[here[col]]) space.to_next(local[i], col) = v;
    }
    out.push_back(std::move(space));
  }
  return out;
}

std::vector<SparseVector> cocycle_basis(const GradedComplex& c, int n,
                                        const std::vector<SparseVector>& preferred) {
  const auto here = c.basis_in_degree(n);
  auto kernel = kernel_basis(images(c, here));
  std::vector<SparseVector> candidates = preferred;
  for (const auto& kv : kernel) {
    SparseVector global;
    for (const auto& [k, v] : kv) global.add(here[k], v);
    candidates.push_back(std::move(global));
  }
  EchelonBasis basis;
  std::vector<SparseVector> out;
  for (auto& v : candidates) {
    if (basis.insert(v)) out.push_back(std::move(v));
  }
  return out;
}

std::vector<SparseVector> coboundaries(const GradedComplex& c, int n) {
  return images(c, c.basis_in_degree(n - 1));
}

CohomologyBasis::CohomologyBasis(const GradedComplex& c, int n, const std::vector<SparseVector>& preferred)
    : degree_(n) {
  const auto boundaries = coboundaries(c, n);
  const auto cycles = cocycle_basis(c, n, preferred);
  // First pass picks representatives; ids are assigned afterwards so that
  // representative ids are 0..dim-1.
  EchelonBasis probe;
  for (const auto& b : boundaries) probe.insert(b);
  for (const auto& z : cycles) {
    if (probe.insert(z)) representatives_.push_back(z);
  }
  const Index offset = static_cast<Index>(representatives_.size());
  for (Index k = 0; k < static_cast<Index>(boundaries.size()); ++k) reducer_.insert(boundaries[k], offset + k);
  for (Index k = 0; k < offset; ++k) reducer_.insert(representatives_[k], k);
}

SparseVector CohomologyBasis::coordinates(const SparseVector& cocycle) const {
  SparseVector combination;
  if (!reducer_.reduce(cocycle, &combination).empty()) {
    throw InvalidInput("vector is not a cocycle in degree " + std::to_string(degree_));
  }
  SparseVector coords;
  for (const auto& [id, v] : combination)
    if (id < dim()) coords.add(id, v);
  return coords;
}

bool CohomologyBasis::is_coboundary(const SparseVector& cocycle) const { return coordinates(cocycle).empty(); }

}  // namespace dgq
