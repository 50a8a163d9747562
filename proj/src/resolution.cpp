#include "dgq/resolution.hpp"

#include <cstdlib>
#include <string>

#include "dgq/errors.hpp"

namespace dgq {

namespace {

constexpr int kFallbackGlobalDimension = 8;

// Mapping cone of the augmentation P -> X: X followed by the cells of P[1].
struct Cone {
  DgModule module;
  Index x_dim = 0;
  ModuleCells cells;
};

Cone build_cone(const DgModule& x, const SemifreeModule& p, const std::vector<SparseVector>& augmentation) {
  Cone c;
  c.x_dim = x.dim();
  DgModule pm = as_module(p, &c.cells);
  const FinDimDgAlgebra& a = *x.algebra;
  DgModule& m = c.module;
  m.algebra = x.algebra;
  m.degrees = x.degrees;
  m.labels = x.labels;
  m.differential = x.differential;
  m.action = x.action;
  for (Index k = 0; k < pm.dim(); ++k) {
    m.degrees.push_back(pm.degrees[k] - 1);
    m.labels.push_back(pm.labels[k]);
  }
  for (Index k = 0; k < pm.dim(); ++k) {
    SparseVector col;
    for (const auto& [t, coef] : pm.differential[k]) col.add(c.x_dim + t, -coef);
    m.differential.push_back(std::move(col));
    std::vector<std::pair<Index, SparseVector>> row;
    for (const auto& [e, img] : pm.action[k]) {
      SparseVector shifted_img;
      for (const auto& [t, coef] : img) shifted_img.add(c.x_dim + t, coef);
      row.emplace_back(e, std::move(shifted_img));
    }
    m.action.push_back(std::move(row));
  }
  // augmentation part of the differential: cell (r, b) -> augmentation[r] * b
  for (int r = 0; r < p.size(); ++r)
    for (Index b : a.left_part(p.generators[r].vertex))
      m.differential[c.x_dim + c.cells.cell(r, a.left_position(b))] += x.act(augmentation[r], b);
  return c;
}

std::vector<SparseVector> cocycles(const DgModule& m, const std::vector<Index>& elements) {
  std::vector<SparseVector> columns;
  for (Index e : elements) columns.push_back(m.differential[e]);
  std::vector<SparseVector> out;
  for (const auto& k : kernel_basis(columns)) {
    SparseVector z;
    for (const auto& [i, c] : k) z.add(elements[i], c);
    out.push_back(std::move(z));
  }
  return out;
}

}  // namespace

int default_resolution_cap(const FinDimDgAlgebra& a, const DgModule& x) {
  if (const char* env = std::getenv("DGQ_RESOLUTION_CAP")) {
    try {
      std::size_t used = 0;
      const int cap = std::stoi(env, &used);
      if (used == std::string(env).size() && cap > 0) return cap;
    } catch (const std::exception&) {
    }
    throw InvalidInput("DGQ_RESOLUTION_CAP must be a positive integer");
  }
  auto span = degree_span(x);
  const int amplitude = span ? span->second - span->first : 0;
  return a.gl_dim_hint().value_or(kFallbackGlobalDimension) + amplitude + 2;
}

Resolution semifree_resolution(const DgModule& x, const ResolutionOptions& options) {
  const AlgebraPtr& alg = x.algebra;
  const FinDimDgAlgebra& a = *alg;
  const int cap = options.cap.value_or(default_resolution_cap(a, x));
  const H0Structure h0 = h0_structure(a);
  const int nv = a.vertex_count();

  Resolution res;
  res.module.algebra = alg;
  std::optional<int> ceiling;
  while (true) {
    Cone cone = build_cone(x, res.module, res.augmentation);
    const DgModule& c = cone.module;
    const GradedComplex cx = c.complex();
    auto range = cx.degree_range();
    std::optional<int> top;
    if (range) {
      for (int n = ceiling ? std::min(*ceiling, range->second) : range->second; n >= range->first; --n) {
        if (cohomology_dim(cx, n) != 0) {
          top = n;
          break;
        }
      }
    }
    if (!top) {
      res.complete = true;
      return res;
    }
    const int b = *top;
    if (options.stop_degree && b < *options.stop_degree) return res;
    if (res.rounds == cap)
      throw ResolutionCapExceeded("resolution did not terminate within cap (" + std::to_string(cap) + " rounds)");
    ++res.rounds;

    std::vector<std::vector<Index>> in_degree(nv), below(nv);
    for (Index k = 0; k < c.dim(); ++k) {
      if (c.degrees[k] == b) in_degree[c.labels[k]].push_back(k);
      if (c.degrees[k] == b - 1) below[c.labels[k]].push_back(k);
    }
    std::vector<std::vector<SparseVector>> z(nv);
    for (int v = 0; v < nv; ++v) z[v] = cocycles(c, in_degree[v]);

    const int old_size = res.module.size();
    for (int v = 0; v < nv; ++v) {
      EchelonBasis span;
      for (Index k : below[v]) span.insert(c.differential[k]);
      for (std::size_t j = 0; j < h0.radical.size(); ++j) {
        if (h0.radical_block[j].second != v) continue;
        const int w = h0.radical_block[j].first;
        for (const auto& zz : z[w]) span.insert(c.act(zz, h0.radical[j]));
      }
      for (const auto& zz : z[v]) {
        if (!span.insert(zz)) continue;
        SparseVector image;
        AlgebraMatrix column;
        const int new_index = res.module.size();
        for (const auto& [k, coef] : zz) {
          if (k < cone.x_dim) {
            image.add(k, coef);
            continue;
          }
          const Index cell = k - cone.x_dim;
          int r = 0;
          while (r + 1 < old_size && cone.cells.offsets[r + 1] <= cell) ++r;
          const Index elem = a.left_part(res.module.generators[r].vertex)[cell - cone.cells.offsets[r]];
          column[{r, new_index}].add(elem, -coef);
        }
        res.module.generators.push_back({v, -b});
        for (auto& [rc, val] : column)
          if (!val.empty()) res.module.twist[rc] = std::move(val);
        res.augmentation.push_back(std::move(image));
      }
    }
    ceiling = b - 1;
  }
}

SemifreeModule resolve(const DgModule& x, const ResolutionOptions& options) {
  return semifree_resolution(x, options).module;
}

}  // namespace dgq
