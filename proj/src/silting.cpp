#include "dgq/silting.hpp"

#include <algorithm>

#include "dgq/errors.hpp"
#include "dgq/linalg.hpp"
#include "dgq/resolution.hpp"

namespace dgq {

namespace {

Morphism combine(const HomComplex& h, const std::vector<SparseVector>& reps, const SparseVector& coords) {
  SparseVector v;
  for (const auto& [k, c] : coords) v.axpy(c, reps[k]);
  Morphism f = h.to_morphism(v);
  f.degree = 0;
  return f;
}

std::string summand_list(const SiltingPresentation& s, const std::vector<int>& components) {
  if (components.empty()) return "0";
  std::map<int, int> count;
  for (int j : components) ++count[j];
  std::string out;
  for (const auto& [j, n] : count) {
    if (!out.empty()) out += " + ";
    out += "M_" + s.labels[j];
    if (n > 1) out += "^" + std::to_string(n);
  }
  return out;
}

}  // namespace

int SiltingPresentation::index(const std::string& label) const {
  auto it = std::find(labels.begin(), labels.end(), label);
  if (it == labels.end()) throw InvalidInput("unknown summand '" + label + "'");
  return static_cast<int>(it - labels.begin());
}

SiltingPresentation seed(const AlgebraPtr& a) {
  SiltingPresentation s;
  s.algebra = a;
  for (int v = 0; v < a->vertex_count(); ++v) {
    s.labels.push_back(a->vertices()[v]);
    s.summands.push_back(free_module(a, v));
  }
  s.provenance.push_back("seed");
  return s;
}

Approximation left_approximation(const SiltingPresentation& s, int i) {
  if (i < 0 || i >= s.size()) throw InvalidInput("summand index out of range");
  const FinDimDgAlgebra& a = *s.algebra;
  std::vector<int> others;
  for (int j = 0; j < s.size(); ++j)
    if (j != i) others.push_back(j);

  // H_j = H^0 Hom(M_i, M_j)
  std::map<int, HomComplex> from_i;
  std::map<int, CohomologyBasis> h;
  for (int j : others) {
    from_i.emplace(j, hom_complex(s.summands[i], s.summands[j]));
    h.emplace(j, CohomologyBasis(from_i.at(j).complex, 0));
  }
  // Gamma = H^0 End(X'), basis by blocks (source j, target k)
  std::map<std::pair<int, int>, HomComplex> between;
  std::map<std::pair<int, int>, CohomologyBasis> g;
  std::vector<std::pair<int, int>> gamma_block;
  std::vector<Index> gamma_local;
  std::map<std::pair<int, int>, Index> gamma_offset;
  for (int j : others)
    for (int k : others) {
      HomComplex hc = hom_complex(s.summands[j], s.summands[k]);
      std::vector<SparseVector> preferred;
      if (j == k) preferred.push_back(hc.from_morphism(identity(s.summands[j])));
      CohomologyBasis basis(hc.complex, 0, preferred);
      gamma_offset[{j, k}] = static_cast<Index>(gamma_block.size());
      for (Index r = 0; r < basis.dim(); ++r) {
        gamma_block.emplace_back(j, k);
        gamma_local.push_back(r);
      }
      between.emplace(std::make_pair(j, k), std::move(hc));
      g.emplace(std::make_pair(j, k), std::move(basis));
    }
  const Index n = static_cast<Index>(gamma_block.size());
  StructureConstants sc;
  sc.dim = n;
  sc.products.resize(static_cast<std::size_t>(n * n));
  auto rep_morphism = [&](Index p) {
    const auto blk = gamma_block[p];
    Morphism m = between.at(blk).to_morphism(g.at(blk).representatives()[gamma_local[p]]);
    m.degree = 0;
    return m;
  };
  std::vector<Morphism> reps;
  for (Index p = 0; p < n; ++p) reps.push_back(rep_morphism(p));
  for (Index p = 0; p < n; ++p)
    for (Index q = 0; q < n; ++q) {
      // p after q: q: j -> k, p: k -> l
      if (gamma_block[p].first != gamma_block[q].second) continue;
      const std::pair<int, int> blk{gamma_block[q].first, gamma_block[p].second};
      Morphism pq = compose(a, reps[p], reps[q]);
      SparseVector coords = g.at(blk).coordinates(between.at(blk).from_morphism(pq));
      SparseVector global;
      for (const auto& [k, c] : coords) global.add(gamma_offset.at(blk) + k, c);
      sc.products[p * n + q] = std::move(global);
    }
  for (int j : others) sc.unit.add(gamma_offset.at({j, j}), 1);

  std::vector<std::pair<std::pair<int, int>, SparseVector>> radical;
  for (const auto& r : algebra_radical(sc)) {
    std::map<std::pair<int, int>, SparseVector> parts;
    for (const auto& [p, c] : r) parts[gamma_block[p]].add(gamma_local[p], c);
    for (auto& part : parts) radical.push_back(std::move(part));
  }

  Approximation approx;
  std::vector<SemifreeModule> copies;
  std::vector<Morphism> components;
  for (int k : others) {
    EchelonBasis span;
    for (const auto& [blk, coords] : radical) {
      if (blk.second != k) continue;
      const int j = blk.first;
      Morphism rho = combine(between.at(blk), g.at(blk).representatives(), coords);
      for (const auto& hrep : h.at(j).representatives()) {
        Morphism hm = from_i.at(j).to_morphism(hrep);
        hm.degree = 0;
        span.insert(h.at(k).coordinates(from_i.at(k).from_morphism(compose(a, rho, hm))));
      }
    }
    for (Index r = 0; r < h.at(k).dim(); ++r) {
      if (!span.insert(SparseVector::unit(r))) continue;
      Morphism comp = from_i.at(k).to_morphism(h.at(k).representatives()[r]);
      comp.degree = 0;
      approx.components.push_back(k);
      copies.push_back(s.summands[k]);
      components.push_back(std::move(comp));
    }
  }
  approx.target = copies.empty() ? SemifreeModule{s.algebra, {}, {}} : direct_sum(copies);
  int offset = 0;
  for (std::size_t t = 0; t < copies.size(); ++t) {
    for (const auto& [rc, v] : components[t].entries) approx.map.entries[{rc.first + offset, rc.second}] = v;
    offset += copies[t].size();
  }
  return approx;
}

SiltingPresentation mutate(const SiltingPresentation& s, int i) {
  Approximation approx = left_approximation(s, i);
  SiltingPresentation out = s;
  out.summands[i] = cone(s.summands[i], approx.target, approx.map);
  out.provenance.push_back("mutate at " + s.labels[i] + ": M_" + s.labels[i] + " -> " +
                           summand_list(s, approx.components));
  return out;
}

AlgebraPtr endomorphism_algebra(const SiltingPresentation& s) {
  const FinDimDgAlgebra& a = *s.algebra;
  const int n = s.size();
  struct PairData {
    HomComplex hom;
    std::map<Index, Index> negative;  // cell -> basis index
    EchelonBasis cocycles;             // ids are basis indices
  };
  std::map<std::pair<int, int>, PairData> pairs;  // (source, target)
  std::vector<BasisElement> basis;
  std::vector<std::pair<int, int>> owner;
  std::vector<SparseVector> vectors;
  std::vector<Index> idempotents;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) pairs.emplace(std::make_pair(i, j), PairData{hom_complex(s.summands[i], s.summands[j]), {}, {}});
  auto add = [&](int i, int j, int degree, SparseVector v, const std::string& name) {
    const Index id = static_cast<Index>(basis.size());
    basis.push_back({degree, j, i, name});
    owner.emplace_back(i, j);
    vectors.push_back(std::move(v));
    return id;
  };
  for (int i = 0; i < n; ++i) {
    PairData& pd = pairs.at({i, i});
    SparseVector id = pd.hom.from_morphism(identity(s.summands[i]));
    const Index k = add(i, i, 0, id, "id_" + s.labels[i]);
    pd.cocycles.insert(id, k);
    idempotents.push_back(k);
  }
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      PairData& pd = pairs.at({i, j});
      const std::string tag = s.labels[i] + "->" + s.labels[j];
      int count = 0;
      for (const auto& z : cocycle_basis(pd.hom.complex, 0)) {
        const Index next = static_cast<Index>(basis.size());
        if (pd.cocycles.insert(z, next)) add(i, j, 0, z, tag + "#" + std::to_string(count++));
      }
      for (Index cell = 0; cell < pd.hom.complex.dim(); ++cell) {
        const int deg = pd.hom.complex.degrees[cell];
        if (deg >= 0) continue;
        pd.negative[cell] = add(i, j, deg, SparseVector::unit(cell), tag + "#" + std::to_string(count++));
      }
    }
  auto express = [&](const std::pair<int, int>& blk, const SparseVector& v, int degree) {
    const PairData& pd = pairs.at(blk);
    SparseVector out;
    if (degree < 0) {
      for (const auto& [cell, c] : v) out.add(pd.negative.at(cell), c);
      return out;
    }
    if (!pd.cocycles.reduce(v, &out).empty()) throw InvalidInput("degree zero composite is not a cocycle");
    return out;
  };
  std::vector<Morphism> morphisms;
  for (std::size_t k = 0; k < basis.size(); ++k) {
    Morphism m = pairs.at(owner[k]).hom.to_morphism(vectors[k]);
    m.degree = basis[k].degree;
    morphisms.push_back(std::move(m));
  }
  ProductTable products;
  for (Index u = 0; u < static_cast<Index>(basis.size()); ++u)
    for (Index v = 0; v < static_cast<Index>(basis.size()); ++v) {
      if (owner[u].first != owner[v].second) continue;
      const int degree = basis[u].degree + basis[v].degree;
      Morphism uv = compose(a, morphisms[u], morphisms[v]);
      if (uv.entries.empty()) continue;
      const std::pair<int, int> blk{owner[v].first, owner[u].second};
      SparseVector p = express(blk, pairs.at(blk).hom.from_morphism(uv), degree);
      if (!p.empty()) products[{u, v}] = std::move(p);
    }
  std::vector<SparseVector> differential(basis.size());
  for (Index k = 0; k < static_cast<Index>(basis.size()); ++k) {
    if (basis[k].degree == 0) continue;
    const PairData& pd = pairs.at(owner[k]);
    SparseVector dv;
    for (const auto& [cell, c] : vectors[k]) dv.axpy(c, pd.hom.complex.differential[cell]);
    differential[k] = express(owner[k], dv, basis[k].degree + 1);
  }
  return std::make_shared<FinDimDgAlgebra>(s.labels, std::move(basis), std::move(idempotents), products,
                                           std::move(differential));
}

long ext_engine(const AlgebraPtr& a, int i, int j, int n) {
  if (n < 0) throw InvalidInput("negative Ext degree");
  const H0Structure h0 = h0_structure(*a);
  auto res = semifree_resolution(simple_module(a, h0, i), {std::nullopt, -(n + 1)});
  auto hom = hom_complex(res.module, simple_module(a, h0, j));
  return static_cast<long>(cohomology_dim(hom.complex, n));
}

MinimalModel minimal_model_quiver(const AlgebraPtr& e, int n_max) {
  if (n_max < 0) throw InvalidInput("negative window");
  const H0Structure h0 = h0_structure(*e);
  const int nv = e->vertex_count();
  std::vector<DgModule> simples;
  for (int v = 0; v < nv; ++v) simples.push_back(simple_module(e, h0, v));
  MinimalModel mm;
  mm.table.window = n_max;
  mm.table.vertices = e->vertices();
  mm.table.entries.assign(n_max + 1, std::vector<std::vector<long>>(nv, std::vector<long>(nv, 0)));
  for (int i = 0; i < nv; ++i) {
    auto res = semifree_resolution(simples[i], {std::nullopt, -(n_max + 1)});
    for (int j = 0; j < nv; ++j) {
      auto hom = hom_complex(res.module, simples[j]);
      for (int n = 0; n <= n_max; ++n) mm.table.entries[n][i][j] = static_cast<long>(cohomology_dim(hom.complex, n));
    }
  }
  for (const auto& v : e->vertices()) mm.quiver.add_vertex(v);
  for (int n = 1; n <= n_max; ++n)
    for (int i = 0; i < nv; ++i)
      for (int j = 0; j < nv; ++j)
        for (long k = 0; k < mm.table.entries[n][i][j]; ++k)
          mm.quiver.add_arrow("a" + std::to_string(n) + "_" + std::to_string(j) + "_" + std::to_string(i) + "_" +
                                  std::to_string(k),
                              e->vertices()[j], e->vertices()[i], 1 - n);
  return mm;
}

bool is_d_silting(const SiltingPresentation& s, int d) {
  for (const auto& mi : s.summands) {
    SemifreeModule r = resolve(serre_twist(mi));
    for (const auto& mj : s.summands) {
      const auto dims = nonzero_cohomology(hom_complex(r, mj).complex);
      if (!dims.empty() && dims.rbegin()->first > d) return false;
    }
  }
  return true;
}

bool silt_order_check(const SiltingPresentation& m, const SiltingPresentation& n) {
  if (m.algebra != n.algebra) throw InvalidInput("presentations live over different algebras");
  for (const auto& mi : m.summands)
    for (const auto& nj : n.summands) {
      const auto dims = nonzero_cohomology(hom_complex(mi, nj).complex);
      if (!dims.empty() && dims.rbegin()->first >= 1) return false;
    }
  return true;
}

bool fine_mutation_check(const SiltingPresentation& s, int i, int d) {
  if (i < 0 || i >= s.size()) throw InvalidInput("summand index out of range");
  SemifreeModule r = resolve(simple_module(s.algebra, i));
  for (int j = 0; j < s.size(); ++j) {
    if (j == i) continue;
    if (cohomology_dim(hom_complex(r, s.summands[j]).complex, d) != 0) return false;
  }
  return true;
}

WindowReport dri_window(const SiltingPresentation& s, int d, int n_max) {
  WindowReport report;
  std::vector<SemifreeModule> current = s.summands;
  for (int n = 1; n <= n_max; ++n) {
    for (auto& m : current) m = resolve(serre_twist(m));
    WindowStep step;
    step.n = n;
    for (const auto& p : current)
      for (const auto& mj : s.summands)
        for (const auto& [deg, dim] : nonzero_cohomology(hom_complex(p, mj).complex)) step.degrees[deg] += dim;
    step.concentrated = std::all_of(step.degrees.begin(), step.degrees.end(),
                                    [&](const auto& entry) { return entry.first == n * d; });
    report.ok = report.ok && step.concentrated;
    report.steps.push_back(std::move(step));
  }
  return report;
}

}  // namespace dgq
