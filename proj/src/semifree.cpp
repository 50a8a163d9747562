#include "dgq/semifree.hpp"

#include <algorithm>

#include "dgq/errors.hpp"

namespace dgq {

namespace {

Rational sign(int degree) { return degree % 2 == 0 ? Rational(1) : Rational(-1); }

// Entries of a matrix grouped by column and by row.
struct Incidence {
  std::vector<std::vector<std::pair<int, const SparseVector*>>> by_column, by_row;
  Incidence(const AlgebraMatrix& m, int n) : by_column(n), by_row(n) {
    for (const auto& [rc, v] : m) {
      by_column[rc.second].emplace_back(rc.first, &v);
      by_row[rc.first].emplace_back(rc.second, &v);
    }
  }
};

void check_same_algebra(const AlgebraPtr& a, const AlgebraPtr& b) {
  if (a != b) throw InvalidInput("objects live over different algebras");
}

}  // namespace

SemifreeModule free_module(const AlgebraPtr& a, int vertex, int shift) {
  if (vertex < 0 || vertex >= a->vertex_count()) throw InvalidInput("vertex index out of range");
  return {a, {{vertex, shift}}, {}};
}

SemifreeModule shifted(const SemifreeModule& m, int k) {
  SemifreeModule r = m;
  for (auto& g : r.generators) g.shift += k;
  if (k % 2 != 0)
    for (auto& [rc, v] : r.twist) v.scale(-1);
  return r;
}

SemifreeModule direct_sum(const std::vector<SemifreeModule>& parts) {
  if (parts.empty()) throw InvalidInput("direct sum of nothing has no algebra");
  SemifreeModule sum{parts.front().algebra, {}, {}};
  for (const auto& p : parts) {
    check_same_algebra(sum.algebra, p.algebra);
    const int offset = sum.size();
    sum.generators.insert(sum.generators.end(), p.generators.begin(), p.generators.end());
    for (const auto& [rc, v] : p.twist) sum.twist[{rc.first + offset, rc.second + offset}] = v;
  }
  return sum;
}

AlgebraMatrix SemifreeModule::maurer_cartan_defect() const {
  const FinDimDgAlgebra& a = *algebra;
  AlgebraMatrix defect;
  for (const auto& [rc, v] : twist) {
    SparseVector dv = a.d(v);
    dv.scale(sign(generators[rc.first].shift));
    defect[rc] += dv;
  }
  Incidence inc(twist, size());
  for (const auto& [rk, left] : twist) {
    for (const auto& [c, right] : inc.by_row[rk.second]) defect[{rk.first, c}] += a.multiply(left, *right);
  }
  for (auto it = defect.begin(); it != defect.end();) it = it->second.empty() ? defect.erase(it) : std::next(it);
  return defect;
}

void SemifreeModule::validate() const {
  const FinDimDgAlgebra& a = *algebra;
  for (const auto& g : generators)
    if (g.vertex < 0 || g.vertex >= a.vertex_count()) throw InvalidInput("generator vertex out of range");
  for (const auto& [rc, v] : twist) {
    const auto [r, c] = rc;
    if (r < 0 || c < 0 || r >= size() || c >= size()) throw InvalidInput("twist entry out of range");
    if (v.empty()) continue;
    if (r >= c) throw InvalidInput("twist is not strictly upper triangular");
    const int want = generators[r].shift - generators[c].shift + 1;
    for (const auto& [b, coef] : v) {
      (void)coef;
      const auto& e = a.element(b);
      if (e.left != generators[r].vertex || e.right != generators[c].vertex)
        throw InvalidInput("twist entry outside e_r A e_c");
      if (e.degree != want) throw InvalidInput("twist entry of wrong degree");
    }
  }
  if (!maurer_cartan_defect().empty()) throw InvalidInput("Maurer-Cartan equation fails");
}

Morphism identity(const SemifreeModule& m) {
  Morphism id;
  for (int r = 0; r < m.size(); ++r)
    id.entries[{r, r}] = SparseVector::unit(m.algebra->idempotent(m.generators[r].vertex));
  return id;
}

Morphism compose(const FinDimDgAlgebra& a, const Morphism& later, const Morphism& earlier) {
  Morphism out;
  out.degree = later.degree + earlier.degree;
  std::map<int, std::vector<std::pair<int, const SparseVector*>>> earlier_rows;
  for (const auto& [kc, v] : earlier.entries) earlier_rows[kc.first].emplace_back(kc.second, &v);
  for (const auto& [rk, left] : later.entries) {
    auto it = earlier_rows.find(rk.second);
    if (it == earlier_rows.end()) continue;
    for (const auto& [c, right] : it->second) out.entries[{rk.first, c}] += a.multiply(left, *right);
  }
  for (auto it = out.entries.begin(); it != out.entries.end();)
    it = it->second.empty() ? out.entries.erase(it) : std::next(it);
  return out;
}

Morphism HomComplex::to_morphism(const SparseVector& v) const {
  Morphism f;
  bool first = true;
  for (const auto& [k, c] : v) {
    const auto& [r, col, b] = cells[k];
    f.entries[{r, col}].add(b, c);
    if (first) f.degree = complex.degrees[k];
    first = false;
  }
  return f;
}

SparseVector HomComplex::from_morphism(const Morphism& f) const {
  SparseVector v;
  for (const auto& [rc, entry] : f.entries)
    for (const auto& [b, c] : entry) {
      auto it = index.find({rc.first, rc.second, b});
      if (it == index.end()) throw InvalidInput("morphism entry outside the Hom complex");
      v.add(it->second, c);
    }
  return v;
}

HomComplex hom_complex(const SemifreeModule& source, const SemifreeModule& target) {
  check_same_algebra(source.algebra, target.algebra);
  const FinDimDgAlgebra& a = *source.algebra;
  HomComplex h;
  for (int r = 0; r < target.size(); ++r)
    for (int c = 0; c < source.size(); ++c)
      for (Index b : a.block(target.generators[r].vertex, source.generators[c].vertex)) {
        h.index.emplace(std::make_tuple(r, c, b), static_cast<Index>(h.cells.size()));
        h.cells.emplace_back(r, c, b);
        h.complex.degrees.push_back(a.element(b).degree - target.generators[r].shift + source.generators[c].shift);
      }
  Incidence tw(target.twist, target.size()), sw(source.twist, source.size());
  h.complex.differential.resize(h.cells.size());
  for (std::size_t k = 0; k < h.cells.size(); ++k) {
    const auto& [r, c, b] = h.cells[k];
    const int p = h.complex.degrees[k];
    SparseVector& col = h.complex.differential[k];
    auto put = [&](int row, int column, const SparseVector& value, const Rational& factor) {
      for (const auto& [t, coef] : value) col.add(h.index.at({row, column, t}), factor * coef);
    };
    put(r, c, a.d(b), sign(target.generators[r].shift));
    for (const auto& [r2, delta] : tw.by_column[r]) put(r2, c, a.multiply(*delta, SparseVector::unit(b)), 1);
    for (const auto& [c2, delta] : sw.by_row[c]) put(r, c2, a.multiply(SparseVector::unit(b), *delta), -sign(p));
  }
  return h;
}

HomToModule hom_complex(const SemifreeModule& source, const DgModule& target) {
  check_same_algebra(source.algebra, target.algebra);
  HomToModule h;
  std::vector<std::vector<Index>> by_label(source.algebra->vertex_count());
  for (Index x = 0; x < target.dim(); ++x) by_label[target.labels[x]].push_back(x);
  std::vector<Index> offsets;
  for (int c = 0; c < source.size(); ++c) {
    offsets.push_back(static_cast<Index>(h.cells.size()));
    for (Index x : by_label[source.generators[c].vertex]) {
      h.cells.emplace_back(c, x);
      h.complex.degrees.push_back(target.degrees[x] + source.generators[c].shift);
    }
  }
  std::vector<Index> position(target.dim());
  for (const auto& list : by_label)
    for (std::size_t k = 0; k < list.size(); ++k) position[list[k]] = static_cast<Index>(k);
  Incidence sw(source.twist, source.size());
  h.complex.differential.resize(h.cells.size());
  for (std::size_t k = 0; k < h.cells.size(); ++k) {
    const auto& [c, x] = h.cells[k];
    const int p = h.complex.degrees[k];
    SparseVector& col = h.complex.differential[k];
    for (const auto& [t, coef] : target.differential[x]) col.add(offsets[c] + position[t], coef);
    for (const auto& [c2, delta] : sw.by_row[c])
      for (const auto& [t, coef] : target.act(SparseVector::unit(x), *delta))
        col.add(offsets[c2] + position[t], -sign(p) * coef);
  }
  return h;
}

bool is_closed(const SemifreeModule& source, const SemifreeModule& target, const Morphism& f) {
  HomComplex h = hom_complex(source, target);
  SparseVector v = h.from_morphism(f);
  SparseVector dv;
  for (const auto& [k, c] : v) dv.axpy(c, h.complex.differential[k]);
  return dv.empty();
}

SemifreeModule cone(const SemifreeModule& source, const SemifreeModule& target, const Morphism& f) {
  check_same_algebra(source.algebra, target.algebra);
  if (f.degree != 0 && !f.entries.empty()) throw InvalidInput("cone needs a degree 0 morphism");
  if (!is_closed(source, target, f)) throw InvalidInput("cone needs a closed morphism");
  SemifreeModule c{target.algebra, target.generators, target.twist};
  const int offset = target.size();
  for (const auto& g : source.generators) c.generators.push_back({g.vertex, g.shift + 1});
  for (const auto& [rc, v] : f.entries) c.twist[{rc.first, rc.second + offset}] = v;
  for (const auto& [rc, v] : source.twist) c.twist[{rc.first + offset, rc.second + offset}] = -v;
  return c;
}

Index ModuleCells::cell(int r, Index a) const { return offsets[r] + a; }

DgModule as_module(const SemifreeModule& m, ModuleCells* cells_out) {
  const FinDimDgAlgebra& a = *m.algebra;
  ModuleCells cells;
  DgModule x;
  x.algebra = m.algebra;
  for (const auto& g : m.generators) {
    cells.offsets.push_back(static_cast<Index>(x.degrees.size()));
    for (Index b : a.left_part(g.vertex)) {
      x.degrees.push_back(a.element(b).degree - g.shift);
      x.labels.push_back(a.element(b).right);
    }
  }
  Incidence tw(m.twist, m.size());
  x.differential.resize(x.degrees.size());
  x.action.resize(x.degrees.size());
  for (int r = 0; r < m.size(); ++r) {
    const auto& part = a.left_part(m.generators[r].vertex);
    for (Index b : part) {
      const Index k = cells.offsets[r] + a.left_position(b);
      SparseVector& col = x.differential[k];
      for (const auto& [t, coef] : a.d(b)) col.add(cells.offsets[r] + a.left_position(t), sign(m.generators[r].shift) * coef);
      for (const auto& [r2, delta] : tw.by_column[r])
        for (const auto& [t, coef] : a.multiply(*delta, SparseVector::unit(b)))
          col.add(cells.offsets[r2] + a.left_position(t), coef);
      for (const auto& [e, prod] : a.products_from_left(b)) {
        SparseVector image;
        for (const auto& [t, coef] : prod) image.add(cells.offsets[r] + a.left_position(t), coef);
        x.action[k].emplace_back(e, std::move(image));
      }
    }
  }
  if (cells_out) {
    // positions inside a generator block follow left_position
    *cells_out = cells;
  }
  return x;
}

DgModule serre_twist(const SemifreeModule& m) {
  const FinDimDgAlgebra& a = *m.algebra;
  DgModule x;
  x.algebra = m.algebra;
  std::vector<Index> offsets;
  for (const auto& g : m.generators) {
    offsets.push_back(static_cast<Index>(x.degrees.size()));
    for (Index b : a.right_part(g.vertex)) {
      x.degrees.push_back(-a.element(b).degree - g.shift);
      x.labels.push_back(a.element(b).left);
    }
  }
  x.differential.resize(x.degrees.size());
  x.action.resize(x.degrees.size());
  Incidence tw(m.twist, m.size());
  auto cell = [&](int r, Index b) { return offsets[r] + a.right_position(b); };
  for (int r = 0; r < m.size(); ++r) {
    const int v = m.generators[r].vertex;
    const Rational shift_sign = sign(m.generators[r].shift);
    for (Index l : a.right_part(v)) {
      // d f_a = -(-1)^{|a|} sum_l coef_a(d l) f_l
      for (const auto& [t, coef] : a.d(l))
        x.differential[cell(r, t)].add(cell(r, l), -sign(a.element(t).degree) * shift_sign * coef);
    }
    for (Index e = 0; e < a.dim(); ++e) {
      // f_a * e = sum_l coef_a(e l) f_l
      std::map<Index, SparseVector> images;
      for (const auto& [l, prod] : a.products_from_left(e)) {
        if (a.element(l).right != v) continue;
        for (const auto& [t, coef] : prod) images[t].add(cell(r, l), coef);
      }
      for (auto& [t, img] : images) x.action[cell(r, t)].emplace_back(e, std::move(img));
    }
    for (const auto& [r2, delta] : tw.by_row[r]) {
      // twist(r, r2) maps the r2 dual into the r dual: (delta f)(l) = (-1)^{|delta|} f(l delta)
      for (const auto& [t, tc] : *delta) {
        const Rational s = sign(a.element(t).degree) * tc;
        for (const auto& [l, prod] : a.products_from_right(t))
          for (const auto& [target_elem, coef] : prod) x.differential[cell(r2, target_elem)].add(cell(r, l), s * coef);
      }
    }
  }
  for (auto& row : x.action)
    std::sort(row.begin(), row.end(), [](const auto& p, const auto& q) { return p.first < q.first; });
  return x;
}

std::map<int, Index> nonzero_cohomology(const GradedComplex& c) {
  std::map<int, Index> out;
  for (const auto& [n, dim] : cohomology_dims(c))
    if (dim != 0) out[n] = dim;
  return out;
}

}  // namespace dgq
