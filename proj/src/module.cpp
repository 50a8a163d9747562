#include "dgq/module.hpp"

#include <algorithm>

#include "dgq/errors.hpp"

namespace dgq {

namespace {

Rational sign(int degree) { return degree % 2 == 0 ? Rational(1) : Rational(-1); }

}  // namespace

SparseVector DgModule::act(Index x, Index a) const {
  const auto& row = action[x];
  auto it = std::lower_bound(row.begin(), row.end(), a, [](const auto& e, Index key) { return e.first < key; });
  return (it != row.end() && it->first == a) ? it->second : SparseVector();
}

SparseVector DgModule::act(const SparseVector& x, Index a) const {
  SparseVector out;
  for (const auto& [k, c] : x) {
    const auto& row = action[k];
    auto it = std::lower_bound(row.begin(), row.end(), a, [](const auto& e, Index key) { return e.first < key; });
    if (it != row.end() && it->first == a) out.axpy(c, it->second);
  }
  return out;
}

SparseVector DgModule::act(const SparseVector& x, const SparseVector& a) const {
  SparseVector out;
  for (const auto& [k, c] : x)
    for (const auto& [b, xb] : action[k]) {
      const Rational cb = a.coeff(b);
      if (cb != 0) out.axpy(c * cb, xb);
    }
  return out;
}

void DgModule::validate() const {
  const FinDimDgAlgebra& alg = *algebra;
  auto fail = [](const std::string& msg) { throw InvalidInput("module axiom violated: " + msg); };
  const Index n = dim();
  if (static_cast<Index>(labels.size()) != n || static_cast<Index>(differential.size()) != n ||
      static_cast<Index>(action.size()) != n)
    fail("inconsistent sizes");
  for (Index x = 0; x < n; ++x) {
    const std::string name = "element " + std::to_string(x);
    for (const auto& [t, c] : differential[x]) {
      (void)c;
      if (degrees[t] != degrees[x] + 1 || labels[t] != labels[x]) fail("d(" + name + ") is inhomogeneous");
    }
    SparseVector dd;
    for (const auto& [t, c] : differential[x]) dd.axpy(c, differential[t]);
    if (!dd.empty()) fail("d^2 != 0 on " + name);
    for (int v = 0; v < alg.vertex_count(); ++v) {
      const SparseVector expect = v == labels[x] ? SparseVector::unit(x) : SparseVector();
      if (!(act(x, alg.idempotent(v)) == expect)) fail("idempotent e_" + alg.vertices()[v] + " on " + name);
    }
    for (const auto& [a, xa] : action[x]) {
      if (alg.element(a).left != labels[x]) fail(name + " * " + alg.element(a).name + " crosses labels");
      for (const auto& [t, c] : xa) {
        (void)c;
        if (labels[t] != alg.element(a).right || degrees[t] != degrees[x] + alg.element(a).degree)
          fail(name + " * " + alg.element(a).name + " is inhomogeneous");
      }
    }
    for (Index a : alg.left_part(labels[x])) {
      const SparseVector xa = act(x, a);
      SparseVector lhs;
      for (const auto& [t, c] : xa) lhs.axpy(c, differential[t]);
      SparseVector rhs = act(differential[x], a);
      rhs.axpy(sign(degrees[x]), act(SparseVector::unit(x), alg.d(a)));
      if (!(lhs == rhs)) fail("Leibniz rule fails on " + name + " * " + alg.element(a).name);
      for (Index b : alg.left_part(alg.element(a).right)) {
        if (!(act(xa, b) == act(SparseVector::unit(x), alg.product(a, b))))
          fail("associativity fails on " + name + " * " + alg.element(a).name + " * " + alg.element(b).name);
      }
    }
  }
}

DgModule simple_module(const AlgebraPtr& a, int i) { return simple_module(a, h0_structure(*a), i); }

DgModule simple_module(const AlgebraPtr& a, const H0Structure& h0, int i) {
  if (i < 0 || i >= a->vertex_count()) throw InvalidInput("vertex index out of range");
  if (h0.local_dim[i] - h0.local_radical_dim[i] != 1)
    throw InvalidInput("H^0 is not elementary at vertex '" + a->vertices()[i] +
                       "': simple modules of dimension > 1 are out of scope");
  EchelonBasis reducer;
  for (Index b : a->block(i, i))
    if (a->element(b).degree == -1) reducer.insert(a->d(b));
  for (std::size_t k = 0; k < h0.radical.size(); ++k)
    if (h0.radical_block[k] == std::make_pair(i, i)) reducer.insert(h0.radical[k]);
  reducer.insert(SparseVector::unit(a->idempotent(i)), 0);

  DgModule s;
  s.algebra = a;
  s.degrees = {0};
  s.labels = {i};
  s.differential = {SparseVector()};
  fill_action(s, [&](Index, Index b) {
    if (a->element(b).degree != 0 || a->element(b).right != i) return SparseVector();
    SparseVector combination;
    if (!reducer.reduce(SparseVector::unit(b), &combination).empty())
      throw InvalidInput("degree zero element outside the local H^0 span");
    return SparseVector::unit(0, combination.coeff(0));
  });
  return s;
}

DgModule shifted(const DgModule& m, int k) {
  DgModule r = m;
  for (auto& d : r.degrees) d -= k;
  if (k % 2 != 0)
    for (auto& col : r.differential) col.scale(-1);
  return r;
}

std::optional<std::pair<int, int>> degree_span(const DgModule& m) {
  if (m.degrees.empty()) return std::nullopt;
  auto [lo, hi] = std::minmax_element(m.degrees.begin(), m.degrees.end());
  return std::make_pair(*lo, *hi);
}

}  // namespace dgq
