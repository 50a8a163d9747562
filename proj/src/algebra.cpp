#include "dgq/algebra.hpp"

#include <algorithm>
#include <functional>

#include "dgq/criteria.hpp"
#include "dgq/errors.hpp"
#include "dgq/linalg.hpp"

namespace dgq {

namespace {

const SparseVector kZero;

Rational sign(int degree) { return degree % 2 == 0 ? Rational(1) : Rational(-1); }

}  // namespace

FinDimDgAlgebra::FinDimDgAlgebra(std::vector<std::string> vertices, std::vector<BasisElement> basis,
                                 std::vector<Index> idempotents, const ProductTable& products,
                                 std::vector<SparseVector> differential, std::optional<int> gl_dim_hint)
    : vertices_(std::move(vertices)),
      basis_(std::move(basis)),
      idempotents_(std::move(idempotents)),
      differential_(std::move(differential)),
      gl_dim_hint_(gl_dim_hint) {
  const Index n = dim();
  const int nv = vertex_count();
  if (static_cast<int>(idempotents_.size()) != nv) throw InvalidInput("one idempotent per vertex required");
  if (static_cast<Index>(differential_.size()) != n) throw InvalidInput("differential has wrong size");
  by_left_.resize(n);
  by_right_.resize(n);
  for (const auto& [key, value] : products) {
    if (value.empty()) continue;
    if (key.first < 0 || key.first >= n || key.second < 0 || key.second >= n)
      throw InvalidInput("product index out of range");
    by_left_[key.first].emplace_back(key.second, value);
    by_right_[key.second].emplace_back(key.first, value);
  }
  blocks_.resize(static_cast<std::size_t>(nv) * nv);
  left_parts_.resize(nv);
  right_parts_.resize(nv);
  left_position_.resize(n);
  right_position_.resize(n);
  for (Index a = 0; a < n; ++a) {
    const auto& b = basis_[a];
    if (b.left < 0 || b.left >= nv || b.right < 0 || b.right >= nv) throw InvalidInput("basis element outside blocks");
    blocks_[b.left * nv + b.right].push_back(a);
    left_position_[a] = static_cast<Index>(left_parts_[b.left].size());
    left_parts_[b.left].push_back(a);
    right_position_[a] = static_cast<Index>(right_parts_[b.right].size());
    right_parts_[b.right].push_back(a);
  }
}

int FinDimDgAlgebra::vertex(const std::string& label) const {
  auto it = std::find(vertices_.begin(), vertices_.end(), label);
  if (it == vertices_.end()) throw InvalidInput("unknown vertex '" + label + "'");
  return static_cast<int>(it - vertices_.begin());
}

const SparseVector& FinDimDgAlgebra::product(Index a, Index b) const {
  const auto& row = by_left_[a];
  auto it = std::lower_bound(row.begin(), row.end(), b, [](const auto& entry, Index key) { return entry.first < key; });
  return (it != row.end() && it->first == b) ? it->second : kZero;
}

SparseVector FinDimDgAlgebra::multiply(const SparseVector& x, const SparseVector& y) const {
  SparseVector out;
  for (const auto& [a, ca] : x) {
    if (y.empty()) break;
    for (const auto& [b, ab] : by_left_[a]) {
      const Rational cb = y.coeff(b);
      if (cb != 0) out.axpy(ca * cb, ab);
    }
  }
  return out;
}

SparseVector FinDimDgAlgebra::d(const SparseVector& x) const {
  SparseVector out;
  for (const auto& [a, c] : x) out.axpy(c, differential_[a]);
  return out;
}

std::string FinDimDgAlgebra::describe(const SparseVector& x) const {
  if (x.empty()) return "0";
  std::string out;
  for (const auto& [a, c] : x) {
    if (!out.empty()) out += c < 0 ? " - " : " + ";
    else if (c < 0) out += "-";
    const Rational m = abs(c);
    if (m != 1) out += format_rational(m) + "*";
    out += basis_[a].name;
  }
  return out;
}

void FinDimDgAlgebra::validate() const {
  const Index n = dim();
  const int nv = vertex_count();
  auto fail = [](const std::string& msg) { throw InvalidInput("algebra axiom violated: " + msg); };
  for (Index a = 0; a < n; ++a) {
    const auto& b = basis_[a];
    if (b.degree > 0) fail("basis element " + b.name + " has positive degree");
    for (int v = 0; v < nv; ++v) {
      const SparseVector expect_left = v == b.left ? SparseVector::unit(a) : SparseVector();
      const SparseVector expect_right = v == b.right ? SparseVector::unit(a) : SparseVector();
      if (!(product(idempotents_[v], a) == expect_left) || !(product(a, idempotents_[v]) == expect_right))
        fail("idempotent e_" + vertices_[v] + " does not act as a unit on " + b.name);
    }
    for (const auto& [c, ac] : by_left_[a]) {
      if (b.right != basis_[c].left) fail("product " + b.name + "*" + basis_[c].name + " crosses blocks");
      for (const auto& [t, coef] : ac) {
        (void)coef;
        const auto& bt = basis_[t];
        if (bt.left != b.left || bt.right != basis_[c].right || bt.degree != b.degree + basis_[c].degree)
          fail("product " + b.name + "*" + basis_[c].name + " is inhomogeneous");
      }
    }
    for (const auto& [t, coef] : differential_[a]) {
      (void)coef;
      const auto& bt = basis_[t];
      if (bt.left != b.left || bt.right != b.right || bt.degree != b.degree + 1)
        fail("d(" + b.name + ") is inhomogeneous");
    }
    if (!d(differential_[a]).empty()) fail("d^2(" + b.name + ") != 0");
  }
  for (Index a = 0; a < n; ++a) {
    for (Index b : left_parts_[basis_[a].right]) {
      const SparseVector& ab = product(a, b);
      SparseVector lhs = d(ab);
      SparseVector rhs = multiply(differential_[a], SparseVector::unit(b));
      rhs.axpy(sign(basis_[a].degree), multiply(SparseVector::unit(a), differential_[b]));
      if (!(lhs == rhs)) fail("Leibniz rule fails on " + basis_[a].name + "*" + basis_[b].name);
      for (Index c : left_parts_[basis_[b].right]) {
        if (!(multiply(ab, SparseVector::unit(c)) == multiply(SparseVector::unit(a), product(b, c))))
          fail("associativity fails on " + basis_[a].name + "*" + basis_[b].name + "*" + basis_[c].name);
      }
    }
  }
}

AlgebraPtr algebra_from_quiver(const DgQuiver& q) {
  auto report = validate(q);
  if (!report.ok())
    throw InvalidInput("invalid quiver: arrow '" + report.violations.front().arrow +
                       "': " + report.violations.front().message);
  if (auto cycle = find_cycle(q)) {
    std::vector<std::string> ids;
    for (int a : *cycle) ids.push_back(q.arrows()[a].id);
    throw EngineIneligible("engine requires acyclic quiver; criteria-only commands remain available", ids);
  }
  const int nv = static_cast<int>(q.vertices().size());
  std::vector<Path> paths;
  for (int v = 0; v < nv; ++v) paths.push_back(q.lazy_path(v));
  std::vector<Path> longer;
  std::function<void(Path&)> walk = [&](Path& p) {
    for (std::size_t a = 0; a < q.arrows().size(); ++a) {
      if (q.arrows()[a].source != p.target) continue;
      Path next = p;
      if (next.lazy()) next.source = p.target;
      next.arrows.push_back(static_cast<int>(a));
      next.target = q.arrows()[a].target;
      longer.push_back(next);
      walk(next);
    }
  };
  for (int v = 0; v < nv; ++v) {
    Path p = q.lazy_path(v);
    walk(p);
  }
  std::stable_sort(longer.begin(), longer.end(), [](const Path& a, const Path& b) { return a.length() < b.length(); });
  paths.insert(paths.end(), longer.begin(), longer.end());

  std::map<Path, Index> index;
  std::vector<BasisElement> basis;
  for (const auto& p : paths) {
    index.emplace(p, static_cast<Index>(basis.size()));
    basis.push_back({q.degree(p), p.target, p.source, q.name(p)});
  }
  ProductTable products;
  for (Index u = 0; u < static_cast<Index>(paths.size()); ++u)
    for (Index v = 0; v < static_cast<Index>(paths.size()); ++v)
      if (auto uv = compose(paths[u], paths[v])) products[{u, v}] = SparseVector::unit(index.at(*uv));
  std::vector<SparseVector> differential;
  for (const auto& p : paths) {
    SparseVector dv;
    const PathSum dp = leibniz(q, p);
    for (const auto& [t, c] : dp.terms()) dv.add(index.at(t), c);
    differential.push_back(std::move(dv));
  }
  std::vector<Index> idempotents;
  for (int v = 0; v < nv; ++v) idempotents.push_back(v);
  return std::make_shared<FinDimDgAlgebra>(q.vertices(), std::move(basis), std::move(idempotents), products,
                                           std::move(differential), global_dimension(q));
}

Index h0_dimension(const FinDimDgAlgebra& a, int i, int j) {
  Index degree0 = 0;
  std::vector<SparseVector> images;
  for (Index b : a.block(j, i)) {
    const int deg = a.element(b).degree;
    if (deg == 0) ++degree0;
    if (deg == -1) images.push_back(a.d(b));
  }
  return degree0 - rank_of(images);
}

bool H0Structure::elementary() const {
  for (std::size_t v = 0; v < local_dim.size(); ++v)
    if (local_dim[v] - local_radical_dim[v] != 1) return false;
  return true;
}

H0Structure h0_structure(const FinDimDgAlgebra& a) {
  const int nv = a.vertex_count();
  for (const auto& b : a.basis())
    if (b.degree > 0) throw InvalidInput("H^0 structure needs a connective algebra");
  H0Structure h;
  std::vector<EchelonBasis> reducers(static_cast<std::size_t>(nv) * nv);
  for (int l = 0; l < nv; ++l) {
    for (int r = 0; r < nv; ++r) {
      EchelonBasis& red = reducers[l * nv + r];
      for (Index b : a.block(l, r))
        if (a.element(b).degree == -1) red.insert(a.d(b));
      std::vector<SparseVector> candidates;
      if (l == r) candidates.push_back(SparseVector::unit(a.idempotent(l)));
      for (Index b : a.block(l, r))
        if (a.element(b).degree == 0) candidates.push_back(SparseVector::unit(b));
      for (const auto& c : candidates) {
        const Index id = static_cast<Index>(h.representatives.size());
        if (red.insert(c, id)) {
          h.representatives.push_back(c);
          h.representative_block.emplace_back(l, r);
        }
      }
    }
  }
  const Index n = static_cast<Index>(h.representatives.size());
  StructureConstants sc;
  sc.dim = n;
  sc.products.resize(static_cast<std::size_t>(n * n));
  for (Index p = 0; p < n; ++p) {
    for (Index q = 0; q < n; ++q) {
      if (h.representative_block[p].second != h.representative_block[q].first) continue;
      SparseVector prod = a.multiply(h.representatives[p], h.representatives[q]);
      if (prod.empty()) continue;
      const int l = h.representative_block[p].first, r = h.representative_block[q].second;
      SparseVector coords;
      if (!reducers[l * nv + r].reduce(prod, &coords).empty())
        throw InvalidInput("degree zero product escapes the cochain space");
      sc.products[p * n + q] = std::move(coords);
    }
  }
  for (Index p = 0; p < n; ++p) {
    const auto& rep = h.representatives[p];
    if (rep.size() == 1 && rep.leading_coeff() == 1) {
      for (int v = 0; v < nv; ++v)
        if (rep.leading_index() == a.idempotent(v)) sc.unit.add(p, 1);
    }
  }
  std::vector<EchelonBasis> radical_blocks(static_cast<std::size_t>(nv) * nv);
  for (const auto& r : algebra_radical(sc)) {
    std::map<std::pair<int, int>, SparseVector> parts;
    for (const auto& [k, c] : r) parts[h.representative_block[k]].axpy(c, h.representatives[k]);
    for (auto& [blk, lift] : parts) {
      if (radical_blocks[blk.first * nv + blk.second].insert(lift)) {
        h.radical.push_back(lift);
        h.radical_block.push_back(blk);
      }
    }
  }
  h.local_dim.assign(nv, 0);
  h.local_radical_dim.assign(nv, 0);
  for (const auto& blk : h.representative_block)
    if (blk.first == blk.second) ++h.local_dim[blk.first];
  for (const auto& blk : h.radical_block)
    if (blk.first == blk.second) ++h.local_radical_dim[blk.first];
  return h;
}

}  // namespace dgq
