#include <doctest.h>

#include <array>

#include "dgq/algebra.hpp"
#include "dgq/errors.hpp"
#include "dgq/module.hpp"
#include "fixtures.hpp"

using namespace dgq;

TEST_CASE("path algebra dimensions") {
  auto rel = algebra_from_quiver(fixture("q_rel"));
  CHECK(rel->dim() == 7);
  rel->validate();
  auto t = algebra_from_quiver(fixture("q_tildeA"));
  CHECK(t->dim() == 40);
  t->validate();
  DgQuiver k;
  k.add_vertex("0");
  CHECK(algebra_from_quiver(k)->dim() == 1);
  CHECK(rel->gl_dim_hint() == 2);
}

TEST_CASE("cyclic quivers are engine-ineligible") {
  try {
    algebra_from_quiver(fixture("q_b0"));
    FAIL("expected EngineIneligible");
  } catch (const EngineIneligible& e) {
    CHECK_FALSE(e.cycle().empty());
  }
}

TEST_CASE("H0 dimensions") {
  auto t = algebra_from_quiver(fixture("q_tildeA"));
  CHECK(h0_dimension(*t, 0, 0) == 1);
  CHECK(h0_dimension(*t, 0, 1) == 2);
  CHECK(h0_dimension(*t, 0, 2) == 4);
  CHECK(h0_dimension(*t, 0, 3) == 6);
  CHECK(h0_dimension(*t, 1, 3) == 4);
  CHECK(h0_dimension(*t, 3, 0) == 0);
  auto rel = algebra_from_quiver(fixture("q_rel"));
  CHECK(h0_dimension(*rel, 0, 2) == 0);
  CHECK(h0_dimension(*rel, 0, 1) == 1);
}

TEST_CASE("H0 structure and radical") {
  auto t = algebra_from_quiver(fixture("q_tildeA"));
  auto h = h0_structure(*t);
  CHECK(h.representatives.size() == 24);
  CHECK(h.elementary());
  // the radical is everything off the diagonal
  CHECK(h.radical.size() == 24 - 4);
  for (const auto& blk : h.radical_block) CHECK(blk.first != blk.second);
}

TEST_CASE("simple modules") {
  auto rel = algebra_from_quiver(fixture("q_rel"));
  for (int i = 0; i < 3; ++i) {
    auto s = simple_module(rel, i);
    CHECK(s.dim() == 1);
    s.validate();
    CHECK(s.act(0, rel->idempotent(i)) == SparseVector::unit(0));
  }
  auto t = algebra_from_quiver(fixture("q_tildeA"));
  auto s0 = simple_module(t, 0);
  s0.validate();
  CHECK(s0.dim() == 1);
  // arrows act by zero
  CHECK(s0.action[0].size() == 1);
}

namespace {

// 2x2 matrices at a single vertex: not elementary.
AlgebraPtr matrix_algebra() {
  std::vector<BasisElement> basis;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) basis.push_back({0, 0, 0, "E" + std::to_string(i) + std::to_string(j)});
  // basis order E00, E01, E10, E11; the unit E00 + E11 is not a basis element,
  // so use the change of basis 1 = E00 + E11 in slot 3.
  // element k: 0 -> 1, 1 -> E01, 2 -> E10, 3 -> E00
  auto mat = [](int k) {
    std::array<std::array<int, 2>, 2> m{};
    if (k == 0) m = {{{1, 0}, {0, 1}}};
    if (k == 1) m = {{{0, 1}, {0, 0}}};
    if (k == 2) m = {{{0, 0}, {1, 0}}};
    if (k == 3) m = {{{1, 0}, {0, 0}}};
    return m;
  };
  auto coords = [](const std::array<std::array<int, 2>, 2>& m) {
    SparseVector v;
    v.add(0, m[1][1]);
    v.add(1, m[0][1]);
    v.add(2, m[1][0]);
    v.add(3, m[0][0] - m[1][1]);
    return v;
  };
  ProductTable products;
  for (int x = 0; x < 4; ++x)
    for (int y = 0; y < 4; ++y) {
      auto a = mat(x), b = mat(y);
      std::array<std::array<int, 2>, 2> c{};
      for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
          for (int k = 0; k < 2; ++k) c[i][j] += a[i][k] * b[k][j];
      products[{x, y}] = coords(c);
    }
  return std::make_shared<FinDimDgAlgebra>(std::vector<std::string>{"0"}, basis, std::vector<Index>{0}, products,
                                           std::vector<SparseVector>(4));
}

}  // namespace

TEST_CASE("non-elementary H0 is rejected") {
  auto m = matrix_algebra();
  m->validate();
  auto h = h0_structure(*m);
  CHECK(h.radical.empty());
  CHECK_FALSE(h.elementary());
  CHECK_THROWS_AS(simple_module(m, 0), InvalidInput);
}
