#include <doctest.h>

#include <random>

#include "dgq/linalg.hpp"

using namespace dgq;

namespace {

QMatrix from_rows(std::initializer_list<std::initializer_list<int>> rows) {
  const auto r = static_cast<Eigen::Index>(rows.size());
  const auto c = static_cast<Eigen::Index>(rows.begin()->size());
  QMatrix m(r, c);
  Eigen::Index i = 0;
  for (const auto& row : rows) {
    Eigen::Index j = 0;
    for (int x : row) m(i, j++) = x;
    ++i;
  }
  return m;
}

QMatrix random_matrix(std::mt19937& rng, int rows, int cols) {
  std::uniform_int_distribution<int> entry(-2, 2), sparse(0, 2);
  QMatrix m(rows, cols);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) m(i, j) = sparse(rng) == 0 ? Rational(entry(rng), 1 + sparse(rng)) : Rational(0);
  return m;
}

StructureConstants matrix_units_upper() {
  // basis e11, e12, e22
  StructureConstants a;
  a.dim = 3;
  a.products.assign(9, {});
  a.products[0 * 3 + 0] = SparseVector::unit(0);
  a.products[0 * 3 + 1] = SparseVector::unit(1);
  a.products[1 * 3 + 2] = SparseVector::unit(1);
  a.products[2 * 3 + 2] = SparseVector::unit(2);
  a.unit = SparseVector::unit(0) + SparseVector::unit(2);
  return a;
}

}  // namespace

TEST_CASE("rank of small matrices") {
  CHECK(rank(QMatrix::Identity(2, 2)) == 2);
  CHECK(rank(QMatrix::Zero(3, 3)) == 0);
  CHECK(rank(from_rows({{1, 2}, {2, 4}})) == 1);
}

TEST_CASE("nullspace bases") {
  CHECK(nullspace_basis(QMatrix::Identity(3, 3)).empty());
  CHECK(nullspace_basis(QMatrix::Zero(2, 3)).size() == 3);
  auto k = nullspace_basis(from_rows({{1, 1}}));
  REQUIRE(k.size() == 1);
  CHECK(k[0](0) == -k[0](1));
  CHECK(k[0](0) != 0);
}

TEST_CASE("rank and nullity on random matrices") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 60; ++trial) {
    const int r = 1 + trial % 6, c = 1 + (trial * 5) % 7;
    QMatrix m = random_matrix(rng, r, c);
    QMatrix mt = m.transpose();
    CHECK(rank(m) == rank(mt));
    auto kernel = nullspace_basis(m);
    CHECK(static_cast<Eigen::Index>(kernel.size()) + rank(m) == c);
    for (const auto& v : kernel) CHECK((m * v).isZero());
    // sparse path agrees with the dense one
    std::vector<SparseVector> cols(c);
    for (int j = 0; j < c; ++j)
      for (int i = 0; i < r; ++i)
        if (m(i, j) != 0) cols[j].add(i, m(i, j));
    CHECK(rank_of(cols) == rank(m));
    CHECK(kernel_basis(cols).size() == kernel.size());
  }
}

TEST_CASE("cohomology of chain spaces") {
  SUBCASE("identity is acyclic") {
    ChainSpaces c{{0, 1, QMatrix::Identity(1, 1)}, {1, 1, QMatrix(0, 1)}};
    auto h = cohomology_dims(c);
    CHECK(h.at(0) == 0);
    CHECK(h.at(1) == 0);
  }
  SUBCASE("zero differentials") {
    ChainSpaces c{{-1, 2, QMatrix::Zero(3, 2)}, {0, 3, QMatrix::Zero(1, 3)}, {1, 1, QMatrix(0, 1)}};
    auto h = cohomology_dims(c);
    CHECK(h.at(-1) == 2);
    CHECK(h.at(0) == 3);
    CHECK(h.at(1) == 1);
  }
  SUBCASE("projection onto a line") {
    ChainSpaces c{{0, 2, from_rows({{1, 0}})}, {1, 1, QMatrix(0, 1)}};
    auto h = cohomology_dims(c);
    CHECK(h.at(0) == 1);
    CHECK(h.at(1) == 0);
  }
  SUBCASE("broken complex is rejected") {
    ChainSpaces c{{0, 1, QMatrix::Identity(1, 1)}, {1, 1, QMatrix::Identity(1, 1)}, {2, 1, QMatrix(0, 1)}};
    CHECK_THROWS_AS(cohomology_dims(c), InvalidInput);
  }
}

TEST_CASE("Euler characteristic of random complexes") {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 30; ++trial) {
    // d1 * d0 = 0 by construction: d0 = K * X where the columns of K span ker d1
    const int n0 = 1 + trial % 4, n1 = 2 + trial % 3, n2 = 1 + trial % 5;
    QMatrix d1 = random_matrix(rng, n2, n1);
    auto ker = nullspace_basis(d1);
    QMatrix d0 = QMatrix::Zero(n1, n0);
    for (const auto& v : ker) {
      QMatrix x = random_matrix(rng, 1, n0);
      d0 += v * x;
    }
    ChainSpaces c{{0, n0, d0}, {1, n1, d1}, {2, n2, QMatrix(0, n2)}};
    auto h = cohomology_dims(c);
    CHECK(h.at(0) - h.at(1) + h.at(2) == n0 - n1 + n2);
  }
}

TEST_CASE("Jacobson radical") {
  SUBCASE("k x k") {
    StructureConstants a;
    a.dim = 2;
    a.products = {SparseVector::unit(0), {}, {}, SparseVector::unit(1)};
    a.unit = SparseVector::unit(0) + SparseVector::unit(1);
    check_associative_unital(a);
    CHECK(algebra_radical(a).empty());
  }
  SUBCASE("dual numbers") {
    StructureConstants a;
    a.dim = 2;  // 1, x
    a.products = {SparseVector::unit(0), SparseVector::unit(1), SparseVector::unit(1), {}};
    a.unit = SparseVector::unit(0);
    auto rad = algebra_radical(a);
    REQUIRE(rad.size() == 1);
    CHECK(rad[0].coeff(0) == 0);
    CHECK(rad[0].coeff(1) != 0);
  }
  SUBCASE("upper triangular 2x2") {
    auto a = matrix_units_upper();
    check_associative_unital(a);
    auto rad = algebra_radical(a);
    REQUIRE(rad.size() == 1);
    CHECK(rad[0].size() == 1);
    CHECK(rad[0].coeff(1) != 0);
    // nilpotent: rad * rad = 0
    CHECK(a.multiply(rad[0], rad[0]).empty());
  }
  SUBCASE("non-associative table is rejected") {
    StructureConstants a;
    a.dim = 2;  // 1, x with x*1 = 0
    a.products = {SparseVector::unit(0), SparseVector::unit(1), {}, SparseVector::unit(0)};
    a.unit = SparseVector::unit(0);
    CHECK_THROWS_AS(check_associative_unital(a), InvalidInput);
  }
}

TEST_CASE("radical of the quotient vanishes") {
  // k[x]/(x^3): radical spanned by x, x^2; quotient by it is k
  StructureConstants a;
  a.dim = 3;
  a.products.assign(9, {});
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      if (i + j < 3) a.products[i * 3 + j] = SparseVector::unit(i + j);
  a.unit = SparseVector::unit(0);
  auto rad = algebra_radical(a);
  CHECK(rad.size() == 2);
  for (const auto& r : rad) CHECK(r.coeff(0) == 0);
  SparseVector cube = a.multiply(a.multiply(rad[0], rad[1]), rad[0]);
  CHECK(cube.empty());
}
