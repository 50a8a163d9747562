#include "dgq/linalg.hpp"

namespace dgq {

QMatrix to_dense(const std::vector<SparseVector>& columns, Index rows) {
  QMatrix m = QMatrix::Zero(rows, static_cast<Index>(columns.size()));
  for (Index c = 0; c < static_cast<Index>(columns.size()); ++c) {
    for (const auto& [r, v] : columns[c]) m(r, c) = v;
  }
  return m;
}

std::map<int, Index> cohomology_dims(const ChainSpaces& c) {
  std::map<int, Index> dims;
  for (std::size_t k = 0; k < c.size(); ++k) {
    const auto& space = c[k];
    const Index next_dim = k + 1 < c.size() ? c[k + 1].dim : 0;
    if (k + 1 < c.size() && c[k + 1].degree != space.degree + 1) {
      throw InvalidInput("chain spaces must have consecutive degrees");
    }
    if (space.to_next.cols() != space.dim || space.to_next.rows() != next_dim) {
      throw InvalidInput("map out of degree " + std::to_string(space.degree) + " has the wrong shape");
    }
    if (k + 1 < c.size() && c[k + 1].to_next.rows() > 0 && space.dim > 0) {
      QMatrix composite = c[k + 1].to_next * space.to_next;
      for (Index r = 0; r < composite.rows(); ++r)
        for (Index col = 0; col < composite.cols(); ++col)
          if (composite(r, col) != 0)
            throw InvalidInput("complex condition violated at degree " + std::to_string(space.degree));
    }
  }
  Index incoming_rank = 0;
  for (const auto& space : c) {
    const Index out_rank = space.dim == 0 || space.to_next.rows() == 0 ? 0 : rank(space.to_next);
    dims[space.degree] = space.dim - out_rank - incoming_rank;
    incoming_rank = out_rank;
  }
  return dims;
}

SparseVector StructureConstants::multiply(const SparseVector& x, const SparseVector& y) const {
  SparseVector r;
  for (const auto& [i, a] : x)
    for (const auto& [j, b] : y) r.axpy(a * b, product(i, j));
  return r;
}

void check_associative_unital(const StructureConstants& a) {
  if (static_cast<Index>(a.products.size()) != a.dim * a.dim) {
    throw InvalidInput("structure constants table has the wrong size");
  }
  for (Index i = 0; i < a.dim; ++i) {
    const SparseVector bi = SparseVector::unit(i);
    if (!(a.multiply(a.unit, bi) == bi) || !(a.multiply(bi, a.unit) == bi)) {
      throw InvalidInput("unit law fails on basis element " + std::to_string(i));
    }
    for (Index j = 0; j < a.dim; ++j) {
      const SparseVector& ij = a.product(i, j);
      for (Index k = 0; k < a.dim; ++k) {
        SparseVector left = a.multiply(ij, SparseVector::unit(k));
        SparseVector right = a.multiply(bi, a.product(j, k));
        if (!(left == right)) {
          throw InvalidInput("structure constants are not associative at (" + std::to_string(i) + "," +
                             std::to_string(j) + "," + std::to_string(k) + ")");
        }
      }
    }
  }
}

std::vector<SparseVector> algebra_radical(const StructureConstants& a) {
  check_associative_unital(a);
  // tr(L_{b_m}) = sum_p coefficient of b_p in b_m b_p
  std::vector<Rational> trace(a.dim, Rational(0));
  for (Index m = 0; m < a.dim; ++m)
    for (Index p = 0; p < a.dim; ++p) trace[m] += a.product(m, p).coeff(p);
  std::vector<SparseVector> form_columns(a.dim);
  for (Index k = 0; k < a.dim; ++k) {
    for (Index l = 0; l < a.dim; ++l) {
      Rational value = 0;
      for (const auto& [m, c] : a.product(k, l)) value += c * trace[m];
      form_columns[k].add(l, value);
    }
  }
  return kernel_basis(form_columns);
}

}  // namespace dgq
