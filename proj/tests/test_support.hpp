#pragma once

#include "ivhs/exact_linalg.hpp"
#include "ivhs/poly.hpp"
#include "oracle.hpp"

#include <random>

namespace ivhs::testing {

inline Polynomial from_oracle(const oracle::Poly& p, const VariableSet& vars) {
  Polynomial out(vars);
  for (const auto& [e, c] : p) out.add_term(Monomial{e}, c);
  return out;
}

inline oracle::DenseMatrix to_dense(const ExactMatrix& m) {
  oracle::DenseMatrix out(static_cast<std::size_t>(m.rows()),
                          oracle::Row(static_cast<std::size_t>(m.cols())));
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      out[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = m(i, j);
    }
  }
  return out;
}

/// Small random matrix, often rank-deficient: some rows are combinations of
/// earlier ones and entries are occasionally fractional.
inline ExactMatrix random_matrix(std::mt19937& rng) {
  std::uniform_int_distribution<int> dim(0, 7);
  std::uniform_int_distribution<int> entry(-4, 4);
  std::uniform_int_distribution<int> den(1, 3);
  std::bernoulli_distribution dependent(0.3);
  const int rows = dim(rng);
  const int cols = dim(rng);
  ExactMatrix m(rows, cols);
  for (int i = 0; i < rows; ++i) {
    if (i >= 2 && dependent(rng)) {
      m.row(i) = Rational(entry(rng)) * m.row(i - 1) + Rational(entry(rng), den(rng)) * m.row(i - 2);
      continue;
    }
    for (int j = 0; j < cols; ++j) m(i, j) = Rational(entry(rng), den(rng));
  }
  return m;
}

}  // namespace ivhs::testing
