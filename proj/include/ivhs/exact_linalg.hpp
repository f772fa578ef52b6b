#pragma once

// Exact dense linear algebra over the rationals.
//
// Elimination is fraction-free: every row is cleared of denominators, the
// integer matrix is brought to echelon form with Bareiss' one-step division
// rule, and only the final back-substitution returns to the field. Pivots are
// chosen as the first nonzero entry, scanning top to bottom, in the leftmost
// column that does not yet hold a pivot.

#include "ivhs/rational.hpp"

#include <Eigen/Core>

#include <stdexcept>
#include <utility>
#include <vector>

namespace ivhs {

template <typename Scalar>
using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

template <typename Scalar>
using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

using ExactMatrix = Matrix<Rational>;
using ExactVector = Vector<Rational>;

/// Maps a field scalar onto the integral domain used for fraction-free
/// elimination. Specialize for any additional exact scalar type.
template <typename Scalar>
struct FractionFreeTraits;

template <>
struct FractionFreeTraits<Rational> {
  using Ring = Integer;
  static Ring numerator(const Rational& q) { return numerator_of(q); }
  static Ring denominator(const Rational& q) { return denominator_of(q); }
  static Ring gcd(const Ring& a, const Ring& b) {
    return boost::multiprecision::gcd(a, b);
  }
  static Ring lcm(const Ring& a, const Ring& b) {
    return boost::multiprecision::lcm(a, b);
  }
  static Rational to_field(const Ring& n, const Ring& d) { return Rational(n, d); }
};

template <typename Scalar>
struct EchelonForm {
  Matrix<Scalar> reduced;
  std::vector<Eigen::Index> pivots;
};

namespace detail {

/// In-place fraction-free row echelon form. Returns the pivot columns.
template <typename Ring>
std::vector<Eigen::Index> bareiss_echelon(Matrix<Ring>& a) {
  const Eigen::Index rows = a.rows();
  const Eigen::Index cols = a.cols();
  std::vector<Eigen::Index> pivots;
  Ring previous(1);
  Eigen::Index r = 0;
  for (Eigen::Index c = 0; c < cols && r < rows; ++c) {
    Eigen::Index p = r;
    while (p < rows && a(p, c) == 0) ++p;
    if (p == rows) continue;
    if (p != r) a.row(p).swap(a.row(r));
    const Ring pivot = a(r, c);
    for (Eigen::Index i = r + 1; i < rows; ++i) {
      const Ring lead = a(i, c);
      // Exact: every intermediate entry is a minor of the input. Entries that
      // are zero in both rows stay zero, so sparse rows are cheap.
      if (lead == 0) {
        if (pivot == previous) continue;
        for (Eigen::Index j = c + 1; j < cols; ++j) {
          if (a(i, j) != 0) a(i, j) = a(i, j) * pivot / previous;
        }
        continue;
      }
      for (Eigen::Index j = c + 1; j < cols; ++j) {
        if (a(i, j) == 0 && a(r, j) == 0) continue;
        a(i, j) = (a(i, j) * pivot - lead * a(r, j)) / previous;
      }
      a(i, c) = Ring(0);
    }
    previous = pivot;
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

/// Scales each row by the lcm of its denominators.
template <typename Derived>
auto clear_denominators(const Eigen::MatrixBase<Derived>& m) {
  using Scalar = typename Derived::Scalar;
  using Traits = FractionFreeTraits<Scalar>;
  using Ring = typename Traits::Ring;
  Matrix<Ring> out = Matrix<Ring>::Zero(m.rows(), m.cols());
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    Ring scale(1);
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      if (m(i, j) != 0) scale = Traits::lcm(scale, Traits::denominator(m(i, j)));
    }
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      if (m(i, j) != 0) out(i, j) = Traits::numerator(m(i, j)) * (scale / Traits::denominator(m(i, j)));
    }
  }
  return out;
}

}  // namespace detail

/// Reduced row echelon form with the deterministic pivoting rule above.
/// Pivot columns are strictly increasing; zero rows sit at the bottom.
template <typename Derived>
EchelonForm<typename Derived::Scalar> rref(const Eigen::MatrixBase<Derived>& m) {
  using Scalar = typename Derived::Scalar;
  using Traits = FractionFreeTraits<Scalar>;
  using Ring = typename Traits::Ring;

  Matrix<Ring> work = detail::clear_denominators(m);
  std::vector<Eigen::Index> pivots = detail::bareiss_echelon(work);

  Matrix<Scalar> out = Matrix<Scalar>::Zero(m.rows(), m.cols());
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      if (work(i, j) != 0) out(i, j) = Traits::to_field(work(i, j), Ring(1));
    }
  }
  const auto rank = static_cast<Eigen::Index>(pivots.size());
  for (Eigen::Index i = rank - 1; i >= 0; --i) {
    const Eigen::Index pc = pivots[static_cast<std::size_t>(i)];
    std::vector<Eigen::Index> support;
    for (Eigen::Index j = pc; j < out.cols(); ++j) {
      if (out(i, j) != 0) support.push_back(j);
    }
    if (out(i, pc) != 1) {
      const Scalar inv = Scalar(1) / out(i, pc);
      for (Eigen::Index j : support) out(i, j) *= inv;
    }
    for (Eigen::Index k = 0; k < i; ++k) {
      const Scalar factor = out(k, pc);
      if (factor == 0) continue;
      for (Eigen::Index j : support) out(k, j) -= factor * out(i, j);
    }
  }
  return {std::move(out), std::move(pivots)};
}

template <typename Derived>
Eigen::Index rank(const Eigen::MatrixBase<Derived>& m) {
  auto work = detail::clear_denominators(m);
  return static_cast<Eigen::Index>(detail::bareiss_echelon(work).size());
}

/// Rescales a nonzero vector to integer entries with gcd 1 and a positive
/// first nonzero entry. The zero vector is returned unchanged.
template <typename Scalar>
Vector<Scalar> primitive(const Vector<Scalar>& v) {
  using Traits = FractionFreeTraits<Scalar>;
  using Ring = typename Traits::Ring;
  Ring scale(1);
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    scale = Traits::lcm(scale, Traits::denominator(v(i)));
  }
  Ring content(0);
  Eigen::Index first = -1;
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    if (v(i) == 0) continue;
    if (first < 0) first = i;
    const Ring n = Traits::numerator(v(i)) * (scale / Traits::denominator(v(i)));
    content = Traits::gcd(content, n);
  }
  if (first < 0) return v;
  if (v(first) < 0) content = -content;
  Vector<Scalar> out(v.size());
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    const Ring n = Traits::numerator(v(i)) * (scale / Traits::denominator(v(i)));
    out(i) = Traits::to_field(n / content, Ring(1));
  }
  return out;
}

/// Basis of the right null space, one primitive integer vector per free
/// column (free columns in increasing order).
template <typename Derived>
std::vector<Vector<typename Derived::Scalar>> kernel_basis(
    const Eigen::MatrixBase<Derived>& m) {
  using Scalar = typename Derived::Scalar;
  const EchelonForm<Scalar> e = rref(m);
  std::vector<bool> is_pivot(static_cast<std::size_t>(m.cols()), false);
  for (Eigen::Index p : e.pivots) is_pivot[static_cast<std::size_t>(p)] = true;

  std::vector<Vector<Scalar>> basis;
  for (Eigen::Index free = 0; free < m.cols(); ++free) {
    if (is_pivot[static_cast<std::size_t>(free)]) continue;
    Vector<Scalar> v = Vector<Scalar>::Zero(m.cols());
    v(free) = Scalar(1);
    for (std::size_t i = 0; i < e.pivots.size(); ++i) {
      v(e.pivots[i]) = -e.reduced(static_cast<Eigen::Index>(i), free);
    }
    basis.push_back(primitive(v));
  }
  return basis;
}

/// Exact zero test (Eigen's isZero() compares against a precision).
template <typename Derived>
bool all_zero(const Eigen::MatrixBase<Derived>& m) {
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      if (m(i, j) != 0) return false;
    }
  }
  return true;
}

/// Builds a matrix from nested initializer data; handy for tests and fixtures.
template <typename Scalar = Rational>
Matrix<Scalar> matrix_from_rows(const std::vector<std::vector<long>>& rows) {
  const auto r = static_cast<Eigen::Index>(rows.size());
  const auto c = rows.empty() ? Eigen::Index(0)
                              : static_cast<Eigen::Index>(rows.front().size());
  Matrix<Scalar> m(r, c);
  for (Eigen::Index i = 0; i < r; ++i) {
    if (static_cast<Eigen::Index>(rows[static_cast<std::size_t>(i)].size()) != c) {
      throw std::invalid_argument("matrix_from_rows: ragged rows");
    }
    for (Eigen::Index j = 0; j < c; ++j) {
      m(i, j) = Scalar(rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]);
    }
  }
  return m;
}

}  // namespace ivhs
