#pragma once

// Degree-k pieces of S/I for a homogeneous ideal I given by generators.
//
// In a single degree k the ideal is spanned by the products m·g with g a
// generator and m a monomial of degree k - deg g, so one echelonization of
// those products over the graded-lex monomial basis of S_k determines the
// quotient. The quotient basis is the set of non-pivot monomials.

#include "ivhs/exact_linalg.hpp"
#include "ivhs/poly.hpp"

#include <cstddef>
#include <map>
#include <vector>

namespace ivhs {

/// dim of I ∩ S_k where I = (gens). Generators of degree > k contribute nothing.
long ideal_degree_dim(const std::vector<Polynomial>& gens, int k);

/// dim S_k - dim S_{k-a} - dim S_{k-b} + dim S_{k-a-b}: the Hilbert function
/// of a complete intersection of type (a, b).
long koszul_expected_dim(int a, int b, std::size_t nvars, int k);

class GradedQuotientContext {
 public:
  GradedQuotientContext(std::vector<Polynomial> gens, int degree);

  /// Variable set and degree fixed at construction; generators may be empty
  /// only when an explicit variable set is supplied.
  GradedQuotientContext(VariableSet vars, std::vector<Polynomial> gens, int degree);

  const VariableSet& variables() const noexcept { return vars_; }
  int degree() const noexcept { return degree_; }
  const std::vector<Polynomial>& generators() const noexcept { return gens_; }

  /// Representatives of (S/I)_k, in graded-lex order.
  const std::vector<Monomial>& basis() const noexcept { return basis_; }
  std::size_t dim() const noexcept { return basis_.size(); }

  /// dim of the ambient S_k.
  std::size_t ambient_dim() const noexcept { return monomials_.size(); }
  /// dim of I ∩ S_k.
  std::size_t ideal_dim() const noexcept { return pivots_.size(); }

  /// Coordinates of the class of f in basis(). f must be homogeneous of the
  /// context degree (or zero).
  ExactVector reduce(const Polynomial& f) const;

  /// Polynomial whose coordinates in basis() are `coords`.
  Polynomial lift(const ExactVector& coords) const;

 private:
  void build();

  VariableSet vars_;
  std::vector<Polynomial> gens_;
  int degree_;

  std::vector<Monomial> monomials_;
  std::map<Monomial, Eigen::Index, GradedLexOrder> column_of_;
  ExactMatrix echelon_;  // nonzero rows of the rref of generator multiples
  std::vector<Eigen::Index> pivots_;
  std::vector<Monomial> basis_;
  std::vector<Eigen::Index> basis_columns_;
};

inline GradedQuotientContext quotient_context(const std::vector<Polynomial>& gens, int k) {
  return GradedQuotientContext(gens, k);
}

inline ExactVector reduce(const GradedQuotientContext& ctx, const Polynomial& f) {
  return ctx.reduce(f);
}

/// Checks that (first, second) has the Hilbert function of a complete
/// intersection in every degree 0..max_degree. Throws RegularSequenceError at
/// the first degree where it does not.
void check_regular_sequence(const Polynomial& first, const Polynomial& second, int max_degree);

}  // namespace ivhs
