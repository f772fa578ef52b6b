#pragma once

// IVHS of a smooth plane curve F = 0 through its Jacobian ring
// R = S / (∂F/∂x, ∂F/∂y, ∂F/∂z).
//
// With d = deg F: H⁰(ω) ≅ R_{d-3}, H¹(T) ≅ R_d and H¹(O) ≅ R_{2d-3}; the
// cup product with ξ ∈ R_d is multiplication R_{d-3} → R_{2d-3}. R has
// socle degree 3(d-2) and is Gorenstein, so dim R_k = dim R_{3(d-2)-k}.

#include "ivhs/exact_linalg.hpp"
#include "ivhs/graded_quotient.hpp"
#include "ivhs/poly.hpp"

#include <cstddef>
#include <vector>

namespace ivhs {

class JacobianContext {
 public:
  /// Throws ValidationError unless F is a homogeneous ternary form of degree
  /// ≥ 4 whose Jacobian ring vanishes in degree 3(d-2)+1.
  explicit JacobianContext(Polynomial f);

  const Polynomial& form() const noexcept { return f_; }
  int degree() const noexcept { return d_; }
  int socle_degree() const noexcept { return 3 * (d_ - 2); }
  /// Nonzero partial derivatives of F.
  const std::vector<Polynomial>& partials() const noexcept { return partials_; }

  /// R_{d-3}: canonical sections.
  const GradedQuotientContext& sections() const noexcept { return sections_; }
  /// R_d: first-order deformations.
  const GradedQuotientContext& deformations() const noexcept { return deformations_; }
  /// R_{2d-3}: H¹(O).
  const GradedQuotientContext& h1() const noexcept { return h1_; }

  /// R_k for any k ≥ 0.
  GradedQuotientContext piece(int k) const;

 private:
  Polynomial f_;
  int d_;
  std::vector<Polynomial> partials_;
  GradedQuotientContext sections_;
  GradedQuotientContext deformations_;
  GradedQuotientContext h1_;
};

inline JacobianContext jacobian_context(const Polynomial& f) { return JacobianContext(f); }

struct IVHSReport {
  Polynomial xi;
  ExactMatrix matrix;  // dim R_{2d-3} × dim R_{d-3}
  long rank = 0;
  bool is_max = false;

  friend bool operator==(const IVHSReport& a, const IVHSReport& b);
};

/// Column j is the class of xi · sections().basis()[j] in R_{2d-3}.
IVHSReport ivhs_matrix(const JacobianContext& ctx, const Polynomial& xi);

struct IVHSSearchResult {
  IVHSReport best;
  bool achieved_max = false;
  long candidates_tried = 0;
  /// 0-based position of `best` in the enumeration.
  long best_index = 0;
};

/// Deterministic search for a maximal-rank ξ. Candidates, in order: every
/// degree-d monomial; then, for k = 2, 3, ..., sums of k distinct degree-d
/// monomials with nonzero class in R_d, in lexicographic order of index
/// tuples. Stops at the first candidate of full rank or after `budget`
/// candidates; ties keep the earliest candidate.
IVHSSearchResult ivhs_max_rank(const JacobianContext& ctx, long budget);

}  // namespace ivhs
