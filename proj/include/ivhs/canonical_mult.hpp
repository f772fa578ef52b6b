#pragma once

// Canonical multiplication μ: Sym² H⁰(ω) → H⁰(ω²) as an explicit matrix.
//
// Sym² is spanned by unordered pairs (i ≤ j) of basis sections, ordered
// lexicographically on the indices. Column (i, j) holds the target
// coordinates of s_i·s_j, written once even for i < j.

#include "ivhs/exact_linalg.hpp"
#include "ivhs/graded_quotient.hpp"
#include "ivhs/invariants.hpp"
#include "ivhs/poly.hpp"

#include <string>
#include <utility>
#include <vector>

namespace ivhs {

struct QuadraticRelation {
  /// Σ c_ij (s_i)*(s_j) with the pair notation of `source_labels`.
  std::string label;
  /// Coordinates over the Sym² pair basis (primitive integer vector).
  ExactVector coords;

  friend bool operator==(const QuadraticRelation&, const QuadraticRelation&) = default;
};

struct MultiplicationReport {
  std::string model;
  /// Labels of the canonical sections s_0..s_{g-1}.
  std::vector<std::string> section_labels;
  /// Labels of the Sym² pairs, "(s_i)*(s_j)".
  std::vector<std::string> source_labels;
  std::vector<std::string> target_labels;
  std::vector<std::pair<int, int>> pairs;
  long source_dim = 0;
  long target_dim = 0;
  ExactMatrix matrix;
  long rank = 0;
  long kernel_dim = 0;
  std::vector<QuadraticRelation> kernel_basis;

  friend bool operator==(const MultiplicationReport& a, const MultiplicationReport& b);
};

/// Unordered index pairs (i ≤ j) of {0..n-1}, lexicographic.
std::vector<std::pair<int, int>> sym2_pairs(int n);

/// Plane curve F = 0 of degree d ≥ 4: sections are S_{d-3}, the target is
/// (S/F)_{2d-6}. Pass `singular = true` when the caller declares
/// singularities; the construction is unchanged and the model is labelled
/// "singular-plane".
MultiplicationReport plane_mu(const Polynomial& f, bool singular = false);

/// Complete intersection Q = C = 0 in P^3 of type (a, b), a ≤ b, a + b ≥ 5.
/// Sections are (S/I)_{a+b-4}, the target (S/I)_{2(a+b-4)}. Throws
/// RegularSequenceError when (Q, C) is not a regular sequence.
MultiplicationReport ci_mu(const Polynomial& q, const Polynomial& c);

/// y² = f(x) of genus g: sections x^i dx/y for 0 ≤ i < g, target x^k for
/// 0 ≤ k ≤ 2g-2.
MultiplicationReport hyperelliptic_mu(int g);

/// Σ c_ij s_i s_j computed in the ambient polynomial ring, with the section
/// labels of `report` read back as monomials over `vars`. Only meaningful for
/// the plane and complete-intersection models; a kernel vector lifts to a
/// form in the ideal of the curve.
Polynomial lift_relation(const MultiplicationReport& report, const ExactVector& coords,
                         const VariableSet& vars);

}  // namespace ivhs
