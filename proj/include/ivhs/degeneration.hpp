#pragma once

// Rank defects of the IVHS along non-equisingular degenerations.
//
// Each singular point of the central fiber is smoothed (fully, partially, or
// not at all). The total drop Δ of the δ-invariant equals the loss of IVHS
// rank and the number of vanishing cycles; the limiting weight filtration has
// Gr_1 = H¹ of the normalization and Gr_2 of dimension Σδ.

#include "ivhs/invariants.hpp"

#include <optional>
#include <vector>

namespace ivhs {

struct SmoothingStep {
  SingularityKind initial;
  /// Empty means the point is smoothed completely.
  std::optional<SingularityKind> target;

  friend bool operator==(const SmoothingStep&, const SmoothingStep&) = default;
};

/// "initial:target" with kinds from the catalog or "smooth" as target;
/// parameterized kinds take their own colon, e.g. "ordinary:3:smooth".
SmoothingStep parse_smoothing_step(std::string_view text);
std::string to_string(const SmoothingStep& step);

/// δ of the step's target, zero when smooth.
int target_delta(const SmoothingStep& step);

struct DegenerationSpec {
  int arithmetic_genus = 0;
  std::vector<SmoothingStep> steps;

  friend bool operator==(const DegenerationSpec&, const DegenerationSpec&) = default;
};

struct DegenerationReport {
  int arithmetic_genus = 0;
  int delta_initial = 0;
  int delta_target = 0;
  int total_drop = 0;  // Δ
  int predicted_max_rank = 0;
  int gr_w1_dim = 0;
  int gr_w2_dim = 0;
  int vanishing_cycle_dim = 0;

  friend bool operator==(const DegenerationReport&, const DegenerationReport&) = default;
};

/// Throws ValidationError when a step raises δ or Σδ(initial) > p_a.
DegenerationReport rank_defect(const DegenerationSpec& spec);

struct MixedHodgeDims {
  int gr_w1 = 0;
  int gr_w2 = 0;

  int total() const { return gr_w1 + gr_w2; }
  friend bool operator==(const MixedHodgeDims&, const MixedHodgeDims&) = default;
};

MixedHodgeDims mhs_dims(int arithmetic_genus, const std::vector<SingularityRecord>& sings);

struct EquisingularRank {
  int total = 0;
  int from_normalization = 0;
  int from_singularities = 0;

  friend bool operator==(const EquisingularRank&, const EquisingularRank&) = default;
};

/// rank = g̃ + Σδ = p_a for an equisingular family.
EquisingularRank equisingular_rank(int arithmetic_genus, const std::vector<SingularityRecord>& sings);

/// Rank loss of the Yukawa coupling for a hypersurface with ordinary double
/// points: one vanishing cycle per node.
int yukawa_defect(int node_count);

}  // namespace ivhs
