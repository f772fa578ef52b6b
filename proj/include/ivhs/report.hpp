#pragma once

// Report values produced by the command-line front end, with a stable JSON
// schema (parse(render(r)) == r) and a plain-text rendering derived from it.

#include "ivhs/canonical_mult.hpp"
#include "ivhs/degeneration.hpp"
#include "ivhs/invariants.hpp"
#include "ivhs/jacobian_ivhs.hpp"

#include "json.hpp"

#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace ivhs {

using Json = nlohmann::json;

enum class ReportKind {
  PlaneMu,
  CiMu,
  HyperellipticMu,
  JacobianIvhs,
  ClassReport,
  Invariants,
  Degeneration,
};

std::string to_string(ReportKind kind);
ReportKind parse_report_kind(std::string_view text);

struct IVHSSearchPayload {
  long budget = 0;
  bool achieved_max = false;
  long candidates_tried = 0;
  long best_index = 0;
  IVHSReport best;

  friend bool operator==(const IVHSSearchPayload&, const IVHSSearchPayload&) = default;
};

struct JacobianPayload {
  Polynomial form;
  int degree = 0;
  int socle_degree = 0;
  long dim_sections = 0;      // R_{d-3}
  long dim_deformations = 0;  // R_d
  long dim_h1 = 0;            // R_{2d-3}
  std::vector<std::string> section_basis;
  std::vector<std::string> h1_basis;
  std::optional<IVHSReport> ivhs;
  std::optional<IVHSSearchPayload> search;

  friend bool operator==(const JacobianPayload&, const JacobianPayload&) = default;
};

struct BrillNoether {
  int g = 0;
  int r = 0;
  int d = 0;
  int rho = 0;

  friend bool operator==(const BrillNoether&, const BrillNoether&) = default;
};

struct InvariantsPayload {
  CurveInvariants curve;
  MixedHodgeDims mhs;
  EquisingularRank equisingular;
  std::optional<BrillNoether> brill_noether;

  friend bool operator==(const InvariantsPayload&, const InvariantsPayload&) = default;
};

struct DegenerationPayload {
  DegenerationSpec spec;
  DegenerationReport report;
  std::optional<int> yukawa_nodes;
  std::optional<int> yukawa_defect;

  friend bool operator==(const DegenerationPayload&, const DegenerationPayload&) = default;
};

using ReportPayload = std::variant<MultiplicationReport, JacobianPayload, ClassMuReport,
                                   InvariantsPayload, DegenerationPayload>;

struct Report {
  ReportKind kind = ReportKind::PlaneMu;
  ReportPayload payload;
  /// Echo of the inputs that produced the report.
  Json provenance = Json::object();

  friend bool operator==(const Report&, const Report&) = default;
};

Json matrix_to_json(const ExactMatrix& m);
ExactMatrix matrix_from_json(const Json& j);

Json to_json(const Report& r);
/// Throws ValidationError on schema violations.
Report report_from_json(const Json& j);

/// Canonical JSON text: sorted keys, two-space indent, trailing newline.
std::string render_json(const Report& r);
/// Human-readable text with the same numeric content as render_json.
std::string render_text(const Report& r);
std::string render_text(const Json& j);

/// Loads a degeneration document {"pa": int, "steps": [{"initial", "target"}]}.
DegenerationSpec degeneration_spec_from_json(const Json& j, const std::string& where);
DegenerationSpec load_degeneration_spec(const std::string& path);
Json degeneration_spec_to_json(const DegenerationSpec& spec);

}  // namespace ivhs
