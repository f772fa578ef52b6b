#include "ivhs/report.hpp"

#include "ivhs/error.hpp"

#include <fstream>
#include <sstream>

namespace ivhs {

std::string to_string(ReportKind kind) {
  switch (kind) {
    case ReportKind::PlaneMu: return "plane_mu";
    case ReportKind::CiMu: return "ci_mu";
    case ReportKind::HyperellipticMu: return "hyperelliptic_mu";
    case ReportKind::JacobianIvhs: return "jacobian_ivhs";
    case ReportKind::ClassReport: return "class_report";
    case ReportKind::Invariants: return "invariants";
    case ReportKind::Degeneration: return "degeneration";
  }
  return "?";
}

ReportKind parse_report_kind(std::string_view text) {
  for (ReportKind k : {ReportKind::PlaneMu, ReportKind::CiMu, ReportKind::HyperellipticMu,
                       ReportKind::JacobianIvhs, ReportKind::ClassReport, ReportKind::Invariants,
                       ReportKind::Degeneration}) {
    if (text == to_string(k)) return k;
  }
  throw ValidationError("kind", "unknown report kind '" + std::string(text) + "'");
}

namespace {

// ---------------------------------------------------------------------------
// Schema helpers

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) {
    throw ValidationError(key, "missing field");
  }
  return j.at(key);
}

template <typename T>
T get(const Json& j, const char* key) {
  const Json& v = field(j, key);
  try {
    return v.get<T>();
  } catch (const Json::exception& e) {
    throw ValidationError(key, std::string("wrong type: ") + e.what());
  }
}

Rational rational_from_json(const Json& j) {
  try {
    if (j.is_number_integer()) return Rational(j.get<long long>());
    return parse_rational(j.get<std::string>());
  } catch (const std::exception& e) {
    throw ValidationError("entries", std::string("bad rational: ") + e.what());
  }
}

Json vector_to_json(const ExactVector& v) {
  Json out = Json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) out.push_back(to_string(v(i)));
  return out;
}

ExactVector vector_from_json(const Json& j) {
  if (!j.is_array()) throw ValidationError("coords", "expected an array");
  ExactVector v(static_cast<Eigen::Index>(j.size()));
  for (std::size_t i = 0; i < j.size(); ++i) v(static_cast<Eigen::Index>(i)) = rational_from_json(j[i]);
  return v;
}

Json polynomial_to_json(const Polynomial& f) {
  return {{"vars", f.variables().names()}, {"text", to_string(f)}};
}

Polynomial polynomial_from_json(const Json& j) {
  const VariableSet vars(get<std::vector<std::string>>(j, "vars"));
  return parse_poly(get<std::string>(j, "text"), vars);
}

Json singularity_to_json(const SingularityRecord& s) {
  return {{"kind", to_string(s.kind)}, {"delta", s.delta}, {"branches", s.branches}};
}

SingularityRecord singularity_from_json(const Json& j) {
  SingularityRecord s{parse_singularity_kind(get<std::string>(j, "kind")),
                      get<int>(j, "delta"), get<int>(j, "branches")};
  if (!(s == make_record(s.kind))) {
    throw ValidationError("sing", "record disagrees with the catalog for " + to_string(s.kind));
  }
  return s;
}

// ---------------------------------------------------------------------------
// Payloads

Json mult_to_json(const MultiplicationReport& r) {
  Json pairs = Json::array();
  for (const auto& [i, j] : r.pairs) pairs.push_back({i, j});
  Json kernel = Json::array();
  for (const auto& rel : r.kernel_basis) {
    kernel.push_back({{"label", rel.label}, {"coords", vector_to_json(rel.coords)}});
  }
  return {{"model", r.model},
          {"section_labels", r.section_labels},
          {"source_labels", r.source_labels},
          {"target_labels", r.target_labels},
          {"pairs", pairs},
          {"source_dim", r.source_dim},
          {"target_dim", r.target_dim},
          {"matrix", matrix_to_json(r.matrix)},
          {"rank", r.rank},
          {"kernel_dim", r.kernel_dim},
          {"kernel_basis", kernel}};
}

MultiplicationReport mult_from_json(const Json& j) {
  MultiplicationReport r;
  r.model = get<std::string>(j, "model");
  r.section_labels = get<std::vector<std::string>>(j, "section_labels");
  r.source_labels = get<std::vector<std::string>>(j, "source_labels");
  r.target_labels = get<std::vector<std::string>>(j, "target_labels");
  r.pairs = get<std::vector<std::pair<int, int>>>(j, "pairs");
  r.source_dim = get<long>(j, "source_dim");
  r.target_dim = get<long>(j, "target_dim");
  r.matrix = matrix_from_json(field(j, "matrix"));
  r.rank = get<long>(j, "rank");
  r.kernel_dim = get<long>(j, "kernel_dim");
  for (const Json& rel : field(j, "kernel_basis")) {
    r.kernel_basis.push_back({get<std::string>(rel, "label"), vector_from_json(field(rel, "coords"))});
  }
  return r;
}

Json ivhs_to_json(const IVHSReport& r) {
  return {{"xi", polynomial_to_json(r.xi)},
          {"matrix", matrix_to_json(r.matrix)},
          {"rank", r.rank},
          {"is_max", r.is_max}};
}

IVHSReport ivhs_from_json(const Json& j) {
  return {polynomial_from_json(field(j, "xi")), matrix_from_json(field(j, "matrix")),
          get<long>(j, "rank"), get<bool>(j, "is_max")};
}

Json jacobian_to_json(const JacobianPayload& p) {
  Json out = {{"form", polynomial_to_json(p.form)},
              {"degree", p.degree},
              {"socle_degree", p.socle_degree},
              {"dim_sections", p.dim_sections},
              {"dim_deformations", p.dim_deformations},
              {"dim_h1", p.dim_h1},
              {"section_basis", p.section_basis},
              {"h1_basis", p.h1_basis},
              {"ivhs", nullptr},
              {"search", nullptr}};
  if (p.ivhs) out["ivhs"] = ivhs_to_json(*p.ivhs);
  if (p.search) {
    out["search"] = {{"budget", p.search->budget},
                     {"achieved_max", p.search->achieved_max},
                     {"candidates_tried", p.search->candidates_tried},
                     {"best_index", p.search->best_index},
                     {"best", ivhs_to_json(p.search->best)}};
  }
  return out;
}

JacobianPayload jacobian_from_json(const Json& j) {
  JacobianPayload p{polynomial_from_json(field(j, "form")),
                    get<int>(j, "degree"),
                    get<int>(j, "socle_degree"),
                    get<long>(j, "dim_sections"),
                    get<long>(j, "dim_deformations"),
                    get<long>(j, "dim_h1"),
                    get<std::vector<std::string>>(j, "section_basis"),
                    get<std::vector<std::string>>(j, "h1_basis"),
                    std::nullopt,
                    std::nullopt};
  if (!field(j, "ivhs").is_null()) p.ivhs = ivhs_from_json(j.at("ivhs"));
  if (!field(j, "search").is_null()) {
    const Json& s = j.at("search");
    p.search = IVHSSearchPayload{get<long>(s, "budget"), get<bool>(s, "achieved_max"),
                                 get<long>(s, "candidates_tried"), get<long>(s, "best_index"),
                                 ivhs_from_json(field(s, "best"))};
  }
  return p;
}

Json class_to_json(const ClassMuReport& r) {
  return {{"genus", r.genus},
          {"class", to_string(r.cls)},
          {"sym2", r.sym2},
          {"target", r.target},
          {"mu_rank", r.mu_rank},
          {"mu_kernel", r.mu_kernel},
          {"max_ivhs_rank", r.max_ivhs_rank ? Json(*r.max_ivhs_rank) : Json("undocumented")}};
}

ClassMuReport class_from_json(const Json& j) {
  ClassMuReport r;
  r.genus = get<int>(j, "genus");
  r.cls = parse_petri_class(get<std::string>(j, "class"));
  r.sym2 = get<int>(j, "sym2");
  r.target = get<int>(j, "target");
  r.mu_rank = get<int>(j, "mu_rank");
  r.mu_kernel = get<int>(j, "mu_kernel");
  const Json& m = field(j, "max_ivhs_rank");
  if (m.is_number_integer()) {
    r.max_ivhs_rank = m.get<int>();
  } else if (!(m.is_string() && m.get<std::string>() == "undocumented")) {
    throw ValidationError("max_ivhs_rank", "expected an integer or \"undocumented\"");
  }
  return r;
}

Json invariants_to_json(const InvariantsPayload& p) {
  Json sings = Json::array();
  for (const auto& s : p.curve.singularities) sings.push_back(singularity_to_json(s));
  Json out = {{"arithmetic_genus", p.curve.arithmetic_genus},
              {"geometric_genus", p.curve.geometric_genus},
              {"total_delta", p.curve.total_delta},
              {"singularities", sings},
              {"gr_w1", p.mhs.gr_w1},
              {"gr_w2", p.mhs.gr_w2},
              {"h1_total", p.mhs.total()},
              {"equisingular_rank",
               {{"total", p.equisingular.total},
                {"from_normalization", p.equisingular.from_normalization},
                {"from_singularities", p.equisingular.from_singularities}}},
              {"brill_noether", nullptr}};
  if (p.brill_noether) {
    const auto& bn = *p.brill_noether;
    out["brill_noether"] = {{"g", bn.g}, {"r", bn.r}, {"d", bn.d}, {"rho", bn.rho}};
  }
  return out;
}

InvariantsPayload invariants_from_json(const Json& j) {
  InvariantsPayload p;
  p.curve.arithmetic_genus = get<int>(j, "arithmetic_genus");
  p.curve.geometric_genus = get<int>(j, "geometric_genus");
  p.curve.total_delta = get<int>(j, "total_delta");
  for (const Json& s : field(j, "singularities")) {
    p.curve.singularities.push_back(singularity_from_json(s));
  }
  p.mhs = {get<int>(j, "gr_w1"), get<int>(j, "gr_w2")};
  if (get<int>(j, "h1_total") != p.mhs.total()) {
    throw ValidationError("h1_total", "must equal gr_w1 + gr_w2");
  }
  const Json& e = field(j, "equisingular_rank");
  p.equisingular = {get<int>(e, "total"), get<int>(e, "from_normalization"),
                    get<int>(e, "from_singularities")};
  const Json& bn = field(j, "brill_noether");
  if (!bn.is_null()) {
    p.brill_noether = BrillNoether{get<int>(bn, "g"), get<int>(bn, "r"), get<int>(bn, "d"),
                                   get<int>(bn, "rho")};
  }
  return p;
}

Json degeneration_to_json(const DegenerationPayload& p) {
  const DegenerationReport& r = p.report;
  Json out = {{"spec", degeneration_spec_to_json(p.spec)},
              {"pa", r.arithmetic_genus},
              {"delta_initial", r.delta_initial},
              {"delta_target", r.delta_target},
              {"Delta", r.total_drop},
              {"predicted_max_rank", r.predicted_max_rank},
              {"gr_w1_dim", r.gr_w1_dim},
              {"gr_w2_dim", r.gr_w2_dim},
              {"vanishing_cycle_dim", r.vanishing_cycle_dim},
              {"yukawa", nullptr}};
  if (p.yukawa_nodes) {
    out["yukawa"] = {{"nodes", *p.yukawa_nodes}, {"defect", p.yukawa_defect.value_or(0)}};
  }
  return out;
}

DegenerationPayload degeneration_from_json(const Json& j) {
  DegenerationPayload p;
  p.spec = degeneration_spec_from_json(field(j, "spec"), "spec");
  DegenerationReport& r = p.report;
  r.arithmetic_genus = get<int>(j, "pa");
  r.delta_initial = get<int>(j, "delta_initial");
  r.delta_target = get<int>(j, "delta_target");
  r.total_drop = get<int>(j, "Delta");
  r.predicted_max_rank = get<int>(j, "predicted_max_rank");
  r.gr_w1_dim = get<int>(j, "gr_w1_dim");
  r.gr_w2_dim = get<int>(j, "gr_w2_dim");
  r.vanishing_cycle_dim = get<int>(j, "vanishing_cycle_dim");
  const Json& y = field(j, "yukawa");
  if (!y.is_null()) {
    p.yukawa_nodes = get<int>(y, "nodes");
    p.yukawa_defect = get<int>(y, "defect");
  }
  return p;
}

// ---------------------------------------------------------------------------
// Text

bool is_matrix(const Json& j) {
  return j.is_object() && j.size() == 3 && j.contains("rows") && j.contains("cols") &&
         j.contains("entries");
}

std::string scalar_text(const Json& j) {
  if (j.is_string()) return j.get<std::string>();
  if (j.is_null()) return "-";
  return j.dump();
}

void render_matrix(const Json& m, const std::string& indent, std::ostringstream& out) {
  const auto& entries = m.at("entries");
  std::size_t width = 1;
  for (const auto& row : entries) {
    for (const auto& e : row) width = std::max(width, e.get<std::string>().size());
  }
  for (const auto& row : entries) {
    out << indent;
    bool first = true;
    for (const auto& e : row) {
      const std::string s = e.get<std::string>();
      if (!first) out << ' ';
      out << std::string(width - s.size(), ' ') << s;
      first = false;
    }
    out << '\n';
  }
}

void render_value(const std::string& key, const Json& j, const std::string& indent,
                  std::ostringstream& out) {
  if (is_matrix(j)) {
    out << indent << key << ": " << j.at("rows").get<long>() << "x" << j.at("cols").get<long>()
        << " matrix\n";
    render_matrix(j, indent + "  ", out);
    return;
  }
  if (j.is_object()) {
    out << indent << key << ":\n";
    for (const auto& [k, v] : j.items()) render_value(k, v, indent + "  ", out);
    return;
  }
  if (j.is_array()) {
    const bool flat = std::all_of(j.begin(), j.end(), [](const Json& e) { return e.is_primitive(); });
    if (flat) {
      out << indent << key << ": [";
      bool first = true;
      for (const auto& e : j) {
        out << (first ? "" : ", ") << scalar_text(e);
        first = false;
      }
      out << "]\n";
      return;
    }
    out << indent << key << ":\n";
    for (std::size_t i = 0; i < j.size(); ++i) {
      render_value("[" + std::to_string(i) + "]", j[i], indent + "  ", out);
    }
    return;
  }
  out << indent << key << ": " << scalar_text(j) << '\n';
}

}  // namespace

Json matrix_to_json(const ExactMatrix& m) {
  Json entries = Json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (Eigen::Index j = 0; j < m.cols(); ++j) row.push_back(to_string(m(i, j)));
    entries.push_back(std::move(row));
  }
  return {{"rows", m.rows()}, {"cols", m.cols()}, {"entries", entries}};
}

ExactMatrix matrix_from_json(const Json& j) {
  const auto rows = get<Eigen::Index>(j, "rows");
  const auto cols = get<Eigen::Index>(j, "cols");
  const Json& entries = field(j, "entries");
  if (rows < 0 || cols < 0 || !entries.is_array() ||
      entries.size() != static_cast<std::size_t>(rows)) {
    throw ValidationError("entries", "row count mismatch");
  }
  ExactMatrix m(rows, cols);
  for (Eigen::Index i = 0; i < rows; ++i) {
    const Json& row = entries[static_cast<std::size_t>(i)];
    if (!row.is_array() || row.size() != static_cast<std::size_t>(cols)) {
      throw ValidationError("entries", "column count mismatch in row " + std::to_string(i));
    }
    for (Eigen::Index c = 0; c < cols; ++c) m(i, c) = rational_from_json(row[static_cast<std::size_t>(c)]);
  }
  return m;
}

Json to_json(const Report& r) {
  Json payload = std::visit(
      [](const auto& p) -> Json {
        using T = std::decay_t<decltype(p)>;
        if constexpr (std::is_same_v<T, MultiplicationReport>) return mult_to_json(p);
        if constexpr (std::is_same_v<T, JacobianPayload>) return jacobian_to_json(p);
        if constexpr (std::is_same_v<T, ClassMuReport>) return class_to_json(p);
        if constexpr (std::is_same_v<T, InvariantsPayload>) return invariants_to_json(p);
        if constexpr (std::is_same_v<T, DegenerationPayload>) return degeneration_to_json(p);
      },
      r.payload);
  return {{"kind", to_string(r.kind)}, {"payload", payload}, {"provenance", r.provenance}};
}

Report report_from_json(const Json& j) {
  Report r;
  r.kind = parse_report_kind(get<std::string>(j, "kind"));
  const Json& p = field(j, "payload");
  switch (r.kind) {
    case ReportKind::PlaneMu:
    case ReportKind::CiMu:
    case ReportKind::HyperellipticMu: r.payload = mult_from_json(p); break;
    case ReportKind::JacobianIvhs: r.payload = jacobian_from_json(p); break;
    case ReportKind::ClassReport: r.payload = class_from_json(p); break;
    case ReportKind::Invariants: r.payload = invariants_from_json(p); break;
    case ReportKind::Degeneration: r.payload = degeneration_from_json(p); break;
  }
  r.provenance = field(j, "provenance");
  return r;
}

std::string render_json(const Report& r) { return to_json(r).dump(2) + "\n"; }

std::string render_text(const Json& j) {
  std::ostringstream out;
  if (j.is_object()) {
    for (const auto& [k, v] : j.items()) render_value(k, v, "", out);
  } else {
    out << scalar_text(j) << '\n';
  }
  return out.str();
}

std::string render_text(const Report& r) {
  const Json j = to_json(r);
  std::ostringstream out;
  out << "report: " << j.at("kind").get<std::string>() << '\n';
  for (const auto& [k, v] : j.at("payload").items()) render_value(k, v, "", out);
  render_value("provenance", j.at("provenance"), "", out);
  return out.str();
}

// ---------------------------------------------------------------------------
// Degeneration documents

Json degeneration_spec_to_json(const DegenerationSpec& spec) {
  Json steps = Json::array();
  for (const auto& s : spec.steps) {
    steps.push_back({{"initial", to_string(s.initial)},
                     {"target", s.target ? to_string(*s.target) : std::string("smooth")}});
  }
  return {{"pa", spec.arithmetic_genus}, {"steps", steps}};
}

DegenerationSpec degeneration_spec_from_json(const Json& j, const std::string& where) {
  auto fail = [&where](const std::string& f, const std::string& msg) {
    return ValidationError(f, where + ": " + msg);
  };
  if (!j.is_object()) throw fail("spec", "expected a JSON object");
  if (!j.contains("pa")) throw fail("pa", "missing field");
  if (!j.at("pa").is_number_integer()) throw fail("pa", "expected an integer");
  if (!j.contains("steps")) throw fail("steps", "missing field");
  if (!j.at("steps").is_array()) throw fail("steps", "expected an array");

  DegenerationSpec spec;
  spec.arithmetic_genus = j.at("pa").get<int>();
  const Json& steps = j.at("steps");
  for (std::size_t i = 0; i < steps.size(); ++i) {
    const std::string at = "steps[" + std::to_string(i) + "]";
    const Json& s = steps[i];
    for (const char* key : {"initial", "target"}) {
      if (!s.is_object() || !s.contains(key) || !s.at(key).is_string()) {
        throw fail(at + "." + key, "missing or non-string field");
      }
    }
    try {
      spec.steps.push_back(parse_smoothing_step(s.at("initial").get<std::string>() + ":" +
                                                s.at("target").get<std::string>()));
    } catch (const ValidationError& e) {
      throw fail(at, e.what());
    }
  }
  // Validates δ monotonicity and Σδ ≤ p_a.
  try {
    (void)rank_defect(spec);
  } catch (const ValidationError& e) {
    throw fail(e.field(), e.what());
  }
  return spec;
}

DegenerationSpec load_degeneration_spec(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ValidationError("spec", "cannot open '" + path + "'");
  Json j;
  try {
    j = Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw ValidationError("spec", path + ": " + e.what());
  }
  return degeneration_spec_from_json(j, path);
}

}  // namespace ivhs
