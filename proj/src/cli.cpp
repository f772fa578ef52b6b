#include "ivhs/cli.hpp"

#include "ivhs/error.hpp"
#include "ivhs/fixtures.hpp"

#include "CLI11.hpp"

#include <algorithm>
#include <optional>
#include <sstream>

namespace ivhs {

namespace {

struct Options {
  bool json = false;
  std::string poly;
  std::string q;
  std::string c;
  std::string xi;
  std::vector<std::string> vars;
  std::vector<std::string> sings;
  std::vector<std::string> steps;
  std::string spec_path;
  std::string klass;
  std::string rho;
  std::string fixture_dir;
  int genus = -1;
  int pa = -1;
  long budget = -1;
  int yukawa_nodes = -1;
};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

VariableSet vars_or(const Options& o, VariableSet fallback) {
  return o.vars.empty() ? std::move(fallback) : VariableSet(o.vars);
}

std::vector<SingularityRecord> parse_sings(const std::vector<std::string>& kinds) {
  std::vector<SingularityRecord> out;
  for (const auto& k : kinds) out.push_back(make_record(parse_singularity_kind(k)));
  return out;
}

Report mult_report(ReportKind kind, MultiplicationReport r, Json provenance) {
  return {kind, std::move(r), std::move(provenance)};
}

Report plane_report(const Options& o) {
  const VariableSet vars = vars_or(o, VariableSet::plane());
  const Polynomial f = parse_poly(o.poly, vars);
  const auto sings = parse_sings(o.sings);
  Json prov = {{"command", "mu plane"}, {"poly", o.poly}, {"vars", vars.names()},
               {"sing", o.sings}};
  return mult_report(ReportKind::PlaneMu, plane_mu(f, !sings.empty()), prov);
}

Report ci_report(const Options& o) {
  const VariableSet vars = vars_or(o, VariableSet::space());
  const Polynomial q = [&] {
    try {
      return parse_poly(o.q, vars);
    } catch (const ValidationError& e) {
      throw ValidationError("q", e.what());
    }
  }();
  const Polynomial c = [&] {
    try {
      return parse_poly(o.c, vars);
    } catch (const ValidationError& e) {
      throw ValidationError("c", e.what());
    }
  }();
  Json prov = {{"command", "mu ci"}, {"q", o.q}, {"c", o.c}, {"vars", vars.names()}};
  return mult_report(ReportKind::CiMu, ci_mu(q, c), prov);
}

Report hyperelliptic_report(const Options& o) {
  Json prov = {{"command", "mu hyperelliptic"}, {"genus", o.genus}};
  return mult_report(ReportKind::HyperellipticMu, hyperelliptic_mu(o.genus), prov);
}

Report jacobian_report(const Options& o) {
  const VariableSet vars = vars_or(o, VariableSet::plane());
  const Polynomial f = parse_poly(o.poly, vars);
  const JacobianContext ctx(f);

  JacobianPayload p{f,
                    ctx.degree(),
                    ctx.socle_degree(),
                    static_cast<long>(ctx.sections().dim()),
                    static_cast<long>(ctx.deformations().dim()),
                    static_cast<long>(ctx.h1().dim()),
                    {},
                    {},
                    std::nullopt,
                    std::nullopt};
  for (const auto& m : ctx.sections().basis()) p.section_basis.push_back(to_string(m, vars));
  for (const auto& m : ctx.h1().basis()) p.h1_basis.push_back(to_string(m, vars));

  Json prov = {{"command", "jacobian"}, {"poly", o.poly}, {"vars", vars.names()}};
  if (!o.xi.empty()) {
    const Polynomial xi = [&] {
      try {
        return parse_poly(o.xi, vars);
      } catch (const ValidationError& e) {
        throw ValidationError("xi", e.what());
      }
    }();
    p.ivhs = ivhs_matrix(ctx, xi);
    prov["xi"] = o.xi;
  }
  long budget = o.budget;
  if (budget < 0 && o.xi.empty()) budget = 50;
  if (budget >= 0) {
    IVHSSearchResult s = ivhs_max_rank(ctx, budget);
    p.search = IVHSSearchPayload{budget, s.achieved_max, s.candidates_tried, s.best_index,
                                 std::move(s.best)};
    prov["budget"] = budget;
  }
  return {ReportKind::JacobianIvhs, std::move(p), prov};
}

Report class_report(const Options& o) {
  Json prov = {{"command", "class"}, {"genus", o.genus}, {"class", o.klass}};
  return {ReportKind::ClassReport, class_mu_report(o.genus, parse_petri_class(o.klass)), prov};
}

Report invariants_report(const Options& o) {
  if ((o.pa >= 0) == !o.poly.empty()) throw UsageError("invariants: give exactly one of --pa, --poly");
  int pa = o.pa;
  Json prov = {{"command", "invariants"}, {"sing", o.sings}};
  if (!o.poly.empty()) {
    const VariableSet vars = vars_or(o, VariableSet::plane());
    const Polynomial f = parse_poly(o.poly, vars);
    if (f.is_zero() || !f.homogeneous_degree() || vars.size() != 3) {
      throw ValidationError("poly", "expected a nonzero homogeneous ternary form");
    }
    pa = plane_pa(*f.homogeneous_degree());
    prov["poly"] = o.poly;
  } else {
    prov["pa"] = o.pa;
  }
  const auto sings = parse_sings(o.sings);
  InvariantsPayload p{curve_invariants(pa, sings), mhs_dims(pa, sings),
                      equisingular_rank(pa, sings), std::nullopt};
  if (!o.rho.empty()) {
    const auto colon = o.rho.find(':');
    if (colon == std::string::npos) throw ValidationError("rho", "expected r:d");
    int r = 0;
    int d = 0;
    try {
      r = std::stoi(o.rho.substr(0, colon));
      d = std::stoi(o.rho.substr(colon + 1));
    } catch (const std::exception&) {
      throw ValidationError("rho", "expected integers r:d");
    }
    const int g = o.genus >= 0 ? o.genus : p.curve.geometric_genus;
    p.brill_noether = BrillNoether{g, r, d, brill_noether_rho(g, r, d)};
    prov["rho"] = o.rho;
    if (o.genus >= 0) prov["genus"] = o.genus;
  }
  return {ReportKind::Invariants, std::move(p), prov};
}

Report degeneration_report(const Options& o) {
  DegenerationPayload p;
  Json prov = {{"command", "degenerate"}};
  if (!o.spec_path.empty()) {
    if (o.pa >= 0 || !o.steps.empty()) throw UsageError("degenerate: --spec excludes --pa/--step");
    p.spec = load_degeneration_spec(o.spec_path);
    prov["spec"] = o.spec_path;
  } else {
    if (o.pa < 0) throw UsageError("degenerate: --pa (or --spec) is required");
    p.spec.arithmetic_genus = o.pa;
    for (std::size_t i = 0; i < o.steps.size(); ++i) {
      try {
        p.spec.steps.push_back(parse_smoothing_step(o.steps[i]));
      } catch (const ValidationError& e) {
        throw ValidationError("step", e.what());
      }
    }
    prov["pa"] = o.pa;
    prov["step"] = o.steps;
  }
  p.report = rank_defect(p.spec);
  if (o.yukawa_nodes >= 0) {
    p.yukawa_nodes = o.yukawa_nodes;
    p.yukawa_defect = yukawa_defect(o.yukawa_nodes);
    prov["yukawa_nodes"] = o.yukawa_nodes;
  }
  return {ReportKind::Degeneration, std::move(p), prov};
}

}  // namespace

CommandResult run_command(const std::vector<std::string>& args) {
  CommandResult result;
  Options o;

  CLI::App app{"Exact IVHS and canonical multiplication calculator", "ivhs"};
  app.require_subcommand(1);

  auto add_json = [&o](CLI::App* sub) {
    sub->add_flag("--json", o.json, "Render the report as JSON");
  };
  auto add_vars = [&o](CLI::App* sub) {
    sub->add_option("--vars", o.vars, "Comma-separated variable names")->delimiter(',');
  };

  auto* mu = app.add_subcommand("mu", "Canonical multiplication map");
  mu->require_subcommand(1);

  auto* plane = mu->add_subcommand("plane", "Plane curve F = 0");
  plane->add_option("--poly", o.poly, "Form F in x, y, z")->required();
  plane->add_option("--sing", o.sings, "Declared singularities")->delimiter(',');
  add_vars(plane);
  add_json(plane);

  auto* ci = mu->add_subcommand("ci", "Complete intersection Q = C = 0 in P^3");
  ci->add_option("--q", o.q, "First form")->required();
  ci->add_option("--c", o.c, "Second form")->required();
  add_vars(ci);
  add_json(ci);

  auto* hyper = mu->add_subcommand("hyperelliptic", "Hyperelliptic curve of genus g");
  hyper->add_option("--genus", o.genus, "Genus g >= 2")->required();
  add_json(hyper);

  auto setup_jacobian = [&](CLI::App* sub) {
    sub->add_option("--poly", o.poly, "Smooth plane form F")->required();
    sub->add_option("--xi", o.xi, "Deformation class of degree deg F");
    sub->add_option("--budget", o.budget, "Max-rank search budget");
    add_vars(sub);
    add_json(sub);
  };
  auto* jacobian = app.add_subcommand("jacobian", "Jacobian-ring IVHS of a smooth plane curve");
  setup_jacobian(jacobian);
  auto* ivhs = app.add_subcommand("ivhs", "IVHS computations");
  ivhs->require_subcommand(1);
  auto* ivhs_jacobian = ivhs->add_subcommand("jacobian", "Same as the top-level jacobian command");
  setup_jacobian(ivhs_jacobian);

  auto* cls = app.add_subcommand("class", "Multiplication-rank counts for a curve class");
  cls->add_option("--genus", o.genus, "Genus")->required();
  cls->add_option("--class", o.klass,
                  "petri_general_nonhyperelliptic | hyperelliptic | trigonal | plane_quintic")
      ->required();
  add_json(cls);

  auto* inv = app.add_subcommand("invariants", "Genus, delta and mixed Hodge dimensions");
  inv->add_option("--pa", o.pa, "Arithmetic genus");
  inv->add_option("--poly", o.poly, "Plane form (p_a from its degree)");
  inv->add_option("--sing", o.sings, "Declared singularities")->delimiter(',');
  inv->add_option("--genus", o.genus, "Genus for the Brill-Noether number");
  inv->add_option("--rho", o.rho, "Brill-Noether r:d");
  add_vars(inv);
  add_json(inv);

  auto* degen = app.add_subcommand("degenerate", "Rank defect of a degeneration");
  degen->add_option("--pa", o.pa, "Arithmetic genus of the central fiber");
  degen->add_option("--step", o.steps, "initial:target, one per singular point");
  degen->add_option("--spec", o.spec_path, "Degeneration document (JSON)");
  degen->add_option("--yukawa-nodes", o.yukawa_nodes, "Nodes on a hypersurface");
  add_json(degen);

  auto* fixtures = app.add_subcommand("fixtures", "Run the golden fixture suite");
  fixtures->add_option("--dir", o.fixture_dir, "Fixture directory");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    result.output = app.help();
    return result;
  } catch (const CLI::ParseError& e) {
    result.exit_code = exit_code::kUsage;
    result.diagnostics = std::string("usage error: ") + e.what() + "\n";
    return result;
  }

  try {
    if (fixtures->parsed()) {
      const FixtureSummary summary =
          run_fixture_suite(o.fixture_dir.empty() ? default_fixture_dir() : o.fixture_dir);
      result.output = summary.render();
      result.exit_code = summary.all_passed() ? exit_code::kOk : exit_code::kFailure;
      return result;
    }

    std::optional<Report> report;
    if (plane->parsed()) report = plane_report(o);
    else if (ci->parsed()) report = ci_report(o);
    else if (hyper->parsed()) report = hyperelliptic_report(o);
    else if (jacobian->parsed() || ivhs_jacobian->parsed()) report = jacobian_report(o);
    else if (cls->parsed()) report = class_report(o);
    else if (inv->parsed()) report = invariants_report(o);
    else if (degen->parsed()) report = degeneration_report(o);

    if (!report) throw UsageError("no command given");
    result.output = o.json ? render_json(*report) : render_text(*report);
  } catch (const UsageError& e) {
    result.exit_code = exit_code::kUsage;
    result.diagnostics = std::string("usage error: ") + e.what() + "\n";
  } catch (const ValidationError& e) {
    result.exit_code = exit_code::kValidation;
    result.diagnostics = "error [" + e.field() + "]: " + e.what() + "\n";
  } catch (const std::invalid_argument& e) {
    result.exit_code = exit_code::kValidation;
    result.diagnostics = std::string("error: ") + e.what() + "\n";
  }
  return result;
}

}  // namespace ivhs
