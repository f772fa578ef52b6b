#include "ivhs/cli.hpp"
#include "ivhs/error.hpp"
#include "ivhs/fixtures.hpp"
#include "ivhs/report.hpp"

#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <regex>
#include <sstream>
#include <sys/wait.h>

namespace ivhs {
namespace {

namespace fs = std::filesystem;

using Args = std::vector<std::string>;

const std::vector<Args> kReportCommands = {
    {"mu", "plane", "--poly", "x^4+y^4+z^4"},
    {"mu", "plane", "--poly", "x^5+y^5+z^5", "--sing", "node"},
    {"mu", "ci", "--q", "x0*x1-x2*x3", "--c", "x0^3+x1^3+x2^3+x3^3"},
    {"mu", "hyperelliptic", "--genus", "4"},
    {"jacobian", "--poly", "x^4+y^4+z^4", "--xi", "x^2*y*z+x*y^2*z+x*y*z^2"},
    {"jacobian", "--poly", "x^4+y^4+z^4", "--budget", "50"},
    {"ivhs", "jacobian", "--poly", "x^5+y^5+z^5", "--xi", "1/2*x^3*y*z"},
    {"class", "--genus", "5", "--class", "trigonal"},
    {"class", "--genus", "6", "--class", "hyperelliptic"},
    {"invariants", "--pa", "6", "--sing", "node,cusp", "--genus", "5", "--rho", "1:3"},
    {"invariants", "--poly", "x^4+y^4+z^4"},
    {"degenerate", "--pa", "6", "--step", "tacnode:node", "--step", "node:smooth"},
    {"degenerate", "--pa", "6", "--step", "node:smooth", "--yukawa-nodes", "3"},
};

CommandResult run(Args args) { return run_command(args); }

CommandResult run_json(Args args) {
  args.push_back("--json");
  return run_command(args);
}

struct TempDir {
  fs::path path;
  TempDir() {
    path = fs::temp_directory_path() /
           ("ivhs_test_" + std::to_string(::getpid()) + "_" + std::to_string(counter()++));
    fs::create_directories(path);
  }
  ~TempDir() {
    std::error_code ec;
    fs::remove_all(path, ec);
  }
  static int& counter() {
    static int n = 0;
    return n;
  }
  std::string write(const std::string& name, const std::string& content) const {
    const fs::path p = path / name;
    std::ofstream(p) << content;
    return p.string();
  }
};

bool is_rational_token(const std::string& s) {
  static const std::regex re("-?[0-9]+(/[0-9]+)?");
  return std::regex_match(s, re);
}

// Numeric leaves of a report document in rendering order. Matrices emit
// rows, cols, then their entries.
void json_numbers(const Json& j, std::vector<std::string>& out) {
  if (j.is_object()) {
    if (j.size() == 3 && j.contains("rows") && j.contains("cols") && j.contains("entries")) {
      out.push_back(j.at("rows").dump());
      out.push_back(j.at("cols").dump());
      for (const auto& row : j.at("entries")) json_numbers(row, out);
      return;
    }
    for (const auto& [key, value] : j.items()) json_numbers(value, out);
  } else if (j.is_array()) {
    for (const auto& v : j) json_numbers(v, out);
  } else if (j.is_number()) {
    out.push_back(j.dump());
  } else if (j.is_string() && is_rational_token(j.get<std::string>())) {
    out.push_back(j.get<std::string>());
  }
}

std::vector<std::string> text_numbers(const std::string& text) {
  static const std::regex header("^.*: ([0-9]+)x([0-9]+) matrix$");
  std::vector<std::string> out;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    line.erase(0, line.find_first_not_of(' '));
    std::smatch m;
    if (std::regex_match(line, m, header)) {
      out.push_back(m[1]);
      out.push_back(m[2]);
      continue;
    }
    std::string value = line;
    if (const auto colon = line.find(": "); colon != std::string::npos) {
      value = line.substr(colon + 2);
    } else if (!line.empty() && line.back() == ':') {
      continue;
    }
    if (value.size() >= 2 && value.front() == '[' && value.back() == ']') {
      std::istringstream items(value.substr(1, value.size() - 2));
      std::string item;
      while (std::getline(items, item, ',')) {
        item.erase(0, item.find_first_not_of(' '));
        if (is_rational_token(item)) out.push_back(item);
      }
      continue;
    }
    std::istringstream tokens(value);
    std::vector<std::string> parts;
    std::string t;
    while (tokens >> t) parts.push_back(t);
    if (!parts.empty() && std::all_of(parts.begin(), parts.end(), is_rational_token)) {
      out.insert(out.end(), parts.begin(), parts.end());
    }
  }
  return out;
}

TEST(Json, RoundTripsEveryReportKind) {
  for (const auto& args : kReportCommands) {
    const auto r = run_json(args);
    ASSERT_EQ(r.exit_code, 0) << args[0] << ": " << r.diagnostics;
    const Json doc = Json::parse(r.output);
    const Report report = report_from_json(doc);
    EXPECT_EQ(to_json(report), doc) << args[0];
    EXPECT_EQ(render_json(report), r.output) << args[0];
    EXPECT_EQ(report_from_json(to_json(report)), report) << args[0];
  }
}

TEST(Json, OutputIsDeterministic) {
  for (const auto& args : kReportCommands) EXPECT_EQ(run_json(args).output, run_json(args).output);
}

TEST(Json, FixedFieldSets) {
  const Json plane = Json::parse(run_json({"mu", "plane", "--poly", "x^4+y^4+z^4"}).output);
  std::vector<std::string> keys;
  for (const auto& [k, v] : plane.at("payload").items()) keys.push_back(k);
  EXPECT_EQ(keys, (std::vector<std::string>{"kernel_basis", "kernel_dim", "matrix", "model", "pairs", "rank",
                                            "section_labels", "source_dim", "source_labels", "target_dim",
                                            "target_labels"}));
  const Json cls = Json::parse(run_json({"class", "--genus", "6", "--class", "hyperelliptic"}).output);
  EXPECT_EQ(cls.at("/payload/max_ivhs_rank"_json_pointer), "undocumented");
}

TEST(Json, SchemaViolationsAreRejected) {
  Json doc = Json::parse(run_json({"class", "--genus", "5", "--class", "trigonal"}).output);
  Json missing = doc;
  missing["payload"].erase("sym2");
  EXPECT_THROW(report_from_json(missing), ValidationError);
  Json wrong_kind = doc;
  wrong_kind["kind"] = "nonsense";
  EXPECT_THROW(report_from_json(wrong_kind), ValidationError);
  Json bad_matrix = Json::parse(run_json({"mu", "hyperelliptic", "--genus", "2"}).output);
  bad_matrix["payload"]["matrix"]["rows"] = 7;
  EXPECT_THROW(report_from_json(bad_matrix), ValidationError);
}

TEST(Text, SameNumbersAsJson) {
  for (const auto& args : kReportCommands) {
    const auto text = run(args);
    const auto json = run_json(args);
    ASSERT_EQ(text.exit_code, 0) << text.diagnostics;
    std::vector<std::string> from_json;
    json_numbers(Json::parse(json.output), from_json);
    EXPECT_EQ(text_numbers(text.output), from_json) << args[0] << "\n" << text.output;
    EXPECT_EQ(text.output, render_text(report_from_json(Json::parse(json.output))));
  }
}

TEST(Text, MatricesPrintRowPerLine) {
  const auto r = run({"mu", "plane", "--poly", "x^4+y^4+z^4"});
  EXPECT_NE(r.output.find("matrix: 6x6 matrix\n  1 0 0 0 0 0\n  0 1 0 0 0 0\n"), std::string::npos)
      << r.output;
}

TEST(Cli, SpecExamples) {
  const Json plane = Json::parse(run_json({"mu", "plane", "--poly", "x^4+y^4+z^4"}).output);
  EXPECT_EQ(plane.at("/payload/rank"_json_pointer), 6);
  EXPECT_EQ(plane.at("/payload/kernel_dim"_json_pointer), 0);
  const Json degen = Json::parse(run_json({"degenerate", "--pa", "6", "--step", "node:smooth"}).output);
  EXPECT_EQ(degen.at("/payload/Delta"_json_pointer), 1);
  EXPECT_EQ(degen.at("/payload/predicted_max_rank"_json_pointer), 5);
  EXPECT_EQ(run({"mu", "plane", "--poly", "x^4+y^4"}).exit_code, exit_code::kOk);
  const auto cone = run({"ivhs", "jacobian", "--poly", "x^4+y^4"});
  EXPECT_EQ(cone.exit_code, exit_code::kValidation);
  EXPECT_NE(cone.diagnostics.find("not smooth"), std::string::npos) << cone.diagnostics;
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(run({}).exit_code, exit_code::kUsage);
  EXPECT_EQ(run({"frobnicate"}).exit_code, exit_code::kUsage);
  EXPECT_EQ(run({"mu", "plane"}).exit_code, exit_code::kUsage);
  EXPECT_EQ(run({"mu", "plane", "--poly", "x^4", "--bogus"}).exit_code, exit_code::kUsage);
  EXPECT_EQ(run({"degenerate", "--step", "node:smooth"}).exit_code, exit_code::kUsage);
  // No steps is a valid, trivially equisingular degeneration.
  EXPECT_EQ(run({"degenerate", "--pa", "6"}).exit_code, exit_code::kOk);
}

TEST(Cli, ValidationErrorsNameTheField) {
  struct Case {
    Args args;
    std::string field;
  };
  const std::vector<Case> cases = {
      {{"mu", "plane", "--poly", "x^4+"}, "poly"},
      {{"mu", "plane", "--poly", "x^4+y^3"}, "poly"},
      {{"mu", "plane", "--poly", "x^4+w^4"}, "poly"},
      {{"mu", "plane", "--poly", "x^-4"}, "poly"},
      {{"mu", "ci", "--q", "x0*x1-x2*x3", "--c", "x0^2*x1-x0*x2*x3"}, "c"},
      {{"mu", "hyperelliptic", "--genus", "1"}, "genus"},
      {{"class", "--genus", "5", "--class", "tetragonal"}, "class"},
      {{"invariants", "--pa", "3", "--sing", "ordinary:4"}, ""},
      {{"invariants", "--pa", "6", "--sing", "D4"}, "sing"},
      {{"degenerate", "--pa", "6", "--step", "node:tacnode"}, "steps[0]"},
      {{"jacobian", "--poly", "x^4+y^4+z^4", "--xi", "x^3"}, ""},
      {{"jacobian", "--poly", "x^4+y^4+z^4", "--budget", "0"}, "budget"},
  };
  for (const auto& c : cases) {
    const auto r = run(c.args);
    EXPECT_EQ(r.exit_code, exit_code::kValidation) << c.args[0] << " " << r.diagnostics;
    EXPECT_TRUE(r.output.empty());
    if (!c.field.empty()) {
      EXPECT_NE(r.diagnostics.find("[" + c.field + "]"), std::string::npos) << r.diagnostics;
    }
  }
}

TEST(DegenerationSpecFile, LoadsShippedDocuments) {
  const std::string dir = IVHS_TEST_FIXTURE_DIR;
  const auto node = load_degeneration_spec(dir + "/degenerations/quintic_node.json");
  EXPECT_EQ(node.arithmetic_genus, 6);
  ASSERT_EQ(node.steps.size(), 1u);
  EXPECT_EQ(node.steps[0], (SmoothingStep{SingularityKind::node(), std::nullopt}));
  const auto tac = load_degeneration_spec(dir + "/degenerations/tacnode_partial.json");
  ASSERT_EQ(tac.steps.size(), 1u);
  EXPECT_EQ(tac.steps[0], (SmoothingStep{SingularityKind::tacnode(), SingularityKind::node()}));
  EXPECT_EQ(degeneration_spec_from_json(degeneration_spec_to_json(tac), "doc"), tac);
}

TEST(DegenerationSpecFile, MalformedDocumentsReportPathAndField) {
  const TempDir tmp;
  struct Case {
    std::string content;
    std::string field;
  };
  const std::vector<Case> cases = {
      {"{\"steps\": []}", "pa"},
      {"{\"pa\": \"six\", \"steps\": []}", "pa"},
      {"{\"pa\": 6}", "steps"},
      {"{\"pa\": 6, \"steps\": [{\"initial\": \"node\"}]}", "steps[0].target"},
      {"{\"pa\": 6, \"steps\": [{\"initial\": \"D4\", \"target\": \"smooth\"}]}", "steps[0]"},
      {"{\"pa\": 6, \"steps\": [{\"initial\": \"node\", \"target\": \"tacnode\"}]}", "steps[0]"},
      {"{\"pa\": 1, \"steps\": [{\"initial\": \"tacnode\", \"target\": \"smooth\"}]}", "steps"},
      {"not json", "spec"},
  };
  for (std::size_t i = 0; i < cases.size(); ++i) {
    const std::string path = tmp.write("bad" + std::to_string(i) + ".json", cases[i].content);
    try {
      load_degeneration_spec(path);
      ADD_FAILURE() << "accepted " << cases[i].content;
    } catch (const ValidationError& e) {
      EXPECT_EQ(e.field(), cases[i].field) << cases[i].content;
      EXPECT_NE(std::string(e.what()).find(path), std::string::npos) << e.what();
    }
    const auto r = run({"degenerate", "--spec", path});
    EXPECT_EQ(r.exit_code, exit_code::kValidation) << r.diagnostics;
  }
  EXPECT_EQ(run({"degenerate", "--spec", (tmp.path / "absent.json").string()}).exit_code,
            exit_code::kValidation);
}

TEST(Fixtures, ShippedSuitePasses) {
  const auto summary = run_fixture_suite(IVHS_TEST_FIXTURE_DIR);
  EXPECT_GE(summary.results.size(), 20u);
  for (const auto& r : summary.results) {
    EXPECT_TRUE(r.passed) << r.name << ": " << (r.failures.empty() ? "" : r.failures.front());
  }
  const auto cli = run({"fixtures", "--dir", IVHS_TEST_FIXTURE_DIR});
  EXPECT_EQ(cli.exit_code, exit_code::kOk);
}

TEST(Fixtures, SummaryIsOneJsonObjectPerLine) {
  const auto cli = run({"fixtures", "--dir", IVHS_TEST_FIXTURE_DIR});
  std::istringstream in(cli.output);
  std::string line;
  std::vector<Json> lines;
  while (std::getline(in, line)) lines.push_back(Json::parse(line));
  ASSERT_GE(lines.size(), 2u);
  for (std::size_t i = 0; i + 1 < lines.size(); ++i) {
    EXPECT_TRUE(lines[i].contains("name"));
    EXPECT_TRUE(lines[i].at("pass").get<bool>());
  }
  EXPECT_EQ(lines.back().at("/summary/failed"_json_pointer), 0);
  EXPECT_EQ(lines.back().at("/summary/total"_json_pointer), lines.size() - 1);
}

TEST(Fixtures, PerturbedFixtureFails) {
  const TempDir tmp;
  const std::string source = std::string(IVHS_TEST_FIXTURE_DIR) + "/ac1_fermat_quartic_mu.json";
  Json fixture = Json::parse(std::ifstream(source));
  ASSERT_EQ(fixture.at("expect").at("/payload/rank"), 6);
  fixture["expect"]["/payload/rank"] = 7;
  tmp.write("perturbed.json", fixture.dump(2));
  fs::copy(std::string(IVHS_TEST_FIXTURE_DIR) + "/ac5_trigonal_g5_class.json", tmp.path / "ok.json");

  const auto summary = run_fixture_suite(tmp.path.string());
  ASSERT_EQ(summary.results.size(), 2u);
  EXPECT_FALSE(summary.all_passed());
  // "ok.json" sorts before "perturbed.json".
  EXPECT_TRUE(summary.results[0].passed);
  EXPECT_FALSE(summary.results[1].passed);
  EXPECT_EQ(summary.results[1].name, "fermat_quartic_mu");
  const auto cli = run({"fixtures", "--dir", tmp.path.string()});
  EXPECT_NE(cli.exit_code, 0);
  EXPECT_NE(cli.output.find("\"failed\":1"), std::string::npos) << cli.output;
}

TEST(Fixtures, PaperMatrixMismatchIsReported) {
  Json fixture = Json::parse(std::ifstream(std::string(IVHS_TEST_FIXTURE_DIR) + "/ac2_ci_quadric_cubic_mu.json"));
  EXPECT_TRUE(run_fixture(fixture, IVHS_TEST_FIXTURE_DIR).passed);
  fixture["paper_matrix"]["col_perm"][0] = 1;
  fixture["paper_matrix"]["col_perm"][1] = 0;
  const auto r = run_fixture(fixture, IVHS_TEST_FIXTURE_DIR);
  EXPECT_FALSE(r.passed);
}

TEST(Binary, ExitCodesPropagate) {
  const std::string cli = IVHS_CLI_PATH;
  auto status = [&](const std::string& args) {
    const int raw = std::system((cli + " " + args + " >/dev/null 2>&1").c_str());
    return WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  };
  EXPECT_EQ(status("mu plane --poly 'x^4+y^4+z^4'"), 0);
  EXPECT_EQ(status("jacobian --poly 'x^4+y^4'"), 2);
  EXPECT_EQ(status("frobnicate"), 64);
}

}  // namespace
}  // namespace ivhs
