#include "ivhs/fixtures.hpp"

#include "ivhs/cli.hpp"
#include "ivhs/error.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <sstream>

namespace ivhs {

namespace fs = std::filesystem;

std::string default_fixture_dir() {
#ifdef IVHS_DEFAULT_FIXTURE_DIR
  return IVHS_DEFAULT_FIXTURE_DIR;
#else
  return "fixtures";
#endif
}

Json FixtureResult::to_json() const {
  Json j = {{"name", name},
            {"criterion", criterion},
            {"pass", passed},
            {"failures", failures}};
  if (!paper_order_rows.empty()) j["paper_order_matrix"] = paper_order_rows;
  if (!discrepancy.is_null()) j["discrepancy"] = discrepancy;
  return j;
}

bool FixtureSummary::all_passed() const {
  return std::all_of(results.begin(), results.end(), [](const auto& r) { return r.passed; });
}

std::string FixtureSummary::render() const {
  std::ostringstream out;
  long passed = 0;
  for (const auto& r : results) {
    out << r.to_json().dump() << '\n';
    if (r.passed) ++passed;
  }
  out << Json{{"summary", {{"total", results.size()},
                           {"passed", passed},
                           {"failed", static_cast<long>(results.size()) - passed}}}}
             .dump()
      << '\n';
  return out.str();
}

namespace {

std::string expand(std::string arg, const std::string& dir) {
  const std::string token = "${FIXTURES}";
  for (auto pos = arg.find(token); pos != std::string::npos; pos = arg.find(token)) {
    arg.replace(pos, token.size(), dir);
  }
  return arg;
}

const Json* lookup(const Json& doc, const std::string& pointer) {
  const Json::json_pointer ptr(pointer);
  if (!doc.contains(ptr)) return nullptr;
  return &doc.at(ptr);
}

void check_paper_matrix(const Json& spec, const Json& doc, FixtureResult& result) {
  const std::string pointer = spec.value("pointer", std::string("/payload/matrix"));
  const Json* m = lookup(doc, pointer);
  if (m == nullptr) {
    result.failures.push_back(pointer + ": missing");
    return;
  }
  const ExactMatrix actual = matrix_from_json(*m);
  const ExactMatrix paper = matrix_from_json(
      {{"rows", spec.at("entries").size()},
       {"cols", spec.at("entries").empty() ? 0 : spec.at("entries")[0].size()},
       {"entries", spec.at("entries")}});
  const auto row_perm = spec.at("row_perm").get<std::vector<Eigen::Index>>();
  const auto col_perm = spec.at("col_perm").get<std::vector<Eigen::Index>>();
  if (static_cast<Eigen::Index>(row_perm.size()) != paper.rows() ||
      static_cast<Eigen::Index>(col_perm.size()) != paper.cols() ||
      actual.rows() != paper.rows() || actual.cols() != paper.cols()) {
    result.failures.push_back(pointer + ": shape differs from the printed matrix");
    return;
  }
  ExactMatrix permuted(paper.rows(), paper.cols());
  for (Eigen::Index i = 0; i < paper.rows(); ++i) {
    for (Eigen::Index j = 0; j < paper.cols(); ++j) {
      permuted(i, j) = actual(row_perm[static_cast<std::size_t>(i)],
                              col_perm[static_cast<std::size_t>(j)]);
    }
  }
  for (Eigen::Index i = 0; i < permuted.rows(); ++i) {
    std::string row;
    for (Eigen::Index j = 0; j < permuted.cols(); ++j) {
      row += (j == 0 ? "" : " ") + to_string(permuted(i, j));
    }
    result.paper_order_rows.push_back(std::move(row));
  }
  if (!(permuted == paper)) {
    result.failures.push_back(pointer + ": differs from the printed matrix after permutation");
  }
}

}  // namespace

FixtureResult run_fixture(const Json& fixture, const std::string& fixture_dir) {
  FixtureResult result;
  result.name = fixture.value("name", std::string("<unnamed>"));
  result.criterion = fixture.value("criterion", std::string());
  try {
    std::vector<std::string> argv;
    for (const auto& a : fixture.at("argv")) argv.push_back(expand(a.get<std::string>(), fixture_dir));
    const int expect_exit = fixture.value("expect_exit", 0);
    if (expect_exit == 0 && std::find(argv.begin(), argv.end(), "--json") == argv.end()) {
      argv.push_back("--json");
    }

    const CommandResult run = run_command(argv);
    if (run.exit_code != expect_exit) {
      result.failures.push_back("exit code " + std::to_string(run.exit_code) + ", expected " +
                                std::to_string(expect_exit) + " " + run.diagnostics);
    }
    if (run.exit_code == 0 && expect_exit == 0) {
      const Json doc = Json::parse(run.output);
      const Json expect = fixture.value("expect", Json::object());
      for (const auto& [pointer, expected] : expect.items()) {
        const Json* actual = lookup(doc, pointer);
        if (actual == nullptr) {
          result.failures.push_back(pointer + ": missing");
        } else if (*actual != expected) {
          result.failures.push_back(pointer + ": got " + actual->dump() + ", expected " +
                                    expected.dump());
        }
      }
      if (fixture.contains("paper_matrix")) check_paper_matrix(fixture.at("paper_matrix"), doc, result);
      if (fixture.contains("discrepancy")) {
        Json d = fixture.at("discrepancy");
        const Json* computed = lookup(doc, d.at("pointer").get<std::string>());
        d["computed_value"] = computed == nullptr ? Json(nullptr) : *computed;
        result.discrepancy = d;
      }
    } else if (fixture.contains("expect_diagnostic")) {
      const std::string needle = fixture.at("expect_diagnostic").get<std::string>();
      if (run.diagnostics.find(needle) == std::string::npos) {
        result.failures.push_back("diagnostic lacks '" + needle + "': " + run.diagnostics);
      }
    }
  } catch (const std::exception& e) {
    result.failures.push_back(std::string("malformed fixture: ") + e.what());
  }
  result.passed = result.failures.empty();
  return result;
}

FixtureSummary run_fixture_suite(const std::string& fixture_dir) {
  FixtureSummary summary;
  std::vector<fs::path> files;
  std::error_code ec;
  for (const auto& entry : fs::directory_iterator(fixture_dir, ec)) {
    if (entry.is_regular_file() && entry.path().extension() == ".json") files.push_back(entry.path());
  }
  if (ec) {
    FixtureResult r;
    r.name = fixture_dir;
    r.failures.push_back("cannot read fixture directory: " + ec.message());
    summary.results.push_back(std::move(r));
    return summary;
  }
  std::sort(files.begin(), files.end());
  for (const auto& path : files) {
    std::ifstream in(path);
    Json fixture;
    try {
      fixture = Json::parse(in);
    } catch (const Json::parse_error& e) {
      FixtureResult r;
      r.name = path.filename().string();
      r.failures.push_back(std::string("unreadable fixture: ") + e.what());
      summary.results.push_back(std::move(r));
      continue;
    }
    summary.results.push_back(run_fixture(fixture, fixture_dir));
  }
  return summary;
}

}  // namespace ivhs
