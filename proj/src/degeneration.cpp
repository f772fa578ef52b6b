#include "ivhs/degeneration.hpp"

#include "ivhs/error.hpp"

#include <string>

namespace ivhs {

namespace {

// Consumes one catalog kind from the front of `rest`, including the order of
// parameterized kinds.
std::string take_kind(std::string_view& rest) {
  auto take_token = [&rest]() {
    const auto colon = rest.find(':');
    std::string token(rest.substr(0, colon));
    rest = colon == std::string_view::npos ? std::string_view() : rest.substr(colon + 1);
    return token;
  };
  std::string kind = take_token();
  if (kind == "ordinary" || kind == "A") kind += ":" + take_token();
  return kind;
}

}  // namespace

SmoothingStep parse_smoothing_step(std::string_view text) {
  std::string_view rest = text;
  const std::string initial = take_kind(rest);
  const std::string target = take_kind(rest);
  if (initial.empty() || target.empty() || !rest.empty()) {
    throw ValidationError("step", "expected initial:target, got '" + std::string(text) + "'");
  }
  if (initial == "smooth") throw ValidationError("step", "initial kind cannot be smooth");
  SmoothingStep step{parse_singularity_kind(initial), std::nullopt};
  if (target != "smooth") step.target = parse_singularity_kind(target);
  return step;
}

std::string to_string(const SmoothingStep& step) {
  return to_string(step.initial) + ":" + (step.target ? to_string(*step.target) : "smooth");
}

int target_delta(const SmoothingStep& step) {
  return step.target ? delta_of(*step.target) : 0;
}

namespace {

int checked_total_delta(int arithmetic_genus, const std::vector<SingularityRecord>& sings) {
  if (arithmetic_genus < 0) throw ValidationError("pa", "arithmetic genus must be >= 0");
  const int delta = total_delta(sings);
  if (delta > arithmetic_genus) {
    throw ValidationError("sing", "total delta " + std::to_string(delta) +
                                      " exceeds arithmetic genus " +
                                      std::to_string(arithmetic_genus));
  }
  return delta;
}

}  // namespace

DegenerationReport rank_defect(const DegenerationSpec& spec) {
  if (spec.arithmetic_genus < 0) throw ValidationError("pa", "arithmetic genus must be >= 0");
  DegenerationReport r;
  r.arithmetic_genus = spec.arithmetic_genus;
  for (std::size_t i = 0; i < spec.steps.size(); ++i) {
    const SmoothingStep& step = spec.steps[i];
    const int before = delta_of(step.initial);
    const int after = target_delta(step);
    if (after > before) {
      throw ValidationError("steps[" + std::to_string(i) + "]",
                            "not a degeneration: delta rises from " + std::to_string(before) +
                                " to " + std::to_string(after));
    }
    r.delta_initial += before;
    r.delta_target += after;
  }
  if (r.delta_initial > spec.arithmetic_genus) {
    throw ValidationError("steps", "total delta " + std::to_string(r.delta_initial) +
                                       " exceeds arithmetic genus " +
                                       std::to_string(spec.arithmetic_genus));
  }
  r.total_drop = r.delta_initial - r.delta_target;
  r.predicted_max_rank = spec.arithmetic_genus - r.total_drop;
  r.gr_w1_dim = 2 * (spec.arithmetic_genus - r.delta_initial);
  r.gr_w2_dim = r.delta_initial;
  r.vanishing_cycle_dim = r.total_drop;
  return r;
}

MixedHodgeDims mhs_dims(int arithmetic_genus, const std::vector<SingularityRecord>& sings) {
  const int delta = checked_total_delta(arithmetic_genus, sings);
  return {2 * (arithmetic_genus - delta), delta};
}

EquisingularRank equisingular_rank(int arithmetic_genus,
                                   const std::vector<SingularityRecord>& sings) {
  const int delta = checked_total_delta(arithmetic_genus, sings);
  return {arithmetic_genus, arithmetic_genus - delta, delta};
}

int yukawa_defect(int node_count) {
  if (node_count < 0) throw ValidationError("nodes", "node count must be >= 0");
  return node_count;
}

}  // namespace ivhs
