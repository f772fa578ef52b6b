#include "ivhs/invariants.hpp"

#include "ivhs/error.hpp"

#include <cctype>
#include <charconv>

namespace ivhs {

SingularityKind SingularityKind::ordinary(int m) {
  if (m < 2) throw ValidationError("sing", "ordinary point needs multiplicity m >= 2");
  return {SingularityType::Ordinary, m};
}

SingularityKind SingularityKind::a(int k) {
  if (k < 1) throw ValidationError("sing", "A_k needs k >= 1");
  return {SingularityType::A, k};
}

std::string to_string(const SingularityKind& kind) {
  switch (kind.type) {
    case SingularityType::Node: return "node";
    case SingularityType::Cusp: return "cusp";
    case SingularityType::Tacnode: return "tacnode";
    case SingularityType::Ordinary: return "ordinary:" + std::to_string(kind.order);
    case SingularityType::A: return "A:" + std::to_string(kind.order);
  }
  return "?";
}

namespace {

std::optional<int> parse_int(std::string_view s) {
  int value = 0;
  const auto* end = s.data() + s.size();
  auto [ptr, ec] = std::from_chars(s.data(), end, value);
  if (ec != std::errc() || ptr != end || s.empty()) return std::nullopt;
  return value;
}

// Splits "name:n", "name(n)" or "namen" into the name and its order.
std::optional<int> parameter_after(std::string_view text, std::string_view name) {
  if (text.substr(0, name.size()) != name) return std::nullopt;
  std::string_view rest = text.substr(name.size());
  if (!rest.empty() && rest.front() == ':') {
    rest.remove_prefix(1);
  } else if (rest.size() >= 2 && rest.front() == '(' && rest.back() == ')') {
    rest = rest.substr(1, rest.size() - 2);
  }
  return parse_int(rest);
}

}  // namespace

SingularityKind parse_singularity_kind(std::string_view text) {
  if (text == "node") return SingularityKind::node();
  if (text == "cusp") return SingularityKind::cusp();
  if (text == "tacnode") return SingularityKind::tacnode();
  if (auto m = parameter_after(text, "ordinary")) return SingularityKind::ordinary(*m);
  if (auto k = parameter_after(text, "A")) return SingularityKind::a(*k);
  throw ValidationError("sing", "unknown singularity kind '" + std::string(text) + "'");
}

int delta_of(const SingularityKind& kind) {
  switch (kind.type) {
    case SingularityType::Node: return 1;
    case SingularityType::Cusp: return 1;
    case SingularityType::Tacnode: return 2;
    case SingularityType::Ordinary: return kind.order * (kind.order - 1) / 2;
    case SingularityType::A: return (kind.order + 1) / 2;
  }
  throw ValidationError("sing", "unknown singularity kind");
}

int branches_of(const SingularityKind& kind) {
  switch (kind.type) {
    case SingularityType::Node: return 2;
    case SingularityType::Cusp: return 1;
    case SingularityType::Tacnode: return 2;
    case SingularityType::Ordinary: return kind.order;
    case SingularityType::A: return kind.order % 2 == 1 ? 2 : 1;
  }
  throw ValidationError("sing", "unknown singularity kind");
}

SingularityRecord make_record(const SingularityKind& kind) {
  return {kind, delta_of(kind), branches_of(kind)};
}

int total_delta(const std::vector<SingularityRecord>& sings) {
  int sum = 0;
  for (const auto& s : sings) {
    if (s.delta != delta_of(s.kind)) {
      throw ValidationError("sing", "record for " + to_string(s.kind) + " carries delta " +
                                        std::to_string(s.delta));
    }
    sum += s.delta;
  }
  return sum;
}

int plane_pa(int d) {
  if (d < 1) throw ValidationError("degree", "plane curve degree must be >= 1");
  return (d - 1) * (d - 2) / 2;
}

int ci_genus(int a, int b) {
  if (a < 1 || b < 1) throw ValidationError("degree", "complete intersection degrees must be >= 1");
  const long twice = static_cast<long>(a) * b * (a + b - 4);
  if (twice % 2 != 0) throw ValidationError("degree", "non-integral genus for this type");
  return static_cast<int>(1 + twice / 2);
}

CurveInvariants curve_invariants(int arithmetic_genus,
                                 const std::vector<SingularityRecord>& sings) {
  if (arithmetic_genus < 0) throw ValidationError("pa", "arithmetic genus must be >= 0");
  const int delta = total_delta(sings);
  if (delta > arithmetic_genus) {
    throw ValidationError("sing", "total delta " + std::to_string(delta) +
                                      " exceeds arithmetic genus " +
                                      std::to_string(arithmetic_genus));
  }
  return {arithmetic_genus, arithmetic_genus - delta, delta, sings};
}

int h0_omega_sq(int g) {
  if (g < 2) throw ValidationError("genus", "h0(omega^2) = 3g-3 needs g >= 2");
  return 3 * g - 3;
}

int sym2_dim(int g) {
  if (g < 0) throw ValidationError("genus", "genus must be >= 0");
  return g * (g + 1) / 2;
}

int brill_noether_rho(int g, int r, int d) {
  if (g < 0 || r < 0 || d < 0) throw ValidationError("rho", "g, r, d must be >= 0");
  return g - (r + 1) * (g - d + r);
}

std::string to_string(PetriClass cls) {
  switch (cls) {
    case PetriClass::PetriGeneralNonhyperelliptic: return "petri_general_nonhyperelliptic";
    case PetriClass::Hyperelliptic: return "hyperelliptic";
    case PetriClass::Trigonal: return "trigonal";
    case PetriClass::PlaneQuintic: return "plane_quintic";
  }
  return "?";
}

PetriClass parse_petri_class(std::string_view text) {
  for (PetriClass c : {PetriClass::PetriGeneralNonhyperelliptic, PetriClass::Hyperelliptic,
                       PetriClass::Trigonal, PetriClass::PlaneQuintic}) {
    if (text == to_string(c)) return c;
  }
  throw ValidationError("class", "unknown curve class '" + std::string(text) + "'");
}

ClassMuReport class_mu_report(int g, PetriClass cls) {
  if (g < 2) throw ValidationError("genus", "class report needs g >= 2");
  ClassMuReport r;
  r.genus = g;
  r.cls = cls;
  r.sym2 = sym2_dim(g);
  r.target = h0_omega_sq(g);
  // Curves whose canonical model is cut out by the expected number of
  // quadrics: μ is onto and its kernel has the Petri-general dimension.
  const int petri_kernel = (g - 2) * (g - 3) / 2;
  switch (cls) {
    case PetriClass::PetriGeneralNonhyperelliptic:
      if (g < 3) throw ValidationError("genus", "every genus 2 curve is hyperelliptic");
      r.mu_rank = r.target;
      r.mu_kernel = petri_kernel;
      r.max_ivhs_rank = g;
      break;
    case PetriClass::Hyperelliptic:
      r.mu_rank = 2 * g - 1;
      r.mu_kernel = r.sym2 - r.mu_rank;
      if (g == 3) r.max_ivhs_rank = 2;
      break;
    case PetriClass::Trigonal:
      if (g < 4) throw ValidationError("genus", "trigonal class needs g >= 4");
      r.mu_kernel = g == 5 ? 3 : petri_kernel;
      r.mu_rank = r.sym2 - r.mu_kernel;
      if (g == 5) r.max_ivhs_rank = 4;
      break;
    case PetriClass::PlaneQuintic:
      if (g != 6) throw ValidationError("genus", "plane quintics have genus 6");
      r.mu_kernel = 6;
      r.mu_rank = r.sym2 - r.mu_kernel;
      break;
  }
  return r;
}

}  // namespace ivhs
