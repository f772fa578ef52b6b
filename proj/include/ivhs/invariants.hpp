#pragma once

// Genus and δ-invariant calculus for reduced Gorenstein curves, plus the
// dimension counts attached to canonical multiplication for the standard
// curve classes.

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace ivhs {

enum class SingularityType { Node, Cusp, Tacnode, Ordinary, A };

/// A declared singularity type. `order` is the multiplicity m of an
/// ordinary m-fold point, or k for an A_k point; it is unused otherwise.
struct SingularityKind {
  SingularityType type = SingularityType::Node;
  int order = 0;

  static SingularityKind node() { return {SingularityType::Node, 0}; }
  static SingularityKind cusp() { return {SingularityType::Cusp, 0}; }
  static SingularityKind tacnode() { return {SingularityType::Tacnode, 0}; }
  static SingularityKind ordinary(int m);
  static SingularityKind a(int k);

  friend bool operator==(const SingularityKind&, const SingularityKind&) = default;
};

/// "node", "cusp", "tacnode", "ordinary:m", "A:k".
std::string to_string(const SingularityKind& kind);
/// Inverse of to_string; also accepts "ordinary(m)" and "A(k)"/"Ak".
/// Throws ValidationError for anything outside the catalog.
SingularityKind parse_singularity_kind(std::string_view text);

struct SingularityRecord {
  SingularityKind kind;
  int delta = 0;
  int branches = 0;

  friend bool operator==(const SingularityRecord&, const SingularityRecord&) = default;
};

/// node 1, cusp 1, tacnode 2, ordinary(m) m(m-1)/2, A_k ⌈k/2⌉.
int delta_of(const SingularityKind& kind);
int branches_of(const SingularityKind& kind);
SingularityRecord make_record(const SingularityKind& kind);

int total_delta(const std::vector<SingularityRecord>& sings);

struct CurveInvariants {
  int arithmetic_genus = 0;
  int geometric_genus = 0;
  int total_delta = 0;
  std::vector<SingularityRecord> singularities;

  friend bool operator==(const CurveInvariants&, const CurveInvariants&) = default;
};

/// (d-1)(d-2)/2
int plane_pa(int d);
/// 1 + ab(a+b-4)/2 for a complete intersection of type (a, b) in P^3.
int ci_genus(int a, int b);

/// Geometric genus from p_a = g̃ + Σδ. Throws if Σδ > p_a.
CurveInvariants curve_invariants(int arithmetic_genus, const std::vector<SingularityRecord>& sings);

/// 3g - 3
int h0_omega_sq(int g);
/// g(g+1)/2
int sym2_dim(int g);
/// g - (r+1)(g-d+r); may be negative.
int brill_noether_rho(int g, int r, int d);

enum class PetriClass { PetriGeneralNonhyperelliptic, Hyperelliptic, Trigonal, PlaneQuintic };

std::string to_string(PetriClass cls);
PetriClass parse_petri_class(std::string_view text);

struct ClassMuReport {
  int genus = 0;
  PetriClass cls = PetriClass::PetriGeneralNonhyperelliptic;
  int sym2 = 0;
  int target = 0;
  int mu_rank = 0;
  int mu_kernel = 0;
  /// Empty where no value is established for the class and genus.
  std::optional<int> max_ivhs_rank;

  friend bool operator==(const ClassMuReport&, const ClassMuReport&) = default;
};

ClassMuReport class_mu_report(int g, PetriClass cls);

}  // namespace ivhs
