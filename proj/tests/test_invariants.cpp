#include "ivhs/error.hpp"
#include "ivhs/invariants.hpp"

#include <gtest/gtest.h>

namespace ivhs {
namespace {

TEST(Genus, PlaneCurves) {
  EXPECT_EQ(plane_pa(4), 3);
  EXPECT_EQ(plane_pa(5), 6);
  EXPECT_EQ(plane_pa(1), 0);
  EXPECT_THROW(plane_pa(0), ValidationError);
}

TEST(Genus, CompleteIntersections) {
  EXPECT_EQ(ci_genus(2, 3), 4);
  EXPECT_EQ(ci_genus(3, 3), 10);
  EXPECT_EQ(ci_genus(2, 2), 1);
}

TEST(Genus, Counts) {
  EXPECT_EQ(h0_omega_sq(3), 6);
  EXPECT_EQ(h0_omega_sq(5), 12);
  EXPECT_EQ(sym2_dim(4), 10);
  EXPECT_EQ(sym2_dim(10), 55);
  EXPECT_EQ(h0_omega_sq(2), 3);
  EXPECT_EQ(h0_omega_sq(4), 9);
  EXPECT_EQ(sym2_dim(1), 1);
  EXPECT_THROW(h0_omega_sq(1), ValidationError);
}

TEST(Catalog, Deltas) {
  EXPECT_EQ(delta_of(SingularityKind::node()), 1);
  EXPECT_EQ(delta_of(SingularityKind::cusp()), 1);
  EXPECT_EQ(delta_of(SingularityKind::tacnode()), 2);
  EXPECT_EQ(delta_of(SingularityKind::ordinary(3)), 3);
  EXPECT_EQ(delta_of(SingularityKind::ordinary(4)), 6);
}

TEST(Catalog, ExtensionsAgreeWithNamedTypes) {
  EXPECT_EQ(delta_of(SingularityKind::a(1)), delta_of(SingularityKind::node()));
  EXPECT_EQ(delta_of(SingularityKind::a(2)), delta_of(SingularityKind::cusp()));
  EXPECT_EQ(delta_of(SingularityKind::a(3)), delta_of(SingularityKind::tacnode()));
  EXPECT_EQ(branches_of(SingularityKind::a(1)), branches_of(SingularityKind::node()));
  EXPECT_EQ(branches_of(SingularityKind::a(2)), branches_of(SingularityKind::cusp()));
  EXPECT_EQ(branches_of(SingularityKind::a(3)), branches_of(SingularityKind::tacnode()));
  EXPECT_EQ(delta_of(SingularityKind::ordinary(2)), delta_of(SingularityKind::node()));
  EXPECT_EQ(branches_of(SingularityKind::ordinary(3)), 3);
}

TEST(Catalog, ParseAndPrint) {
  for (const auto& k : {SingularityKind::node(), SingularityKind::cusp(), SingularityKind::tacnode(),
                        SingularityKind::ordinary(5), SingularityKind::a(4)}) {
    EXPECT_EQ(parse_singularity_kind(to_string(k)), k);
  }
  EXPECT_EQ(parse_singularity_kind("ordinary(3)"), SingularityKind::ordinary(3));
  EXPECT_EQ(parse_singularity_kind("A3"), SingularityKind::a(3));
  EXPECT_THROW(parse_singularity_kind("D4"), ValidationError);
  EXPECT_THROW(parse_singularity_kind("ordinary:1"), ValidationError);
  EXPECT_THROW(parse_singularity_kind("A:0"), ValidationError);
}

TEST(Curve, NodalExamples) {
  EXPECT_EQ(curve_invariants(6, {make_record(SingularityKind::node())}).geometric_genus, 5);
  EXPECT_EQ(curve_invariants(4, {make_record(SingularityKind::node())}).geometric_genus, 3);
  EXPECT_EQ(curve_invariants(7, {}).geometric_genus, 7);
}

TEST(Curve, QuarticWithNodeAndCusp) {
  const auto inv = curve_invariants(3, {make_record(SingularityKind::node()),
                                        make_record(SingularityKind::cusp())});
  EXPECT_EQ(inv.geometric_genus, 1);
  EXPECT_EQ(inv.total_delta, 2);
}

TEST(Curve, QuinticWithTacnode) {
  EXPECT_EQ(curve_invariants(6, {make_record(SingularityKind::tacnode())}).geometric_genus, 4);
}

TEST(Curve, QuarticWithTriplePoint) {
  EXPECT_EQ(curve_invariants(3, {make_record(SingularityKind::ordinary(3))}).geometric_genus, 0);
}

TEST(Curve, TooMuchDeltaIsRejected) {
  EXPECT_THROW(curve_invariants(3, {make_record(SingularityKind::ordinary(4))}), ValidationError);
}

TEST(Curve, InconsistentRecordIsRejected) {
  SingularityRecord r = make_record(SingularityKind::node());
  r.delta = 2;
  EXPECT_THROW(total_delta({r}), ValidationError);
}

TEST(Curve, DeltaIdentityOnEveryPlaneCurveConfiguration) {
  // p_a = g̃ + Σδ for every collection of nodes and cusps that fits.
  for (int d = 3; d <= 8; ++d) {
    const int pa = plane_pa(d);
    for (int nodes = 0; nodes <= pa; ++nodes) {
      for (int cusps = 0; nodes + cusps <= pa; ++cusps) {
        std::vector<SingularityRecord> sings(static_cast<std::size_t>(nodes),
                                             make_record(SingularityKind::node()));
        sings.insert(sings.end(), static_cast<std::size_t>(cusps),
                     make_record(SingularityKind::cusp()));
        const auto inv = curve_invariants(pa, sings);
        EXPECT_EQ(inv.geometric_genus + inv.total_delta, pa);
        EXPECT_GE(inv.geometric_genus, 0);
      }
    }
  }
}

TEST(BrillNoether, Rho) {
  EXPECT_EQ(brill_noether_rho(4, 1, 3), 0);
  EXPECT_EQ(brill_noether_rho(5, 1, 3), -1);
  EXPECT_EQ(brill_noether_rho(6, 2, 5), -3);
  EXPECT_EQ(brill_noether_rho(3, 1, 2), -1);
  for (int g = 0; g <= 6; ++g) {
    for (int d = 0; d <= 8; ++d) EXPECT_EQ(brill_noether_rho(g, 0, d), d);
  }
}

TEST(ClassReport, PetriGeneral) {
  const auto r = class_mu_report(4, PetriClass::PetriGeneralNonhyperelliptic);
  EXPECT_EQ(r.sym2, 10);
  EXPECT_EQ(r.target, 9);
  EXPECT_EQ(r.mu_rank, 9);
  EXPECT_EQ(r.mu_kernel, 1);
  EXPECT_EQ(r.max_ivhs_rank, 4);
  EXPECT_THROW(class_mu_report(2, PetriClass::PetriGeneralNonhyperelliptic), ValidationError);
}

TEST(ClassReport, PetriGeneralGenusThree) {
  const auto r = class_mu_report(3, PetriClass::PetriGeneralNonhyperelliptic);
  EXPECT_EQ(r.mu_kernel, 0);
  EXPECT_EQ(r.max_ivhs_rank, 3);
}

TEST(ClassReport, HyperellipticGenusThree) {
  const auto r = class_mu_report(3, PetriClass::Hyperelliptic);
  EXPECT_EQ(r.mu_rank, 5);
  EXPECT_EQ(r.mu_kernel, 1);
  EXPECT_EQ(r.max_ivhs_rank, 2);
}

TEST(ClassReport, HyperellipticHigherGenusHasNoDocumentedMaximum) {
  const auto r = class_mu_report(5, PetriClass::Hyperelliptic);
  EXPECT_EQ(r.mu_rank, 9);
  EXPECT_EQ(r.mu_kernel, 6);
  EXPECT_FALSE(r.max_ivhs_rank.has_value());
}

TEST(ClassReport, TrigonalGenusFive) {
  const auto r = class_mu_report(5, PetriClass::Trigonal);
  EXPECT_EQ(r.sym2, 15);
  EXPECT_EQ(r.target, 12);
  EXPECT_EQ(r.mu_kernel, 3);
  EXPECT_EQ(r.max_ivhs_rank, 4);
  EXPECT_THROW(class_mu_report(3, PetriClass::Trigonal), ValidationError);
}

TEST(ClassReport, PlaneQuintic) {
  const auto r = class_mu_report(6, PetriClass::PlaneQuintic);
  EXPECT_EQ(r.sym2, 21);
  EXPECT_EQ(r.target, 15);
  EXPECT_EQ(r.mu_kernel, 6);
  EXPECT_THROW(class_mu_report(7, PetriClass::PlaneQuintic), ValidationError);
}

TEST(ClassReport, KernelPlusRankIsSym2) {
  for (int g = 2; g <= 15; ++g) {
    for (auto cls : {PetriClass::PetriGeneralNonhyperelliptic, PetriClass::Hyperelliptic,
                     PetriClass::Trigonal, PetriClass::PlaneQuintic}) {
      try {
        const auto r = class_mu_report(g, cls);
        EXPECT_EQ(r.mu_rank + r.mu_kernel, r.sym2);
        EXPECT_LE(r.mu_rank, r.target);
        EXPECT_EQ(parse_petri_class(to_string(cls)), cls);
      } catch (const ValidationError&) {
      }
    }
  }
}

}  // namespace
}  // namespace ivhs
