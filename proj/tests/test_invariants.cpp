#include "helpers.hpp"

#include <gtest/gtest.h>

#include <map>

using namespace testing_helpers;

namespace {

std::map<ProjPoint, std::pair<int, long>> by_point(const SingularLocus& L) {
  std::map<ProjPoint, std::pair<int, long>> out;
  for (const auto& r : L.points) out[r.point] = {r.multiplicity, r.milnor.value()};
  return out;
}

}  // namespace

TEST(LocalIntersection, SmallExamples) {
  EXPECT_EQ(milnor_fulton({B("y"), B("z")}), IntersectionNumber::finite(1));
  EXPECT_EQ(milnor_fulton({B("y^2"), B("z^3")}), IntersectionNumber::finite(6));
  EXPECT_EQ(milnor_fulton({B("y^2-z^3"), B("y")}), IntersectionNumber::finite(3));
  EXPECT_EQ(milnor_fulton({B("y^2-z^3"), B("y^2+z^3")}), IntersectionNumber::finite(6));
  // only branches through the origin count
  EXPECT_EQ(milnor_fulton({B("y*(1+y)"), B("z+y")}), IntersectionNumber::finite(1));
}

TEST(LocalIntersection, CommonBranchIsInfinite) {
  EXPECT_FALSE(milnor_fulton({B("y*z"), B("y^2")}).is_finite());
  EXPECT_FALSE(milnor_fulton({B("y"), BivarPoly()}).is_finite());
  EXPECT_FALSE(milnor_oracle({B("y*z"), B("y^2")}).is_finite());
  // a common factor away from the origin does not matter
  EXPECT_EQ(milnor_fulton({B("(1+y)*y"), B("(1+y)*z")}), IntersectionNumber::finite(1));
}

TEST(LocalIntersection, FultonMatchesOracle) {
  Rng rng(53);
  for (int t = 0; t < 200; ++t) {
    const LocalRep l = random_local_rep(rng, 4);
    EXPECT_EQ(milnor_fulton(l), milnor_oracle(l)) << to_string(l.f1) << " ; " << to_string(l.f2);
  }
}

TEST(LocalIntersection, HighIndexPairsMatchOracle) {
  EXPECT_EQ(milnor_fulton({B("y^5-z^7"), B("y^3+z^4+y*z^2")}), milnor_oracle({B("y^5-z^7"), B("y^3+z^4+y*z^2")}));
  Rng rng(101);
  for (int t = 0; t < 10; ++t) {
    const Foliation f = random_xddd(rng, 5);
    if (non_isolated_factor(f)) continue;
    const LocalRep l = chart_components(f);
    const IntersectionNumber n = milnor_fulton(l);
    EXPECT_EQ(n, milnor_oracle(l));
    EXPECT_GE(n.value(), 25);
  }
}

TEST(LocalIntersection, BoundedBelowByProductOfOrders) {
  Rng rng(59);
  for (int t = 0; t < 100; ++t) {
    const LocalRep l = random_local_rep(rng, 3);
    const IntersectionNumber n = milnor_fulton(l);
    if (n.is_finite()) EXPECT_GE(n.value(), static_cast<long>(*l.f1.order()) * *l.f2.order());
  }
}

TEST(Multiplicity, Examples) {
  EXPECT_EQ(algebraic_multiplicity({B("y^2+z^3"), B("y*z^2")}), 2);
  EXPECT_EQ(algebraic_multiplicity({BivarPoly(), B("z^3")}), 3);
  EXPECT_THROW(algebraic_multiplicity({BivarPoly(), BivarPoly()}), BothZero);
}

TEST(Localize, RejectsRegularPoints) {
  EXPECT_THROW(localize(triangle(), ProjPoint(1, 2, 3)), NotSingular);
}

TEST(Localize, EveryChartReachesTheOrigin) {
  const Foliation f = fol(2, "x^2", "y^2", "z^2");
  for (const ProjPoint& p : {ProjPoint(1, 0, 0), ProjPoint(0, 1, 0), ProjPoint(0, 0, 1), ProjPoint(0, 1, 1),
                             ProjPoint(1, 1, 1), ProjPoint(1, 0, 1)}) {
    const Matrix3 h = localizing_matrix(p);
    EXPECT_EQ(determinant(h), 1);
    EXPECT_EQ(transform_point(h, p), ProjPoint(1, 0, 0));
    const SingularityReport r = report(f, p);
    EXPECT_EQ(r.multiplicity, 1);
    EXPECT_EQ(r.milnor, IntersectionNumber::finite(1));
  }
}

TEST(Locus, SevenSimplePoints) {
  const SingularLocus L = find_rational_singularities(fol(2, "x^2", "y^2", "z^2"));
  EXPECT_EQ(L.points.size(), 7u);
  for (const auto& r : L.points) {
    EXPECT_EQ(r.multiplicity, 1);
    EXPECT_EQ(r.milnor, IntersectionNumber::finite(1));
  }
  EXPECT_EQ(L.total_milnor(), 7);
  EXPECT_EQ(L.residual_milnor, 0);
  EXPECT_TRUE(all_distinct(L));
}

TEST(Locus, TriangleFoliation) {
  const SingularLocus L = find_rational_singularities(triangle());
  EXPECT_EQ(L.total_milnor(), jouanolou_total(2));
  EXPECT_EQ(L.points.size(), 7u);
  EXPECT_TRUE(L.unresolved.empty());
}

TEST(Locus, ZeroRFamilyDegenerateCase) {
  const SingularLocus L = find_rational_singularities(make_xdd0(2, H("z^2"), H("y^2")));
  const auto pts = by_point(L);
  ASSERT_EQ(pts.size(), 2u);
  EXPECT_EQ(pts.at(ProjPoint(1, 0, 0)).second, 6);
  EXPECT_EQ(pts.at(ProjPoint(0, 1, 0)).second, 1);
  EXPECT_EQ(L.residual_milnor, 0);
}

TEST(Locus, HighMultiplicityPoint) {
  const Foliation f = make_xd(2, 1, H("y^2+z^2"), H("z"));
  const SingularityReport r = report(f, ProjPoint(1, 0, 0));
  EXPECT_EQ(r.multiplicity, 2);
  EXPECT_EQ(r.milnor, IntersectionNumber::finite(5));
  EXPECT_EQ(find_rational_singularities(f).total_milnor(), 7);
}

TEST(Locus, IrrationalCoordinatesAreReported) {
  const SingularLocus L = find_rational_singularities(fol(1, "x", "z", "2*y"));
  ASSERT_EQ(L.unresolved.size(), 1u);
  EXPECT_EQ(L.unresolved[0].factor, U("x^2-2"));
  EXPECT_EQ(L.residual_milnor, 2);
  EXPECT_EQ(L.total_milnor() + L.residual_milnor, jouanolou_total(1));
  EXPECT_FALSE(all_distinct(L));
}

TEST(Locus, NonIsolatedRaises) {
  const Foliation f = fol(2, "y^2", "x*y", "x*z");
  ASSERT_TRUE(non_isolated_factor(f).has_value());
  EXPECT_THROW(find_rational_singularities(f), NonIsolated);
}

TEST(Locus, InvariantUnderCoordinateChange) {
  Rng rng(61);
  const Foliation f = fol(2, "x^2+y*z", "y^2-x*z", "z^2+x*y");
  const SingularLocus L = find_rational_singularities(f);
  for (int t = 0; t < 10; ++t) {
    const Matrix3 g = random_unimodular(rng);
    const SingularLocus M = find_rational_singularities(act(g, f));
    EXPECT_EQ(M.total_milnor(), L.total_milnor());
    EXPECT_EQ(M.residual_milnor, L.residual_milnor);
    std::map<ProjPoint, std::pair<int, long>> moved;
    for (const auto& r : L.points) moved[transform_point(g, r.point)] = {r.multiplicity, r.milnor.value()};
    EXPECT_EQ(by_point(M), moved);
  }
}

TEST(Families, ConstraintsEnforced) {
  EXPECT_THROW(make_xddd(1, H("y"), H("z"), 1), FamilyConstraint);
  EXPECT_THROW(make_xddd(2, H("x*y"), H("z^2"), 1), FamilyConstraint);
  EXPECT_THROW(make_xdd0(2, H("y*z"), H("y^2")), FamilyConstraint);
  EXPECT_THROW(make_xd(2, 1, H("y^2+z^2"), H("y")), FamilyConstraint);
  EXPECT_THROW(make_xd(2, 3, H("y^2+z^2"), H("1", 0)), FamilyConstraint);
  EXPECT_NO_THROW(make_xddd(2, H("z^2"), H("y*z"), 3));
}

TEST(Families, NamedFamiliesAreDeterministic) {
  EXPECT_EQ(make_family("xddd", 3, 1, 9), make_family("xddd", 3, 1, 9));
  EXPECT_EQ(make_family("xd", 4, 2, 9), make_family("xd", 4, 2, 9));
  EXPECT_THROW(make_family("nope", 3, 1, 0), FamilyConstraint);
}
