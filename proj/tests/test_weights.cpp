#include "helpers.hpp"

#include <gtest/gtest.h>

using namespace testing_helpers;

namespace {

Foliation power_field(int d) {
  return Foliation::formal(VectorField(d, HomogPoly::monomial(d, 0, 0), HomogPoly(d), HomogPoly(d)));
}

}  // namespace

TEST(OneParamSubgroup, Validation) {
  EXPECT_NO_THROW(OneParamSubgroup(2, -1));
  EXPECT_THROW(OneParamSubgroup(0, 0), InvalidSubgroup);
  EXPECT_THROW(OneParamSubgroup(-1, 1), InvalidSubgroup);
  EXPECT_THROW(OneParamSubgroup(2, 2), InvalidSubgroup);
  EXPECT_THROW(OneParamSubgroup(4, -2), InvalidSubgroup);
  EXPECT_EQ(to_string(OneParamSubgroup(2, -1)), "(2,-1,-1)");
}

TEST(Covector, Examples) {
  EXPECT_EQ(covector(0, 1, 2, 4), (WeightCovector{0, 0}));
  EXPECT_EQ(covector(2, 0, 0, 2), (WeightCovector{-3, -1}));
  EXPECT_THROW(covector(2, 3, 2, 4), IndexOutOfRange);
  EXPECT_THROW(covector(3, 0, 0, 4), IndexOutOfRange);
}

TEST(Covector, AgreesWithDirectWeight) {
  for (int d = 1; d <= 6; ++d)
    for (const auto& e : weight_diagram(d).entries)
      for (const auto& l : enumerate_candidate_1ps(3))
        EXPECT_EQ(weight_value(e.index.l, e.index.i, e.index.j, d, l), e.weight.a * l.k1() + e.weight.b * l.k2());
}

TEST(Diagram, SizeAndDoublePoints) {
  for (int d = 1; d <= 8; ++d) EXPECT_EQ(weight_diagram(d).entries.size(), static_cast<std::size_t>(d * d + 4 * d + 3));
  EXPECT_EQ(weight_diagram(3).entries.size(), 24u);
  EXPECT_EQ(origin_multiplicity(1), 2);
  EXPECT_EQ(origin_multiplicity(3), 0);
  EXPECT_THROW(weight_diagram(0), IndexOutOfRange);
  for (int d = 1; d <= 6; ++d)
    for (const auto& dp : double_points(d)) EXPECT_GE(dp.indices.size(), 2u);
}

TEST(Diagram, BasisRoundTrip) {
  for (int d = 1; d <= 5; ++d)
    for (const auto& e : weight_diagram(d).entries)
      EXPECT_EQ(basis_index(e.index.l, basis_exponents(e.index, d), d), e.index);
  EXPECT_EQ(basis_monomial_name({2, 0, 2}, 2), "y^2 d/dz");
}

TEST(Mumford, PowerFieldValue) {
  for (int d = 1; d <= 6; ++d) EXPECT_EQ(mumford_mu(power_field(d), OneParamSubgroup(1, 0)), -(d - 1));
}

TEST(Mumford, ZeroRFamilyIsUnstable) {
  Rng rng(67);
  for (int t = 0; t < 20; ++t) {
    const int d = static_cast<int>(uniform_int(rng, 2, 5));
    EXPECT_GT(mumford_mu(random_xddd(rng, d), OneParamSubgroup(2, -1)), 0);
  }
}

TEST(Mumford, SignFlipNegatesWeights) {
  const long before = weight_value(0, 0, 1, 2, OneParamSubgroup(2, -1));
  {
    ScopedWeightSignFlip flip;
    EXPECT_EQ(weight_value(0, 0, 1, 2, OneParamSubgroup(2, -1)), -before);
    EXPECT_EQ(covector(2, 0, 0, 2), (WeightCovector{3, 1}));
  }
  EXPECT_EQ(weight_value(0, 0, 1, 2, OneParamSubgroup(2, -1)), before);
}

TEST(Candidates, SmallBound) {
  const std::vector<OneParamSubgroup> want{{1, 1}, {1, 0}, {2, 1}, {2, -1}};
  EXPECT_EQ(enumerate_candidate_1ps(2), want);
  for (const auto& l : enumerate_candidate_1ps(7)) {
    EXPECT_LE(l.k1(), 7);
    EXPECT_GE(2 * l.k3(), -4 * l.k1());
    EXPECT_LE(2 * l.k3(), -l.k1());
  }
}

TEST(Hull, Examples) {
  Rng rng(1);
  const TorusVerdict z = hull_classify(random_xddd(rng, 3));
  EXPECT_EQ(z.kind, TorusClass::Unstable);
  ASSERT_TRUE(z.certificate.has_value());

  const TorusVerdict p = hull_classify(power_field(3));
  EXPECT_EQ(p.kind, TorusClass::Unstable);
  EXPECT_TRUE(verify_certificate(power_field(3), *p.certificate));

  EXPECT_EQ(hull_classify(triangle()).kind, TorusClass::Stable);
}

TEST(Hull, VerticesAreCounterclockwise) {
  Rng rng(71);
  for (int t = 0; t < 30; ++t) {
    const Foliation f = random_sparse(rng, 3, 1, 3);
    const auto h = hull_classify(f).hull;
    if (h.size() < 3) continue;
    for (std::size_t i = 0; i < h.size(); ++i) {
      const auto& a = h[i];
      const auto& b = h[(i + 1) % h.size()];
      const auto& c = h[(i + 2) % h.size()];
      EXPECT_GT(detail::cross({b.a - a.a, b.b - a.b}, {c.a - b.a, c.b - b.b}), 0);
    }
    for (const auto& v : h) EXPECT_TRUE(v.b > h[0].b || (v.b == h[0].b && v.a >= h[0].a));
  }
}

TEST(Hull, AgreesWithBruteForce) {
  Rng rng(73);
  for (int t = 0; t < 60; ++t) {
    const int d = static_cast<int>(uniform_int(rng, 1, 3));
    const Foliation f = random_sparse(rng, d, 1, static_cast<int>(uniform_int(rng, 2, 6)));
    const TorusVerdict v = hull_classify(f);
    const OracleVerdict o = torus_oracle(f);
    EXPECT_EQ(v.kind == TorusClass::Unstable, o.unstable) << print_foliation(f);
    if (v.certificate) EXPECT_TRUE(verify_certificate(f, *v.certificate));
    if (o.certificate) EXPECT_TRUE(verify_certificate(f, *o.certificate));
    EXPECT_LE(o.facet_maxk, o.maxk);
  }
}

TEST(Hull, PermutationsPreserveTheVerdict) {
  Rng rng(79);
  for (int t = 0; t < 30; ++t) {
    const Foliation f = random_sparse(rng, 2, 1, 3);
    const TorusClass k = hull_classify(f).kind;
    for (const Matrix3& g : permutation_matrices()) {
      EXPECT_EQ(determinant(g), 1);
      EXPECT_EQ(hull_classify(act(g, f)).kind, k);
    }
  }
}

TEST(Hull, CertificateRejectsTampering) {
  const Foliation f = power_field(2);
  Certificate c = *hull_classify(f).certificate;
  EXPECT_TRUE(verify_certificate(f, c));
  c.mu += 1;
  EXPECT_FALSE(verify_certificate(f, c));
}

TEST(Destabilize, FindsHiddenInstability) {
  Rng rng(83);
  for (int t = 0; t < 10; ++t) {
    const Foliation base = random_xddd(rng, 2);
    const Matrix3 g = random_unimodular(rng);
    const Sl3Verdict v = destabilize_search(act(g, base));
    EXPECT_EQ(v.kind, Sl3Class::Unstable) << print_foliation(act(g, base));
    if (v.certificate) EXPECT_TRUE(verify_certificate(act(g, base), *v.certificate));
  }
}

TEST(Destabilize, StablePointsCertifiedByDistinctSingularities) {
  const Sl3Verdict v = destabilize_search(fol(2, "x^2", "y^2", "z^2"));
  EXPECT_EQ(v.kind, Sl3Class::Stable);
  EXPECT_EQ(v.stage, "distinct singularities");
  EXPECT_FALSE(v.flags_tested.empty());
}

TEST(Destabilize, GivenStageFirst) {
  const Sl3Verdict v = destabilize_search(power_field(3));
  EXPECT_EQ(v.kind, Sl3Class::Unstable);
  EXPECT_EQ(v.stage, "given");
}

TEST(Destabilize, FlagMatrixSendsFlagToStandard) {
  const ProjPoint p(1, 2, 3);
  const std::array<Rational, 3> line{1, 1, -1};  // x + y - z through p
  const Matrix3 h = detail::flag_matrix(p, line);
  EXPECT_EQ(determinant(h), 1);
  EXPECT_EQ(transform_point(h, p), ProjPoint(1, 0, 0));
  // h maps the other point of the line into z = 0
  const ProjPoint q = transform_point(h, ProjPoint(1, 0, 1));
  EXPECT_EQ(q[2], 0);
}
