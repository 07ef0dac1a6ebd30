#include "helpers.hpp"

#include <gtest/gtest.h>

using namespace testing_helpers;

TEST(Normalize, PureRadialComponentMoves) {
  for (int d = 1; d <= 4; ++d) {
    const std::string zd = "z^" + std::to_string(d);
    const std::string zd1 = "z^" + std::to_string(d - 1);
    const VectorField n = normalize(field(d, "0", "0", zd));
    EXPECT_EQ(n, field(d, "-x*" + zd1, "-y*" + zd1, "0"));
  }
}

TEST(Normalize, MixedExample) {
  EXPECT_EQ(normalize(field(2, "0", "0", "x*z+y^2")), field(2, "-x^2", "-x*y", "y^2"));
}

TEST(Normalize, KillsZInRAndIsIdempotent) {
  Rng rng(3);
  for (int t = 0; t < 30; ++t) {
    const int d = static_cast<int>(uniform_int(rng, 1, 4));
    VectorField v(d, random_binary_form(rng, d), HomogPoly(d), HomogPoly(d));
    for (int l = 0; l < 3; ++l) {
      HomogPoly c(d);
      for (int a = 0; a <= d; ++a)
        for (int b = 0; a + b <= d; ++b) c += HomogPoly::monomial(a, b, d - a - b, random_coefficient(rng));
      v.component(l) = c;
    }
    const VectorField n = normalize(v);
    for (const auto& [e, c] : n.R.terms()) EXPECT_EQ(e[2], 0);
    EXPECT_EQ(normalize(n), n);
    // v - n is a multiple of the radial field
    const VectorField diff(d, v.P - n.P, v.Q - n.Q, v.R - n.R);
    if (!diff.is_zero()) {
      const auto gx = exact_divide(diff.P, HomogPoly::var(Var::X));
      ASSERT_TRUE(gx.has_value());
      EXPECT_EQ(*gx * HomogPoly::var(Var::Y), diff.Q);
      EXPECT_EQ(*gx * HomogPoly::var(Var::Z), diff.R);
    }
  }
}

TEST(Validate, CommonFactorRejected) {
  try {
    validate(field(2, "x*y", "x*z", "x^2"));
    FAIL() << "expected CommonFactor";
  } catch (const CommonFactor& e) {
    EXPECT_EQ(e.factor(), "x");
  }
}

TEST(Validate, AcceptedRepresentatives) {
  EXPECT_NO_THROW(validate(field(2, "y^2", "x*y", "x*z")));
  EXPECT_NO_THROW(validate(field(2, "y*z", "x*z", "x*y")));
}

TEST(Validate, DegreeAndZeroErrors) {
  EXPECT_THROW(validate(field(2, "0", "0", "0")), ZeroField);
  EXPECT_THROW(validate(VectorField(2, H("x^2", 2), H("y", 1), H("z^2", 2))), DegreeMismatch);
  EXPECT_THROW(validate(field(0, "1", "1", "1")), DegreeMismatch);
  // radial fields are zero as foliations
  EXPECT_THROW(validate(field(1, "x", "y", "z")), ZeroField);
}

TEST(Minors, DegreeAndIdentity) {
  const Foliation f = fol(3, "x^3+y*z^2", "y^2*x", "z^3+x*y*z");
  const Minors m = singular_minors(f);
  const auto x = HomogPoly::var(Var::X), y = HomogPoly::var(Var::Y), z = HomogPoly::var(Var::Z);
  for (int i = 0; i < 3; ++i) EXPECT_EQ(m[i].degree(), 4);
  EXPECT_TRUE((x * m[0] + y * m[1] + z * m[2]).is_zero());
}

TEST(Minors, Example) {
  const Foliation f = fol(1, "y", "z", "0");
  const Minors m = singular_minors(f);
  EXPECT_EQ(m[0], H("-z^2"));
  EXPECT_EQ(m[1], H("y*z"));
  EXPECT_EQ(m[2], H("x*z-y^2"));
}

TEST(Minors, TriangleExample) {
  const Minors m = singular_minors(triangle());
  EXPECT_EQ(m[0], H("x*y^2-x*z^2"));
  EXPECT_EQ(m[1], H("y*z^2-x^2*y"));
  EXPECT_EQ(m[2], H("x^2*z-y^2*z"));
}

TEST(SingularAt, CoordinatePoints) {
  const Foliation f = triangle();
  EXPECT_TRUE(is_singular_at(f, ProjPoint(1, 0, 0)));
  EXPECT_TRUE(is_singular_at(f, ProjPoint(1, 1, 1)));
  EXPECT_FALSE(is_singular_at(f, ProjPoint(1, 2, 3)));
}

TEST(InvariantCurve, Examples) {
  const Foliation f = fol(2, "y^2", "x*y", "x*z");
  const auto h = is_invariant_curve(field(2, "y^2", "x*y", "x*z"), H("z"));
  ASSERT_TRUE(h.has_value());
  EXPECT_EQ(*h, H("x"));
  EXPECT_FALSE(is_invariant_curve(field(2, "y^2", "x*y", "x*z"), H("x+y+z")).has_value());
  // invariance is a property of the foliation, unchanged by normalization
  EXPECT_TRUE(is_invariant_curve(f, H("z")).has_value());
  EXPECT_THROW(is_invariant_curve(f, H("1", 0)), std::invalid_argument);
}

TEST(Action, IdentityAndComposition) {
  Rng rng(41);
  const Foliation f = fol(2, "x^2+y*z", "x*y-z^2", "y^2");
  EXPECT_EQ(act(identity3(), f), f);
  for (int t = 0; t < 15; ++t) {
    const Matrix3 g = random_unimodular(rng), h = random_unimodular(rng);
    EXPECT_EQ(act(g, act(h, f)), act(g * h, f));
  }
  EXPECT_THROW(act(mat({{2, 0, 0}, {0, 1, 0}, {0, 0, 1}}), f), NotUnimodular);
}

TEST(Action, MovesSingularPoints) {
  Rng rng(43);
  const Foliation f = triangle();
  for (int t = 0; t < 10; ++t) {
    const Matrix3 g = random_unimodular(rng);
    const Foliation gf = act(g, f);
    for (const ProjPoint& p : {ProjPoint(1, 0, 0), ProjPoint(0, 1, 0), ProjPoint(1, 1, 1), ProjPoint(1, -1, 1)})
      EXPECT_TRUE(is_singular_at(gf, transform_point(g, p)));
  }
}

TEST(ProjPoint, Normalization) {
  EXPECT_EQ(ProjPoint(2, 4, 6), ProjPoint(1, 2, 3));
  EXPECT_EQ(ProjPoint(0, -2, 1), ProjPoint(0, 1, Rational(-1, 2)));
  EXPECT_EQ(to_string(ProjPoint(0, 3, 0)), "[0:1:0]");
  EXPECT_THROW(ProjPoint(0, 0, 0), std::invalid_argument);
}
