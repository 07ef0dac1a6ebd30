#ifndef FOLGIT_FOLIATION_HPP
#define FOLGIT_FOLIATION_HPP

#include <folgit/errors.hpp>
#include <folgit/gcd.hpp>
#include <folgit/homog.hpp>

#include <array>
#include <optional>
#include <string>

namespace folgit {

/// X = P d/dx + Q d/dy + R d/dz with P, Q, R homogeneous of degree d.
struct VectorField {
  int degree = 1;
  HomogPoly P, Q, R;

  VectorField() = default;
  VectorField(int d, HomogPoly p, HomogPoly q, HomogPoly r)
      : degree(d), P(std::move(p)), Q(std::move(q)), R(std::move(r)) {}

  /// Convenience for literal construction; zero polynomials get degree d.
  static VectorField of(int d, const Poly<3>& p, const Poly<3>& q, const Poly<3>& r) {
    return VectorField(d, HomogPoly(d, p), HomogPoly(d, q), HomogPoly(d, r));
  }

  const HomogPoly& component(int l) const { return l == 0 ? P : (l == 1 ? Q : R); }
  HomogPoly& component(int l) { return l == 0 ? P : (l == 1 ? Q : R); }
  bool is_zero() const { return P.is_zero() && Q.is_zero() && R.is_zero(); }

  friend bool operator==(const VectorField&, const VectorField&) = default;
};

inline void check_degrees(const VectorField& v) {
  if (v.degree < 1) throw DegreeMismatch("foliation degree must be at least 1");
  for (int l = 0; l < 3; ++l) {
    if (v.component(l).degree() != v.degree) {
      throw DegreeMismatch("component " + std::string(1, "PQR"[l]) + " has degree " +
                           std::to_string(v.component(l).degree()) + ", expected " +
                           std::to_string(v.degree));
    }
  }
}

/// Subtracts G * (x, y, z) with G = (z-divisible part of R) / z, so the
/// result's R has no monomial containing z. Idempotent; the difference
/// from the input is exactly a multiple of the radial field.
inline VectorField normalize(const VectorField& v) {
  const int d = v.degree;
  Poly<3> g;
  for (const auto& [e, c] : v.R.terms())
    if (e[2] > 0) g.add_term({e[0], e[1], e[2] - 1}, c);
  if (g.is_zero()) return v;
  const HomogPoly G(d - 1, g);
  return VectorField(d, v.P - G * HomogPoly::var(Var::X), v.Q - G * HomogPoly::var(Var::Y),
                     v.R - G * HomogPoly::var(Var::Z));
}

/// A foliation held by its canonical representative (see normalize).
class Foliation {
 public:
  /// Wraps normalize(v) without the common-factor test; used for formal
  /// inputs and for images under coordinate changes.
  static Foliation formal(const VectorField& v) {
    check_degrees(v);
    Foliation f;
    f.rep_ = normalize(v);
    if (f.rep_.is_zero()) throw ZeroField();
    return f;
  }

  int degree() const noexcept { return rep_.degree; }
  const VectorField& rep() const noexcept { return rep_; }
  const HomogPoly& P() const noexcept { return rep_.P; }
  const HomogPoly& Q() const noexcept { return rep_.Q; }
  const HomogPoly& R() const noexcept { return rep_.R; }

  friend bool operator==(const Foliation&, const Foliation&) = default;

 private:
  VectorField rep_;
};

/// gcd of the three components of v.
inline HomogPoly component_gcd(const VectorField& v) {
  return gcd_poly(gcd_poly(v.P, v.Q), v.R);
}

/// Rejects fields whose components share a factor, then normalizes. The
/// test runs on the given representative; a class whose canonical form
/// degenerates surfaces later as NonIsolated.
inline Foliation validate(const VectorField& v) {
  check_degrees(v);
  if (v.is_zero()) throw ZeroField();
  const HomogPoly g = component_gcd(v);
  if (g.degree() > 0) throw CommonFactor(to_string(g));
  return Foliation::formal(v);
}

/// Point of P^2 scaled so its first nonzero coordinate is 1.
class ProjPoint {
 public:
  ProjPoint(const Rational& x, const Rational& y, const Rational& z) : c_{x, y, z} {
    int lead = 0;
    while (lead < 3 && c_[lead] == 0) ++lead;
    if (lead == 3) throw std::invalid_argument("projective point with all coordinates zero");
    const Rational s = c_[lead];
    for (auto& v : c_) v /= s;
  }
  explicit ProjPoint(const std::array<Rational, 3>& c) : ProjPoint(c[0], c[1], c[2]) {}

  const std::array<Rational, 3>& coords() const noexcept { return c_; }
  const Rational& operator[](int i) const { return c_[i]; }

  friend bool operator==(const ProjPoint& a, const ProjPoint& b) { return a.c_ == b.c_; }
  friend bool operator<(const ProjPoint& a, const ProjPoint& b) { return a.c_ < b.c_; }

 private:
  std::array<Rational, 3> c_;
};

inline std::string to_string(const ProjPoint& p) {
  return "[" + p[0].get_str() + ":" + p[1].get_str() + ":" + p[2].get_str() + "]";
}

inline ProjPoint transform_point(const Matrix3& g, const ProjPoint& p) { return ProjPoint(g * p.coords()); }

/// g . X = Dg X(g^{-1} .), then normalized. Requires det g = 1.
inline Foliation act(const Matrix3& g, const Foliation& f) {
  if (determinant(g) != 1) throw NotUnimodular();
  const Matrix3 ginv = inverse(g);
  const VectorField& v = f.rep();
  const int d = v.degree;
  std::array<HomogPoly, 3> pulled{linear_substitute(v.P, ginv), linear_substitute(v.Q, ginv),
                                  linear_substitute(v.R, ginv)};
  VectorField out(d, HomogPoly(d), HomogPoly(d), HomogPoly(d));
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      if (g[i][j] != 0) out.component(i) += g[i][j] * pulled[j];
  return Foliation::formal(out);
}

struct Minors {
  HomogPoly yR_zQ, zP_xR, xQ_yP;
  const HomogPoly& operator[](int i) const { return i == 0 ? yR_zQ : (i == 1 ? zP_xR : xQ_yP); }
};

/// The 2x2 minors of [X; (x, y, z)], each of degree d + 1. Their common
/// zeros are the points where X is proportional to the position vector.
inline Minors singular_minors(const Foliation& f) {
  const auto x = HomogPoly::var(Var::X), y = HomogPoly::var(Var::Y), z = HomogPoly::var(Var::Z);
  return {y * f.R() - z * f.Q(), z * f.P() - x * f.R(), x * f.Q() - y * f.P()};
}

inline bool is_singular_at(const Foliation& f, const ProjPoint& p) {
  const Minors m = singular_minors(f);
  for (int i = 0; i < 3; ++i)
    if (m[i].evaluate(p.coords()) != 0) return false;
  return true;
}

/// X(F) = P F_x + Q F_y + R F_z, before the divisibility test.
inline HomogPoly apply_to(const VectorField& v, const HomogPoly& F) {
  return v.P * partial_derivative(F, Var::X) + v.Q * partial_derivative(F, Var::Y) +
         v.R * partial_derivative(F, Var::Z);
}

/// Cofactor H with X(F) = F H, or nullopt when F = 0 is not invariant.
inline std::optional<HomogPoly> is_invariant_curve(const VectorField& v, const HomogPoly& F) {
  if (F.is_zero() || F.degree() == 0) throw std::invalid_argument("curve must be non-constant");
  return exact_divide(apply_to(v, F), F);
}

inline std::optional<HomogPoly> is_invariant_curve(const Foliation& f, const HomogPoly& F) {
  return is_invariant_curve(f.rep(), F);
}

}  // namespace folgit

#endif  // FOLGIT_FOLIATION_HPP
