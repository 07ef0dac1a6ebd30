#ifndef FOLGIT_HOMOG_HPP
#define FOLGIT_HOMOG_HPP

#include <folgit/errors.hpp>
#include <folgit/poly.hpp>

#include <array>
#include <string>

namespace folgit {

enum class Var { X = 0, Y = 1, Z = 2 };

/// Homogeneous polynomial in x, y, z. The degree is tracked even for the
/// zero polynomial so components of a vector field keep a common degree.
class HomogPoly {
 public:
  HomogPoly() = default;
  explicit HomogPoly(int degree) : degree_(degree) {}

  HomogPoly(int degree, Poly<3> poly) : degree_(degree), poly_(std::move(poly)) {
    if (!poly_.is_zero() && (!poly_.is_homogeneous() || poly_.total_degree() != degree_)) {
      throw DegreeMismatch("polynomial " + to_string(poly_) + " is not homogeneous of degree " +
                           std::to_string(degree_));
    }
  }

  /// Degree is read off the terms; throws for inhomogeneous or zero input.
  static HomogPoly from_poly(Poly<3> poly) {
    if (poly.is_zero()) throw DegreeMismatch("zero polynomial has no intrinsic degree");
    const int deg = poly.total_degree();
    return HomogPoly(deg, std::move(poly));
  }

  static HomogPoly monomial(int ex, int ey, int ez, const Rational& c = 1) {
    return HomogPoly(ex + ey + ez, Poly<3>::monomial({ex, ey, ez}, c));
  }

  static HomogPoly var(Var v) { return HomogPoly(1, Poly<3>::variable(static_cast<std::size_t>(v))); }

  int degree() const noexcept { return degree_; }
  const Poly<3>& poly() const noexcept { return poly_; }
  bool is_zero() const noexcept { return poly_.is_zero(); }
  const Poly<3>::TermMap& terms() const noexcept { return poly_.terms(); }
  Rational coeff(int ex, int ey, int ez) const { return poly_.coeff({ex, ey, ez}); }

  HomogPoly operator-() const { return HomogPoly(degree_, -poly_); }

  HomogPoly& operator+=(const HomogPoly& o) {
    require_same_degree(o);
    poly_ += o.poly_;
    return *this;
  }
  HomogPoly& operator-=(const HomogPoly& o) {
    require_same_degree(o);
    poly_ -= o.poly_;
    return *this;
  }
  friend HomogPoly operator+(HomogPoly a, const HomogPoly& b) { return a += b; }
  friend HomogPoly operator-(HomogPoly a, const HomogPoly& b) { return a -= b; }
  friend HomogPoly operator*(const HomogPoly& a, const HomogPoly& b) {
    return HomogPoly(a.degree_ + b.degree_, a.poly_ * b.poly_);
  }
  friend HomogPoly operator*(const Rational& s, const HomogPoly& a) {
    return HomogPoly(a.degree_, s * a.poly_);
  }
  friend HomogPoly operator*(const HomogPoly& a, const Rational& s) { return s * a; }
  friend bool operator==(const HomogPoly& a, const HomogPoly& b) {
    return a.degree_ == b.degree_ && a.poly_ == b.poly_;
  }

  Rational evaluate(const std::array<Rational, 3>& p) const { return poly_.evaluate(p); }

  /// Restriction to the chart x = 1 as a polynomial in (y, z).
  BivarPoly dehomogenize_x() const {
    BivarPoly out;
    for (const auto& [e, c] : poly_.terms()) out.add_term({e[1], e[2]}, c);
    return out;
  }

 private:
  void require_same_degree(const HomogPoly& o) const {
    if (degree_ != o.degree_) {
      throw DegreeMismatch("cannot add homogeneous polynomials of degrees " +
                           std::to_string(degree_) + " and " + std::to_string(o.degree_));
    }
  }

  int degree_ = 0;
  Poly<3> poly_;
};

inline std::string to_string(const HomogPoly& p) { return to_string(p.poly()); }

/// Degree drops by one; the zero polynomial of degree max(d-1, 0) otherwise.
inline HomogPoly partial_derivative(const HomogPoly& p, Var v) {
  return HomogPoly(std::max(p.degree() - 1, 0), p.poly().derivative(static_cast<std::size_t>(v)));
}

/// Homogenizes a (y, z) polynomial to the given degree with x.
inline HomogPoly homogenize_x(const BivarPoly& p, int degree) {
  Poly<3> out;
  for (const auto& [e, c] : p.terms()) {
    const int ex = degree - e[0] - e[1];
    if (ex < 0) throw DegreeMismatch("homogenization degree too small");
    out.add_term({ex, e[0], e[1]}, c);
  }
  return HomogPoly(degree, std::move(out));
}

using Matrix3 = std::array<std::array<Rational, 3>, 3>;

inline Matrix3 identity3() {
  Matrix3 m;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) m[i][j] = (i == j) ? 1 : 0;
  return m;
}

inline Matrix3 operator*(const Matrix3& a, const Matrix3& b) {
  Matrix3 m;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      Rational s = 0;
      for (int k = 0; k < 3; ++k) s += a[i][k] * b[k][j];
      m[i][j] = s;
    }
  return m;
}

inline std::array<Rational, 3> operator*(const Matrix3& a, const std::array<Rational, 3>& v) {
  std::array<Rational, 3> out;
  for (int i = 0; i < 3; ++i) out[i] = a[i][0] * v[0] + a[i][1] * v[1] + a[i][2] * v[2];
  return out;
}

inline Rational determinant(const Matrix3& m) {
  return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
         m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
         m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
}

inline Matrix3 inverse(const Matrix3& m) {
  const Rational det = determinant(m);
  if (det == 0) throw SingularMatrix();
  Matrix3 inv;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      // cofactor of (j, i)
      const int r0 = (j + 1) % 3, r1 = (j + 2) % 3;
      const int c0 = (i + 1) % 3, c1 = (i + 2) % 3;
      inv[i][j] = (m[r0][c0] * m[r1][c1] - m[r0][c1] * m[r1][c0]) / det;
    }
  return inv;
}

/// p(g * (x, y, z)^T): each variable is replaced by the matching row of g.
/// Satisfies (p o g) o h = p o (g h).
inline HomogPoly linear_substitute(const HomogPoly& p, const Matrix3& g) {
  if (determinant(g) == 0) throw SingularMatrix();
  std::array<Poly<3>, 3> rows;
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      typename Poly<3>::Exponents e{};
      e[j] = 1;
      rows[i].add_term(e, g[i][j]);
    }
  }
  const int d = p.degree();
  std::array<std::vector<Poly<3>>, 3> powers;
  for (int i = 0; i < 3; ++i) {
    powers[i].reserve(d + 1);
    powers[i].push_back(Poly<3>(Rational(1)));
    for (int k = 1; k <= d; ++k) powers[i].push_back(powers[i].back() * rows[i]);
  }
  Poly<3> out;
  for (const auto& [e, c] : p.terms()) {
    out += c * (powers[0][e[0]] * powers[1][e[1]] * powers[2][e[2]]);
  }
  return HomogPoly(d, std::move(out));
}

inline std::string to_string(const Matrix3& m) {
  std::string s = "[";
  for (int i = 0; i < 3; ++i) {
    s += (i ? ",[" : "[");
    for (int j = 0; j < 3; ++j) s += (j ? "," : "") + m[i][j].get_str();
    s += "]";
  }
  return s + "]";
}

}  // namespace folgit

#endif  // FOLGIT_HOMOG_HPP
