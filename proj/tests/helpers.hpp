#ifndef FOLGIT_TESTS_HELPERS_HPP
#define FOLGIT_TESTS_HELPERS_HPP

#include <folgit/folgit.hpp>

#include <ostream>
#include <string>

namespace folgit {

template <std::size_t N>
void PrintTo(const Poly<N>& p, std::ostream* os) { *os << to_string(p); }
inline void PrintTo(const HomogPoly& p, std::ostream* os) { *os << to_string(p) << " [deg " << p.degree() << "]"; }
inline void PrintTo(const VectorField& v, std::ostream* os) {
  *os << "(" << to_string(v.P) << ", " << to_string(v.Q) << ", " << to_string(v.R) << ")";
}
inline void PrintTo(const Foliation& f, std::ostream* os) { PrintTo(f.rep(), os); }
inline void PrintTo(const ProjPoint& p, std::ostream* os) { *os << to_string(p); }
inline void PrintTo(const IntersectionNumber& n, std::ostream* os) { *os << to_string(n); }
inline void PrintTo(const OneParamSubgroup& l, std::ostream* os) { *os << to_string(l); }
inline void PrintTo(const WeightCovector& w, std::ostream* os) { *os << to_string(w); }

}  // namespace folgit

namespace testing_helpers {

using namespace folgit;

/// mpq_class(num, den) does not reduce; every random fraction goes through here.
inline Rational Q(long num, long den) {
  Rational q(num, den);
  q.canonicalize();
  return q;
}

inline Poly<3> P3(const std::string& s) { return parse_polynomial(s); }

inline HomogPoly H(const std::string& s, int d) { return HomogPoly(d, parse_polynomial(s)); }

inline HomogPoly H(const std::string& s) {
  const Poly<3> p = parse_polynomial(s);
  return HomogPoly(std::max(p.total_degree(), 0), p);
}

/// Bivariate polynomial in y, z written with the same grammar (x must not occur).
inline BivarPoly B(const std::string& s) {
  const Poly<3> p = parse_polynomial(s);
  BivarPoly out;
  for (const auto& [e, c] : p.terms()) {
    if (e[0] != 0) throw std::invalid_argument("bivariate literal uses x");
    out.add_term({e[1], e[2]}, c);
  }
  return out;
}

/// Univariate polynomial in t, written with x standing for t.
inline UniPoly U(const std::string& s) {
  const Poly<3> p = parse_polynomial(s);
  UniPoly out;
  for (const auto& [e, c] : p.terms()) out.add_term({e[0]}, c);
  return out;
}

inline VectorField field(int d, const std::string& p, const std::string& q, const std::string& r) {
  return VectorField(d, H(p, d), H(q, d), H(r, d));
}

inline Foliation fol(int d, const std::string& p, const std::string& q, const std::string& r) {
  return validate(field(d, p, q, r));
}

inline Foliation triangle() { return fol(2, "y*z", "x*z", "x*y"); }

inline Matrix3 mat(std::initializer_list<std::initializer_list<long>> rows) {
  Matrix3 m{};
  int i = 0;
  for (const auto& r : rows) {
    int j = 0;
    for (long v : r) m[i][j++] = v;
    ++i;
  }
  return m;
}

}  // namespace testing_helpers

#endif  // FOLGIT_TESTS_HELPERS_HPP
