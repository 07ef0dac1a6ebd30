#ifndef FOLGIT_INVARIANTS_HPP
#define FOLGIT_INVARIANTS_HPP

#include <folgit/foliation.hpp>
#include <folgit/gcd.hpp>
#include <folgit/random.hpp>
#include <folgit/resultant.hpp>

#include <algorithm>
#include <stdexcept>
#include <string>
#include <variant>

namespace folgit {

/// Local intersection number: a finite count or +infinity.
class IntersectionNumber {
 public:
  struct Infinity {
    friend bool operator==(Infinity, Infinity) { return true; }
  };

  static IntersectionNumber finite(long n) { return IntersectionNumber(n); }
  static IntersectionNumber infinite() { return IntersectionNumber(Infinity{}); }

  bool is_finite() const noexcept { return std::holds_alternative<long>(value_); }
  long value() const {
    if (!is_finite()) throw std::logic_error("intersection number is infinite");
    return std::get<long>(value_);
  }

  friend bool operator==(const IntersectionNumber&, const IntersectionNumber&) = default;

 private:
  explicit IntersectionNumber(std::variant<long, Infinity> v) : value_(v) {}
  std::variant<long, Infinity> value_;
};

inline std::string to_string(const IntersectionNumber& n) {
  return n.is_finite() ? std::to_string(n.value()) : "infinity";
}

class BothZero : public Error {
 public:
  BothZero() : Error("BothZero", "both local components are zero") {}
};

/// Components (f1, f2) of the foliation in the chart x = 1 after the
/// singular point has been moved to the origin.
struct LocalRep {
  BivarPoly f1, f2;
};

/// Deterministic unimodular h with h(p) = [1:0:0]: a unit lower-triangular
/// shear for x != 0, preceded by a coordinate permutation otherwise.
inline Matrix3 localizing_matrix(const ProjPoint& p) {
  Matrix3 h = identity3();
  if (p[0] != 0) {
    h[1][0] = -p[1];
    h[2][0] = -p[2];
    return h;
  }
  if (p[1] != 0) {
    Matrix3 swap{};
    for (auto& row : swap)
      for (auto& v : row) v = 0;
    swap[0][1] = 1;
    swap[1][0] = 1;
    swap[2][2] = -1;
    Matrix3 shear = identity3();
    shear[2][0] = p[2];
    return shear * swap;
  }
  Matrix3 cyc{};
  for (auto& row : cyc)
    for (auto& v : row) v = 0;
  cyc[0][2] = 1;
  cyc[1][0] = 1;
  cyc[2][1] = 1;
  return cyc;
}

/// f1 = Q(1,y,z) - y P(1,y,z), f2 = R(1,y,z) - z P(1,y,z); independent of
/// the radial representative.
inline LocalRep chart_components(const Foliation& f) {
  const BivarPoly P = f.P().dehomogenize_x();
  const BivarPoly Q = f.Q().dehomogenize_x();
  const BivarPoly R = f.R().dehomogenize_x();
  const BivarPoly y = BivarPoly::variable(0), z = BivarPoly::variable(1);
  return {Q - y * P, R - z * P};
}

inline LocalRep localize(const Foliation& f, const ProjPoint& p) {
  if (!is_singular_at(f, p)) throw NotSingular(to_string(p));
  LocalRep l = chart_components(act(localizing_matrix(p), f));
  if (l.f1.constant_term() != 0 || l.f2.constant_term() != 0) {
    throw std::logic_error("internal: localized point is not at the origin");
  }
  return l;
}

inline int algebraic_multiplicity(const LocalRep& l) {
  const auto o1 = l.f1.order(), o2 = l.f2.order();
  if (!o1 && !o2) throw BothZero();
  if (!o1) return *o2;
  if (!o2) return *o1;
  return std::min(*o1, *o2);
}

namespace detail {

inline bool common_factor_through_origin(const BivarPoly& a, const BivarPoly& b) {
  const BivarPoly g = gcd_poly(a, b);
  return g.total_degree() > 0 && g.constant_term() == 0;
}

/// Terms of total degree above n. When I_0(F, G) <= n the ideal (F, G)
/// contains m^n locally, so dropping them leaves I_0 unchanged.
inline BivarPoly truncate_above(const BivarPoly& p, int n) {
  BivarPoly out;
  for (const auto& [e, c] : p.terms())
    if (e[0] + e[1] <= n) out.add_term(e, c);
  return out;
}

/// Fulton's algorithm at the origin. The measure is deg F(y,0) + deg G(y,0);
/// each reduction lowers it, and a branch with F(y,0) = 0 splits off
/// I(z, G) = ord_y G(y,0). `bound` is an upper bound for the answer; the
/// part still to be found never exceeds bound - total.
inline long fulton(BivarPoly F, BivarPoly G, int bound) {
  long total = 0;
  F = normalize_integer(truncate_above(F, bound));
  G = normalize_integer(truncate_above(G, bound));
  for (;;) {
    if (F.constant_term() != 0 || G.constant_term() != 0) return total;
    BivarPoly Fr = F.specialize(1, 0);
    BivarPoly Gr = G.specialize(1, 0);
    int r = Fr.degree_in(0);
    int s = Gr.degree_in(0);
    if (r < 0 && s < 0) throw std::logic_error("internal: z divides both components");
    if (s < 0) {
      std::swap(F, G);
      std::swap(Fr, Gr);
      std::swap(r, s);
    }
    if (r < 0) {
      total += *Gr.order();
      BivarPoly H;
      for (const auto& [e, c] : F.terms()) H.add_term({e[0], e[1] - 1}, c);
      // the remaining pair meets with index at most bound - total
      F = truncate_above(H, bound - static_cast<int>(total));
      G = truncate_above(G, bound - static_cast<int>(total));
      continue;
    }
    if (r > s) {
      std::swap(F, G);
      std::swap(Fr, Gr);
      std::swap(r, s);
    }
    // primitive cross-multiplication keeps coefficients small
    G = normalize_integer(
        truncate_above(Fr.coeff({r, 0}) * G - Gr.coeff({s, 0}) * F.shifted({s - r, 0}), bound - static_cast<int>(total)));
  }
}

/// (y, z) <- (a y + b z, c y + d z).
inline BivarPoly linear_change(const BivarPoly& p, long a, long b, long c, long d) {
  const BivarPoly ny = BivarPoly::monomial({1, 0}, a) + BivarPoly::monomial({0, 1}, b);
  const BivarPoly nz = BivarPoly::monomial({1, 0}, c) + BivarPoly::monomial({0, 1}, d);
  BivarPoly out;
  for (const auto& [e, coef] : p.terms()) out += coef * (ny.pow(e[0]) * nz.pow(e[1]));
  return out;
}

}  // namespace detail

/// I_0(f1, f2) by the intersection-index recursion.
inline IntersectionNumber milnor_fulton(const LocalRep& l) {
  if (l.f1.constant_term() != 0 || l.f2.constant_term() != 0) return IntersectionNumber::finite(0);
  if (l.f1.is_zero() || l.f2.is_zero() || detail::common_factor_through_origin(l.f1, l.f2)) {
    return IntersectionNumber::infinite();
  }
  // Bezout on the parts without a common factor bounds the local index
  BivarPoly f1 = l.f1, f2 = l.f2;
  const BivarPoly g = gcd_poly(f1, f2);
  if (g.total_degree() > 0) {
    f1 = *exact_divide(f1, g);
    f2 = *exact_divide(f2, g);
  }
  return IntersectionNumber::finite(detail::fulton(f1, f2, f1.total_degree() * f2.total_degree()));
}

/// Independent check: ord_{z=0} Res_y(f1 o A, f2 o A) over random unimodular
/// A, minimized across trials. The order counts every intersection on the
/// line z = 0, so it bounds I_0 from above and equals it for generic A.
inline IntersectionNumber milnor_oracle(const LocalRep& l, int trials = 3,
                                        std::uint64_t seed = 0x5eed) {
  if (l.f1.constant_term() != 0 || l.f2.constant_term() != 0) return IntersectionNumber::finite(0);
  if (l.f1.is_zero() || l.f2.is_zero()) return IntersectionNumber::infinite();
  const BivarPoly g = gcd_poly(l.f1, l.f2);
  if (g.total_degree() > 0 && g.constant_term() == 0) return IntersectionNumber::infinite();
  BivarPoly f1 = l.f1, f2 = l.f2;
  if (g.total_degree() > 0) {
    f1 = *exact_divide(f1, g);
    f2 = *exact_divide(f2, g);
  }
  Rng rng(seed);
  long best = -1;
  for (int t = 0; t < std::max(trials, 1); ++t) {
    const long s = uniform_int(rng, -97, 97);
    const long u = uniform_int(rng, -97, 97);
    // [[1, s], [0, 1]] * [[1, 0], [u, 1]]
    const long a = 1 + s * u, b = s, c = u, d = 1;
    const UniPoly res = resultant_eliminate(detail::linear_change(f1, a, b, c, d),
                                            detail::linear_change(f2, a, b, c, d), 0);
    if (res.is_zero()) continue;
    const long ord = *res.order();
    if (best < 0 || ord < best) best = ord;
  }
  if (best < 0) throw std::logic_error("internal: resultant vanished for every trial");
  return IntersectionNumber::finite(best);
}

struct SingularityReport {
  ProjPoint point;
  int multiplicity;
  IntersectionNumber milnor;
  friend bool operator==(const SingularityReport&, const SingularityReport&) = default;
};

inline SingularityReport report(const Foliation& f, const ProjPoint& p) {
  const LocalRep l = localize(f, p);
  SingularityReport r{p, algebraic_multiplicity(l), milnor_fulton(l)};
#ifdef FOLGIT_ORACLE_CHECKS
  if (!(milnor_oracle(l) == r.milnor)) {
    throw std::logic_error("Milnor oracle disagrees with the Fulton recursion at " + to_string(p));
  }
#endif
  return r;
}

}  // namespace folgit

#endif  // FOLGIT_INVARIANTS_HPP
