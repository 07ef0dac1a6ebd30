#ifndef FOLGIT_LOCUS_HPP
#define FOLGIT_LOCUS_HPP

#include <folgit/foliation.hpp>
#include <folgit/invariants.hpp>
#include <folgit/resultant.hpp>
#include <folgit/roots.hpp>

#include <algorithm>
#include <string>
#include <vector>

namespace folgit {

/// A univariate factor whose roots are singular coordinates that are not
/// rational. `where` names the coordinate the variable t stands for.
struct UnresolvedFactor {
  std::string where;
  UniPoly factor;
  friend bool operator==(const UnresolvedFactor&, const UnresolvedFactor&) = default;
};

struct SingularLocus {
  int degree = 0;
  std::vector<SingularityReport> points;  // rational points, chart order
  long residual_milnor = 0;               // d^2+d+1 minus the rational mass
  bool isolated = true;
  std::vector<UnresolvedFactor> unresolved;
  /// Degree of the chart x=1 elimination resultant; equals the total
  /// Milnor mass of the affine chart.
  int affine_resultant_degree = 0;

  long total_milnor() const {
    long s = 0;
    for (const auto& p : points) s += p.milnor.value();
    return s;
  }
  bool all_rational() const { return unresolved.empty(); }
};

inline long jouanolou_total(int d) { return static_cast<long>(d) * d + d + 1; }

/// Nonconstant gcd of all three minors, or nullopt when singularities are isolated.
inline std::optional<HomogPoly> non_isolated_factor(const Foliation& f) {
  const Minors m = singular_minors(f);
  const HomogPoly g = gcd_poly(gcd_poly(m[0], m[1]), m[2]);
  if (g.degree() > 0) return g;
  return std::nullopt;
}

namespace detail {

inline UniPoly as_univariate(const BivarPoly& p, std::size_t var) {
  UniPoly out;
  for (const auto& [e, c] : p.terms()) out.add_term({e[var]}, c);
  return out;
}

inline UniPoly gcd_nonzero(const std::vector<UniPoly>& polys) {
  UniPoly g;
  for (const auto& p : polys) g = gcd_poly(g, p);
  return g;
}

inline Rational top_form_at(const BivarPoly& p, const Rational& slope) {
  const BivarPoly top = p.homogeneous_part(p.total_degree());
  return top.evaluate({Rational(1), slope});
}

}  // namespace detail

/// All rational singular points with their invariants. Charts are visited
/// in the order x = 1, then [0:1:t], then [0:0:1].
inline SingularLocus find_rational_singularities(const Foliation& f) {
  if (auto g = non_isolated_factor(f)) throw NonIsolated(to_string(*g));
  const int d = f.degree();
  SingularLocus locus;
  locus.degree = d;
  std::vector<ProjPoint> found;

  // chart x = 1, sheared (y, w) with z = w + c*y so both leading
  // coefficients in y are constants
  const LocalRep chart = chart_components(f);
  Rational c = 0;
  for (int k = 0;; ++k) {
    if (k > 4 * (d + 2)) throw std::logic_error("internal: no admissible shear");
    c = (k % 2 == 1) ? Rational((k + 1) / 2) : Rational(-(k / 2));
    if (detail::top_form_at(chart.f1, c) != 0 && detail::top_form_at(chart.f2, c) != 0) break;
  }
  const BivarPoly y = BivarPoly::variable(0);
  const BivarPoly shifted_z = BivarPoly::variable(1) + c * y;
  auto shear = [&](const BivarPoly& p) {
    BivarPoly out;
    for (const auto& [e, coef] : p.terms()) out += coef * (y.pow(e[0]) * shifted_z.pow(e[1]));
    return out;
  };
  const BivarPoly F1 = shear(chart.f1), F2 = shear(chart.f2);
  const UniPoly res = resultant_eliminate(F1, F2, 0);
  locus.affine_resultant_degree = res.degree_in(0);
  const std::string w_name = "z - (" + c.get_str() + ")*y on x=1";
  const RootDecomposition wroots = rational_roots(res);
  if (wroots.residual.degree_in(0) > 0) locus.unresolved.push_back({w_name, wroots.residual});
  for (const auto& wr : wroots.roots) {
    const UniPoly u1 = detail::as_univariate(F1.specialize(1, wr.value), 0);
    const UniPoly u2 = detail::as_univariate(F2.specialize(1, wr.value), 0);
    const UniPoly h = detail::gcd_nonzero({u1, u2});
    if (h.degree_in(0) <= 0) continue;
    const RootDecomposition yroots = rational_roots(h);
    if (yroots.residual.degree_in(0) > 0) {
      locus.unresolved.push_back({"y on x=1, z - (" + c.get_str() + ")*y = " + wr.value.get_str(),
                                  yroots.residual});
    }
    for (const auto& yr : yroots.roots) {
      found.emplace_back(Rational(1), yr.value, wr.value + c * yr.value);
    }
  }
  std::sort(found.begin(), found.end());

  // line x = 0, points [0:1:t]
  const Minors m = singular_minors(f);
  std::vector<UniPoly> on_line;
  for (int i = 0; i < 3; ++i) {
    UniPoly u;
    for (const auto& [e, coef] : m[i].terms())
      if (e[0] == 0) u.add_term({e[2]}, coef);
    on_line.push_back(u);
  }
  const UniPoly hline = detail::gcd_nonzero(on_line);
  if (hline.degree_in(0) > 0) {
    const RootDecomposition troots = rational_roots(hline);
    if (troots.residual.degree_in(0) > 0) locus.unresolved.push_back({"z/y on x=0", troots.residual});
    for (const auto& tr : troots.roots) found.emplace_back(Rational(0), Rational(1), tr.value);
  }
  const ProjPoint apex(0, 0, 1);
  if (is_singular_at(f, apex)) found.push_back(apex);

  for (const auto& p : found) {
    if (!is_singular_at(f, p)) throw std::logic_error("internal: spurious singular point " + to_string(p));
    locus.points.push_back(report(f, p));
  }
  locus.residual_milnor = jouanolou_total(d) - locus.total_milnor();
  if (locus.residual_milnor < 0) {
    throw std::logic_error("internal: rational Milnor mass exceeds d^2+d+1");
  }
  return locus;
}

/// d^2+d+1 distinct singular points (each of Milnor number one).
inline bool all_distinct(const SingularLocus& locus) {
  return locus.isolated && locus.residual_milnor == 0 &&
         static_cast<long>(locus.points.size()) == jouanolou_total(locus.degree);
}

}  // namespace folgit

#endif  // FOLGIT_LOCUS_HPP
