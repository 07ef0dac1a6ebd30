#ifndef FOLGIT_STABILITY_HPP
#define FOLGIT_STABILITY_HPP

#include <folgit/hull.hpp>
#include <folgit/locus.hpp>
#include <folgit/random.hpp>

#include <optional>
#include <string>
#include <vector>

namespace folgit {

enum class Sl3Class { Stable, Unstable, Undetermined };

inline std::string to_string(Sl3Class c) {
  switch (c) {
    case Sl3Class::Stable: return "stable";
    case Sl3Class::Unstable: return "unstable";
    case Sl3Class::Undetermined: return "undetermined";
  }
  return "?";
}

struct Sl3Verdict {
  Sl3Class kind = Sl3Class::Undetermined;
  std::optional<Certificate> certificate;  // Unstable
  std::string stage;                       // stage that produced the verdict
  std::vector<std::string> flags_tested;
};

struct SearchOptions {
  bool permutations = true;
  bool flags = true;
  int random_trials = 0;
  std::uint64_t seed = 0;
};

/// Product of elementary matrices with off-diagonal entries in [-3, 3];
/// integral with determinant one.
inline Matrix3 random_unimodular(Rng& rng, int factors = 6) {
  Matrix3 g = identity3();
  for (int t = 0; t < factors; ++t) {
    const int i = static_cast<int>(uniform_int(rng, 0, 2));
    int j = static_cast<int>(uniform_int(rng, 0, 1));
    if (j >= i) ++j;
    Matrix3 e = identity3();
    e[i][j] = uniform_int(rng, -3, 3);
    g = e * g;
  }
  return g;
}

namespace detail {

/// Unimodular h with h(p) = [1:0:0] and h(line) = {z = 0}, where the line
/// is l . v = 0 and passes through p.
inline Matrix3 flag_matrix(const ProjPoint& p, const std::array<Rational, 3>& line) {
  std::array<Rational, 3> second{};
  // a vector orthogonal to p and independent of the line
  for (int k = 0; k < 3; ++k) {
    std::array<Rational, 3> e{0, 0, 0};
    const int a = k, b = (k + 1) % 3;
    e[a] = p[b];
    e[b] = -p[a];
    if (e[0] == 0 && e[1] == 0 && e[2] == 0) continue;
    const Rational c0 = e[1] * line[2] - e[2] * line[1];
    const Rational c1 = e[2] * line[0] - e[0] * line[2];
    const Rational c2 = e[0] * line[1] - e[1] * line[0];
    if (c0 != 0 || c1 != 0 || c2 != 0) {
      second = e;
      break;
    }
  }
  Matrix3 h{};
  for (int k = 0; k < 3; ++k) {
    h[0][k] = 0;
    h[1][k] = second[k];
    h[2][k] = line[k];
  }
  // first row: a coordinate vector not orthogonal to p
  for (int k = 0; k < 3; ++k) {
    if (p[k] != 0) {
      h[0][k] = 1;
      break;
    }
  }
  const Rational det = determinant(h);
  if (det == 0) throw std::logic_error("internal: degenerate flag");
  for (int k = 0; k < 3; ++k) h[0][k] /= det;
  return h;
}

inline std::string line_name(const std::array<Rational, 3>& l) {
  return "[" + l[0].get_str() + ":" + l[1].get_str() + ":" + l[2].get_str() + "]";
}

}  // namespace detail

/// Lines through p among the coordinate lines and the lines joining p to
/// other rational singular points, kept when invariant.
inline std::vector<std::array<Rational, 3>> invariant_lines_through(const Foliation& f, const ProjPoint& p,
                                                                    const std::vector<ProjPoint>& others) {
  std::vector<std::array<Rational, 3>> cands{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}};
  for (const auto& q : others) {
    if (q == p) continue;
    const auto& a = p.coords();
    const auto& b = q.coords();
    cands.push_back({a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]});
  }
  std::vector<std::array<Rational, 3>> out;
  for (auto l : cands) {
    if (l[0] * p[0] + l[1] * p[1] + l[2] * p[2] != 0) continue;
    const ProjPoint normal(l);
    l = normal.coords();
    if (std::find(out.begin(), out.end(), l) != out.end()) continue;
    const HomogPoly F = HomogPoly::from_poly(Poly<3>::monomial({1, 0, 0}, l[0]) + Poly<3>::monomial({0, 1, 0}, l[1]) +
                                             Poly<3>::monomial({0, 0, 1}, l[2]));
    if (is_invariant_curve(f, F)) out.push_back(l);
  }
  return out;
}

/// Searches for a destabilizing (g, lambda); Stable only when the rational
/// singular locus certifies d^2+d+1 distinct points.
inline Sl3Verdict destabilize_search(const Foliation& f, const SearchOptions& opt = {}) {
  Sl3Verdict v;
  auto attempt = [&](const Matrix3& g, const std::string& label) {
    v.flags_tested.push_back(label);
    const Foliation h = act(g, f);
    const TorusVerdict t = hull_classify(h);
    if (t.kind != TorusClass::Unstable) return false;
    Certificate c = *t.certificate;
    c.g = c.g * g;
    c.mu = mumford_mu(act(c.g, f), c.lambda);
    if (c.mu <= 0) throw std::logic_error("internal: composed certificate lost positivity");
    v.kind = Sl3Class::Unstable;
    v.certificate = c;
    v.stage = label;
    return true;
  };

  if (attempt(identity3(), "given")) return v;
  if (opt.permutations) {
    const auto perms = permutation_matrices();
    for (std::size_t i = 1; i < perms.size(); ++i)
      if (attempt(perms[i], "permutation " + to_string(perms[i]))) return v;
  }

  std::optional<SingularLocus> locus;
  try {
    locus = find_rational_singularities(f);
  } catch (const NonIsolated&) {
    v.flags_tested.push_back("non-isolated singular locus");
  }

  if (opt.flags && locus) {
    std::vector<ProjPoint> pts;
    for (const auto& r : locus->points) pts.push_back(r.point);
    for (const auto& p : pts) {
      if (attempt(localizing_matrix(p), "point " + to_string(p))) return v;
      for (const auto& l : invariant_lines_through(f, p, pts))
        if (attempt(detail::flag_matrix(p, l), "flag " + to_string(p) + " line " + detail::line_name(l))) return v;
    }
  }

  if (opt.random_trials > 0) {
    Rng rng(opt.seed);
    for (int t = 0; t < opt.random_trials; ++t) {
      const Matrix3 g = random_unimodular(rng);
      if (attempt(g, "random " + to_string(g))) return v;
    }
  }

  if (locus && all_distinct(*locus)) {
    v.kind = Sl3Class::Stable;
    v.stage = "distinct singularities";
  }
  return v;
}

}  // namespace folgit

#endif  // FOLGIT_STABILITY_HPP
