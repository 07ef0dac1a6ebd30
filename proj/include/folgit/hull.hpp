#ifndef FOLGIT_HULL_HPP
#define FOLGIT_HULL_HPP

#include <folgit/foliation.hpp>
#include <folgit/weights.hpp>

#include <algorithm>
#include <array>
#include <numeric>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace folgit {

enum class TorusClass { Stable, StrictlySemistable, Unstable };

inline std::string to_string(TorusClass c) {
  switch (c) {
    case TorusClass::Stable: return "stable";
    case TorusClass::StrictlySemistable: return "strictly_semistable";
    case TorusClass::Unstable: return "unstable";
  }
  return "?";
}

/// Witness of instability: mu(act(g, f), lambda) = mu > 0.
struct Certificate {
  Matrix3 g = identity3();
  OneParamSubgroup lambda{1, 0};
  long mu = 0;
  friend bool operator==(const Certificate&, const Certificate&) = default;
};

struct TorusVerdict {
  TorusClass kind = TorusClass::Stable;
  std::vector<WeightCovector> hull;  // counterclockwise from the lowest-then-leftmost vertex
  std::optional<Certificate> certificate;
};

namespace detail {

inline long cross(const WeightCovector& u, const WeightCovector& v) { return u.a * v.b - u.b * v.a; }
inline long dot(const WeightCovector& u, const WeightCovector& v) { return u.a * v.a + u.b * v.b; }

inline WeightCovector primitive(const WeightCovector& v) {
  const long g = std::gcd(v.a, v.b);
  return g == 0 ? v : WeightCovector{v.a / g, v.b / g};
}

/// 0 for angles in [0, pi), 1 for [pi, 2pi).
inline int half(const WeightCovector& v) { return (v.b > 0 || (v.b == 0 && v.a > 0)) ? 0 : 1; }

inline bool angle_less(const WeightCovector& u, const WeightCovector& v) {
  const int hu = half(u), hv = half(v);
  if (hu != hv) return hu < hv;
  return cross(u, v) > 0;
}

inline std::vector<WeightCovector> distinct_points(const WeightDiagram& dg) {
  std::set<WeightCovector> s;
  for (const auto& e : dg.entries) s.insert(e.weight);
  return {s.begin(), s.end()};
}

inline std::vector<WeightCovector> convex_hull(std::vector<WeightCovector> pts) {
  auto lower_left = [](const WeightCovector& p, const WeightCovector& q) {
    return p.a != q.a ? p.a < q.a : p.b < q.b;
  };
  std::sort(pts.begin(), pts.end(), lower_left);
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  if (pts.size() < 3) return pts;
  auto turn = [](const WeightCovector& o, const WeightCovector& p, const WeightCovector& q) {
    return cross({p.a - o.a, p.b - o.b}, {q.a - o.a, q.b - o.b});
  };
  std::vector<WeightCovector> h(2 * pts.size());
  std::size_t k = 0;
  for (const auto& p : pts) {
    while (k >= 2 && turn(h[k - 2], h[k - 1], p) <= 0) --k;
    h[k++] = p;
  }
  for (std::size_t i = pts.size() - 1, lo = k + 1; i-- > 0;) {
    while (k >= lo && turn(h[k - 2], h[k - 1], pts[i]) <= 0) --k;
    h[k++] = pts[i];
  }
  h.resize(k - 1);
  // start at the lowest, then leftmost vertex
  auto start = std::min_element(h.begin(), h.end(), [](const auto& p, const auto& q) {
    return p.b != q.b ? p.b < q.b : p.a < q.a;
  });
  std::rotate(h.begin(), start, h.end());
  return h;
}

/// Signed permutation matrix with det 1 sending lambda-direction (k1,k2,k3)
/// to its descending rearrangement.
inline Matrix3 sorting_matrix(const std::array<long, 3>& k, std::array<long, 3>& sorted) {
  std::array<int, 3> order{0, 1, 2};
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return k[a] > k[b]; });
  std::array<int, 3> rank{};
  for (int r = 0; r < 3; ++r) rank[order[r]] = r;
  Matrix3 g{};
  for (auto& row : g)
    for (auto& v : row) v = 0;
  for (int i = 0; i < 3; ++i) g[rank[i]][i] = 1;
  if (determinant(g) != 1)
    for (auto& row : g)
      for (auto& v : row) v = -v;
  for (int r = 0; r < 3; ++r) sorted[r] = k[order[r]];
  return g;
}

}  // namespace detail

/// Certificate from a direction (k1, k2) with k . a > 0 on every active covector.
inline Certificate certificate_from_direction(const Foliation& f, const WeightCovector& dir) {
  const WeightCovector k = detail::primitive(dir);
  std::array<long, 3> sorted{};
  Certificate c;
  c.g = detail::sorting_matrix({k.a, k.b, -k.a - k.b}, sorted);
  c.lambda = OneParamSubgroup(sorted[0], sorted[1]);
  c.mu = mumford_mu(act(c.g, f), c.lambda);
  return c;
}

/// Recomputes the Mumford value from scratch.
inline bool verify_certificate(const Foliation& f, const Certificate& c) {
  const long mu = mumford_mu(act(c.g, f), c.lambda);
  return mu > 0 && mu == c.mu;
}

/// Position of the origin relative to the convex hull of the active
/// covectors, decided by the largest angular gap between their directions.
inline TorusVerdict hull_classify(const Foliation& f) {
  const std::vector<WeightCovector> pts = detail::distinct_points(active_diagram(f));
  TorusVerdict v;
  v.hull = detail::convex_hull(pts);
  bool has_origin = false;
  std::vector<WeightCovector> dirs;
  for (const auto& p : pts) {
    if (p.is_origin()) {
      has_origin = true;
      continue;
    }
    dirs.push_back(detail::primitive(p));
  }
  std::sort(dirs.begin(), dirs.end(), detail::angle_less);
  dirs.erase(std::unique(dirs.begin(), dirs.end()), dirs.end());

  if (dirs.empty()) {
    v.kind = TorusClass::StrictlySemistable;
    return v;
  }
  // gap after dirs[i] runs counterclockwise to dirs[i+1]
  std::optional<std::size_t> open_gap;
  bool closed_gap = false;
  const std::size_t n = dirs.size();
  if (n == 1) {
    open_gap = 0;
  } else {
    for (std::size_t i = 0; i < n; ++i) {
      const auto& a = dirs[i];
      const auto& b = dirs[(i + 1) % n];
      const long cr = detail::cross(a, b);
      if (cr < 0) open_gap = i;
      if (cr == 0 && detail::dot(a, b) < 0) closed_gap = true;
    }
  }
  if (open_gap && !has_origin) {
    const WeightCovector a_max = dirs[*open_gap];
    const WeightCovector a_min = dirs[(*open_gap + 1) % n];
    WeightCovector dir = a_max;
    if (n > 1) {
      const WeightCovector u{-a_min.b, a_min.a};
      const WeightCovector w{a_max.b, -a_max.a};
      dir = {u.a + w.a, u.b + w.b};
    }
    v.kind = TorusClass::Unstable;
    v.certificate = certificate_from_direction(f, dir);
    if (v.certificate->mu <= 0) throw std::logic_error("internal: separating direction has mu <= 0");
    return v;
  }
  v.kind = (open_gap || closed_gap) ? TorusClass::StrictlySemistable : TorusClass::Stable;
  return v;
}

/// All ordered coprime (k1,k2,k3) with k1 <= maxk and -2 <= k3/k1 <= -1/2.
inline std::vector<OneParamSubgroup> enumerate_candidate_1ps(long maxk) {
  std::vector<OneParamSubgroup> out;
  for (long k1 = 1; k1 <= maxk; ++k1)
    for (long k2 = k1; k2 >= -2 * k1; --k2) {
      const long k3 = -k1 - k2;
      if (!(k2 >= k3)) break;
      if (std::gcd(std::gcd(k1, k2), k3) != 1) continue;
      if (!(2 * k3 >= -4 * k1 && 2 * k3 <= -k1)) continue;
      out.emplace_back(k1, k2);
    }
  return out;
}

/// 2 * max(|A| + |B|) over the full diagram bounds every entry of some
/// integer separator whenever one exists.
inline long safe_maxk(int d) {
  long m = 1;
  for (const auto& e : weight_diagram(d).entries) m = std::max(m, std::abs(e.weight.a) + std::abs(e.weight.b));
  return 2 * m;
}

struct OracleVerdict {
  bool unstable = false;
  long maxk = 0;        // bound actually searched
  long facet_maxk = 0;  // largest 1-PS entry among the active hull's edge normals
  std::optional<Certificate> certificate;
};

/// Largest |k_i| over primitive normals of the edges of the active hull.
inline long facet_normal_bound(const Foliation& f) {
  const auto hull = detail::convex_hull(detail::distinct_points(active_diagram(f)));
  const std::size_t edges = hull.size() < 2 ? 0 : (hull.size() == 2 ? 1 : hull.size());
  long m = 0;
  for (std::size_t i = 0; i < edges; ++i) {
    const auto& p = hull[i];
    const auto& q = hull[(i + 1) % hull.size()];
    const WeightCovector n = detail::primitive({q.b - p.b, p.a - q.a});
    m = std::max({m, std::abs(n.a), std::abs(n.b), std::abs(n.a + n.b)});
  }
  return m;
}

/// The six signed coordinate permutations of determinant one.
inline std::vector<Matrix3> permutation_matrices() {
  std::vector<Matrix3> out;
  std::array<int, 3> p{0, 1, 2};
  do {
    Matrix3 g{};
    for (auto& row : g)
      for (auto& v : row) v = 0;
    for (int i = 0; i < 3; ++i) g[p[i]][i] = 1;
    if (determinant(g) != 1)
      for (auto& row : g)
        for (auto& v : row) v = -v;
    out.push_back(g);
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

/// Brute force over candidate 1-PS and their permutation conjugates.
inline OracleVerdict torus_oracle(const Foliation& f, std::optional<long> maxk = std::nullopt) {
  OracleVerdict out;
  out.maxk = maxk.value_or(safe_maxk(f.degree()));
  out.facet_maxk = facet_normal_bound(f);
  const auto cands = enumerate_candidate_1ps(out.maxk);
  for (const Matrix3& g : permutation_matrices()) {
    const Foliation h = act(g, f);
    for (const auto& l : cands) {
      const long mu = mumford_mu(h, l);
      if (mu > 0) {
        out.unstable = true;
        out.certificate = Certificate{g, l, mu};
        return out;
      }
    }
  }
  return out;
}

}  // namespace folgit

#endif  // FOLGIT_HULL_HPP
