#ifndef FOLGIT_WEIGHTS_HPP
#define FOLGIT_WEIGHTS_HPP

#include <folgit/errors.hpp>
#include <folgit/foliation.hpp>

#include <algorithm>
#include <map>
#include <numeric>
#include <string>
#include <vector>

namespace folgit {

/// Diagonal 1-PS diag(t^k1, t^k2, t^k3) with k1 >= k2 >= k3, sum zero,
/// coprime entries.
class OneParamSubgroup {
 public:
  OneParamSubgroup(long k1, long k2) : k1_(k1), k2_(k2), k3_(-k1 - k2) {
    if (k1_ == 0 && k2_ == 0) throw InvalidSubgroup("trivial one-parameter subgroup");
    if (!(k1_ >= k2_ && k2_ >= k3_)) {
      throw InvalidSubgroup("weights (" + std::to_string(k1_) + "," + std::to_string(k2_) + "," +
                            std::to_string(k3_) + ") are not ordered k1>=k2>=k3");
    }
    if (std::gcd(std::gcd(k1_, k2_), k3_) != 1) {
      throw InvalidSubgroup("weights are not coprime");
    }
  }

  long k1() const noexcept { return k1_; }
  long k2() const noexcept { return k2_; }
  long k3() const noexcept { return k3_; }
  long k(int l) const { return l == 0 ? k1_ : (l == 1 ? k2_ : k3_); }

  friend bool operator==(const OneParamSubgroup&, const OneParamSubgroup&) = default;
  friend auto operator<=>(const OneParamSubgroup&, const OneParamSubgroup&) = default;

 private:
  long k1_, k2_, k3_;
};

inline std::string to_string(const OneParamSubgroup& l) {
  return "(" + std::to_string(l.k1()) + "," + std::to_string(l.k2()) + "," +
         std::to_string(l.k3()) + ")";
}

/// Weight of a basis monomial as the linear form a*k1 + b*k2.
struct WeightCovector {
  long a = 0;
  long b = 0;
  friend bool operator==(const WeightCovector&, const WeightCovector&) = default;
  friend auto operator<=>(const WeightCovector&, const WeightCovector&) = default;
  bool is_origin() const noexcept { return a == 0 && b == 0; }
};

inline std::string to_string(const WeightCovector& w) {
  return "(" + std::to_string(w.a) + "," + std::to_string(w.b) + ")";
}

namespace detail {

/// Test-only mutation hook: set to -1 to negate every weight.
inline thread_local int weight_sign = 1;

inline void check_index(int l, int i, int j, int d) {
  if (l < 0 || l > 2 || i < 0 || i > j || j > d || d < 0) {
    throw IndexOutOfRange("basis index (l=" + std::to_string(l) + ", i=" + std::to_string(i) +
                          ", j=" + std::to_string(j) + ", d=" + std::to_string(d) + ")");
  }
}

}  // namespace detail

/// Negates all weights while alive; used for mutation runs of the harness.
class ScopedWeightSignFlip {
 public:
  ScopedWeightSignFlip() : saved_(detail::weight_sign) { detail::weight_sign = -saved_; }
  ~ScopedWeightSignFlip() { detail::weight_sign = saved_; }
  ScopedWeightSignFlip(const ScopedWeightSignFlip&) = delete;
  ScopedWeightSignFlip& operator=(const ScopedWeightSignFlip&) = delete;

 private:
  int saved_;
};

/// Weight of x^{d-j} y^{j-i} z^i d/d(x_l) under lambda:
/// -k1 (d-j) - k2 (j-i) - k3 i + k_{l+1}.
inline long weight_value(int l, int i, int j, int d, const OneParamSubgroup& lambda) {
  detail::check_index(l, i, j, d);
  const long w = -lambda.k1() * (d - j) - lambda.k2() * (j - i) - lambda.k3() * i + lambda.k(l);
  return detail::weight_sign * w;
}

/// Same weight, written in (k1, k2) after eliminating k3 = -k1 - k2.
inline WeightCovector covector(int l, int i, int j, int d) {
  detail::check_index(l, i, j, d);
  static constexpr long delta_a[3] = {1, 0, -1};
  static constexpr long delta_b[3] = {0, 1, -1};
  const long s = detail::weight_sign;
  return {s * (delta_a[l] - (d - j - i)), s * (delta_b[l] - (j - 2 * i))};
}

/// Basis index of a monomial x^ex y^ey z^ez in component l.
struct BasisIndex {
  int l, i, j;
  friend bool operator==(const BasisIndex&, const BasisIndex&) = default;
  friend auto operator<=>(const BasisIndex&, const BasisIndex&) = default;
};

inline BasisIndex basis_index(int l, const Poly<3>::Exponents& e, int d) { return {l, e[2], d - e[0]}; }

inline Poly<3>::Exponents basis_exponents(const BasisIndex& b, int d) {
  return {d - b.j, b.j - b.i, b.i};
}

inline std::string basis_monomial_name(const BasisIndex& b, int d) {
  const auto e = basis_exponents(b, d);
  std::string m = to_string(Poly<3>::monomial(e));
  return m + " d/d" + std::string(1, "xyz"[b.l]);
}

struct DiagramEntry {
  BasisIndex index;
  WeightCovector weight;
};

struct WeightDiagram {
  int degree = 0;
  std::vector<DiagramEntry> entries;

  /// Covector -> number of entries hitting it.
  std::map<WeightCovector, int> multiplicities() const {
    std::map<WeightCovector, int> out;
    for (const auto& e : entries) ++out[e.weight];
    return out;
  }
};

/// Canonical basis: all 0 <= i <= j <= d for l = 0, 1 and only the z-free
/// monomials (i = 0) for l = 2; d^2 + 4d + 3 entries.
inline WeightDiagram weight_diagram(int d) {
  if (d < 1) throw IndexOutOfRange("diagram degree must be at least 1");
  WeightDiagram dg;
  dg.degree = d;
  for (int l = 0; l < 3; ++l)
    for (int j = 0; j <= d; ++j)
      for (int i = 0; i <= (l == 2 ? 0 : j); ++i) dg.entries.push_back({{l, i, j}, covector(l, i, j, d)});
  return dg;
}

/// Entries with a nonzero coefficient in the canonical representative.
inline WeightDiagram active_diagram(const Foliation& f) {
  WeightDiagram dg;
  const int d = f.degree();
  dg.degree = d;
  for (int l = 0; l < 3; ++l)
    for (const auto& [e, c] : f.rep().component(l).terms()) {
      const BasisIndex b = basis_index(l, e, d);
      dg.entries.push_back({b, covector(b.l, b.i, b.j, d)});
    }
  std::sort(dg.entries.begin(), dg.entries.end(),
            [](const DiagramEntry& x, const DiagramEntry& y) { return x.index < y.index; });
  return dg;
}

struct DoublePoint {
  WeightCovector weight;
  std::vector<BasisIndex> indices;
};

/// Covectors realized by two or more canonical basis monomials.
inline std::vector<DoublePoint> double_points(int d) {
  std::map<WeightCovector, std::vector<BasisIndex>> groups;
  for (const auto& e : weight_diagram(d).entries) groups[e.weight].push_back(e.index);
  std::vector<DoublePoint> out;
  for (auto& [w, idx] : groups)
    if (idx.size() >= 2) out.push_back({w, std::move(idx)});
  return out;
}

inline int origin_multiplicity(int d) {
  int n = 0;
  for (const auto& e : weight_diagram(d).entries) n += e.weight.is_origin() ? 1 : 0;
  return n;
}

/// min over active monomials of their weight; the foliation must be nonzero.
inline long mumford_mu(const Foliation& f, const OneParamSubgroup& lambda) {
  const int d = f.degree();
  bool any = false;
  long best = 0;
  for (int l = 0; l < 3; ++l)
    for (const auto& [e, c] : f.rep().component(l).terms()) {
      const BasisIndex b = basis_index(l, e, d);
      const long w = weight_value(b.l, b.i, b.j, d, lambda);
      if (!any || w < best) best = w;
      any = true;
    }
  if (!any) throw ZeroField();
  return best;
}

}  // namespace folgit

#endif  // FOLGIT_WEIGHTS_HPP
