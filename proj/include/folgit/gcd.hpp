#ifndef FOLGIT_GCD_HPP
#define FOLGIT_GCD_HPP

#include <folgit/homog.hpp>
#include <folgit/poly.hpp>

#include <cstddef>
#include <stdexcept>
#include <vector>

namespace folgit {

/// Scales p to integer coefficients with content 1 and a positive leading
/// (lexicographically greatest) coefficient. Zero stays zero.
template <std::size_t N>
Poly<N> normalize_integer(const Poly<N>& p) {
  if (p.is_zero()) return p;
  Integer den = 1;
  Integer num = 0;
  for (const auto& [e, c] : p.terms()) {
    den = lcm(den, c.get_den());
    num = gcd(num, c.get_num());
  }
  Rational scale(den, num);
  scale.canonicalize();
  if (p.leading_term().second < 0) scale = -scale;
  return p * scale;
}

namespace detail {

/// Coefficients as univariate in the last variable, with the last exponent
/// dropped so they live one ring down.
template <std::size_t N>
std::vector<Poly<N - 1>> split_last(const Poly<N>& p) {
  std::vector<Poly<N - 1>> out(static_cast<std::size_t>(std::max(0, p.degree_in(N - 1) + 1)));
  for (const auto& [e, c] : p.terms()) {
    typename Poly<N - 1>::Exponents lower;
    for (std::size_t v = 0; v + 1 < N; ++v) lower[v] = e[v];
    out[static_cast<std::size_t>(e[N - 1])].add_term(lower, c);
  }
  return out;
}

template <std::size_t N>
Poly<N> lift(const Poly<N - 1>& p, int last_power = 0) {
  Poly<N> out;
  for (const auto& [e, c] : p.terms()) {
    typename Poly<N>::Exponents upper;
    for (std::size_t v = 0; v + 1 < N; ++v) upper[v] = e[v];
    upper[N - 1] = last_power;
    out.add_term(upper, c);
  }
  return out;
}

template <std::size_t N>
Poly<N> divide_or_throw(const Poly<N>& a, const Poly<N>& b) {
  auto q = exact_divide(a, b);
  if (!q) throw std::logic_error("internal: expected exact division");
  return *q;
}

}  // namespace detail

template <std::size_t N>
Poly<N> gcd_poly(const Poly<N>& a, const Poly<N>& b);

/// gcd of the coefficients with respect to the last variable.
template <std::size_t N>
Poly<N - 1> content_last(const Poly<N>& p) {
  Poly<N - 1> g;
  for (const auto& c : detail::split_last(p)) {
    if (c.is_zero()) continue;
    g = gcd_poly<N - 1>(g, c);
    if (g.total_degree() == 0) break;
  }
  return g;
}

/// gcd over Q, normalized by normalize_integer. gcd(0, 0) = 0.
template <std::size_t N>
Poly<N> gcd_poly(const Poly<N>& a, const Poly<N>& b) {
  if (a.is_zero()) return normalize_integer(b);
  if (b.is_zero()) return normalize_integer(a);
  if constexpr (N == 0) {
    return Poly<0>(Rational(1));
  } else {
    const Poly<N - 1> ca = content_last(a);
    const Poly<N - 1> cb = content_last(b);
    const Poly<N - 1> c = gcd_poly<N - 1>(ca, cb);
    Poly<N> pa = detail::divide_or_throw(a, detail::lift<N>(ca));
    Poly<N> pb = detail::divide_or_throw(b, detail::lift<N>(cb));
    if (pa.degree_in(N - 1) < pb.degree_in(N - 1)) std::swap(pa, pb);
    // primitive pseudo-remainder sequence in the last variable
    while (pb.degree_in(N - 1) > 0) {
      const int db = pb.degree_in(N - 1);
      const Poly<N> lb = detail::lift<N>(detail::split_last(pb).back());
      Poly<N> r = pa;
      while (!r.is_zero() && r.degree_in(N - 1) >= db) {
        const int dr = r.degree_in(N - 1);
        const Poly<N> lr = detail::lift<N>(detail::split_last(r).back(), dr - db);
        r = lb * r - lr * pb;
      }
      if (r.is_zero()) break;
      const Poly<N - 1> cr = content_last(r);
      pa = std::move(pb);
      pb = normalize_integer(detail::divide_or_throw(r, detail::lift<N>(cr)));
    }
    Poly<N> g = pb.degree_in(N - 1) == 0 ? Poly<N>(Rational(1)) : pb;
    if (pb.degree_in(N - 1) > 0) {
      const Poly<N - 1> cg = content_last(g);
      g = detail::divide_or_throw(g, detail::lift<N>(cg));
    }
    return normalize_integer(detail::lift<N>(c) * g);
  }
}

inline HomogPoly gcd_poly(const HomogPoly& a, const HomogPoly& b) {
  const Poly<3> g = gcd_poly<3>(a.poly(), b.poly());
  if (g.is_zero()) return HomogPoly(0);
  return HomogPoly::from_poly(g);
}

/// Exact homogeneous quotient, or nullopt.
inline std::optional<HomogPoly> exact_divide(const HomogPoly& a, const HomogPoly& b) {
  auto q = exact_divide(a.poly(), b.poly());
  if (!q) return std::nullopt;
  return HomogPoly(a.degree() - b.degree(), std::move(*q));
}

}  // namespace folgit

#endif  // FOLGIT_GCD_HPP
