#ifndef FOLGIT_ROOTS_HPP
#define FOLGIT_ROOTS_HPP

#include <folgit/gcd.hpp>
#include <folgit/poly.hpp>

#include <algorithm>
#include <cstdint>
#include <optional>
#include <vector>

namespace folgit {

struct RationalRoot {
  Rational value;
  int multiplicity = 0;
  friend bool operator==(const RationalRoot&, const RationalRoot&) = default;
};

struct RootDecomposition {
  std::vector<RationalRoot> roots;  // ascending by value
  UniPoly residual;                 // u / prod (t - r)^m, no rational roots
};

namespace detail {

using ModPoly = std::vector<std::int64_t>;  // ascending coefficients mod p

inline std::int64_t mod_reduce(const Integer& a, std::int64_t p) {
  Integer r = a % p;
  if (r < 0) r += p;
  return r.get_si();
}

inline std::int64_t mod_pow(std::int64_t b, std::int64_t e, std::int64_t p) {
  std::int64_t r = 1;
  b %= p;
  while (e > 0) {
    if (e & 1) r = static_cast<std::int64_t>((static_cast<__int128>(r) * b) % p);
    b = static_cast<std::int64_t>((static_cast<__int128>(b) * b) % p);
    e >>= 1;
  }
  return r;
}

inline void trim(ModPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

inline ModPoly mod_gcd(ModPoly a, ModPoly b, std::int64_t p) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    const std::int64_t inv = mod_pow(b.back(), p - 2, p);
    while (a.size() >= b.size()) {
      const std::int64_t factor = (a.back() * inv) % p;
      const std::size_t shift = a.size() - b.size();
      for (std::size_t i = 0; i < b.size(); ++i) {
        a[shift + i] = ((a[shift + i] - factor * b[i]) % p + p) % p;
      }
      trim(a);
      if (a.empty()) break;
    }
    std::swap(a, b);
  }
  return a;
}

inline std::int64_t mod_eval(const ModPoly& a, std::int64_t x, std::int64_t p) {
  std::int64_t acc = 0;
  for (auto it = a.rbegin(); it != a.rend(); ++it) acc = (acc * x + *it) % p;
  return acc;
}

inline Integer eval_mod(const std::vector<Integer>& a, const Integer& x, const Integer& m) {
  Integer acc = 0;
  for (auto it = a.rbegin(); it != a.rend(); ++it) {
    acc = (acc * x + *it) % m;
  }
  if (acc < 0) acc += m;
  return acc;
}

/// Wang's rational reconstruction: n/d with |n| <= bound_n, 0 < d <= bound_d,
/// n = a*d (mod m). Requires 2*bound_n*bound_d < m.
inline std::optional<Rational> reconstruct(const Integer& a, const Integer& m,
                                           const Integer& bound_n, const Integer& bound_d) {
  Integer r0 = m, r1 = a;
  Integer s0 = 0, s1 = 1;
  while (abs(r1) > bound_n) {
    Integer q = r0 / r1;
    Integer r2 = r0 - q * r1;
    Integer s2 = s0 - q * s1;
    r0 = r1;
    r1 = r2;
    s0 = s1;
    s1 = s2;
  }
  if (s1 == 0 || abs(s1) > bound_d) return std::nullopt;
  if (gcd(r1, s1) != 1) return std::nullopt;
  Rational q(r1, s1);
  q.canonicalize();
  return q;
}

/// Rational roots of a squarefree primitive integer polynomial with nonzero
/// constant term. Every root n/d has n | a0 and d | an, so lifting a simple
/// root modulo a prime past 2|a0||an| recovers it exactly.
inline std::vector<Rational> squarefree_rational_roots(const std::vector<Integer>& a) {
  const std::size_t deg = a.size() - 1;
  if (deg == 0) return {};
  if (deg == 1) {
    Rational r(-a[0], a[1]);
    r.canonicalize();
    return {r};
  }
  std::vector<Integer> da(deg);
  for (std::size_t i = 1; i <= deg; ++i) da[i - 1] = a[i] * static_cast<unsigned long>(i);

  const Integer bound_n = abs(a[0]);
  const Integer bound_d = abs(a[deg]);
  const Integer target = 2 * bound_n * bound_d;

  Integer prime = 1009;
  std::int64_t p = 0;
  for (;;) {
    p = prime.get_si();
    if (mod_reduce(a[deg], p) != 0) {
      ModPoly ap(a.size()), dp(da.size());
      for (std::size_t i = 0; i < a.size(); ++i) ap[i] = mod_reduce(a[i], p);
      for (std::size_t i = 0; i < da.size(); ++i) dp[i] = mod_reduce(da[i], p);
      if (mod_gcd(ap, dp, p).size() == 1) break;
    }
    mpz_nextprime(prime.get_mpz_t(), prime.get_mpz_t());
  }

  ModPoly ap(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) ap[i] = mod_reduce(a[i], p);
  std::vector<Rational> roots;
  for (std::int64_t r = 0; r < p; ++r) {
    if (mod_eval(ap, r, p) != 0) continue;
    Integer root = r;
    Integer modulus = p;
    while (modulus <= target) {
      modulus *= modulus;
      const Integer value = eval_mod(a, root, modulus);
      Integer slope = eval_mod(da, root, modulus);
      Integer inv;
      if (mpz_invert(inv.get_mpz_t(), slope.get_mpz_t(), modulus.get_mpz_t()) == 0) break;
      root = (root - value * inv) % modulus;
      if (root < 0) root += modulus;
    }
    auto candidate = reconstruct(root, modulus, bound_n, bound_d);
    if (!candidate) continue;
    // exact check
    Integer num = 0;
    const Integer cn = candidate->get_num(), cd = candidate->get_den();
    Integer pow_d = 1;
    std::vector<Integer> pow_n(deg + 1);
    pow_n[0] = 1;
    for (std::size_t i = 1; i <= deg; ++i) pow_n[i] = pow_n[i - 1] * cn;
    for (std::size_t i = deg + 1; i-- > 0;) {
      num += a[i] * pow_n[i] * pow_d;
      pow_d *= cd;
    }
    if (num == 0) roots.push_back(*candidate);
  }
  std::sort(roots.begin(), roots.end());
  return roots;
}

}  // namespace detail

/// All rational roots of u with multiplicities, plus the residual cofactor.
inline RootDecomposition rational_roots(const UniPoly& u) {
  RootDecomposition out;
  if (u.is_zero()) throw std::invalid_argument("rational_roots of the zero polynomial");
  UniPoly rest = u;
  if (rest.degree_in(0) == 0) {
    out.residual = rest;
    return out;
  }
  const int low = rest.terms().begin()->first[0];
  UniPoly stripped;
  for (const auto& [e, c] : rest.terms()) stripped.add_term({e[0] - low}, c);

  std::vector<Rational> candidates;
  if (stripped.degree_in(0) > 0) {
    const UniPoly g = gcd_poly(stripped, stripped.derivative(0));
    const UniPoly squarefree = normalize_integer(*exact_divide(stripped, g));
    std::vector<Integer> coeffs(static_cast<std::size_t>(squarefree.degree_in(0) + 1));
    for (const auto& [e, c] : squarefree.terms()) coeffs[e[0]] = c.get_num();
    candidates = detail::squarefree_rational_roots(coeffs);
  }
  if (low > 0) candidates.push_back(Rational(0));
  std::sort(candidates.begin(), candidates.end());

  for (const Rational& r : candidates) {
    const UniPoly linear = UniPoly::monomial({1}) - UniPoly(r);
    int mult = 0;
    for (;;) {
      auto [q, rem] = divmod(rest, linear);
      if (!rem.is_zero()) break;
      rest = std::move(q);
      ++mult;
    }
    if (mult > 0) out.roots.push_back({r, mult});
  }
  out.residual = rest;
  return out;
}

}  // namespace folgit

#endif  // FOLGIT_ROOTS_HPP
