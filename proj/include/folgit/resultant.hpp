#ifndef FOLGIT_RESULTANT_HPP
#define FOLGIT_RESULTANT_HPP

#include <folgit/gcd.hpp>
#include <folgit/poly.hpp>

#include <cstddef>
#include <vector>

namespace folgit {

/// Determinant by fraction-free (Bareiss) elimination; entries are
/// polynomials and every intermediate division is exact.
template <std::size_t N>
Poly<N> bareiss_determinant(std::vector<std::vector<Poly<N>>> m) {
  const std::size_t n = m.size();
  if (n == 0) return Poly<N>(Rational(1));
  bool negate = false;
  Poly<N> previous(Rational(1));
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k].is_zero()) {
      std::size_t swap_row = k + 1;
      while (swap_row < n && m[swap_row][k].is_zero()) ++swap_row;
      if (swap_row == n) return Poly<N>();
      std::swap(m[k], m[swap_row]);
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        Poly<N> num = m[k][k] * m[i][j] - m[i][k] * m[k][j];
        m[i][j] = detail::divide_or_throw(num, previous);
      }
      m[i][k] = Poly<N>();
    }
    previous = m[k][k];
  }
  return negate ? -m[n - 1][n - 1] : m[n - 1][n - 1];
}

/// Sylvester resultant eliminating `var`. The matrix lists deg_var(b) shifted
/// rows of a's coefficients (highest power first) followed by deg_var(a)
/// rows of b's; the sign is that determinant's. The result is free of `var`.
template <std::size_t N>
Poly<N> resultant(const Poly<N>& a, const Poly<N>& b, std::size_t var) {
  if (a.is_zero() || b.is_zero()) return Poly<N>();
  const auto ca = a.coefficients_in(var);
  const auto cb = b.coefficients_in(var);
  const std::size_t m = ca.size() - 1;
  const std::size_t n = cb.size() - 1;
  const std::size_t size = m + n;
  std::vector<std::vector<Poly<N>>> sylvester(size, std::vector<Poly<N>>(size));
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t k = 0; k <= m; ++k) sylvester[r][r + k] = ca[m - k];
  for (std::size_t r = 0; r < m; ++r)
    for (std::size_t k = 0; k <= n; ++k) sylvester[n + r][r + k] = cb[n - k];
  return bareiss_determinant(std::move(sylvester));
}

/// Bivariate convenience: Res_var(a, b) as a univariate polynomial in the
/// other variable.
inline UniPoly resultant_eliminate(const BivarPoly& a, const BivarPoly& b, std::size_t var) {
  const BivarPoly r = resultant(a, b, var);
  const std::size_t keep = 1 - var;
  UniPoly out;
  for (const auto& [e, c] : r.terms()) out.add_term({e[keep]}, c);
  return out;
}

}  // namespace folgit

#endif  // FOLGIT_RESULTANT_HPP
