#ifndef FOLGIT_POLY_HPP
#define FOLGIT_POLY_HPP

#include <folgit/rational.hpp>

#include <algorithm>
#include <array>
#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <sstream>
#include <string>
#include <vector>

namespace folgit {

/// Sparse polynomial in N variables over the rationals.
///
/// Terms live in a map keyed by the exponent vector, so iteration is in
/// lexicographic exponent order (first variable most significant). Zero
/// coefficients are never stored: the zero polynomial is the empty map.
template <std::size_t N>
class Poly {
 public:
  using Exponents = std::array<int, N>;
  using TermMap = std::map<Exponents, Rational>;

  Poly() = default;
  explicit Poly(const Rational& constant) {
    if (constant != 0) terms_.emplace(Exponents{}, constant);
  }

  static Poly monomial(const Exponents& e, const Rational& c = 1) {
    Poly p;
    if (c != 0) p.terms_.emplace(e, c);
    return p;
  }

  static Poly variable(std::size_t var) {
    Exponents e{};
    e[var] = 1;
    return monomial(e);
  }

  const TermMap& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  std::size_t size() const noexcept { return terms_.size(); }

  Rational coeff(const Exponents& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? Rational(0) : it->second;
  }

  Rational constant_term() const { return coeff(Exponents{}); }

  void add_term(const Exponents& e, const Rational& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.emplace(e, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  /// -1 for the zero polynomial.
  int total_degree() const {
    int deg = -1;
    for (const auto& [e, c] : terms_) deg = std::max(deg, sum(e));
    return deg;
  }

  int degree_in(std::size_t var) const {
    int deg = -1;
    for (const auto& [e, c] : terms_) deg = std::max(deg, e[var]);
    return deg;
  }

  /// Least total degree of a nonzero term; nullopt stands for +infinity.
  std::optional<int> order() const {
    if (terms_.empty()) return std::nullopt;
    int ord = sum(terms_.begin()->first);
    for (const auto& [e, c] : terms_) ord = std::min(ord, sum(e));
    return ord;
  }

  bool is_homogeneous() const {
    if (terms_.empty()) return true;
    const int deg = sum(terms_.begin()->first);
    return std::all_of(terms_.begin(), terms_.end(),
                       [deg](const auto& t) { return sum(t.first) == deg; });
  }

  Poly homogeneous_part(int degree) const {
    Poly out;
    for (const auto& [e, c] : terms_)
      if (sum(e) == degree) out.terms_.emplace(e, c);
    return out;
  }

  /// Leading term under lexicographic order; precondition: nonzero.
  const std::pair<const Exponents, Rational>& leading_term() const { return *terms_.rbegin(); }

  Poly operator-() const {
    Poly out = *this;
    for (auto& [e, c] : out.terms_) c = -c;
    return out;
  }

  Poly& operator+=(const Poly& other) {
    for (const auto& [e, c] : other.terms_) add_term(e, c);
    return *this;
  }

  Poly& operator-=(const Poly& other) {
    for (const auto& [e, c] : other.terms_) add_term(e, -c);
    return *this;
  }

  Poly& operator*=(const Rational& s) {
    if (s == 0) {
      terms_.clear();
      return *this;
    }
    for (auto& [e, c] : terms_) c *= s;
    return *this;
  }

  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(Poly a, const Rational& s) { return a *= s; }
  friend Poly operator*(const Rational& s, Poly a) { return a *= s; }

  friend Poly operator*(const Poly& a, const Poly& b) {
    Poly out;
    for (const auto& [ea, ca] : a.terms_)
      for (const auto& [eb, cb] : b.terms_) out.add_term(add(ea, eb), ca * cb);
    return out;
  }

  Poly& operator*=(const Poly& other) { return *this = *this * other; }

  friend bool operator==(const Poly& a, const Poly& b) { return a.terms_ == b.terms_; }

  Poly pow(unsigned n) const {
    Poly result(Rational(1));
    Poly base = *this;
    while (n > 0) {
      if (n & 1U) result *= base;
      n >>= 1U;
      if (n > 0) base *= base;
    }
    return result;
  }

  /// Multiplies by the monomial with exponents `e`.
  Poly shifted(const Exponents& e) const {
    Poly out;
    for (const auto& [ex, c] : terms_) out.terms_.emplace(add(ex, e), c);
    return out;
  }

  Poly derivative(std::size_t var) const {
    Poly out;
    for (const auto& [e, c] : terms_) {
      if (e[var] == 0) continue;
      Exponents d = e;
      --d[var];
      out.add_term(d, c * e[var]);
    }
    return out;
  }

  Rational evaluate(std::span<const Rational, N> point) const {
    Rational acc = 0;
    for (const auto& [e, c] : terms_) {
      Rational term = c;
      for (std::size_t v = 0; v < N; ++v) {
        Rational power;
        mpz_pow_ui(power.get_num_mpz_t(), point[v].get_num_mpz_t(), e[v]);
        mpz_pow_ui(power.get_den_mpz_t(), point[v].get_den_mpz_t(), e[v]);
        term *= power;
      }
      acc += term;
    }
    return acc;
  }

  Rational evaluate(const std::array<Rational, N>& point) const {
    return evaluate(std::span<const Rational, N>(point));
  }

  /// Substitutes the value for one variable; the result no longer involves it.
  Poly specialize(std::size_t var, const Rational& value) const {
    Poly out;
    for (const auto& [e, c] : terms_) {
      Exponents d = e;
      d[var] = 0;
      Rational power;
      mpz_pow_ui(power.get_num_mpz_t(), value.get_num_mpz_t(), e[var]);
      mpz_pow_ui(power.get_den_mpz_t(), value.get_den_mpz_t(), e[var]);
      out.add_term(d, c * power);
    }
    return out;
  }

  /// Coefficients with respect to `var`, index = power; each is free of `var`.
  std::vector<Poly> coefficients_in(std::size_t var) const {
    std::vector<Poly> out(static_cast<std::size_t>(std::max(0, degree_in(var) + 1)));
    for (const auto& [e, c] : terms_) {
      Exponents d = e;
      d[var] = 0;
      out[static_cast<std::size_t>(e[var])].terms_.emplace(d, c);
    }
    return out;
  }

  static Poly from_coefficients_in(std::size_t var, const std::vector<Poly>& coeffs) {
    Poly out;
    for (std::size_t k = 0; k < coeffs.size(); ++k) {
      Exponents shift{};
      shift[var] = static_cast<int>(k);
      out += coeffs[k].shifted(shift);
    }
    return out;
  }

  static int sum(const Exponents& e) {
    int s = 0;
    for (int v : e) s += v;
    return s;
  }

  static Exponents add(const Exponents& a, const Exponents& b) {
    Exponents out;
    for (std::size_t v = 0; v < N; ++v) out[v] = a[v] + b[v];
    return out;
  }

  static bool divides(const Exponents& a, const Exponents& b) {
    for (std::size_t v = 0; v < N; ++v)
      if (a[v] > b[v]) return false;
    return true;
  }

 private:
  TermMap terms_;
};

using BivarPoly = Poly<2>;
using UniPoly = Poly<1>;

/// Exact quotient a / b, or nullopt when b does not divide a.
template <std::size_t N>
std::optional<Poly<N>> exact_divide(const Poly<N>& a, const Poly<N>& b) {
  if (b.is_zero()) return std::nullopt;
  Poly<N> quotient;
  Poly<N> rest = a;
  const auto& [lead_e, lead_c] = b.leading_term();
  while (!rest.is_zero()) {
    const auto& [re, rc] = rest.leading_term();
    if (!Poly<N>::divides(lead_e, re)) return std::nullopt;
    typename Poly<N>::Exponents qe;
    for (std::size_t v = 0; v < N; ++v) qe[v] = re[v] - lead_e[v];
    const Poly<N> step = Poly<N>::monomial(qe, rc / lead_c);
    quotient += step;
    rest -= step * b;
  }
  return quotient;
}

/// Euclidean division for univariate polynomials: a = q*b + r, deg r < deg b.
inline std::pair<UniPoly, UniPoly> divmod(const UniPoly& a, const UniPoly& b) {
  UniPoly q;
  UniPoly r = a;
  const int db = b.degree_in(0);
  const Rational lb = b.coeff({db});
  while (!r.is_zero() && r.degree_in(0) >= db) {
    const int dr = r.degree_in(0);
    const UniPoly step = UniPoly::monomial({dr - db}, r.coeff({dr}) / lb);
    q += step;
    r -= step * b;
  }
  return {q, r};
}

/// Variable names used for printing; Poly<3> prints as x,y,z, Poly<2> as
/// y,z (they arise as affine charts x=1), Poly<1> as t.
template <std::size_t N>
constexpr std::array<const char*, N> default_variable_names() {
  if constexpr (N == 3) return {"x", "y", "z"};
  else if constexpr (N == 2) return {"y", "z"};
  else if constexpr (N == 1) return {"t"};
  else {
    std::array<const char*, N> names{};
    for (auto& n : names) n = "v";
    return names;
  }
}

/// Prints in the input grammar, highest lexicographic term first.
template <std::size_t N>
std::string to_string(const Poly<N>& p,
                      const std::array<const char*, N>& names = default_variable_names<N>()) {
  if (p.is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
    const auto& [e, c] = *it;
    const bool constant = Poly<N>::sum(e) == 0;
    Rational mag = abs(c);
    if (first) {
      if (c < 0) out << "-";
    } else {
      out << (c < 0 ? " - " : " + ");
    }
    first = false;
    bool wrote = false;
    if (mag != 1 || constant) {
      out << mag.get_str();
      wrote = true;
    }
    for (std::size_t v = 0; v < N; ++v) {
      if (e[v] == 0) continue;
      if (wrote) out << "*";
      out << names[v];
      if (e[v] > 1) out << "^" << e[v];
      wrote = true;
    }
  }
  return out.str();
}

}  // namespace folgit

#endif  // FOLGIT_POLY_HPP
