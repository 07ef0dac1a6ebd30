#ifndef FOLGIT_FAMILIES_HPP
#define FOLGIT_FAMILIES_HPP

#include <folgit/foliation.hpp>
#include <folgit/invariants.hpp>
#include <folgit/locus.hpp>
#include <folgit/random.hpp>
#include <folgit/stability.hpp>

#include <optional>
#include <string>

namespace folgit {

namespace detail {

inline void require_binary(const HomogPoly& p, int d, const char* name) {
  if (p.degree() != d) {
    throw FamilyConstraint(std::string(name) + " must have degree " + std::to_string(d));
  }
  for (const auto& [e, c] : p.terms())
    if (e[0] != 0) throw FamilyConstraint(std::string(name) + " must not involve x");
}

inline void require_family_degree(int d) {
  if (d < 2) throw FamilyConstraint("family degree must be at least 2");
}

inline Foliation validated_family(const VectorField& v) {
  try {
    return validate(v);
  } catch (const CommonFactor& e) {
    throw FamilyConstraint("components share the factor " + e.factor());
  }
}

}  // namespace detail

/// (P(y,z), Q(y,z), c y^d).
inline Foliation make_xddd(int d, const HomogPoly& P, const HomogPoly& Q, const Rational& c) {
  detail::require_family_degree(d);
  detail::require_binary(P, d, "P");
  detail::require_binary(Q, d, "Q");
  return detail::validated_family(VectorField(d, P, Q, HomogPoly::monomial(0, d, 0, c)));
}

/// (P(y,z), Q(y,z), 0).
inline Foliation make_xdd0(int d, const HomogPoly& P, const HomogPoly& Q) {
  detail::require_family_degree(d);
  detail::require_binary(P, d, "P");
  detail::require_binary(Q, d, "Q");
  return detail::validated_family(VectorField(d, P, Q, HomogPoly(d)));
}

/// (P(y,z), y^k Q_{d-k}(y,z), y^d) with y not dividing Q_{d-k} and gcd(P, Q) = 1.
inline Foliation make_xd(int d, int k, const HomogPoly& P, const HomogPoly& Qdk) {
  detail::require_family_degree(d);
  if (k < 1 || k > d) throw FamilyConstraint("k must satisfy 1 <= k <= d");
  detail::require_binary(P, d, "P");
  detail::require_binary(Qdk, d - k, "Q_{d-k}");
  if (Qdk.coeff(0, 0, d - k) == 0) throw FamilyConstraint("y divides Q_{d-k}");
  const HomogPoly Q = HomogPoly::monomial(0, k, 0) * Qdk;
  if (gcd_poly(P, Q).degree() > 0) throw FamilyConstraint("P and Q share a factor");
  return detail::validated_family(VectorField(d, P, Q, HomogPoly::monomial(0, d, 0)));
}

// ---- random generators -------------------------------------------------

inline long random_coefficient(Rng& rng) { return uniform_int(rng, -9, 9); }

inline long random_nonzero_coefficient(Rng& rng) {
  long c = 0;
  while (c == 0) c = random_coefficient(rng);
  return c;
}

/// Binary form of degree deg in y, z times x^xdeg; each coefficient drawn
/// when a density draw succeeds.
inline HomogPoly random_binary_form(Rng& rng, int deg, int xdeg = 0, int num = 1, int den = 1) {
  HomogPoly p(deg + xdeg);
  for (int s = 0; s <= deg; ++s) {
    if (!bernoulli(rng, num, den)) continue;
    const long c = random_coefficient(rng);
    if (c != 0) p += HomogPoly::monomial(xdeg, deg - s, s, c);
  }
  return p;
}

/// Retries gen until it returns a value; generators signal a rejected draw
/// with nullopt or an Error.
template <class Gen>
auto retry(Gen&& gen, int limit = 10000) -> typename decltype(gen())::value_type {
  for (int t = 0; t < limit; ++t) {
    try {
      if (auto v = gen()) return *v;
    } catch (const Error&) {
    }
  }
  throw std::runtime_error("generator exceeded its retry limit");
}

inline Foliation random_xddd(Rng& rng, int d) {
  return retry([&]() -> std::optional<Foliation> {
    return make_xddd(d, random_binary_form(rng, d), random_binary_form(rng, d), random_nonzero_coefficient(rng));
  });
}

/// With z_divides_q the Q component is forced to have z as a factor.
inline Foliation random_xdd0(Rng& rng, int d, bool z_divides_q) {
  return retry([&]() -> std::optional<Foliation> {
    const HomogPoly P = random_binary_form(rng, d);
    HomogPoly Q = z_divides_q ? HomogPoly::monomial(0, 0, 1) * random_binary_form(rng, d - 1)
                              : random_binary_form(rng, d);
    if (!z_divides_q && Q.coeff(0, d, 0) == 0) return std::nullopt;
    return make_xdd0(d, P, Q);
  });
}

inline Foliation random_xd(Rng& rng, int d, int k) {
  return retry([&]() -> std::optional<Foliation> {
    return make_xd(d, k, random_binary_form(rng, d), random_binary_form(rng, d - k));
  });
}

/// (P(y,z), Q(x,y,z), 0) singular at [1:0:0] whose Q has lowest part Q^m.
struct MfInstance {
  Foliation f;
  int m;
};

inline MfInstance random_mf(Rng& rng, int d, int m) {
  return retry([&]() -> std::optional<MfInstance> {
    const HomogPoly P = random_binary_form(rng, d);
    HomogPoly Q(d);
    for (int i = m; i <= d; ++i) Q += random_binary_form(rng, i, d - i);
    bool has_lowest = false;
    for (const auto& [e, c] : Q.terms()) has_lowest = has_lowest || e[0] == d - m;
    if (!has_lowest) return std::nullopt;
    const Foliation f = validate(VectorField(d, P, Q, HomogPoly(d)));
    if (non_isolated_factor(f)) return std::nullopt;
    return MfInstance{f, m};
  });
}

/// Multiplicity-d instance: (x P_{d-1} + P_d, Q_d, R_d) in the coordinates
/// given by g, which is the identity or a random unimodular matrix.
struct MdInstance {
  Foliation f;
  ProjPoint point;
  bool moved;
};

inline MdInstance random_md(Rng& rng, int d) {
  return retry([&]() -> std::optional<MdInstance> {
    const HomogPoly P = random_binary_form(rng, d - 1, 1) + random_binary_form(rng, d);
    const VectorField v(d, P, random_binary_form(rng, d), random_binary_form(rng, d));
    Foliation f = validate(v);
    if (non_isolated_factor(f)) return std::nullopt;
    const bool moved = bernoulli(rng, 1, 2);
    ProjPoint p(1, 0, 0);
    if (moved) {
      const Matrix3 g = random_unimodular(rng);
      f = act(g, f);
      p = transform_point(g, p);
    }
    if (algebraic_multiplicity(localize(f, p)) != d) return std::nullopt;
    return MdInstance{f, p, moved};
  });
}

/// Member of the family P(y,z) d/dx + sum x^{d-j} Q_j d/dy + sum x^{d-j} R_j d/dz
/// singular at [1:0:0] (j >= 1); `raw` keeps the displayed representative.
struct SmInstance {
  VectorField raw;
  Foliation f;
};

inline SmInstance random_sm(Rng& rng, int d) {
  return retry([&]() -> std::optional<SmInstance> {
    const HomogPoly P = random_binary_form(rng, d);
    HomogPoly Q(d), R(d);
    for (int j = 1; j <= d; ++j) {
      if (bernoulli(rng, 1, 2)) Q += random_binary_form(rng, j, d - j, 1, 2);
      if (bernoulli(rng, 1, 2)) R += random_binary_form(rng, j, d - j, 1, 2);
    }
    const VectorField raw(d, P, Q, R);
    const Foliation f = validate(raw);
    if (non_isolated_factor(f)) return std::nullopt;
    return SmInstance{raw, f};
  });
}

/// Every basis coefficient present with probability num/den.
inline Foliation random_sparse(Rng& rng, int d, int num, int den) {
  return retry([&]() -> std::optional<Foliation> {
    std::array<HomogPoly, 3> c{HomogPoly(d), HomogPoly(d), HomogPoly(d)};
    for (int l = 0; l < 3; ++l)
      for (int ex = 0; ex <= d; ++ex)
        for (int ey = 0; ey + ex <= d; ++ey)
          if (bernoulli(rng, num, den)) c[l] += HomogPoly::monomial(ex, ey, d - ex - ey, random_coefficient(rng));
    return validate(VectorField(d, c[0], c[1], c[2]));
  });
}

/// Pair of sparse bivariate polynomials vanishing at the origin with orders
/// between 1 and max_order.
inline LocalRep random_local_rep(Rng& rng, int max_order) {
  auto one = [&]() {
    const int ord = static_cast<int>(uniform_int(rng, 1, max_order));
    const int top = ord + static_cast<int>(uniform_int(rng, 0, 3));
    BivarPoly p;
    while (p.is_zero() || *p.order() != ord) {
      p = BivarPoly();
      const int lead = static_cast<int>(uniform_int(rng, 0, ord));
      p.add_term({ord - lead, lead}, random_nonzero_coefficient(rng));
      const int extra = static_cast<int>(uniform_int(rng, 0, 4));
      for (int t = 0; t < extra; ++t) {
        const int deg = static_cast<int>(uniform_int(rng, ord, top));
        const int a = static_cast<int>(uniform_int(rng, 0, deg));
        p += BivarPoly::monomial({deg - a, a}, random_coefficient(rng));
      }
    }
    return p;
  };
  return {one(), one()};
}

/// Named families for the command line, coefficients drawn from the seed.
inline Foliation make_family(const std::string& name, int d, int k, std::uint64_t seed) {
  detail::require_family_degree(d);
  Rng rng(seed);
  if (name == "xddd") return random_xddd(rng, d);
  if (name == "xdd0") return random_xdd0(rng, d, bernoulli(rng, 1, 2));
  if (name == "xd") {
    if (k < 1 || k > d) throw FamilyConstraint("k must satisfy 1 <= k <= d");
    return random_xd(rng, d, k);
  }
  throw FamilyConstraint("unknown family " + name);
}

}  // namespace folgit

#endif  // FOLGIT_FAMILIES_HPP
