#ifndef FOLGIT_HARNESS_HPP
#define FOLGIT_HARNESS_HPP

#include <folgit/families.hpp>
#include <folgit/hull.hpp>
#include <folgit/locus.hpp>
#include <folgit/parse.hpp>
#include <folgit/stability.hpp>
#include <folgit/weights.hpp>

#include <json.hpp>

#include <array>
#include <chrono>
#include <functional>
#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace folgit {

struct CheckSpec {
  std::string id;
  std::string statement;  // the result under test
  std::string predicate;  // what is asserted per instance
  int dmin = 2;
  int dmax = 2;
  int trials = 1;  // per degree (per (d, k) for XD)
  std::uint64_t seed = 0;
};

struct CheckFailure {
  std::uint64_t instance_seed = 0;
  int degree = 0;
  std::string foliation;  // printed in the input grammar
  std::string trace;
};

struct CheckReport {
  std::string id;
  long instances = 0;
  std::vector<CheckFailure> failures;
  std::map<std::string, long> tallies;  // counters such as which case fired
  double elapsed_ms = 0;
  bool passed() const { return failures.empty() && instances > 0; }
};

namespace detail {

using CheckBody = std::function<void(const CheckSpec&, CheckReport&)>;

/// Runs body once per instance with an independent seed; any exception from
/// the body is recorded as a failure.
class InstanceRunner {
 public:
  InstanceRunner(const CheckSpec& s, CheckReport& r) : spec_(s), report_(r) {}

  template <class Body>
  void run(int degree, Body&& body) {
    const std::uint64_t seed = mix_seed(spec_.seed, counter_++);
    Rng rng(seed);
    std::string printed;
    auto fail = [&](const std::string& trace) {
      report_.failures.push_back({seed, degree, printed, trace});
    };
    ++report_.instances;
    try {
      body(rng, printed, fail);
    } catch (const std::exception& e) {
      fail(std::string("exception: ") + e.what());
    }
  }

 private:
  const CheckSpec& spec_;
  CheckReport& report_;
  std::uint64_t counter_ = 0;
};

inline const OneParamSubgroup& lambda_2_1() {
  static const OneParamSubgroup l(2, -1);
  return l;
}

inline IntersectionNumber milnor_at(const Foliation& f, const ProjPoint& p) { return report(f, p).milnor; }

inline void check_dw(const CheckSpec& s, CheckReport& r) {
  InstanceRunner run(s, r);
  for (int d = s.dmin; d <= s.dmax; ++d) {
    run.run(d, [&](Rng&, std::string& printed, auto fail) {
      printed = "weight_diagram(" + std::to_string(d) + ")";
      const int mult = origin_multiplicity(d);
      const bool expected = d % 3 == 1;
      if ((mult >= 2) != expected) {
        fail("origin multiplicity " + std::to_string(mult) + " for d=" + std::to_string(d));
      }
      if (expected) ++r.tallies["origin_double"];
    });
  }
}

inline void check_dim(const CheckSpec& s, CheckReport& r) {
  InstanceRunner run(s, r);
  for (int d = s.dmin; d <= s.dmax; ++d) {
    run.run(d, [&](Rng&, std::string& printed, auto fail) {
      printed = "weight_diagram(" + std::to_string(d) + ")";
      const long n = static_cast<long>(weight_diagram(d).entries.size());
      if (n != static_cast<long>(d) * d + 4 * d + 3) fail("entry count " + std::to_string(n));
    });
  }
}

inline void check_xddd(const CheckSpec& s, CheckReport& r) {
  InstanceRunner run(s, r);
  for (int d = s.dmin; d <= s.dmax; ++d)
    for (int t = 0; t < s.trials; ++t)
      run.run(d, [&](Rng& rng, std::string& printed, auto fail) {
        const Foliation f = random_xddd(rng, d);
        printed = print_foliation(f);
        const TorusVerdict v = hull_classify(f);
        if (v.kind != TorusClass::Unstable) return fail("hull verdict " + to_string(v.kind));
        if (!verify_certificate(f, *v.certificate)) return fail("certificate did not verify");
        const long mu = mumford_mu(f, lambda_2_1());
        if (mu <= 0) fail("mu(f, (2,-1,-1)) = " + std::to_string(mu));
      });
}

inline void check_dd0(const CheckSpec& s, CheckReport& r) {
  InstanceRunner run(s, r);
  for (int d = s.dmin; d <= s.dmax; ++d)
    for (int t = 0; t < s.trials; ++t)
      run.run(d, [&](Rng& rng, std::string& printed, auto fail) {
        const bool zq = t % 2 == 0;
        const Foliation f = random_xdd0(rng, d, zq);
        printed = print_foliation(f);
        const SingularLocus L = find_rational_singularities(f);
        const long total = jouanolou_total(d);
        const ProjPoint origin(1, 0, 0);
        if (!L.all_rational() || L.residual_milnor != 0) return fail("singular locus not fully rational");
        long mu0 = -1;
        for (const auto& p : L.points)
          if (p.point == origin) mu0 = p.milnor.value();
        if (L.points.size() == 1 && mu0 == total) {
          ++r.tallies["unique_point"];
          if (!zq) fail("unique singular point although z does not divide Q");
        } else if (L.points.size() == 2 && mu0 == total - 1) {
          ++r.tallies["two_points"];
          if (zq) fail("two singular points although z divides Q");
          for (const auto& p : L.points)
            if (!(p.point == origin) && p.milnor.value() != 1) fail("second point has mu != 1");
        } else {
          fail("outcome outside both cases: " + std::to_string(L.points.size()) + " points, mu[1:0:0]=" +
               std::to_string(mu0));
        }
      });
}

inline void check_xd(const CheckSpec& s, CheckReport& r) {
  InstanceRunner run(s, r);
  const ProjPoint origin(1, 0, 0);
  for (int d = s.dmin; d <= s.dmax; ++d)
    for (int k = 1; k <= d; ++k)
      for (int t = 0; t < s.trials; ++t)
        run.run(d, [&](Rng& rng, std::string& printed, auto fail) {
          const Foliation f = random_xd(rng, d, k);
          printed = print_foliation(f);
          const SingularityReport rep = report(f, origin);
          if (!rep.milnor.is_finite() || rep.milnor.value() != static_cast<long>(d) * d + k) {
            fail("k=" + std::to_string(k) + ": mu = " + to_string(rep.milnor));
          }
          if (rep.multiplicity != d) fail("k=" + std::to_string(k) + ": m = " + std::to_string(rep.multiplicity));
        });
}

inline void check_mf(const CheckSpec& s, CheckReport& r) {
  InstanceRunner run(s, r);
  const ProjPoint origin(1, 0, 0);
  for (int d = s.dmin; d <= s.dmax; ++d)
    for (int t = 0; t < s.trials; ++t)
      run.run(d, [&](Rng& rng, std::string& printed, auto fail) {
        const int m = 1 + t % d;
        const MfInstance inst = random_mf(rng, d, m);
        printed = print_foliation(inst.f);
        const SingularityReport rep = report(inst.f, origin);
        if (rep.multiplicity != m) fail("multiplicity " + std::to_string(rep.multiplicity) + " != m");
        const long mu = rep.milnor.value();
        if (mu < static_cast<long>(m) * (d + 1) || mu > jouanolou_total(d)) {
          fail("mu = " + std::to_string(mu) + " outside [m(d+1), d^2+d+1]");
        }
      });
}

inline void check_c4(const CheckSpec& s, CheckReport& r) {
  InstanceRunner run(s, r);
  const ProjPoint origin(1, 0, 0);
  const int d = 4;
  for (int t = 0; t < s.trials; ++t)
    run.run(d, [&](Rng& rng, std::string& printed, auto fail) {
      const MfInstance inst = random_mf(rng, d, 1);
      printed = print_foliation(inst.f);
      const SingularLocus L = find_rational_singularities(inst.f);
      const long mu0 = milnor_at(inst.f, origin).value();
      const bool another = L.points.size() >= 2 || L.residual_milnor > 0;
      if (!another || mu0 == jouanolou_total(d)) fail("[1:0:0] is the only singular point");
    });
}

inline void check_md(const CheckSpec& s, CheckReport& r) {
  InstanceRunner run(s, r);
  for (int d = s.dmin; d <= s.dmax; ++d)
    for (int t = 0; t < s.trials; ++t)
      run.run(d, [&](Rng& rng, std::string& printed, auto fail) {
        const MdInstance inst = random_md(rng, d);
        printed = print_foliation(inst.f);
        const Sl3Verdict v = destabilize_search(inst.f);
        if (v.kind != Sl3Class::Unstable) return fail("verdict " + to_string(v.kind));
        if (!verify_certificate(inst.f, *v.certificate)) return fail("certificate did not verify");
        ++r.tallies[inst.moved ? "moved" : "given_coordinates"];
      });
}

/// Contrapositive of the bound under lambda = (2,-1,-1): if mu <= 0 some
/// Q or R monomial of the displayed form has weight -2d+3j-1 <= 0 (strict
/// when mu < 0) and the multiplicity at [1:0:0] is at most that j.
inline void check_sm(const CheckSpec& s, CheckReport& r) {
  InstanceRunner run(s, r);
  const ProjPoint origin(1, 0, 0);
  for (int d = s.dmin; d <= s.dmax; ++d)
    for (int t = 0; t < s.trials; ++t)
      run.run(d, [&](Rng& rng, std::string& printed, auto fail) {
        const SmInstance inst = random_sm(rng, d);
        printed = print_foliation(inst.raw);
        const long mu = mumford_mu(inst.f, lambda_2_1());
        if (mu > 0) {
          ++r.tallies["unstable_under_lambda"];
          return;
        }
        ++r.tallies[mu < 0 ? "mu_negative" : "mu_zero"];
        int jmin = d + 1;
        for (int l = 1; l < 3; ++l)
          for (const auto& [e, c] : inst.raw.component(l).terms()) jmin = std::min(jmin, d - e[0]);
        const bool bound = mu < 0 ? 3 * jmin < 2 * d + 1 : 3 * jmin <= 2 * d + 1;
        if (!bound) return fail("no Q/R index below (2d+1)/3; min j = " + std::to_string(jmin));
        const int m = report(inst.f, origin).multiplicity;
        if (m > jmin) fail("multiplicity " + std::to_string(m) + " exceeds j = " + std::to_string(jmin));
      });
}

inline Foliation triangle_foliation() {
  const auto x = Poly<3>::variable(0), y = Poly<3>::variable(1), z = Poly<3>::variable(2);
  return validate(VectorField::of(2, y * z, x * z, x * y));
}

inline void check_jou(const CheckSpec& s, CheckReport& r) {
  InstanceRunner run(s, r);
  auto audit = [&](const Foliation& f, auto fail) {
    const SingularLocus L = find_rational_singularities(f);
    if (L.all_rational()) {
      ++r.tallies["audited"];
      if (L.total_milnor() != jouanolou_total(f.degree())) {
        fail("total Milnor " + std::to_string(L.total_milnor()) + " != d^2+d+1");
      }
    } else {
      ++r.tallies["irrational_skipped"];
      if (L.residual_milnor <= 0) fail("unresolved factors but no residual Milnor mass");
    }
  };
  run.run(2, [&](Rng&, std::string& printed, auto fail) {
    const Foliation f = triangle_foliation();
    printed = print_foliation(f);
    const SingularLocus L = find_rational_singularities(f);
    if (L.points.size() != 7) fail("expected 7 points");
    for (const auto& p : L.points)
      if (p.milnor.value() != 1) fail("point " + to_string(p.point) + " has mu != 1");
    audit(f, fail);
  });
  for (int d = s.dmin; d <= s.dmax; ++d)
    for (int t = 0; t < s.trials; ++t)
      run.run(d, [&](Rng& rng, std::string& printed, auto fail) {
        Foliation f = triangle_foliation();
        switch (t % 3) {
          case 0: f = random_xdd0(rng, d, bernoulli(rng, 1, 2)); break;
          case 1: f = random_xd(rng, d, static_cast<int>(uniform_int(rng, 1, d))); break;
          default:
            f = retry([&]() -> std::optional<Foliation> {
              Foliation g = random_sparse(rng, d, 1, 4);
              if (non_isolated_factor(g)) return std::nullopt;
              return g;
            });
        }
        printed = print_foliation(f);
        audit(f, fail);
      });
}

struct RegistryEntry {
  std::string_view id;
  std::string_view statement;
  std::string_view predicate;
  int dmin, dmax, trials;
  void (*body)(const CheckSpec&, CheckReport&);
};

}  // namespace detail

/// Results under test, one registry entry each.
inline constexpr std::array<std::string_view, 10> kCoveredResults{
    "DW", "XDDD", "DD0", "XD", "MF", "C4", "MD", "SM", "JOU", "DIM"};

inline constexpr std::array<detail::RegistryEntry, 10> kRegistry{{
    {"DW", "the origin is a double weight iff d = 3m+1", "origin multiplicity >= 2 iff d mod 3 = 1", 1, 13,
     1, detail::check_dw},
    {"XDDD", "X_ddd = (P(y,z), Q(y,z), c y^d) is unstable",
     "hull verdict unstable, certificate re-verifies, mu(f,(2,-1,-1)) > 0", 2, 5, 100, detail::check_xddd},
    {"DD0", "(P(y,z), Q(y,z), 0) has one point of mu d^2+d+1 or two points of mu d^2+d and 1",
     "locus matches one case; z | Q selects the unique-point case", 2, 3, 50, detail::check_dd0},
    {"XD", "(P, y^k Q_{d-k}, y^d) has mu = d^2+k and m = d at [1:0:0]", "exact equality of both invariants",
     2, 4, 20, detail::check_xd},
    {"MF", "(P(y,z), Q(x,y,z), 0) has a point of multiplicity m with m(d+1) <= mu <= d^2+d+1",
     "multiplicity equals m and mu lies in the interval", 2, 4, 50, detail::check_mf},
    {"C4", "for d = 4 and m = 1 the foliation has at least two singular points",
     "mu at [1:0:0] is below d^2+d+1 and other singular mass exists", 4, 4, 50, detail::check_c4},
    {"MD", "a singular point of multiplicity d makes the foliation unstable",
     "destabilize_search returns unstable with a verified certificate", 2, 4, 50, detail::check_md},
    {"SM", "a stable foliation has a singular point of multiplicity < (2d+1)/3",
     "mu(f,(2,-1,-1)) <= 0 forces a Q/R index j with -2d+3j-1 <= 0 (< 0 when mu < 0) and m <= j", 2, 4, 50,
     detail::check_sm},
    {"JOU", "total Milnor number is d^2+d+1", "sum of Milnor numbers over an all-rational locus", 2, 3, 30,
     detail::check_jou},
    {"DIM", "the foliation space has dimension d^2+4d+2", "weight diagram has d^2+4d+3 entries", 1, 10, 1,
     detail::check_dim},
}};

namespace detail {
constexpr bool registry_matches_coverage() {
  for (std::size_t i = 0; i < kRegistry.size(); ++i)
    if (kRegistry[i].id != kCoveredResults[i]) return false;
  return true;
}
}  // namespace detail

static_assert(detail::registry_matches_coverage(), "every covered result needs exactly one check");

/// Spec for a registered check with its default parameters.
inline CheckSpec check_spec(std::string_view id, std::uint64_t seed) {
  for (const auto& e : kRegistry)
    if (e.id == id)
      return {std::string(e.id), std::string(e.statement), std::string(e.predicate), e.dmin, e.dmax, e.trials, seed};
  throw std::invalid_argument("unknown check " + std::string(id));
}

inline CheckReport run_check(const CheckSpec& spec) {
  CheckReport rep;
  rep.id = spec.id;
  const auto t0 = std::chrono::steady_clock::now();
  bool found = false;
  for (const auto& e : kRegistry)
    if (e.id == spec.id) {
      e.body(spec, rep);
      found = true;
    }
  if (!found) throw std::invalid_argument("unknown check " + spec.id);
  rep.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  return rep;
}

/// Per-check seed derived from the master seed and the registry position.
inline std::uint64_t check_seed(std::uint64_t master, std::size_t index) { return mix_seed(master, 1000 + index); }

inline std::vector<CheckReport> run_all(std::uint64_t seed) {
  std::vector<CheckReport> out;
  for (std::size_t i = 0; i < kRegistry.size(); ++i) out.push_back(run_check(check_spec(kRegistry[i].id, check_seed(seed, i))));
  return out;
}

inline nlohmann::ordered_json to_json(const CheckSpec& s) {
  nlohmann::ordered_json j;
  j["id"] = s.id;
  j["statement"] = s.statement;
  j["predicate"] = s.predicate;
  j["degrees"] = {s.dmin, s.dmax};
  j["trials"] = s.trials;
  j["seed"] = std::to_string(s.seed);
  return j;
}

inline nlohmann::ordered_json to_json(const CheckReport& r, bool with_timing = false) {
  nlohmann::ordered_json j;
  j["id"] = r.id;
  j["passed"] = r.passed();
  j["instances"] = r.instances;
  nlohmann::ordered_json tallies = nlohmann::ordered_json::object();
  for (const auto& [k, v] : r.tallies) tallies[k] = v;
  j["tallies"] = tallies;
  nlohmann::ordered_json fails = nlohmann::ordered_json::array();
  for (const auto& f : r.failures) {
    nlohmann::ordered_json fj;
    fj["instance_seed"] = std::to_string(f.instance_seed);
    fj["degree"] = f.degree;
    fj["foliation"] = f.foliation;
    fj["trace"] = f.trace;
    fails.push_back(fj);
  }
  j["failures"] = fails;
  if (with_timing) j["elapsed_ms"] = r.elapsed_ms;
  return j;
}

}  // namespace folgit

#endif  // FOLGIT_HARNESS_HPP
