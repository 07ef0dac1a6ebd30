#ifndef FOLGIT_REPORT_HPP
#define FOLGIT_REPORT_HPP

#include <folgit/hull.hpp>
#include <folgit/locus.hpp>
#include <folgit/parse.hpp>
#include <folgit/stability.hpp>
#include <folgit/weights.hpp>

#include <json.hpp>

#include <optional>
#include <string>
#include <vector>

namespace folgit {

inline constexpr int kReportSchemaVersion = 1;

struct DiagramStats {
  int entries = 0;
  int active = 0;
  std::vector<std::pair<WeightCovector, int>> double_points;         // full diagram
  std::vector<std::pair<WeightCovector, int>> active_double_points;  // active subset
  friend bool operator==(const DiagramStats&, const DiagramStats&) = default;
};

struct AnalysisReport {
  int schema_version = kReportSchemaVersion;
  VectorField input;
  VectorField canonical;
  bool isolated = true;
  std::optional<std::string> non_isolated_factor;
  std::vector<SingularityReport> points;
  long total_milnor = 0;
  long residual_milnor = 0;
  std::vector<UnresolvedFactor> unresolved;
  TorusClass torus = TorusClass::Stable;
  std::optional<Certificate> torus_certificate;
  std::vector<WeightCovector> hull;
  Sl3Class sl3 = Sl3Class::Undetermined;
  std::optional<Certificate> sl3_certificate;
  std::string sl3_stage;
  std::vector<std::string> flags_tested;
  DiagramStats diagram;
  friend bool operator==(const AnalysisReport&, const AnalysisReport&) = default;
};

class ReportError : public Error {
 public:
  explicit ReportError(const std::string& what) : Error("ReportError", what) {}
};

namespace detail {

inline std::vector<std::pair<WeightCovector, int>> doubles_of(const WeightDiagram& dg) {
  std::vector<std::pair<WeightCovector, int>> out;
  for (const auto& [w, n] : dg.multiplicities())
    if (n >= 2) out.emplace_back(w, n);
  return out;
}

}  // namespace detail

inline AnalysisReport analyze(const VectorField& input, const SearchOptions& opt = {}) {
  const Foliation f = validate(input);
  AnalysisReport r;
  r.input = input;
  r.canonical = f.rep();
  try {
    const SingularLocus L = find_rational_singularities(f);
    r.points = L.points;
    r.total_milnor = L.total_milnor();
    r.residual_milnor = L.residual_milnor;
    r.unresolved = L.unresolved;
  } catch (const NonIsolated& e) {
    r.isolated = false;
    r.non_isolated_factor = e.witness();
  }
  const TorusVerdict t = hull_classify(f);
  r.torus = t.kind;
  r.torus_certificate = t.certificate;
  r.hull = t.hull;
  const Sl3Verdict s = destabilize_search(f, opt);
  r.sl3 = s.kind;
  r.sl3_certificate = s.certificate;
  r.sl3_stage = s.stage;
  r.flags_tested = s.flags_tested;
  const WeightDiagram full = weight_diagram(f.degree());
  const WeightDiagram active = active_diagram(f);
  r.diagram.entries = static_cast<int>(full.entries.size());
  r.diagram.active = static_cast<int>(active.entries.size());
  r.diagram.double_points = detail::doubles_of(full);
  r.diagram.active_double_points = detail::doubles_of(active);
  return r;
}

// ---- JSON ----------------------------------------------------------------

using Json = nlohmann::ordered_json;

namespace detail {

inline Json field_json(const VectorField& v) {
  Json j;
  j["degree"] = v.degree;
  j["P"] = to_string(v.P);
  j["Q"] = to_string(v.Q);
  j["R"] = to_string(v.R);
  return j;
}

inline VectorField field_from_json(const Json& j) {
  FoliationSource src;
  src.degree = j.at("degree").get<int>();
  src.P = j.at("P").get<std::string>();
  src.Q = j.at("Q").get<std::string>();
  src.R = j.at("R").get<std::string>();
  return to_vector_field(src);
}

inline Json matrix_json(const Matrix3& g) {
  Json rows = Json::array();
  for (const auto& row : g) {
    Json r = Json::array();
    for (const auto& v : row) r.push_back(v.get_str());
    rows.push_back(r);
  }
  return rows;
}

inline Matrix3 matrix_from_json(const Json& j) {
  Matrix3 g{};
  for (int i = 0; i < 3; ++i)
    for (int k = 0; k < 3; ++k) g[i][k] = parse_rational(j.at(i).at(k).get<std::string>());
  return g;
}

inline Json certificate_json(const std::optional<Certificate>& c) {
  if (!c) return nullptr;
  Json j;
  j["g"] = matrix_json(c->g);
  j["lambda"] = to_string(c->lambda);
  j["mu"] = c->mu;
  return j;
}

inline OneParamSubgroup lambda_from_string(const std::string& s) {
  long k1 = 0, k2 = 0, k3 = 0;
  char o = 0, c1 = 0, c2 = 0, cl = 0;
  std::istringstream in(s);
  if (!(in >> o >> k1 >> c1 >> k2 >> c2 >> k3 >> cl) || o != '(' || c1 != ',' || c2 != ',' || cl != ')') {
    throw ReportError("malformed one-parameter subgroup " + s);
  }
  if (k1 + k2 + k3 != 0) throw ReportError("weights of " + s + " do not sum to zero");
  return OneParamSubgroup(k1, k2);
}

inline std::optional<Certificate> certificate_from_json(const Json& j) {
  if (j.is_null()) return std::nullopt;
  return Certificate{matrix_from_json(j.at("g")), lambda_from_string(j.at("lambda").get<std::string>()),
                     j.at("mu").get<long>()};
}

inline Json covector_json(const WeightCovector& w) { return Json::array({w.a, w.b}); }
inline WeightCovector covector_from_json(const Json& j) { return {j.at(0).get<long>(), j.at(1).get<long>()}; }

inline Json doubles_json(const std::vector<std::pair<WeightCovector, int>>& v) {
  Json a = Json::array();
  for (const auto& [w, n] : v) {
    Json e;
    e["covector"] = covector_json(w);
    e["multiplicity"] = n;
    a.push_back(e);
  }
  return a;
}

inline std::vector<std::pair<WeightCovector, int>> doubles_from_json(const Json& j) {
  std::vector<std::pair<WeightCovector, int>> out;
  for (const auto& e : j) out.emplace_back(covector_from_json(e.at("covector")), e.at("multiplicity").get<int>());
  return out;
}

inline Json univariate_json(const UniPoly& u) {
  Json a = Json::array();
  const int deg = u.degree_in(0);
  for (int i = 0; i <= deg; ++i) a.push_back(u.coeff({i}).get_str());
  return a;
}

inline UniPoly univariate_from_json(const Json& j) {
  UniPoly u;
  for (std::size_t i = 0; i < j.size(); ++i) u.add_term({static_cast<int>(i)}, parse_rational(j.at(i).get<std::string>()));
  return u;
}

template <class E>
E enum_from_string(const std::string& s, std::initializer_list<E> values) {
  for (E v : values)
    if (to_string(v) == s) return v;
  throw ReportError("unknown verdict " + s);
}

}  // namespace detail

inline Json to_json(const AnalysisReport& r) {
  Json j;
  j["schema_version"] = r.schema_version;
  j["input"] = detail::field_json(r.input);
  j["canonical"] = detail::field_json(r.canonical);
  j["isolated"] = r.isolated;
  j["non_isolated_factor"] = r.non_isolated_factor ? Json(*r.non_isolated_factor) : Json(nullptr);
  Json pts = Json::array();
  for (const auto& p : r.points) {
    Json e;
    e["point"] = Json::array({p.point[0].get_str(), p.point[1].get_str(), p.point[2].get_str()});
    e["multiplicity"] = p.multiplicity;
    e["milnor"] = p.milnor.is_finite() ? Json(p.milnor.value()) : Json("infinity");
    pts.push_back(e);
  }
  j["singular_points"] = pts;
  j["total_milnor"] = r.total_milnor;
  j["residual_milnor"] = r.residual_milnor;
  j["jouanolou_total"] = jouanolou_total(r.canonical.degree);
  Json unres = Json::array();
  for (const auto& u : r.unresolved) {
    Json e;
    e["variable"] = u.where;
    e["coefficients"] = detail::univariate_json(u.factor);
    e["factor"] = to_string(u.factor);
    unres.push_back(e);
  }
  j["unresolved_factors"] = unres;
  j["torus_verdict"] = to_string(r.torus);
  j["torus_certificate"] = detail::certificate_json(r.torus_certificate);
  Json hull = Json::array();
  for (const auto& w : r.hull) hull.push_back(detail::covector_json(w));
  j["hull_vertices"] = hull;
  j["sl3_verdict"] = to_string(r.sl3);
  j["sl3_certificate"] = detail::certificate_json(r.sl3_certificate);
  j["sl3_stage"] = r.sl3_stage;
  j["flags_tested"] = r.flags_tested;
  Json dg;
  dg["entries"] = r.diagram.entries;
  dg["active_entries"] = r.diagram.active;
  dg["double_points"] = detail::doubles_json(r.diagram.double_points);
  dg["active_double_points"] = detail::doubles_json(r.diagram.active_double_points);
  j["diagram"] = dg;
  return j;
}

inline std::string emit_report(const AnalysisReport& r) { return to_json(r).dump(2) + "\n"; }

/// Reads a report back; both certificates are recomputed against the
/// canonical field and must reproduce their recorded mu.
inline AnalysisReport parse_report(const std::string& text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ReportError(std::string("invalid JSON: ") + e.what());
  }
  try {
    AnalysisReport r;
    r.schema_version = j.at("schema_version").get<int>();
    if (r.schema_version != kReportSchemaVersion) {
      throw ReportError("unsupported schema version " + std::to_string(r.schema_version));
    }
    r.input = detail::field_from_json(j.at("input"));
    r.canonical = detail::field_from_json(j.at("canonical"));
    r.isolated = j.at("isolated").get<bool>();
    if (!j.at("non_isolated_factor").is_null()) r.non_isolated_factor = j.at("non_isolated_factor").get<std::string>();
    for (const auto& e : j.at("singular_points")) {
      const auto& c = e.at("point");
      const ProjPoint p(parse_rational(c.at(0).get<std::string>()), parse_rational(c.at(1).get<std::string>()),
                        parse_rational(c.at(2).get<std::string>()));
      const auto& m = e.at("milnor");
      const IntersectionNumber mu =
          m.is_string() ? IntersectionNumber::infinite() : IntersectionNumber::finite(m.get<long>());
      r.points.push_back({p, e.at("multiplicity").get<int>(), mu});
    }
    r.total_milnor = j.at("total_milnor").get<long>();
    r.residual_milnor = j.at("residual_milnor").get<long>();
    for (const auto& e : j.at("unresolved_factors")) {
      r.unresolved.push_back({e.at("variable").get<std::string>(), detail::univariate_from_json(e.at("coefficients"))});
    }
    r.torus = detail::enum_from_string(j.at("torus_verdict").get<std::string>(),
                                       {TorusClass::Stable, TorusClass::StrictlySemistable, TorusClass::Unstable});
    r.torus_certificate = detail::certificate_from_json(j.at("torus_certificate"));
    for (const auto& w : j.at("hull_vertices")) r.hull.push_back(detail::covector_from_json(w));
    r.sl3 = detail::enum_from_string(j.at("sl3_verdict").get<std::string>(),
                                     {Sl3Class::Stable, Sl3Class::Unstable, Sl3Class::Undetermined});
    r.sl3_certificate = detail::certificate_from_json(j.at("sl3_certificate"));
    r.sl3_stage = j.at("sl3_stage").get<std::string>();
    r.flags_tested = j.at("flags_tested").get<std::vector<std::string>>();
    const auto& dg = j.at("diagram");
    r.diagram.entries = dg.at("entries").get<int>();
    r.diagram.active = dg.at("active_entries").get<int>();
    r.diagram.double_points = detail::doubles_from_json(dg.at("double_points"));
    r.diagram.active_double_points = detail::doubles_from_json(dg.at("active_double_points"));

    const Foliation f = Foliation::formal(r.canonical);
    for (const auto* c : {&r.torus_certificate, &r.sl3_certificate}) {
      if (*c && !verify_certificate(f, **c)) throw ReportError("certificate " + to_string((*c)->lambda) + " does not verify");
    }
    return r;
  } catch (const nlohmann::json::exception& e) {
    throw ReportError(std::string("malformed report: ") + e.what());
  }
}

}  // namespace folgit

#endif  // FOLGIT_REPORT_HPP
