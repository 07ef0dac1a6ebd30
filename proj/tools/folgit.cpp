// Command-line front end: analyze, diagram, mu, singularities, invariant,
// family, verify. Exit codes: 0 done, 2 invalid input, 3 failed checks.

#include <folgit/folgit.hpp>

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

namespace {

using folgit::Json;

constexpr int kExitInvalid = 2;
constexpr int kExitFailed = 3;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw folgit::Error("IOError", "cannot read " + path);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

folgit::VectorField read_field(const std::string& path) {
  return folgit::to_vector_field(folgit::parse_source(read_file(path)));
}

/// --seed wins, then FOLIATION_SEED, then 0.
std::uint64_t master_seed(const std::optional<std::uint64_t>& flag) {
  if (flag) return *flag;
  if (const char* env = std::getenv("FOLIATION_SEED")) {
    try {
      return std::stoull(env);
    } catch (const std::exception&) {
      throw folgit::Error("InvalidSeed", std::string("FOLIATION_SEED is not an unsigned integer: ") + env);
    }
  }
  return 0;
}

Json locus_json(const folgit::Foliation& f) {
  Json j;
  try {
    const folgit::SingularLocus L = folgit::find_rational_singularities(f);
    Json pts = Json::array();
    for (const auto& p : L.points) {
      Json e;
      e["point"] = folgit::to_string(p.point);
      e["multiplicity"] = p.multiplicity;
      e["milnor"] = p.milnor.is_finite() ? Json(p.milnor.value()) : Json("infinity");
      pts.push_back(e);
    }
    j["isolated"] = true;
    j["singular_points"] = pts;
    j["total_milnor"] = L.total_milnor();
    j["residual_milnor"] = L.residual_milnor;
    j["jouanolou_total"] = folgit::jouanolou_total(f.degree());
    Json unres = Json::array();
    for (const auto& u : L.unresolved) unres.push_back({{"variable", u.where}, {"factor", folgit::to_string(u.factor)}});
    j["unresolved_factors"] = unres;
  } catch (const folgit::NonIsolated& e) {
    j["isolated"] = false;
    j["non_isolated_factor"] = e.witness();
  }
  return j;
}

Json diagram_json(const folgit::WeightDiagram& dg) {
  Json entries = Json::array();
  for (const auto& e : dg.entries) {
    Json x;
    x["l"] = e.index.l;
    x["i"] = e.index.i;
    x["j"] = e.index.j;
    x["monomial"] = folgit::basis_monomial_name(e.index, dg.degree);
    x["covector"] = Json::array({e.weight.a, e.weight.b});
    entries.push_back(x);
  }
  Json j;
  j["degree"] = dg.degree;
  j["count"] = dg.entries.size();
  Json doubles = Json::array();
  for (const auto& [w, n] : dg.multiplicities())
    if (n >= 2) doubles.push_back({{"covector", Json::array({w.a, w.b})}, {"multiplicity", n}});
  j["double_points"] = doubles;
  j["entries"] = entries;
  return j;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"GIT stability and singularity invariants of foliations of the projective plane"};
  app.require_subcommand(1);

  std::string file;
  std::optional<std::uint64_t> seed;
  int random_trials = 0;
  auto* analyze = app.add_subcommand("analyze", "full analysis report as JSON");
  analyze->add_option("file", file, "foliation input file")->required();
  analyze->add_option("--random-trials", random_trials, "random coordinate changes tried after the flag stage");
  analyze->add_option("--seed", seed, "seed for the random stage");

  std::optional<int> degree;
  std::string input, svg_out;
  bool hull = false;
  auto* diagram = app.add_subcommand("diagram", "weight diagram as JSON, optionally SVG");
  diagram->add_option("--degree", degree, "degree d");
  diagram->add_option("--input", input, "foliation whose active weights are overlaid");
  diagram->add_option("--svg", svg_out, "write an SVG rendering to this path");
  diagram->add_flag("--hull", hull, "draw the convex hull of the active (or all) weights");

  std::string lambda_text;
  auto* mu = app.add_subcommand("mu", "Mumford function for one 1-PS");
  mu->add_option("--input", input, "foliation input file")->required();
  mu->add_option("--lambda", lambda_text, "k1,k2 with k1 >= k2 >= -k1-k2")->required();

  auto* sing = app.add_subcommand("singularities", "rational singular points with invariants");
  sing->add_option("file", file, "foliation input file")->required();

  std::string curve;
  auto* inv = app.add_subcommand("invariant", "test whether a curve is invariant");
  inv->add_option("--curve", curve, "homogeneous polynomial F")->required();
  inv->add_option("file", file, "foliation input file")->required();

  std::string family_name;
  int k = 1;
  auto* fam = app.add_subcommand("family", "random member of a named family, printed as input");
  fam->add_option("--name", family_name, "xddd, xdd0 or xd")->required()->check(CLI::IsMember({"xddd", "xdd0", "xd"}));
  fam->add_option("--degree", degree, "degree d")->required();
  fam->add_option("--k", k, "exponent k for xd");
  fam->add_option("--seed", seed, "coefficient seed");

  std::string check_id;
  bool timing = false;
  auto* verify = app.add_subcommand("verify", "run the theorem checks");
  verify->add_option("--check", check_id, "run only this check");
  verify->add_option("--seed", seed, "master seed");
  verify->add_flag("--timing", timing, "include elapsed time in the output");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitInvalid;
  }

  try {
    if (*analyze) {
      folgit::SearchOptions opt;
      opt.random_trials = random_trials;
      opt.seed = seed.value_or(0);
      std::cout << folgit::emit_report(folgit::analyze(read_field(file), opt));
      return 0;
    }
    if (*diagram) {
      std::optional<folgit::Foliation> f;
      if (!input.empty()) {
        f = folgit::validate(read_field(input));
        if (degree && *degree != f->degree()) throw folgit::DegreeMismatch("--degree disagrees with the input file");
        degree = f->degree();
      }
      if (!degree) throw folgit::DegreeMismatch("diagram needs --degree or --input");
      const folgit::WeightDiagram dg = folgit::weight_diagram(*degree);
      Json j = diagram_json(dg);
      if (f) {
        const folgit::WeightDiagram act = folgit::active_diagram(*f);
        Json active = Json::array();
        for (const auto& e : act.entries) active.push_back(folgit::basis_monomial_name(e.index, dg.degree));
        j["active"] = active;
        const auto v = folgit::hull_classify(*f);
        Json hv = Json::array();
        for (const auto& w : v.hull) hv.push_back(Json::array({w.a, w.b}));
        j["hull_vertices"] = hv;
        j["torus_verdict"] = folgit::to_string(v.kind);
      }
      if (!svg_out.empty()) {
        folgit::SvgOptions opt;
        if (f) opt.active = folgit::active_diagram(*f);
        opt.hull = hull;
        std::ofstream out(svg_out, std::ios::binary);
        if (!out) throw folgit::Error("IOError", "cannot write " + svg_out);
        out << folgit::render_svg(dg, opt);
      }
      std::cout << j.dump(2) << "\n";
      return 0;
    }
    if (*mu) {
      const folgit::Foliation f = folgit::validate(read_field(input));
      long k1 = 0, k2 = 0;
      char comma = 0;
      std::istringstream ls(lambda_text);
      if (!(ls >> k1 >> comma >> k2) || comma != ',' || !ls.eof()) {
        throw folgit::InvalidSubgroup("--lambda expects k1,k2");
      }
      const folgit::OneParamSubgroup l(k1, k2);
      Json j;
      j["lambda"] = folgit::to_string(l);
      j["mu"] = folgit::mumford_mu(f, l);
      std::cout << j.dump(2) << "\n";
      return 0;
    }
    if (*sing) {
      std::cout << locus_json(folgit::validate(read_field(file))).dump(2) << "\n";
      return 0;
    }
    if (*inv) {
      const folgit::Foliation f = folgit::validate(read_field(file));
      const folgit::HomogPoly F = folgit::parse_curve(curve);
      const auto h = folgit::is_invariant_curve(f, F);
      Json j;
      j["curve"] = folgit::to_string(F);
      j["invariant"] = h.has_value();
      j["cofactor"] = h ? Json(folgit::to_string(*h)) : Json(nullptr);
      std::cout << j.dump(2) << "\n";
      return 0;
    }
    if (*fam) {
      std::cout << folgit::print_foliation(folgit::make_family(family_name, *degree, k, master_seed(seed)));
      return 0;
    }
    if (*verify) {
      const std::uint64_t master = master_seed(seed);
      std::vector<folgit::CheckReport> reports;
      if (check_id.empty()) {
        reports = folgit::run_all(master);
      } else {
        std::size_t index = folgit::kRegistry.size();
        for (std::size_t i = 0; i < folgit::kRegistry.size(); ++i)
          if (folgit::kRegistry[i].id == check_id) index = i;
        if (index == folgit::kRegistry.size()) throw folgit::Error("UnknownCheck", "unknown check " + check_id);
        reports.push_back(folgit::run_check(folgit::check_spec(check_id, folgit::check_seed(master, index))));
      }
      Json out;
      out["master_seed"] = std::to_string(master);
      Json arr = Json::array();
      bool ok = true;
      for (const auto& r : reports) {
        Json entry = folgit::to_json(folgit::check_spec(r.id, 0));
        entry.erase("seed");
        entry.update(folgit::to_json(r, timing));
        arr.push_back(entry);
        ok = ok && r.passed();
      }
      out["checks"] = arr;
      std::cout << out.dump(2) << "\n";
      return ok ? 0 : kExitFailed;
    }
  } catch (const folgit::Error& e) {
    std::cerr << "error [" << e.kind() << "]: " << e.what() << "\n";
    return kExitInvalid;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
