#include "helpers.hpp"

#include <gtest/gtest.h>

#include <array>
#include <cstdio>
#include <fstream>

using namespace testing_helpers;

namespace {

struct CliRun {
  int code;
  std::string out;
};

CliRun cli(const std::string& args) {
  const std::string cmd = std::string(FOLGIT_CLI) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  std::string out;
  std::array<char, 4096> buf{};
  std::size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), n);
  const int status = pclose(pipe);
  return {WEXITSTATUS(status), out};
}

std::string sample(const std::string& name) { return std::string(FOLGIT_SAMPLES) + "/" + name; }

}  // namespace

TEST(Parser, Expressions) {
  EXPECT_EQ(parse_polynomial("(x+y)^2 - 2*x*y"), P3("x^2+y^2"));
  EXPECT_EQ(parse_polynomial("-x*-y"), P3("x*y"));
  EXPECT_EQ(parse_polynomial(" 3/6 * z "), Rational(1, 2) * P3("z"));
  EXPECT_TRUE(parse_polynomial("x - x").is_zero());
}

TEST(Parser, ErrorsCarryPositions) {
  try {
    parse_polynomial("x + * y");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 1);
    EXPECT_EQ(e.column(), 5);
  }
  try {
    parse_source("degree: 2\nP: x^2\nQ: y^2 + w\nR: z^2\n");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 3);
    EXPECT_EQ(e.column(), 10);
  }
  EXPECT_THROW(parse_polynomial("1/0"), ParseError);
  EXPECT_THROW(parse_polynomial("(x"), ParseError);
}

TEST(Parser, SourceStructure) {
  EXPECT_THROW(parse_source("degree: 2\nP: x^2\nQ: y^2\n"), ParseError);
  EXPECT_THROW(parse_source("degree: 2\nP: x^2\nP: x^2\nQ: y^2\nR: 0\n"), ParseError);
  EXPECT_THROW(parse_source("degree: 2\nS: x^2\nP: x^2\nQ: y^2\nR: 0\n"), ParseError);
  EXPECT_THROW(parse_source("degree: two\nP: x^2\nQ: y^2\nR: 0\n"), ParseError);
  const FoliationSource s = parse_source("# comment\ndegree: 2  # trailing\n\nP: x^2\nQ: y^2\nR: z^2\n");
  EXPECT_EQ(s.degree, 2);
}

TEST(Parser, DegreeChecks) {
  EXPECT_THROW(parse_foliation("degree: 2\nP: x^2 + y\nQ: y^2\nR: z^2\n"), Inhomogeneous);
  EXPECT_THROW(parse_foliation("degree: 2\nP: x^3\nQ: y^3\nR: z^3\n"), DegreeMismatch);
  EXPECT_THROW(parse_foliation("degree: 2\nP: x*y\nQ: x*z\nR: x^2\n"), CommonFactor);
  EXPECT_THROW(parse_curve("x + 1"), Inhomogeneous);
}

TEST(Parser, PrintRoundTrip) {
  Rng rng(89);
  for (int t = 0; t < 40; ++t) {
    const Foliation f = random_sparse(rng, static_cast<int>(uniform_int(rng, 1, 4)), 1, 2);
    EXPECT_EQ(parse_foliation(print_foliation(f)), f);
  }
  EXPECT_EQ(print_foliation(triangle()), "degree: 2\nP: y*z\nQ: x*z\nR: x*y\n");
}

TEST(Report, RoundTrip) {
  Rng rng(97);
  std::vector<VectorField> inputs{field(2, "y*z", "x*z", "x*y"), field(1, "x", "z", "2*y"),
                                  field(2, "y^2", "x*y", "x*z"), field(3, "y^3", "z^3", "y^3")};
  for (int t = 0; t < 10; ++t) inputs.push_back(random_sparse(rng, 2, 1, 2).rep());
  for (const auto& v : inputs) {
    const AnalysisReport r = analyze(v);
    const std::string text = emit_report(r);
    const AnalysisReport back = parse_report(text);
    EXPECT_EQ(back, r) << text;
    EXPECT_EQ(emit_report(back), text);
  }
}

TEST(Report, Contents) {
  const AnalysisReport r = analyze(field(2, "x^2", "y^2", "z^2"));
  const Json j = Json::parse(emit_report(r));
  EXPECT_EQ(j.at("schema_version"), 1);
  EXPECT_EQ(j.at("singular_points").size(), 7u);
  EXPECT_EQ(j.at("total_milnor"), 7);
  EXPECT_EQ(j.at("sl3_verdict"), "stable");
  EXPECT_EQ(j.at("diagram").at("entries"), 15);
}

TEST(Report, TamperedCertificateRejected) {
  const AnalysisReport r = analyze(field(3, "y^3", "z^3", "y^3"));
  ASSERT_TRUE(r.torus_certificate.has_value());
  Json j = Json::parse(emit_report(r));
  j["torus_certificate"]["mu"] = r.torus_certificate->mu + 1;
  EXPECT_THROW(parse_report(j.dump()), ReportError);
  EXPECT_THROW(parse_report("{"), ReportError);
  j = Json::parse(emit_report(r));
  j["schema_version"] = 2;
  EXPECT_THROW(parse_report(j.dump()), ReportError);
}

TEST(Svg, DoubleOriginOnlyWhenPresent) {
  const std::string one = render_svg(weight_diagram(1));
  EXPECT_NE(one.find("class=\"double\" data-cov=\"0,0\""), std::string::npos);
  const std::string three = render_svg(weight_diagram(3));
  EXPECT_EQ(three.find("class=\"double\" data-cov=\"0,0\""), std::string::npos);
  EXPECT_NE(render_svg(weight_diagram(4)).find("class=\"double\" data-cov=\"0,0\""), std::string::npos);
}

TEST(Svg, DeterministicAndHighlightsActive) {
  SvgOptions opt;
  opt.active = active_diagram(triangle());
  opt.hull = true;
  const std::string a = render_svg(weight_diagram(2), opt), b = render_svg(weight_diagram(2), opt);
  EXPECT_EQ(a, b);
  EXPECT_NE(a.find("class=\"point active\""), std::string::npos);
  EXPECT_NE(a.find("<polygon class=\"hull\""), std::string::npos);
  EXPECT_EQ(a.rfind("</svg>\n"), a.size() - 7);
}

TEST(Cli, AnalyzeSample) {
  const CliRun r = cli("analyze " + sample("triangle.fol"));
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(parse_report(r.out), analyze(field(2, "y*z", "x*z", "x*y")));
}

TEST(Cli, ExitCodes) {
  EXPECT_EQ(cli("analyze /nonexistent.fol").code, 2);
  EXPECT_EQ(cli("mu --input " + sample("triangle.fol") + " --lambda 1,2").code, 2);
  EXPECT_EQ(cli("frobnicate").code, 2);
  EXPECT_EQ(cli("verify --check DIM").code, 0);
  EXPECT_EQ(cli("verify --check NOPE").code, 2);
}

TEST(Cli, MuAndInvariant) {
  const CliRun mu = cli("mu --input " + sample("xddd.fol") + " --lambda 2,-1");
  ASSERT_EQ(mu.code, 0);
  EXPECT_GT(Json::parse(mu.out).at("mu").get<long>(), 0);
  const CliRun inv = cli("invariant --curve z " + sample("xdd0.fol"));
  ASSERT_EQ(inv.code, 0);
  EXPECT_TRUE(Json::parse(inv.out).contains("invariant"));
}

TEST(Cli, SingularitiesReportsIrrationalFactor) {
  const CliRun r = cli("singularities " + sample("irrational.fol"));
  ASSERT_EQ(r.code, 0);
  const Json j = Json::parse(r.out);
  EXPECT_EQ(j.at("unresolved_factors").size(), 1u);
  EXPECT_EQ(j.at("residual_milnor"), 2);
}

TEST(Cli, FamilyOutputParses) {
  const CliRun r = cli("family --name xd --degree 3 --k 2 --seed 4");
  ASSERT_EQ(r.code, 0);
  const Foliation f = parse_foliation(r.out);
  EXPECT_EQ(f, make_family("xd", 3, 2, 4));
  EXPECT_EQ(cli("family --name xd --degree 3 --k 2 --seed 4").out, r.out);
}

TEST(Cli, DiagramSvgFile) {
  const std::string path = std::string(::testing::TempDir()) + "/diagram_d1.svg";
  const CliRun r = cli("diagram --degree 1 --svg " + path);
  ASSERT_EQ(r.code, 0);
  std::ifstream in(path);
  const std::string svg((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  EXPECT_EQ(svg, render_svg(weight_diagram(1)));
  EXPECT_EQ(Json::parse(r.out).at("count"), 8);
}

TEST(Cli, VerifyOutputIsStable) {
  const CliRun a = cli("verify --check XDDD --seed 3"), b = cli("verify --check XDDD --seed 3");
  EXPECT_EQ(a.code, 0);
  EXPECT_EQ(a.out, b.out);
  EXPECT_EQ(a.out.find("elapsed_ms"), std::string::npos);
}
