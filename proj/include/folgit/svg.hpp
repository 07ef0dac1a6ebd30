#ifndef FOLGIT_SVG_HPP
#define FOLGIT_SVG_HPP

#include <folgit/hull.hpp>
#include <folgit/weights.hpp>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>

namespace folgit {

struct SvgOptions {
  std::optional<WeightDiagram> active;  // highlighted subset
  bool hull = false;                    // hull of the active subset (or of the full diagram)
  bool crosshair = true;
  double unit = 48;  // pixels per lattice step
  std::string title;
};

namespace detail {

inline std::string num12(double v) {
  if (v == 0) v = 0;  // no negative zero
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

/// Display embedding A L1 + B L2 with L1 = (1, 0), L2 = (-1/2, sqrt(3)/2);
/// the y axis is flipped for SVG.
inline std::pair<double, double> embed(const WeightCovector& w, double unit) {
  static const double r3 = std::sqrt(3.0) / 2;
  return {unit * (static_cast<double>(w.a) - 0.5 * static_cast<double>(w.b)), -unit * r3 * static_cast<double>(w.b)};
}

inline std::string xml_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      default: out += c;
    }
  }
  return out;
}

}  // namespace detail

/// Weight diagram as an SVG 1.1 document. Points of multiplicity two or
/// more carry class "double" and an outer ring.
inline std::string render_svg(const WeightDiagram& dg, const SvgOptions& opt = {}) {
  const auto mult = dg.multiplicities();
  std::set<WeightCovector> active;
  if (opt.active)
    for (const auto& e : opt.active->entries) active.insert(e.weight);

  double minx = 0, maxx = 0, miny = 0, maxy = 0;
  for (const auto& [w, n] : mult) {
    const auto [x, y] = detail::embed(w, opt.unit);
    minx = std::min(minx, x);
    maxx = std::max(maxx, x);
    miny = std::min(miny, y);
    maxy = std::max(maxy, y);
  }
  const double pad = opt.unit;
  minx -= pad;
  miny -= pad;
  maxx += pad;
  maxy += pad;
  using detail::num12;

  std::ostringstream out;
  out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << num12(maxx - minx) << "\" height=\""
      << num12(maxy - miny) << "\" viewBox=\"" << num12(minx) << " " << num12(miny) << " " << num12(maxx - minx) << " "
      << num12(maxy - miny) << "\">\n";
  const std::string title = opt.title.empty() ? "Weight diagram, degree " + std::to_string(dg.degree) : opt.title;
  out << "  <title>" << detail::xml_escape(title) << "</title>\n";
  out << "  <style>.point{fill:#444}.active{fill:#c0392b}.double{stroke:#1f4e9a;stroke-width:2;fill:none}"
         ".hull{fill:#c0392b;fill-opacity:0.12;stroke:#c0392b;stroke-width:1.5}"
         ".axis{stroke:#888;stroke-width:1;stroke-dasharray:4 3}</style>\n";

  if (opt.crosshair) {
    out << "  <g class=\"crosshair\">\n";
    out << "    <line class=\"axis\" x1=\"" << num12(minx) << "\" y1=\"0\" x2=\"" << num12(maxx) << "\" y2=\"0\"/>\n";
    out << "    <line class=\"axis\" x1=\"0\" y1=\"" << num12(miny) << "\" x2=\"0\" y2=\"" << num12(maxy) << "\"/>\n";
    out << "  </g>\n";
  }
  if (opt.hull) {
    std::vector<WeightCovector> pts;
    for (const auto& [w, n] : mult)
      if (!opt.active || active.count(w)) pts.push_back(w);
    const auto hull = detail::convex_hull(pts);
    out << "  <polygon class=\"hull\" points=\"";
    for (std::size_t i = 0; i < hull.size(); ++i) {
      const auto [x, y] = detail::embed(hull[i], opt.unit);
      out << (i ? " " : "") << num12(x) << "," << num12(y);
    }
    out << "\"/>\n";
  }
  out << "  <g class=\"weights\">\n";
  for (const auto& [w, n] : mult) {
    const auto [x, y] = detail::embed(w, opt.unit);
    const bool is_active = active.count(w) > 0;
    const std::string cov = std::to_string(w.a) + "," + std::to_string(w.b);
    out << "    <circle class=\"point" << (is_active ? " active" : "") << "\" data-cov=\"" << cov << "\" data-mult=\"" << n
        << "\" cx=\"" << num12(x) << "\" cy=\"" << num12(y) << "\" r=\"" << num12(opt.unit * 0.08) << "\"/>\n";
    if (n >= 2) {
      out << "    <circle class=\"double\" data-cov=\"" << cov << "\" data-mult=\"" << n << "\" cx=\"" << num12(x)
          << "\" cy=\"" << num12(y) << "\" r=\"" << num12(opt.unit * 0.18) << "\"/>\n";
    }
  }
  out << "  </g>\n";
  out << "</svg>\n";
  return out.str();
}

}  // namespace folgit

#endif  // FOLGIT_SVG_HPP
