#pragma once

/**
 * @file svg_plot.hpp
 * @brief Static SVG picture of a rank-2 computation: the dual cone, the
 *        Newton polyhedron, its scaled and shifted copy, lattice points and
 *        the minimal generators.
 *
 * Geometry is exact up to the final conversion to screen coordinates.
 */

#include "toricideal/newton.hpp"

#include <algorithm>
#include <cmath>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace toricideal {

struct PlotInput {
  RationalCone dual;
  std::optional<NewtonPolyhedron> newton;  // Newt(a)
  std::optional<NewtonPolyhedron> shifted; // w + t Newt(a), or w + dual for pairs
  std::vector<LatticeVector> generators;
  std::string title;
};

namespace detail {

struct Pt {
  double x, y;
};

/// Clips a convex polygon to {p : a x + b y >= c}.
inline std::vector<Pt> clip(const std::vector<Pt>& poly, double a, double b, double c) {
  std::vector<Pt> out;
  const std::size_t n = poly.size();
  for (std::size_t i = 0; i < n; ++i) {
    const Pt& p = poly[i];
    const Pt& q = poly[(i + 1) % n];
    double fp = a * p.x + b * p.y - c, fq = a * q.x + b * q.y - c;
    if (fp >= 0) out.push_back(p);
    if ((fp >= 0) != (fq >= 0)) {
      double s = fp / (fp - fq);
      out.push_back({p.x + s * (q.x - p.x), p.y + s * (q.y - p.y)});
    }
  }
  return out;
}

inline std::vector<Pt> window_polygon(const std::vector<Facet>& facets, double lo_x, double hi_x,
                                      double lo_y, double hi_y) {
  std::vector<Pt> poly{{lo_x, lo_y}, {hi_x, lo_y}, {hi_x, hi_y}, {lo_x, hi_y}};
  for (const auto& f : facets) {
    poly = clip(poly, f.normal[0].get_d(), f.normal[1].get_d(), f.offset.raw().get_d());
    if (poly.empty()) break;
  }
  return poly;
}

}  // namespace detail

inline std::string render_svg(const PlotInput& in) {
  if (in.dual.rank() != 2) throw PreconditionError("plot: only rank 2 is supported");
  // window covering the origin, every vertex and every generator
  double lo_x = 0, hi_x = 0, lo_y = 0, hi_y = 0;
  auto cover = [&](double x, double y) {
    lo_x = std::min(lo_x, x);
    hi_x = std::max(hi_x, x);
    lo_y = std::min(lo_y, y);
    hi_y = std::max(hi_y, y);
  };
  for (const auto* p : {in.newton ? &*in.newton : nullptr, in.shifted ? &*in.shifted : nullptr}) {
    if (!p) continue;
    for (const auto& v : p->vertices()) cover(v[0].raw().get_d(), v[1].raw().get_d());
  }
  for (const auto& g : in.generators) cover(g[0].get_d(), g[1].get_d());
  lo_x = std::floor(lo_x) - 2;
  lo_y = std::floor(lo_y) - 2;
  hi_x = std::max(std::ceil(hi_x) + 3, lo_x + 8);
  hi_y = std::max(std::ceil(hi_y) + 3, lo_y + 8);

  const double unit = 40, margin = 30;
  const double width = (hi_x - lo_x) * unit + 2 * margin;
  const double height = (hi_y - lo_y) * unit + 2 * margin + 20;
  auto sx = [&](double x) { return margin + (x - lo_x) * unit; };
  auto sy = [&](double y) { return height - margin - (y - lo_y) * unit; };

  std::ostringstream os;
  os.setf(std::ios::fixed);
  os.precision(2);
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\"" << height
     << "\" viewBox=\"0 0 " << width << ' ' << height << "\">\n";
  os << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  os << "<text x=\"" << margin << "\" y=\"18\" font-family=\"sans-serif\" font-size=\"14\">" << in.title
     << "</text>\n";

  auto polygon = [&](const std::vector<detail::Pt>& poly, const char* fill, const char* stroke,
                     const char* extra) {
    if (poly.size() < 3) return;
    os << "<polygon points=\"";
    for (const auto& p : poly) os << sx(p.x) << ',' << sy(p.y) << ' ';
    os << "\" fill=\"" << fill << "\" stroke=\"" << stroke << "\" " << extra << "/>\n";
  };

  std::vector<Facet> cone_facets;
  for (const auto& n : in.dual.halfspaces()) cone_facets.push_back({n, Rat(0)});
  polygon(detail::window_polygon(cone_facets, lo_x, hi_x, lo_y, hi_y), "#dde8f6", "#6a8fc8",
          "stroke-width=\"1\"");
  if (in.newton) {
    polygon(detail::window_polygon(in.newton->facets(), lo_x, hi_x, lo_y, hi_y), "#f6e3c4",
            "#c8893a", "stroke-width=\"2\"");
  }
  if (in.shifted) {
    polygon(detail::window_polygon(in.shifted->facets(), lo_x, hi_x, lo_y, hi_y), "none",
            "#b03030", "stroke-width=\"2\" stroke-dasharray=\"6,4\"");
  }

  // axes and lattice
  os << "<line x1=\"" << sx(lo_x) << "\" y1=\"" << sy(0) << "\" x2=\"" << sx(hi_x) << "\" y2=\"" << sy(0)
     << "\" stroke=\"#888\"/>\n";
  os << "<line x1=\"" << sx(0) << "\" y1=\"" << sy(lo_y) << "\" x2=\"" << sx(0) << "\" y2=\"" << sy(hi_y)
     << "\" stroke=\"#888\"/>\n";
  for (long x = static_cast<long>(lo_x); x <= static_cast<long>(hi_x); ++x) {
    for (long y = static_cast<long>(lo_y); y <= static_cast<long>(hi_y); ++y) {
      bool in_dual = in.dual.contains(lattice({x, y}));
      os << "<circle cx=\"" << sx(x) << "\" cy=\"" << sy(y) << "\" r=\"" << (in_dual ? 2.5 : 1.5)
         << "\" fill=\"" << (in_dual ? "#333" : "#bbb") << "\"/>\n";
    }
  }
  for (const auto& g : in.generators) {
    double x = g[0].get_d(), y = g[1].get_d();
    os << "<circle cx=\"" << sx(x) << "\" cy=\"" << sy(y)
       << "\" r=\"6\" fill=\"none\" stroke=\"#1a7a1a\" stroke-width=\"2.5\"/>\n";
    os << "<text x=\"" << sx(x) + 8 << "\" y=\"" << sy(y) - 8
       << "\" font-family=\"sans-serif\" font-size=\"11\" fill=\"#1a7a1a\">" << g.str() << "</text>\n";
  }
  os << "</svg>\n";
  return os.str();
}

}  // namespace toricideal
