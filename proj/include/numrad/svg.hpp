#pragma once

// Static SVG 1.1 picture of a numerical range: axes, the boundary polygon,
// and the circles |z| = w(A) and |z| = ||A||.

#include <algorithm>
#include <cmath>
#include <sstream>
#include <string>

#include "numrad/format.hpp"
#include "numrad/numrange.hpp"

namespace numrad {

inline std::string render_range_svg(const RangeSummary& s, int pixels = 600) {
  double extent = std::max(s.norm, s.radius);
  for (const auto& b : s.boundary) extent = std::max({extent, std::abs(b.point.real()), std::abs(b.point.imag())});
  if (!(extent > 0.0)) extent = 1.0;
  extent *= 1.1;

  const double half = pixels / 2.0;
  const double scale = half / extent;
  auto px = [&](double x) { return format_real(half + x * scale, false); };
  auto py = [&](double y) { return format_real(half - y * scale, false); };
  auto len = [&](double d) { return format_real(d * scale, false); };

  std::ostringstream o;
  o << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
    << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << pixels << "\" height=\""
    << pixels << "\" viewBox=\"0 0 " << pixels << ' ' << pixels << "\">\n"
    << "  <rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n"
    << "  <line x1=\"0\" y1=\"" << half << "\" x2=\"" << pixels << "\" y2=\"" << half
    << "\" stroke=\"#999\" stroke-width=\"1\"/>\n"
    << "  <line x1=\"" << half << "\" y1=\"0\" x2=\"" << half << "\" y2=\"" << pixels
    << "\" stroke=\"#999\" stroke-width=\"1\"/>\n"
    << "  <circle cx=\"" << half << "\" cy=\"" << half << "\" r=\"" << len(s.norm)
    << "\" fill=\"none\" stroke=\"#d62728\" stroke-dasharray=\"6,4\"><title>norm "
    << format_real(s.norm, false) << "</title></circle>\n"
    << "  <circle cx=\"" << half << "\" cy=\"" << half << "\" r=\"" << len(s.radius)
    << "\" fill=\"none\" stroke=\"#1f77b4\"><title>w "
    << format_real(s.radius, false) << "</title></circle>\n"
    << "  <polygon fill=\"#2ca02c\" fill-opacity=\"0.25\" stroke=\"#2ca02c\" points=\"";
  for (std::size_t k = 0; k < s.boundary.size(); ++k) {
    if (k) o << ' ';
    o << px(s.boundary[k].point.real()) << ',' << py(s.boundary[k].point.imag());
  }
  o << "\"/>\n</svg>\n";
  return o.str();
}

}  // namespace numrad
