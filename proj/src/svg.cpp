#include "quadid/svg.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <sstream>

namespace quadid {

namespace {

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", v);
  return buf;
}

std::string escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '&': out += "&amp;"; break;
      default: out += c;
    }
  }
  return out;
}

struct Frame {
  double min_x, max_y, scale, margin;
  double x(double mx) const { return margin + (mx - min_x) * scale; }
  double y(double my) const { return margin + (max_y - my) * scale; }
};

}  // namespace

std::string render_figure(const QuadConfig<Rational>& q, const FigureStyle& style) {
  const std::array<const Point2<Rational>*, 4> verts{&q.a, &q.b, &q.c, &q.d};
  std::array<std::pair<double, double>, 4> p;
  for (int i = 0; i < 4; ++i) p[i] = {verts[i]->x.to_double(), verts[i]->y.to_double()};

  double min_x = p[0].first, max_x = min_x, min_y = p[0].second, max_y = min_y;
  for (const auto& [x, y] : p) {
    min_x = std::min(min_x, x);
    max_x = std::max(max_x, x);
    min_y = std::min(min_y, y);
    max_y = std::max(max_y, y);
  }
  const double span_x = max_x - min_x;
  const double span_y = max_y - min_y;
  const double extent = std::max(span_x, span_y);
  const double inner = style.width - 2 * style.margin;
  const double scale = extent > 0 ? inner / extent : 1.0;
  const Frame f{min_x, max_y, scale, style.margin};
  const double height = 2 * style.margin + span_y * scale + 90;  // room for the area legend

  auto xy = [&](int i) { return num(f.x(p[i].first)) + "," + num(f.y(p[i].second)); };
  auto triangle = [&](int i, int j, int k, const std::string& color) {
    return "  <polygon points=\"" + xy(i) + " " + xy(j) + " " + xy(k) + "\" fill=\"" + color +
           "\" fill-opacity=\"" + num(style.fill_opacity) + "\" stroke=\"" + color +
           "\" stroke-width=\"0.5\"/>\n";
  };

  std::ostringstream os;
  os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
     << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << num(style.width)
     << "\" height=\"" << num(height) << "\" viewBox=\"0 0 " << num(style.width) << ' '
     << num(height) << "\">\n"
     << "  <rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";

  // Split along BD: ABD + BCD.
  os << "  <g id=\"split-bd\">\n"
     << "  " << triangle(0, 1, 3, style.bd_split) << "  " << triangle(1, 2, 3, style.bd_split)
     << "  </g>\n";
  // Split along AC: ACD + ABC.
  os << "  <g id=\"split-ac\">\n"
     << "  " << triangle(0, 2, 3, style.ac_split) << "  " << triangle(0, 1, 2, style.ac_split)
     << "  </g>\n";

  os << "  <path id=\"outline\" d=\"M " << xy(0) << " L " << xy(1) << " L " << xy(2) << " L "
     << xy(3) << " Z\" fill=\"none\" stroke=\"" << style.outline << "\" stroke-width=\"2\"/>\n";

  static constexpr const char* kLabels[] = {"A", "B", "C", "D"};
  // Push each label away from the centroid so it clears the outline.
  const double cx = (p[0].first + p[1].first + p[2].first + p[3].first) / 4;
  const double cy = (p[0].second + p[1].second + p[2].second + p[3].second) / 4;
  for (int i = 0; i < 4; ++i) {
    double dx = p[i].first - cx, dy = p[i].second - cy;
    const double len = std::max(std::abs(dx) + std::abs(dy), 1e-12);
    dx = dx / len * 14;
    dy = dy / len * 14;
    const double lx = f.x(p[i].first) + dx;
    const double ly = f.y(p[i].second) - dy + 5;
    os << "  <circle cx=\"" << num(f.x(p[i].first)) << "\" cy=\"" << num(f.y(p[i].second))
       << "\" r=\"2.5\" fill=\"black\"/>\n"
       << "  <text class=\"vertex\" x=\"" << num(lx) << "\" y=\"" << num(ly)
       << "\" font-family=\"serif\" font-style=\"italic\" font-size=\"16\" "
          "text-anchor=\"middle\">"
       << kLabels[i] << "</text>\n";
    if (i == 3) {
      os << "  <text class=\"note\" x=\"" << num(lx) << "\" y=\"" << num(ly + 16)
         << "\" font-family=\"serif\" font-size=\"12\" text-anchor=\"middle\">"
         << "(soon to be O)</text>\n";
    }
  }

  const auto k = area_quadruple(q);
  const std::pair<const char*, const Rational*> legend[] = {
      {"K_BCD", &k.k_bcd}, {"K_ACD", &k.k_acd}, {"K_ABD", &k.k_abd}, {"K_ABC", &k.k_abc}};
  double ly = height - 80;
  for (const auto& [name, value] : legend) {
    os << "  <text class=\"area\" x=\"" << num(style.margin) << "\" y=\"" << num(ly)
       << "\" font-family=\"monospace\" font-size=\"13\">" << name << " = "
       << escape(value->str()) << "</text>\n";
    ly += 18;
  }
  os << "</svg>\n";
  return os.str();
}

}  // namespace quadid
