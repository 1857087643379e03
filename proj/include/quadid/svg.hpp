#pragma once

#include "quadid/identities.hpp"

#include <string>

namespace quadid {

struct FigureStyle {
  double width = 640;   // canvas width in px; height follows the aspect ratio
  double margin = 56;
  std::string outline = "#0000ff";
  std::string bd_split = "#0000ff";  // triangles ABD, BCD
  std::string ac_split = "#333300";  // triangles ACD, ABC
  double fill_opacity = 0.1;
};

/// SVG 1.1 drawing of quadrilateral ABCD: outline, the two diagonal splits
/// shaded in two tones, vertex labels, and the four signed-area coefficients.
/// Model y points up; the drawing flips it.
std::string render_figure(const QuadConfig<Rational>& q, const FigureStyle& style = {});

}  // namespace quadid
