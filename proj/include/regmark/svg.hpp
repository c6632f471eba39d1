#pragma once

#include "regmark/arrangement.hpp"

#include <string>

namespace regmark {

// Deterministic SVG picture of an arrangement: viewport fitted to the marks
// (pair intersections plus a unit box when P is empty) with a 10% margin,
// lines clipped to the viewport, marks drawn as filled circles, centrexes
// highlighted, and the (n k s) triple as caption.
struct RenderSpec {
  int canvas = 640;           // drawing area, square
  int caption_band = 40;      // extra height for the caption
  bool show_caption = true;
};

std::string render_svg(const Arrangement& a, const RenderSpec& spec = {});

void save_svg(const Arrangement& a, const std::string& path,
              const RenderSpec& spec = {});

}  // namespace regmark
