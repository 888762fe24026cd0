#pragma once

#include "tritile/tiling.hpp"

#include <string>
#include <utility>
#include <vector>

namespace tritile {

struct RenderStyle {
    double scale = 40.0;         // pixels per length unit
    double stroke_width = 1.5;   // pixels
    bool vertex_glyphs = true;   // mark pi / 2pi / corner vertices
    bool segment_overlay = false;  // draw maximal-segment carriers
    std::string color_a = "#c1554d";
    std::string color_b = "#4472b0";
    std::string color_c = "#49873e";
};

// Overlay decorations, in model coordinates: arrows (e.g. graph links) and
// paired-point marks (e.g. matched tiles, drawn as dashed connectors).
std::string render_svg(const Tiling& t, const RenderStyle& style = {},
                       const std::vector<std::pair<Vec2, Vec2>>& arrows = {},
                       const std::vector<std::pair<Vec2, Vec2>>& pair_marks = {});

}  // namespace tritile
