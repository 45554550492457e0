// Copyright 2026 The snakelp Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <optional>
#include <string>

#include "snakelp/image.hpp"

namespace snakelp {

enum class ShapeKind { arrow, heart, rectangle, star, multi };

std::optional<ShapeKind> parse_shape_kind(const std::string& name);
std::string shape_kind_name(ShapeKind kind);

// Renders a binary test image (background 0, foreground 255) with the shape
// centered and spanning 40-70% of the smaller dimension.  `multi` places a
// star, an arrow, and a rectangle as three disjoint components.
//
// Geometry, fixed so images are reproducible:
//   rectangle  axis-aligned box, rows [round(.25h), round(.75h)] x
//              cols [round(.25w), round(.75w)], both ends inclusive
//   heart      implicit curve (x^2 + y^2 - 1)^3 - x^2 y^3 <= 0, scaled by
//              0.27*min(w,h), y axis flipped to screen coordinates
//   star       10-vertex star polygon, outer radius 0.35*min(w,h), inner
//              0.14*min(w,h), one point straight up
//   arrow      7-vertex shaft-plus-head polygon pointing right, length
//              0.65*min(w,h)
// Polygons are filled by an even-odd scanline rule sampled at pixel centers;
// boundary pixels (the Bresenham outline of each polygon edge) count as
// foreground.
//
// Throws TooSmall when width or height is below 32.
GrayImage generate_shape(ShapeKind kind, int width, int height);

}  // namespace snakelp
