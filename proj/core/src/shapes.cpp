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

#include "snakelp/shapes.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <vector>

namespace snakelp {

namespace {

constexpr std::uint8_t kForeground = 255;
constexpr double kPi = 3.14159265358979323846;

struct Vertex {
  double x;  // column axis
  double y;  // row axis
};

void plot(GrayImage& img, int row, int col) {
  if (row >= 0 && row < img.height && col >= 0 && col < img.width) {
    img.at(row, col) = kForeground;
  }
}

// Bresenham over the polygon outline so boundary pixels are foreground.
void draw_segment(GrayImage& img, const Vertex& a, const Vertex& b) {
  int x0 = static_cast<int>(std::lround(a.x));
  int y0 = static_cast<int>(std::lround(a.y));
  const int x1 = static_cast<int>(std::lround(b.x));
  const int y1 = static_cast<int>(std::lround(b.y));
  const int dx = std::abs(x1 - x0);
  const int dy = -std::abs(y1 - y0);
  const int sx = x0 < x1 ? 1 : -1;
  const int sy = y0 < y1 ? 1 : -1;
  int err = dx + dy;
  while (true) {
    plot(img, y0, x0);
    if (x0 == x1 && y0 == y1) {
      break;
    }
    const int e2 = 2 * err;
    if (e2 >= dy) {
      err += dy;
      x0 += sx;
    }
    if (e2 <= dx) {
      err += dx;
      y0 += sy;
    }
  }
}

// Even-odd scanline fill sampled at pixel centers (col+0.5, row+0.5).
void fill_polygon(GrayImage& img, const std::vector<Vertex>& verts) {
  const std::size_t n = verts.size();
  std::vector<double> crossings;
  for (int row = 0; row < img.height; ++row) {
    const double y = row + 0.5;
    crossings.clear();
    for (std::size_t i = 0; i < n; ++i) {
      const Vertex& p = verts[i];
      const Vertex& q = verts[(i + 1) % n];
      // Half-open edge interval avoids double-counting shared vertices.
      if ((p.y <= y && q.y > y) || (q.y <= y && p.y > y)) {
        const double t = (y - p.y) / (q.y - p.y);
        crossings.push_back(p.x + t * (q.x - p.x));
      }
    }
    std::sort(crossings.begin(), crossings.end());
    for (std::size_t i = 0; i + 1 < crossings.size(); i += 2) {
      const int first = static_cast<int>(std::ceil(crossings[i] - 0.5));
      const int last = static_cast<int>(std::floor(crossings[i + 1] - 0.5));
      for (int col = std::max(0, first); col <= std::min(img.width - 1, last); ++col) {
        img.at(row, col) = kForeground;
      }
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    draw_segment(img, verts[i], verts[(i + 1) % n]);
  }
}

void fill_rectangle(GrayImage& img, double cx, double cy, double half_w, double half_h) {
  const int r0 = static_cast<int>(std::lround(cy - half_h));
  const int r1 = static_cast<int>(std::lround(cy + half_h));
  const int c0 = static_cast<int>(std::lround(cx - half_w));
  const int c1 = static_cast<int>(std::lround(cx + half_w));
  for (int r = std::max(0, r0); r <= std::min(img.height - 1, r1); ++r) {
    for (int c = std::max(0, c0); c <= std::min(img.width - 1, c1); ++c) {
      img.at(r, c) = kForeground;
    }
  }
}

void fill_heart(GrayImage& img, double cx, double cy, double scale) {
  for (int r = 0; r < img.height; ++r) {
    for (int c = 0; c < img.width; ++c) {
      const double x = (c - cx) / scale;
      const double y = -(r - cy) / scale;  // math y up, screen y down
      const double q = x * x + y * y - 1.0;
      if (q * q * q - x * x * y * y * y <= 0.0) {
        img.at(r, c) = kForeground;
      }
    }
  }
}

std::vector<Vertex> star_vertices(double cx, double cy, double outer, double inner) {
  std::vector<Vertex> verts;
  verts.reserve(10);
  for (int i = 0; i < 10; ++i) {
    const double radius = (i % 2 == 0) ? outer : inner;
    const double angle = -kPi / 2.0 + i * kPi / 5.0;
    verts.push_back({cx + radius * std::cos(angle), cy + radius * std::sin(angle)});
  }
  return verts;
}

std::vector<Vertex> arrow_vertices(double cx, double cy, double length) {
  const double shaft_half = 0.16 * length;
  const double head_half = 0.32 * length;
  const double head_len = 0.42 * length;
  const double x_tail = cx - length / 2.0;
  const double x_tip = cx + length / 2.0;
  const double x_base = x_tip - head_len;
  return {
      {x_tail, cy - shaft_half}, {x_base, cy - shaft_half}, {x_base, cy - head_half},
      {x_tip, cy},               {x_base, cy + head_half},  {x_base, cy + shaft_half},
      {x_tail, cy + shaft_half},
  };
}

}  // namespace

std::optional<ShapeKind> parse_shape_kind(const std::string& name) {
  if (name == "arrow") return ShapeKind::arrow;
  if (name == "heart") return ShapeKind::heart;
  if (name == "rectangle") return ShapeKind::rectangle;
  if (name == "star") return ShapeKind::star;
  if (name == "multi") return ShapeKind::multi;
  return std::nullopt;
}

std::string shape_kind_name(ShapeKind kind) {
  switch (kind) {
    case ShapeKind::arrow: return "arrow";
    case ShapeKind::heart: return "heart";
    case ShapeKind::rectangle: return "rectangle";
    case ShapeKind::star: return "star";
    case ShapeKind::multi: return "multi";
  }
  return "unknown";
}

GrayImage generate_shape(ShapeKind kind, int width, int height) {
  if (width < 32 || height < 32) {
    throw TooSmall("shape images need width and height of at least 32 pixels");
  }
  GrayImage img(width, height, 0);
  const double cx = (width - 1) / 2.0;
  const double cy = (height - 1) / 2.0;
  const double unit = std::min(width, height);

  switch (kind) {
    case ShapeKind::rectangle: {
      // Documented corner formula: rows [round(.25h), round(.75h)],
      // cols [round(.25w), round(.75w)], inclusive.
      const int r0 = static_cast<int>(std::lround(0.25 * height));
      const int r1 = static_cast<int>(std::lround(0.75 * height));
      const int c0 = static_cast<int>(std::lround(0.25 * width));
      const int c1 = static_cast<int>(std::lround(0.75 * width));
      for (int r = r0; r <= r1; ++r) {
        for (int c = c0; c <= c1; ++c) {
          img.at(r, c) = kForeground;
        }
      }
      break;
    }
    case ShapeKind::heart:
      fill_heart(img, cx, cy, 0.27 * unit);
      break;
    case ShapeKind::star:
      fill_polygon(img, star_vertices(cx, cy, 0.35 * unit, 0.14 * unit));
      break;
    case ShapeKind::arrow:
      fill_polygon(img, arrow_vertices(cx, cy, 0.65 * unit));
      break;
    case ShapeKind::multi: {
      // Star upper-left, arrow upper-right, rectangle lower-center; each
      // component stays within its own quadrant-sized anchor box.
      const double sx = width * 0.28;
      const double sy = height * 0.30;
      fill_polygon(img, star_vertices(sx, sy, 0.17 * unit, 0.068 * unit));
      const double ax = width * 0.72;
      const double ay = height * 0.28;
      fill_polygon(img, arrow_vertices(ax, ay, 0.34 * unit));
      fill_rectangle(img, width * 0.52, height * 0.76, 0.20 * width, 0.10 * height);
      break;
    }
  }
  return img;
}

}  // namespace snakelp
