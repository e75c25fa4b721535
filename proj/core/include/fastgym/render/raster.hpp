#pragma once

#include <span>

#include "fastgym/render/framebuffer.hpp"

namespace fastgym {

// Continuous pixel-space coordinate. Pixel (px, py) covers the unit square
// [px, px+1) x [py, py+1) and is sampled at its centre (px+0.5, py+0.5).
struct PointF {
  double x = 0.0;
  double y = 0.0;
};

// Every primitive clips against the buffer; coordinates may be negative or
// arbitrarily large.

void clear(FrameBuffer& fb, Color c) noexcept;

// Inclusive integer rectangle [x0, x1] x [y0, y1]; corner order is irrelevant.
void fill_rect(FrameBuffer& fb, long long x0, long long y0, long long x1, long long y1,
               Color c) noexcept;

// Integer line between pixel centres. For width 1, step i along the major
// axis (length d_major) lands on minor offset floor((2*i*d_minor + d_major) /
// (2*d_major)), i.e. the midpoint rule with ties rounded down; both endpoints
// are always set. Wider lines are filled as a quad of that width around the
// centre line, extended by half a pixel past each endpoint.
void draw_line(FrameBuffer& fb, long long x0, long long y0, long long x1, long long y1,
               int width, Color c);

// Scanline even-odd fill. A pixel is set when its centre is inside; crossings
// use the half-open rule (an edge covers y0 <= y < y1), and within a span the
// left boundary is inclusive and the right one exclusive. So the polygon
// (10,10),(20,10),(20,20),(10,20) sets the same pixels as
// fill_rect(10, 10, 19, 19). Throws std::invalid_argument for fewer than 3
// vertices.
void fill_polygon(FrameBuffer& fb, std::span<const PointF> vertices, Color c);

// Sets integer pixels with (x-cx)^2 + (y-cy)^2 <= radius^2.
void fill_circle(FrameBuffer& fb, long long cx, long long cy, double radius, Color c);

}  // namespace fastgym
