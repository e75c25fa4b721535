#include "fastgym/render/raster.hpp"

#include <algorithm>
#include <cmath>
#include <cstring>
#include <stdexcept>
#include <vector>

namespace fastgym {
namespace {

__extension__ using i128 = __int128;

// Column index of the first pixel whose centre is >= x, clamped to [0, limit].
long long first_center_at_or_after(double x, int limit) noexcept {
  const double v = std::ceil(std::clamp(x - 0.5, -1.0, static_cast<double>(limit) + 1.0));
  return std::clamp(static_cast<long long>(v), 0LL, static_cast<long long>(limit));
}

void put_clipped(FrameBuffer& fb, long long x, long long y, Color c) noexcept {
  if (x >= 0 && y >= 0 && x < fb.width() && y < fb.height()) {
    fb.put(static_cast<int>(x), static_cast<int>(y), c);
  }
}

void draw_thin_line(FrameBuffer& fb, long long x0, long long y0, long long x1, long long y1,
                    Color c) noexcept {
  const long long dx = x1 - x0;
  const long long dy = y1 - y0;
  const bool x_major = std::llabs(dx) >= std::llabs(dy);

  // Major axis coordinate a, minor axis coordinate b.
  const long long a0 = x_major ? x0 : y0;
  const long long b0 = x_major ? y0 : x0;
  const long long da = std::llabs(x_major ? dx : dy);
  const long long db = std::llabs(x_major ? dy : dx);
  const long long sa = (x_major ? dx : dy) < 0 ? -1 : 1;
  const long long sb = (x_major ? dy : dx) < 0 ? -1 : 1;
  const long long a_limit = (x_major ? fb.width() : fb.height()) - 1;

  // Restrict the step index so the major coordinate stays on the buffer.
  long long i_lo = 0;
  long long i_hi = da;
  if (sa > 0) {
    i_lo = std::max(i_lo, -a0);
    i_hi = std::min(i_hi, a_limit - a0);
  } else {
    i_lo = std::max(i_lo, a0 - a_limit);
    i_hi = std::min(i_hi, a0);
  }

  for (long long i = i_lo; i <= i_hi; ++i) {
    long long offset = 0;
    if (da > 0) {
      const i128 num = static_cast<i128>(2) * i * db + da;
      offset = static_cast<long long>(num / (static_cast<i128>(2) * da));
    }
    const long long a = a0 + sa * i;
    const long long b = b0 + sb * offset;
    put_clipped(fb, x_major ? a : b, x_major ? b : a, c);
  }
}

}  // namespace

void clear(FrameBuffer& fb, Color c) noexcept {
  if (fb.width() == 0 || fb.height() == 0) return;
  fb.fill_span(0, 0, fb.width(), c);
  auto bytes = fb.bytes();
  const std::size_t row = static_cast<std::size_t>(fb.width()) * 3;
  for (int y = 1; y < fb.height(); ++y) {
    std::memcpy(bytes.data() + row * static_cast<std::size_t>(y), bytes.data(), row);
  }
}

void fill_rect(FrameBuffer& fb, long long x0, long long y0, long long x1, long long y1,
               Color c) noexcept {
  if (x0 > x1) std::swap(x0, x1);
  if (y0 > y1) std::swap(y0, y1);
  x0 = std::max(x0, 0LL);
  y0 = std::max(y0, 0LL);
  x1 = std::min(x1, static_cast<long long>(fb.width()) - 1);
  y1 = std::min(y1, static_cast<long long>(fb.height()) - 1);
  if (x0 > x1 || y0 > y1) return;
  for (long long y = y0; y <= y1; ++y) {
    fb.fill_span(static_cast<int>(y), static_cast<int>(x0), static_cast<int>(x1) + 1, c);
  }
}

void draw_line(FrameBuffer& fb, long long x0, long long y0, long long x1, long long y1,
               int width, Color c) {
  if (width < 1) throw std::invalid_argument("draw_line: width must be >= 1");
  if (width == 1) {
    draw_thin_line(fb, x0, y0, x1, y1, c);
    return;
  }
  const double half = width / 2.0;
  const double cx0 = static_cast<double>(x0) + 0.5;
  const double cy0 = static_cast<double>(y0) + 0.5;
  const double cx1 = static_cast<double>(x1) + 0.5;
  const double cy1 = static_cast<double>(y1) + 0.5;
  const double dx = cx1 - cx0;
  const double dy = cy1 - cy0;
  const double len = std::hypot(dx, dy);
  // Unit direction (ux, uy) and normal (-uy, ux); a point degenerates to a square.
  const double ux = len > 0.0 ? dx / len : 1.0;
  const double uy = len > 0.0 ? dy / len : 0.0;
  const double ext = len > 0.0 ? 0.5 : half;
  const double ax = cx0 - ux * ext;
  const double ay = cy0 - uy * ext;
  const double bx = cx1 + ux * ext;
  const double by = cy1 + uy * ext;
  const PointF quad[] = {
      {ax - uy * half, ay + ux * half},
      {bx - uy * half, by + ux * half},
      {bx + uy * half, by - ux * half},
      {ax + uy * half, ay - ux * half},
  };
  fill_polygon(fb, quad, c);
  // Endpoints are always part of the line.
  put_clipped(fb, x0, y0, c);
  put_clipped(fb, x1, y1, c);
}

void fill_polygon(FrameBuffer& fb, std::span<const PointF> vertices, Color c) {
  if (vertices.size() < 3) {
    throw std::invalid_argument("fill_polygon: need at least 3 vertices");
  }
  double y_min = vertices[0].y;
  double y_max = vertices[0].y;
  for (const PointF& p : vertices) {
    if (!std::isfinite(p.x) || !std::isfinite(p.y)) {
      throw std::invalid_argument("fill_polygon: vertices must be finite");
    }
    y_min = std::min(y_min, p.y);
    y_max = std::max(y_max, p.y);
  }
  if (fb.width() == 0 || fb.height() == 0) return;

  const long long row_begin = first_center_at_or_after(y_min, fb.height());
  const long long row_end = first_center_at_or_after(y_max, fb.height());

  std::vector<double> crossings;
  crossings.reserve(vertices.size());
  const std::size_t n = vertices.size();
  for (long long py = row_begin; py < row_end; ++py) {
    const double yc = static_cast<double>(py) + 0.5;
    crossings.clear();
    for (std::size_t i = 0; i < n; ++i) {
      const PointF& p0 = vertices[i];
      const PointF& p1 = vertices[(i + 1) % n];
      if ((p0.y > yc) != (p1.y > yc)) {
        crossings.push_back(p0.x + (yc - p0.y) * (p1.x - p0.x) / (p1.y - p0.y));
      }
    }
    std::sort(crossings.begin(), crossings.end());
    for (std::size_t k = 0; k + 1 < crossings.size(); k += 2) {
      const long long x_begin = first_center_at_or_after(crossings[k], fb.width());
      const long long x_end = first_center_at_or_after(crossings[k + 1], fb.width());
      if (x_begin < x_end) {
        fb.fill_span(static_cast<int>(py), static_cast<int>(x_begin),
                     static_cast<int>(x_end), c);
      }
    }
  }
}

void fill_circle(FrameBuffer& fb, long long cx, long long cy, double radius, Color c) {
  if (!(radius >= 0.0)) throw std::invalid_argument("fill_circle: radius must be >= 0");
  const double r2 = radius * radius;
  const auto reach = static_cast<long long>(std::floor(std::min(radius, 1e15)));
  const long long y_lo = std::max(cy - reach, 0LL);
  const long long y_hi = std::min(cy + reach, static_cast<long long>(fb.height()) - 1);
  for (long long y = y_lo; y <= y_hi; ++y) {
    const auto dy = static_cast<double>(y - cy);
    const double room = r2 - dy * dy;
    if (room < 0.0) continue;
    auto half = static_cast<long long>(std::floor(std::sqrt(room)));
    // sqrt rounding: settle on the largest half with half^2 <= room.
    while (static_cast<double>(half + 1) * static_cast<double>(half + 1) <= room) ++half;
    while (half > 0 && static_cast<double>(half) * static_cast<double>(half) > room) --half;
    const long long x_lo = std::max(cx - half, 0LL);
    const long long x_hi = std::min(cx + half, static_cast<long long>(fb.width()) - 1);
    if (x_lo <= x_hi) {
      fb.fill_span(static_cast<int>(y), static_cast<int>(x_lo), static_cast<int>(x_hi) + 1, c);
    }
  }
}

}  // namespace fastgym
