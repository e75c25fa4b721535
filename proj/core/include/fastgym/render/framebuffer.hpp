#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <span>
#include <vector>

namespace fastgym {

struct Color {
  std::uint8_t r = 0;
  std::uint8_t g = 0;
  std::uint8_t b = 0;

  friend bool operator==(const Color&, const Color&) = default;
};

namespace colors {
inline constexpr Color kWhite{255, 255, 255};
inline constexpr Color kBlack{0, 0, 0};
}  // namespace colors

inline constexpr int kDefaultRenderWidth = 600;
inline constexpr int kDefaultRenderHeight = 400;

// CPU-resident RGB8 raster. Row-major, top-left origin, y grows downward.
class FrameBuffer {
 public:
  FrameBuffer() = default;
  FrameBuffer(int width, int height, Color fill = colors::kBlack);

  int width() const noexcept { return width_; }
  int height() const noexcept { return height_; }
  std::size_t size_bytes() const noexcept { return pixels_.size(); }

  std::span<const std::uint8_t> bytes() const noexcept { return pixels_; }
  std::span<std::uint8_t> bytes() noexcept { return pixels_; }

  bool in_bounds(int x, int y) const noexcept {
    return x >= 0 && y >= 0 && x < width_ && y < height_;
  }

  Color at(int x, int y) const noexcept {
    const std::uint8_t* p = &pixels_[offset(x, y)];
    return {p[0], p[1], p[2]};
  }

  // Unchecked write; callers clip first.
  void put(int x, int y, Color c) noexcept {
    std::uint8_t* p = &pixels_[offset(x, y)];
    p[0] = c.r;
    p[1] = c.g;
    p[2] = c.b;
  }

  // Sets pixels [x_begin, x_end) of row y. Range must already be clipped.
  void fill_span(int y, int x_begin, int x_end, Color c) noexcept;

  std::size_t count(Color c) const noexcept;

  friend bool operator==(const FrameBuffer&, const FrameBuffer&) = default;

 private:
  std::size_t offset(int x, int y) const noexcept {
    return (static_cast<std::size_t>(y) * static_cast<std::size_t>(width_) +
            static_cast<std::size_t>(x)) * 3;
  }

  int width_ = 0;
  int height_ = 0;
  std::vector<std::uint8_t> pixels_;
};

// Writes binary PPM: "P6\n<w> <h>\n255\n" followed by raw RGB bytes.
void write_ppm(const FrameBuffer& fb, const std::filesystem::path& path);
FrameBuffer read_ppm(const std::filesystem::path& path);

// Order-sensitive 64-bit FNV-1a checksum of the pixel bytes.
std::uint64_t checksum(const FrameBuffer& fb) noexcept;

}  // namespace fastgym
