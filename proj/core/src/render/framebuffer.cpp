#include "fastgym/render/framebuffer.hpp"

#include <cstring>
#include <fstream>
#include <stdexcept>
#include <string>

namespace fastgym {

FrameBuffer::FrameBuffer(int width, int height, Color fill) : width_(width), height_(height) {
  if (width < 0 || height < 0) {
    throw std::invalid_argument("FrameBuffer: negative dimensions");
  }
  pixels_.resize(static_cast<std::size_t>(width) * static_cast<std::size_t>(height) * 3);
  for (std::size_t i = 0; i < pixels_.size(); i += 3) {
    pixels_[i] = fill.r;
    pixels_[i + 1] = fill.g;
    pixels_[i + 2] = fill.b;
  }
}

void FrameBuffer::fill_span(int y, int x_begin, int x_end, Color c) noexcept {
  std::uint8_t* p = &pixels_[offset(x_begin, y)];
  if (c.r == c.g && c.g == c.b) {
    std::memset(p, c.r, static_cast<std::size_t>(x_end - x_begin) * 3);
    return;
  }
  for (int x = x_begin; x < x_end; ++x, p += 3) {
    p[0] = c.r;
    p[1] = c.g;
    p[2] = c.b;
  }
}

std::size_t FrameBuffer::count(Color c) const noexcept {
  std::size_t n = 0;
  for (std::size_t i = 0; i < pixels_.size(); i += 3) {
    n += pixels_[i] == c.r && pixels_[i + 1] == c.g && pixels_[i + 2] == c.b;
  }
  return n;
}

void write_ppm(const FrameBuffer& fb, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("write_ppm: cannot open " + path.string());
  out << "P6\n" << fb.width() << ' ' << fb.height() << "\n255\n";
  const auto bytes = fb.bytes();
  out.write(reinterpret_cast<const char*>(bytes.data()),
            static_cast<std::streamsize>(bytes.size()));
  if (!out) throw std::runtime_error("write_ppm: write failed for " + path.string());
}

FrameBuffer read_ppm(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("read_ppm: cannot open " + path.string());
  std::string magic;
  int width = 0;
  int height = 0;
  int max_value = 0;
  in >> magic >> width >> height >> max_value;
  if (magic != "P6" || width < 0 || height < 0 || max_value != 255) {
    throw std::runtime_error("read_ppm: unsupported header in " + path.string());
  }
  in.get();  // single whitespace byte after the header
  FrameBuffer fb(width, height);
  auto bytes = fb.bytes();
  in.read(reinterpret_cast<char*>(bytes.data()), static_cast<std::streamsize>(bytes.size()));
  if (in.gcount() != static_cast<std::streamsize>(bytes.size())) {
    throw std::runtime_error("read_ppm: truncated pixel data in " + path.string());
  }
  return fb;
}

std::uint64_t checksum(const FrameBuffer& fb) noexcept {
  std::uint64_t h = 0xCBF29CE484222325ULL;
  for (std::uint8_t b : fb.bytes()) {
    h ^= b;
    h *= 0x100000001B3ULL;
  }
  return h;
}

}  // namespace fastgym
