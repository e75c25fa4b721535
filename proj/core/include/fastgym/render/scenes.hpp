#pragma once

#include <string_view>

#include "fastgym/envs/states.hpp"
#include "fastgym/render/framebuffer.hpp"
#include "fastgym/render/raster.hpp"

namespace fastgym {

// Maps world coordinates (y up) onto the screen (y down). Horizontal extent
// [world_x_min, world_x_max] spans the full width; vertical scale is equal to
// horizontal, with world_y_min on the bottom row.
struct Viewport {
  double world_x_min = 0.0;
  double world_x_max = 1.0;
  int width = kDefaultRenderWidth;
  int height = kDefaultRenderHeight;
  double world_y_min = 0.0;

  double scale() const noexcept { return width / (world_x_max - world_x_min); }
  PointF to_screen(double x, double y) const noexcept {
    return {(x - world_x_min) * scale(), height - (y - world_y_min) * scale()};
  }

  // Square world region [-bound, bound]^2 fitted to the shorter screen side
  // and centred.
  static Viewport centered(double bound, int width, int height);
};

namespace scene_colors {
inline constexpr Color kCart{0, 0, 0};
inline constexpr Color kPole{202, 152, 101};
inline constexpr Color kAxle{129, 132, 203};
inline constexpr Color kTrack{0, 0, 0};
inline constexpr Color kCar{40, 40, 200};
inline constexpr Color kFlag{204, 204, 0};
inline constexpr Color kLink{0, 204, 204};
inline constexpr Color kJoint{204, 204, 0};
inline constexpr Color kRod{204, 77, 77};
}  // namespace scene_colors

namespace cartpole_scene {
inline constexpr int kCartWidth = 100;
inline constexpr int kCartHeight = 60;
inline constexpr int kPoleWidth = 10;
inline constexpr int kTrackFromBottom = 100;
}  // namespace cartpole_scene

// Draws the scene for state into fb. A 0x0 buffer is first resized to the
// default 600x400; otherwise the buffer's own size is used. Pure function of
// (state, buffer size).
void render_scene(const EnvState& state, FrameBuffer& fb);
FrameBuffer render_scene(const EnvState& state);

// As above, checking that env_id ("CartPole-v1", or just "CartPole") names
// the family whose state is supplied. Throws std::invalid_argument for an
// unknown id or a mismatched state.
FrameBuffer render_scene(std::string_view env_id, const EnvState& state);

// 84x84 grayscale downsample (box filter, luma 0.299/0.587/0.114) scaled to
// [0, 1], flattened row-major.
std::vector<double> grayscale_84(const FrameBuffer& fb);

}  // namespace fastgym
