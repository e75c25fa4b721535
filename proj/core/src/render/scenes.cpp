#include "fastgym/render/scenes.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "fastgym/envs/acrobot.hpp"
#include "fastgym/envs/cartpole.hpp"
#include "fastgym/envs/mountain_car.hpp"

namespace fastgym {
namespace {

long long to_pixel(double v) noexcept {
  return static_cast<long long>(std::floor(std::clamp(v, -1e9, 1e9)));
}

// Rectangle of the given length and width whose long axis runs from `origin`
// along unit direction (ux, uy), starting `back` units behind the origin.
void fill_rotated_bar(FrameBuffer& fb, PointF origin, double ux, double uy, double back,
                      double length, double width, Color c) {
  const double half = width / 2.0;
  const double nx = -uy;
  const double ny = ux;
  const PointF start{origin.x - ux * back, origin.y - uy * back};
  const PointF end{origin.x + ux * (length - back), origin.y + uy * (length - back)};
  const PointF quad[] = {
      {start.x + nx * half, start.y + ny * half},
      {end.x + nx * half, end.y + ny * half},
      {end.x - nx * half, end.y - ny * half},
      {start.x - nx * half, start.y - ny * half},
  };
  fill_polygon(fb, quad, c);
}

void draw_cartpole(const CartPoleState& s, FrameBuffer& fb) {
  using namespace cartpole_scene;
  const int w = fb.width();
  const int h = fb.height();
  const double scale = w / (2.0 * cartpole::kXThreshold);
  clear(fb, colors::kWhite);

  const long long track_y = h - kTrackFromBottom;
  draw_line(fb, 0, track_y, w - 1, track_y, 1, scene_colors::kTrack);

  const long long cart_x = to_pixel(s.x * scale + w / 2.0);
  fill_rect(fb, cart_x - kCartWidth / 2, track_y - kCartHeight / 2,
            cart_x + kCartWidth / 2 - 1, track_y + kCartHeight / 2 - 1, scene_colors::kCart);

  // Axle sits a quarter of the cart height above the track, at pixel centre.
  const long long axle_y = track_y - kCartHeight / 4;
  const PointF axle{static_cast<double>(cart_x) + 0.5, static_cast<double>(axle_y) + 0.5};
  const double pole_length = 200.0 * cartpole::kHalfLength;
  fill_rotated_bar(fb, axle, std::sin(s.theta), -std::cos(s.theta), kPoleWidth / 2.0,
                   pole_length, kPoleWidth, scene_colors::kPole);
  fill_circle(fb, cart_x, axle_y, kPoleWidth / 2.0, scene_colors::kAxle);
}

void draw_mountain_car(const MountainCarState& s, FrameBuffer& fb) {
  using namespace mountain_car;
  const Viewport view{kMinPosition, kMaxPosition, fb.width(), fb.height(), 0.0};
  clear(fb, colors::kWhite);

  constexpr int kSegments = 100;
  PointF prev = view.to_screen(kMinPosition, mountain_car_height(kMinPosition));
  for (int i = 1; i < kSegments; ++i) {
    const double x = kMinPosition + (kMaxPosition - kMinPosition) * i / (kSegments - 1);
    const PointF next = view.to_screen(x, mountain_car_height(x));
    draw_line(fb, to_pixel(prev.x), to_pixel(prev.y), to_pixel(next.x), to_pixel(next.y), 1,
              scene_colors::kTrack);
    prev = next;
  }

  const PointF flag_base = view.to_screen(kGoalPosition, mountain_car_height(kGoalPosition));
  const long long fx = to_pixel(flag_base.x);
  const long long fy = to_pixel(flag_base.y);
  draw_line(fb, fx, fy, fx, fy - 50, 1, scene_colors::kTrack);
  const PointF flag[] = {{static_cast<double>(fx + 1), static_cast<double>(fy - 50)},
                         {static_cast<double>(fx + 1), static_cast<double>(fy - 40)},
                         {static_cast<double>(fx + 26), static_cast<double>(fy - 45)}};
  fill_polygon(fb, flag, scene_colors::kFlag);

  // Car body rests on the track along the local normal.
  constexpr double kCarRadius = 12.0;
  const PointF contact = view.to_screen(s.position, mountain_car_height(s.position));
  const double slope = std::cos(3.0 * s.position) * 3.0 * 0.45;  // dy/dx in world units
  const double norm = std::hypot(1.0, slope);
  const double cx = contact.x - slope / norm * kCarRadius;
  const double cy = contact.y - 1.0 / norm * kCarRadius;
  fill_circle(fb, to_pixel(cx), to_pixel(cy), kCarRadius, scene_colors::kCar);
}

void draw_acrobot(const AcrobotState& s, FrameBuffer& fb) {
  using namespace acrobot;
  const double bound = kLinkLength1 + kLinkLength2 + 0.2;
  const Viewport view = Viewport::centered(bound, fb.width(), fb.height());
  clear(fb, colors::kWhite);

  const PointF goal_left = view.to_screen(-bound, 1.0);
  const PointF goal_right = view.to_screen(bound, 1.0);
  draw_line(fb, to_pixel(goal_left.x), to_pixel(goal_left.y), to_pixel(goal_right.x),
            to_pixel(goal_right.y), 1, colors::kBlack);

  const double x1 = kLinkLength1 * std::sin(s.theta1);
  const double y1 = -kLinkLength1 * std::cos(s.theta1);
  const double x2 = x1 + kLinkLength2 * std::sin(s.theta1 + s.theta2);
  const double y2 = y1 - kLinkLength2 * std::cos(s.theta1 + s.theta2);
  const PointF p0 = view.to_screen(0.0, 0.0);
  const PointF p1 = view.to_screen(x1, y1);
  const PointF p2 = view.to_screen(x2, y2);
  const int link_width = std::max(1, static_cast<int>(std::lround(0.1 * view.scale())));
  draw_line(fb, to_pixel(p0.x), to_pixel(p0.y), to_pixel(p1.x), to_pixel(p1.y), link_width,
            scene_colors::kLink);
  draw_line(fb, to_pixel(p1.x), to_pixel(p1.y), to_pixel(p2.x), to_pixel(p2.y), link_width,
            scene_colors::kLink);
  const double joint_radius = 0.05 * view.scale();
  fill_circle(fb, to_pixel(p0.x), to_pixel(p0.y), joint_radius, scene_colors::kJoint);
  fill_circle(fb, to_pixel(p1.x), to_pixel(p1.y), joint_radius, scene_colors::kJoint);
}

void draw_pendulum(const PendulumState& s, FrameBuffer& fb) {
  constexpr double kBound = 2.2;
  constexpr double kRodLength = 1.0;
  const Viewport view = Viewport::centered(kBound, fb.width(), fb.height());
  clear(fb, colors::kWhite);

  const double scale = view.scale();
  const PointF pivot = view.to_screen(0.0, 0.0);
  // World direction (-sin, cos) is screen (-sin, -cos).
  const double ux = -std::sin(s.theta);
  const double uy = -std::cos(s.theta);
  const double rod_width = 0.2 * scale;
  fill_rotated_bar(fb, pivot, ux, uy, 0.0, kRodLength * scale, rod_width,
                   scene_colors::kRod);
  const PointF tip{pivot.x + ux * kRodLength * scale, pivot.y + uy * kRodLength * scale};
  fill_circle(fb, to_pixel(tip.x), to_pixel(tip.y), rod_width / 2.0, scene_colors::kRod);
  fill_circle(fb, to_pixel(pivot.x), to_pixel(pivot.y), 0.05 * scale, colors::kBlack);
}

int family_index(std::string_view env_id) noexcept {
  const std::string_view family = env_id.substr(0, env_id.find("-v"));
  if (family == "CartPole") return 0;
  if (family == "MountainCar") return 1;
  if (family == "Acrobot") return 2;
  if (family == "Pendulum") return 3;
  return -1;
}

}  // namespace

Viewport Viewport::centered(double bound, int width, int height) {
  const double scale = std::min(width, height) / (2.0 * bound);
  const double half_w = width / (2.0 * scale);
  const double half_h = height / (2.0 * scale);
  return Viewport{-half_w, half_w, width, height, -half_h};
}

void render_scene(const EnvState& state, FrameBuffer& fb) {
  if (fb.width() == 0 || fb.height() == 0) {
    fb = FrameBuffer(kDefaultRenderWidth, kDefaultRenderHeight);
  }
  std::visit(
      [&fb](const auto& s) {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, CartPoleState>) {
          draw_cartpole(s, fb);
        } else if constexpr (std::is_same_v<T, MountainCarState>) {
          draw_mountain_car(s, fb);
        } else if constexpr (std::is_same_v<T, AcrobotState>) {
          draw_acrobot(s, fb);
        } else {
          draw_pendulum(s, fb);
        }
      },
      state);
}

FrameBuffer render_scene(const EnvState& state) {
  FrameBuffer fb(kDefaultRenderWidth, kDefaultRenderHeight);
  render_scene(state, fb);
  return fb;
}

FrameBuffer render_scene(std::string_view env_id, const EnvState& state) {
  const int family = family_index(env_id);
  if (family < 0) {
    throw std::invalid_argument("render_scene: unknown environment id '" +
                                std::string(env_id) + "'");
  }
  if (static_cast<std::size_t>(family) != state.index()) {
    throw std::invalid_argument("render_scene: state does not belong to '" +
                                std::string(env_id) + "'");
  }
  return render_scene(state);
}

std::vector<double> grayscale_84(const FrameBuffer& fb) {
  constexpr int kSide = 84;
  std::vector<double> out(static_cast<std::size_t>(kSide) * kSide, 0.0);
  if (fb.width() == 0 || fb.height() == 0) return out;
  for (int oy = 0; oy < kSide; ++oy) {
    const int y0 = oy * fb.height() / kSide;
    const int y1 = std::max(y0 + 1, (oy + 1) * fb.height() / kSide);
    for (int ox = 0; ox < kSide; ++ox) {
      const int x0 = ox * fb.width() / kSide;
      const int x1 = std::max(x0 + 1, (ox + 1) * fb.width() / kSide);
      double sum = 0.0;
      for (int y = y0; y < y1; ++y) {
        for (int x = x0; x < x1; ++x) {
          const Color c = fb.at(x, y);
          sum += 0.299 * c.r + 0.587 * c.g + 0.114 * c.b;
        }
      }
      out[static_cast<std::size_t>(oy) * kSide + ox] =
          sum / (255.0 * (y1 - y0) * (x1 - x0));
    }
  }
  return out;
}

}  // namespace fastgym
