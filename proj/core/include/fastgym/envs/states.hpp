#pragma once

#include <variant>

namespace fastgym {

struct CartPoleState {
  double x = 0.0;          // m
  double x_dot = 0.0;      // m/s
  double theta = 0.0;      // rad from vertical
  double theta_dot = 0.0;  // rad/s

  friend bool operator==(const CartPoleState&, const CartPoleState&) = default;
};

struct MountainCarState {
  double position = -0.5;
  double velocity = 0.0;

  friend bool operator==(const MountainCarState&, const MountainCarState&) = default;
};

struct AcrobotState {
  double theta1 = 0.0;
  double theta2 = 0.0;
  double dtheta1 = 0.0;
  double dtheta2 = 0.0;

  friend bool operator==(const AcrobotState&, const AcrobotState&) = default;
};

// theta = 0 is upright.
struct PendulumState {
  double theta = 0.0;
  double theta_dot = 0.0;

  friend bool operator==(const PendulumState&, const PendulumState&) = default;
};

using EnvState = std::variant<CartPoleState, MountainCarState, AcrobotState, PendulumState>;

}  // namespace fastgym
