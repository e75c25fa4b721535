#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "fastgym/envs/acrobot.hpp"
#include "fastgym/envs/cartpole.hpp"
#include "fastgym/envs/mountain_car.hpp"
#include "fastgym/envs/pendulum.hpp"
#include "fastgym/registry.hpp"

namespace fastgym {
namespace {

constexpr double kTol = 1e-9;
constexpr double kPi = std::numbers::pi;

// Golden values below come from tests/oracles/oracles.py.

TEST(CartPole, ResetGoldenForSeed42) {
  CartPoleEnv env;
  const Observation obs = env.reset(42);
  const double expected[] = {-0.041613702894011784, -0.012101974933733141, 0.01800434110281393,
                             0.04246929453253877};
  ASSERT_EQ(obs.size(), 4u);
  for (int i = 0; i < 4; ++i) EXPECT_EQ(obs[i], expected[i]);
}

TEST(CartPole, ResetIsSeededAndSmall) {
  CartPoleEnv a;
  CartPoleEnv b;
  EXPECT_EQ(a.reset(123), b.reset(123));
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    for (double v : a.reset(seed).data) {
      EXPECT_GE(v, -0.05);
      EXPECT_LT(v, 0.05);
    }
  }
}

TEST(CartPole, OneStepFromRest) {
  const CartPoleState right = cartpole_advance({}, 1);
  EXPECT_NEAR(right.x, 0.0, kTol);
  EXPECT_NEAR(right.x_dot, 0.1951219512195122, kTol);
  EXPECT_NEAR(right.theta, 0.0, kTol);
  EXPECT_NEAR(right.theta_dot, -0.2926829268292683, kTol);

  const CartPoleState left = cartpole_advance({}, 0);
  EXPECT_EQ(left.x_dot, -right.x_dot);
  EXPECT_EQ(left.theta_dot, -right.theta_dot);
}

TEST(CartPole, OneStepFromGeneralState) {
  const CartPoleState s = cartpole_advance({0.01, -0.02, 0.03, 0.04}, 1);
  EXPECT_NEAR(s.x, 0.009600000000000001, kTol);
  EXPECT_NEAR(s.x_dot, 0.17467919574755525, kTol);
  EXPECT_NEAR(s.theta, 0.030799999999999998, kTol);
  EXPECT_NEAR(s.theta_dot, -0.2430687179600081, kTol);
}

TEST(CartPole, TerminalThresholds) {
  EXPECT_TRUE(cartpole_terminal({2.41, 0, 0, 0}));
  EXPECT_TRUE(cartpole_terminal({-2.41, 0, 0, 0}));
  EXPECT_FALSE(cartpole_terminal({2.4, 0, 0, 0}));
  EXPECT_TRUE(cartpole_terminal({0, 0, 0.21, 0}));
  EXPECT_FALSE(cartpole_terminal({0, 0, 0.2, 0}));

  CartPoleEnv env;
  env.reset(0);
  env.set_state({2.41, 0, 0, 0});
  const StepResult r = env.step(0);
  EXPECT_TRUE(r.terminal);
  EXPECT_EQ(r.reward, 1.0);
}

TEST(CartPole, ObservationOfZeros) {
  EXPECT_EQ(cartpole_observation({}).data, (std::vector<double>{0, 0, 0, 0}));
}

TEST(EnvContract, StepBeforeResetAndAfterTerminal) {
  CartPoleEnv env;
  EXPECT_THROW(env.step(0), ContractError);
  env.reset(0);
  env.set_state({2.41, 0, 0, 0});
  EXPECT_TRUE(env.step(1).terminal);
  EXPECT_TRUE(env.done());
  EXPECT_THROW(env.step(1), ContractError);
  env.reset();
  EXPECT_NO_THROW(env.step(1));
}

TEST(EnvContract, BadActionsAreRejected) {
  CartPoleEnv cart;
  cart.reset(0);
  EXPECT_THROW(cart.step(2), std::invalid_argument);
  EXPECT_THROW(cart.step(-1), std::invalid_argument);
  EXPECT_THROW(cart.step(Action{std::vector<double>{0.5}}), std::invalid_argument);

  PendulumEnv pendulum;
  pendulum.reset(0);
  EXPECT_THROW(pendulum.step(Action{std::vector<double>{NAN}}), std::invalid_argument);
  EXPECT_THROW(pendulum.step(Action{std::vector<double>{INFINITY}}), std::invalid_argument);
  EXPECT_THROW(pendulum.step(Action{std::vector<double>{0.0, 1.0}}), std::invalid_argument);
}

TEST(MountainCar, OneStepGoldens) {
  const MountainCarState push = mountain_car_advance({-0.5, 0.0}, 2);
  EXPECT_NEAR(push.position, -0.49917684300416926, kTol);
  EXPECT_NEAR(push.velocity, 0.0008231569958307428, kTol);

  const MountainCarState coast = mountain_car_advance({-0.5, 0.0}, 1);
  EXPECT_NEAR(coast.velocity, -0.0025 * std::cos(-1.5), kTol);
  EXPECT_NEAR(coast.position, -0.5001768430041692, kTol);
}

TEST(MountainCar, GoalIsTerminalWithPenalty) {
  MountainCarEnv env;
  env.reset(0);
  env.set_state({0.5, 0.01});
  const StepResult r = env.step(1);
  EXPECT_TRUE(r.terminal);
  EXPECT_EQ(r.reward, -1.0);
}

TEST(MountainCar, LeftWallStopsTheCar) {
  const MountainCarState s = mountain_car_advance({-1.2, -0.07}, 0);
  EXPECT_EQ(s.position, -1.2);
  EXPECT_EQ(s.velocity, 0.0);
}

TEST(Acrobot, HangingRestIsEquilibrium) {
  AcrobotEnv env;
  env.reset(0);
  env.set_state({});
  const StepResult r = env.step(1);
  EXPECT_EQ(env.state(), AcrobotState{});
  EXPECT_EQ(r.reward, -1.0);
  EXPECT_FALSE(r.terminal);
  EXPECT_EQ(r.observation.data, (std::vector<double>{1, 0, 1, 0, 0, 0}));
}

TEST(Acrobot, OneStepGoldens) {
  const AcrobotState pos = acrobot_advance({}, 2);
  EXPECT_NEAR(pos.theta1, -0.013262967177227795, kTol);
  EXPECT_NEAR(pos.theta2, 0.03428722934738544, kTol);
  EXPECT_NEAR(pos.dtheta1, -0.12866185280996106, kTol);
  EXPECT_NEAR(pos.dtheta2, 0.33450108998660194, kTol);

  const AcrobotState neg = acrobot_advance({}, 0);
  EXPECT_NEAR(neg.theta1, -pos.theta1, kTol);
  EXPECT_NEAR(neg.theta2, -pos.theta2, kTol);
  EXPECT_NEAR(neg.dtheta1, -pos.dtheta1, kTol);
  EXPECT_NEAR(neg.dtheta2, -pos.dtheta2, kTol);

  const AcrobotState g = acrobot_advance({0.05, -0.03, 0.02, 0.01}, 2);
  EXPECT_NEAR(g.theta1, 0.03396426807716706, kTol);
  EXPECT_NEAR(g.theta2, 0.014028356136744108, kTol);
  EXPECT_NEAR(g.dtheta1, -0.175464650251537, kTol);
  EXPECT_NEAR(g.dtheta2, 0.4197156022652691, kTol);
}

TEST(Acrobot, TerminalWhenTipAboveBar) {
  EXPECT_TRUE(acrobot_terminal({kPi, 0, 0, 0}));
  EXPECT_FALSE(acrobot_terminal({0, 0, 0, 0}));
  EXPECT_FALSE(acrobot_terminal({kPi / 2, 0, 0, 0}));
}

TEST(Acrobot, WrapAngle) {
  EXPECT_NEAR(wrap_angle(3 * kPi / 2), -kPi / 2, 1e-12);
  EXPECT_NEAR(wrap_angle(-3 * kPi / 2), kPi / 2, 1e-12);
  EXPECT_EQ(wrap_angle(0.5), 0.5);
}

TEST(Pendulum, UprightRestIsFree) {
  const PendulumTransition t = pendulum_advance({}, 0.0);
  EXPECT_EQ(t.next, PendulumState{});
  EXPECT_EQ(t.reward, 0.0);
}

TEST(Pendulum, TorqueIsClamped) {
  const PendulumTransition a = pendulum_advance({}, 3.0);
  const PendulumTransition b = pendulum_advance({}, 2.0);
  EXPECT_EQ(a.next, b.next);
  EXPECT_EQ(a.reward, b.reward);
}

TEST(Pendulum, OneStepGolden) {
  const PendulumTransition t = pendulum_advance({kPi / 2, 0.0}, 0.0);
  EXPECT_NEAR(t.next.theta_dot, 0.75, kTol);
  EXPECT_NEAR(t.next.theta, 1.6082963267948966, kTol);
  EXPECT_NEAR(t.reward, -(kPi / 2) * (kPi / 2), kTol);
}

TEST(Pendulum, ObservationOnUnitCircle) {
  const Observation o = pendulum_observation({kPi / 2, 2.0});
  EXPECT_NEAR(o[0], 0.0, 1e-12);
  EXPECT_NEAR(o[1], 1.0, 1e-12);
  EXPECT_EQ(o[2], 2.0);
  for (double th = -20.0; th < 20.0; th += 0.37) {
    const Observation p = pendulum_observation({th, 0.0});
    EXPECT_NEAR(p[0] * p[0] + p[1] * p[1], 1.0, 1e-12);
  }
}

// Free swing from theta = 0.1 (near upright) with no torque. The
// semi-implicit integrator does not conserve energy step by step but returns
// close to its starting energy; the net drift over 100 steps is checked.
TEST(Pendulum, EnergyDriftOverHundredSteps) {
  PendulumState s{0.1, 0.0};
  const double e0 = pendulum_energy(s);
  for (int i = 0; i < 100; ++i) s = pendulum_advance(s, 0.0).next;
  const double e1 = pendulum_energy(s);
  EXPECT_LT(std::abs(e1 - e0) / std::abs(e0), 0.05);
}

// Semi-implicit Euler keeps the energy error bounded rather than growing:
// over 2000 steps of a small swing about the bottom it never exceeds the
// first period's excursion by much.
TEST(Pendulum, SmallOscillationEnergyStaysBounded) {
  PendulumState s{kPi - 0.1, 0.0};
  const double e_bottom = pendulum_energy({kPi, 0.0});
  const double e0 = pendulum_energy(s) - e_bottom;
  double first_period = 0.0;
  double worst = 0.0;
  for (int i = 0; i < 2000; ++i) {
    s = pendulum_advance(s, 0.0).next;
    const double dev = std::abs(pendulum_energy(s) - e_bottom - e0) / e0;
    if (i < 40) first_period = std::max(first_period, dev);
    worst = std::max(worst, dev);
  }
  EXPECT_LT(worst, 1.05 * first_period);
  EXPECT_LT(worst, 0.15);
}

template <typename Check>
void random_rollouts(std::string_view id, int steps, Check check) {
  std::unique_ptr<Env> env = make(id);
  Rng actions(99);
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    env->reset(seed);
    for (int i = 0; i < steps; ++i) {
      const StepResult r = env->step(sample(env->action_space(), actions));
      ASSERT_TRUE(std::get<BoxSpace>(env->observation_space()).contains(r.observation))
          << id << " step " << i;
      check(r);
      if (r.terminal) env->reset();
    }
  }
}

TEST(Envs, ObservationsStayInDeclaredSpaces) {
  for (const std::string& id : default_registry().list()) {
    SCOPED_TRACE(id);
    random_rollouts(id, 2000, [](const StepResult& r) {
      ASSERT_TRUE(r.observation.all_finite());
      ASSERT_TRUE(std::isfinite(r.reward));
    });
  }
}

TEST(Envs, ClampsHoldUnderRandomActions) {
  Rng rng(17);
  MountainCarState mc{-0.5, 0.0};
  AcrobotState ac{};
  PendulumState pd{0.0, 0.0};
  for (int i = 0; i < 20000; ++i) {
    mc = mountain_car_advance(mc, static_cast<std::int64_t>(rng.below(3)));
    ASSERT_GE(mc.position, mountain_car::kMinPosition);
    ASSERT_LE(mc.position, mountain_car::kMaxPosition);
    ASSERT_LE(std::abs(mc.velocity), mountain_car::kMaxSpeed);
    if (mountain_car_terminal(mc)) mc = {-0.5, 0.0};

    ac = acrobot_advance(ac, static_cast<std::int64_t>(rng.below(3)));
    ASSERT_LE(std::abs(ac.theta1), kPi);
    ASSERT_LE(std::abs(ac.theta2), kPi);
    ASSERT_LE(std::abs(ac.dtheta1), acrobot::kMaxVel1);
    ASSERT_LE(std::abs(ac.dtheta2), acrobot::kMaxVel2);

    pd = pendulum_advance(pd, rng.uniform(-4.0, 4.0)).next;
    ASSERT_LE(std::abs(pd.theta_dot), pendulum::kMaxSpeed);
  }
}

TEST(Envs, SeededRolloutsAreBitIdentical) {
  for (const std::string& id : default_registry().list()) {
    auto run = [&] {
      std::unique_ptr<Env> env = make(id);
      Rng actions(5);
      std::vector<double> trace;
      env->reset(42);
      for (int i = 0; i < 500; ++i) {
        const StepResult r = env->step(sample(env->action_space(), actions));
        trace.insert(trace.end(), r.observation.data.begin(), r.observation.data.end());
        trace.push_back(r.reward);
        trace.push_back(r.terminal);
        if (r.terminal) env->reset();
      }
      return trace;
    };
    EXPECT_EQ(run(), run()) << id;
  }
}

}  // namespace
}  // namespace fastgym
