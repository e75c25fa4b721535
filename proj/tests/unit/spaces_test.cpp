#include <gtest/gtest.h>

#include <cmath>
#include <limits>

#include "fastgym/spaces.hpp"
#include "fastgym/types.hpp"

namespace fastgym {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

TEST(Shape, ElementsAndValidation) {
  EXPECT_EQ((Shape{2, 3}).num_elements(), 6u);
  EXPECT_EQ((Shape{4}).to_string(), "(4,)");
  EXPECT_EQ((Shape{2, 3}).to_string(), "(2, 3)");
  EXPECT_THROW((Shape{2, 0}), std::invalid_argument);
  EXPECT_THROW((Shape{1, 1, 1, 1, 1}), std::invalid_argument);
}

TEST(Observation, ShapeMustMatchData) {
  EXPECT_NO_THROW(Observation({1, 2, 3, 4, 5, 6}, Shape{2, 3}));
  EXPECT_THROW(Observation({1, 2, 3}, Shape{2, 3}), std::invalid_argument);
  EXPECT_EQ(Observation({1, 2}).shape, (Shape{2}));
}

TEST(Info, FlagsAndLookup) {
  Info info;
  EXPECT_TRUE(info.empty());
  info.set(std::string(kTruncatedKey), true);
  info.set("lives", std::int64_t{3});
  EXPECT_TRUE(info.flag(kTruncatedKey));
  EXPECT_FALSE(info.flag("lives"));
  EXPECT_FALSE(info.flag("missing"));
  info.set("lives", std::int64_t{2});
  EXPECT_EQ(info.size(), 2u);
  EXPECT_EQ(std::get<std::int64_t>(*info.find("lives")), 2);
}

TEST(DiscreteSpace, SampleAndContains) {
  Rng rng(0);
  const DiscreteSpace one(1);
  for (int i = 0; i < 10; ++i) EXPECT_EQ(one.sample(rng), 0);
  const DiscreteSpace six(6);
  for (int i = 0; i < 1000; ++i) {
    const auto v = six.sample(rng);
    ASSERT_GE(v, 0);
    ASSERT_LT(v, 6);
  }
  const DiscreteSpace two(2);
  EXPECT_TRUE(two.contains(1));
  EXPECT_FALSE(two.contains(2));
  EXPECT_FALSE(two.contains(-1));
  EXPECT_THROW(DiscreteSpace(0), std::invalid_argument);
}

TEST(DiscreteSpace, BinaryFrequenciesAreBalanced) {
  Rng rng(42);
  const DiscreteSpace two(2);
  int ones = 0;
  for (int i = 0; i < 10000; ++i) ones += static_cast<int>(two.sample(rng));
  EXPECT_GE(ones, 4700);
  EXPECT_LE(ones, 5300);
}

TEST(BoxSpace, Sample) {
  Rng rng(1);
  const BoxSpace degenerate({1, 1}, {1, 1});
  EXPECT_EQ(degenerate.sample(rng).data, (std::vector<double>{1, 1}));

  const BoxSpace unit({-1}, {1});
  for (int i = 0; i < 1000; ++i) {
    const double v = unit.sample(rng)[0];
    ASSERT_GE(v, -1.0);
    ASSERT_LT(v, 1.0);
  }

  const BoxSpace grid(std::vector<double>(6, 0.0), std::vector<double>(6, 1.0), Shape{2, 3});
  const Observation o = grid.sample(rng);
  EXPECT_EQ(o.shape, (Shape{2, 3}));
  EXPECT_EQ(o.size(), 6u);

  const BoxSpace open({-kInf}, {kInf});
  EXPECT_FALSE(open.bounded());
  EXPECT_THROW(open.sample(rng), std::domain_error);
}

TEST(BoxSpace, Contains) {
  const BoxSpace box({-2.4, -kInf, -0.42, -kInf}, {2.4, kInf, 0.42, kInf});
  EXPECT_TRUE(box.contains(Observation({0, 0, 0, 0})));
  EXPECT_FALSE(box.contains(Observation({2.5, 0, 0, 0})));
  EXPECT_FALSE(box.contains(Observation({0, 0, 0})));
  EXPECT_FALSE(box.contains(Observation({0, 0, 0, 0}, Shape{2, 2})));
  EXPECT_FALSE(box.contains(Observation({0, NAN, 0, 0})));
}

TEST(BoxSpace, RejectsInconsistentBounds) {
  EXPECT_THROW(BoxSpace({1}, {0}), std::invalid_argument);
  EXPECT_THROW(BoxSpace({0, 0}, {1}), std::invalid_argument);
}

TEST(Space, VariantHelpers) {
  Rng rng(2);
  const Space d = DiscreteSpace(3);
  const Space b = BoxSpace({-2}, {2});
  EXPECT_TRUE(contains(d, sample(d, rng)));
  EXPECT_TRUE(contains(b, sample(b, rng)));
  EXPECT_FALSE(contains(d, Action{std::vector<double>{0.0}}));
  EXPECT_FALSE(contains(b, Action{std::int64_t{0}}));
  EXPECT_EQ(describe(d), "Discrete(3)");
}

}  // namespace
}  // namespace fastgym
