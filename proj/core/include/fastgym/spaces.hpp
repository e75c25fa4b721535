#pragma once

#include <cstdint>
#include <string>
#include <variant>
#include <vector>

#include "fastgym/rng.hpp"
#include "fastgym/types.hpp"

namespace fastgym {

// Finite set of action indices {0, ..., n-1}.
class DiscreteSpace {
 public:
  explicit DiscreteSpace(std::int64_t n);

  std::int64_t n() const noexcept { return n_; }

  std::int64_t sample(Rng& rng) const noexcept;
  bool contains(std::int64_t value) const noexcept { return value >= 0 && value < n_; }

  friend bool operator==(const DiscreteSpace&, const DiscreteSpace&) = default;

 private:
  std::int64_t n_;
};

// Axis-aligned box of float64 values. Bounds may be +/-infinity.
class BoxSpace {
 public:
  BoxSpace(std::vector<double> low, std::vector<double> high, Shape shape);
  // Rank-1 box.
  BoxSpace(std::vector<double> low, std::vector<double> high);

  const std::vector<double>& low() const noexcept { return low_; }
  const std::vector<double>& high() const noexcept { return high_; }
  const Shape& shape() const noexcept { return shape_; }
  bool bounded() const noexcept;

  // Throws std::domain_error if any dimension is unbounded.
  Observation sample(Rng& rng) const;
  bool contains(const Observation& obs) const noexcept;
  bool contains(std::span<const double> values) const noexcept;

  friend bool operator==(const BoxSpace&, const BoxSpace&) = default;

 private:
  std::vector<double> low_;
  std::vector<double> high_;
  Shape shape_;
};

using Space = std::variant<DiscreteSpace, BoxSpace>;

Action sample(const Space& space, Rng& rng);
bool contains(const Space& space, const Action& action) noexcept;
std::string describe(const Space& space);

}  // namespace fastgym
