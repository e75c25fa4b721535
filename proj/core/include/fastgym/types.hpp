#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

namespace fastgym {

// Fixed-capacity tensor shape. Rank is at most kMaxRank; stored inline so
// that building an observation never allocates for its shape.
class Shape {
 public:
  static constexpr std::size_t kMaxRank = 4;

  Shape() = default;
  Shape(std::initializer_list<std::size_t> dims);
  explicit Shape(std::span<const std::size_t> dims);

  std::size_t rank() const noexcept { return rank_; }
  std::size_t operator[](std::size_t i) const noexcept { return dims_[i]; }
  std::size_t num_elements() const noexcept;

  std::span<const std::size_t> dims() const noexcept {
    return {dims_.data(), rank_};
  }

  std::string to_string() const;

  friend bool operator==(const Shape& a, const Shape& b) noexcept {
    if (a.rank_ != b.rank_) return false;
    for (std::size_t i = 0; i < a.rank_; ++i) {
      if (a.dims_[i] != b.dims_[i]) return false;
    }
    return true;
  }

 private:
  std::array<std::size_t, kMaxRank> dims_{};
  std::size_t rank_ = 0;
};

// Flat row-major float64 tensor.
struct Observation {
  std::vector<double> data;
  Shape shape;

  Observation() = default;
  Observation(std::vector<double> values, Shape s);
  // Rank-1 observation over the given values.
  explicit Observation(std::vector<double> values);

  std::size_t size() const noexcept { return data.size(); }
  double operator[](std::size_t i) const noexcept { return data[i]; }
  std::span<const double> values() const noexcept { return data; }

  bool all_finite() const noexcept;

  friend bool operator==(const Observation&, const Observation&) = default;
};

// Either a discrete action index or a continuous action vector.
using Action = std::variant<std::int64_t, std::vector<double>>;

using InfoValue = std::variant<bool, std::int64_t, double>;

// Flat string-keyed map of scalars and booleans. Typically empty, in which
// case it holds no heap memory.
class Info {
 public:
  void set(std::string key, InfoValue value);
  const InfoValue* find(std::string_view key) const noexcept;
  bool contains(std::string_view key) const noexcept { return find(key) != nullptr; }
  // True when key is present and holds boolean true.
  bool flag(std::string_view key) const noexcept;

  bool empty() const noexcept { return entries_.empty(); }
  std::size_t size() const noexcept { return entries_.size(); }
  auto begin() const noexcept { return entries_.begin(); }
  auto end() const noexcept { return entries_.end(); }

  friend bool operator==(const Info&, const Info&) = default;

 private:
  std::vector<std::pair<std::string, InfoValue>> entries_;
};

// Info key set by TimeLimit when an episode is cut short by the step limit.
inline constexpr std::string_view kTruncatedKey = "TimeLimit.truncated";

// (observation, reward, terminal, info); supports
// `auto [obs, reward, terminal, info] = env.step(a);`
struct StepResult {
  Observation observation;
  double reward = 0.0;
  bool terminal = false;
  Info info;

  bool truncated() const noexcept { return info.flag(kTruncatedKey); }
};

}  // namespace fastgym
