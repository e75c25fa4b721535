#pragma once

#include <array>
#include <cstdint>

namespace fastgym {

// xoshiro256** (Blackman & Vigna) seeded through splitmix64.
//
// The stream is fully determined by the 64-bit seed and identical on every
// platform. Each call to next(), uniform01(), uniform() or below() consumes
// exactly one raw 64-bit draw.
class Rng {
 public:
  explicit Rng(std::uint64_t seed = 0) noexcept { reseed(seed); }

  void reseed(std::uint64_t seed) noexcept;

  std::uint64_t next() noexcept;

  // Uniform double in [0, 1) with 53 bits of precision.
  double uniform01() noexcept;

  // Uniform double in [lo, hi); returns lo when lo == hi.
  // Throws std::invalid_argument when lo > hi or either bound is not finite.
  double uniform(double lo, double hi);

  // Uniform integer in [0, n). n must be positive.
  std::uint64_t below(std::uint64_t n) noexcept;

  // Advances the stream by 2^128 draws. Used to derive non-overlapping
  // sub-streams from one seed.
  void jump() noexcept;

  // Copy of this generator advanced by jump().
  [[nodiscard]] Rng jumped() const noexcept {
    Rng copy = *this;
    copy.jump();
    return copy;
  }

  const std::array<std::uint64_t, 4>& state() const noexcept { return s_; }

  friend bool operator==(const Rng&, const Rng&) = default;

 private:
  std::array<std::uint64_t, 4> s_{};
};

}  // namespace fastgym
