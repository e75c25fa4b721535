#include "fastgym/rng.hpp"

#include <cmath>
#include <stdexcept>

namespace fastgym {
namespace {

constexpr std::uint64_t rotl(std::uint64_t x, int k) noexcept {
  return (x << k) | (x >> (64 - k));
}

std::uint64_t splitmix64(std::uint64_t& state) noexcept {
  state += 0x9E3779B97F4A7C15ULL;
  std::uint64_t z = state;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

}  // namespace

void Rng::reseed(std::uint64_t seed) noexcept {
  std::uint64_t sm = seed;
  for (auto& word : s_) word = splitmix64(sm);
}

std::uint64_t Rng::next() noexcept {
  const std::uint64_t result = rotl(s_[1] * 5, 7) * 9;
  const std::uint64_t t = s_[1] << 17;
  s_[2] ^= s_[0];
  s_[3] ^= s_[1];
  s_[1] ^= s_[2];
  s_[0] ^= s_[3];
  s_[2] ^= t;
  s_[3] = rotl(s_[3], 45);
  return result;
}

double Rng::uniform01() noexcept {
  return static_cast<double>(next() >> 11) * 0x1.0p-53;
}

double Rng::uniform(double lo, double hi) {
  if (!std::isfinite(lo) || !std::isfinite(hi)) {
    throw std::invalid_argument("Rng::uniform: bounds must be finite");
  }
  if (lo > hi) {
    throw std::invalid_argument("Rng::uniform: lo > hi");
  }
  const double u = uniform01();
  if (lo == hi) return lo;
  const double value = lo + (hi - lo) * u;
  // Rounding can land exactly on hi for some intervals.
  return value < hi ? value : std::nextafter(hi, lo);
}

namespace {
__extension__ using u128 = unsigned __int128;
}  // namespace

std::uint64_t Rng::below(std::uint64_t n) noexcept {
  const auto wide = static_cast<u128>(next()) * n;
  return static_cast<std::uint64_t>(wide >> 64);
}

void Rng::jump() noexcept {
  static constexpr std::uint64_t kJump[] = {
      0x180EC6D33CFD0ABAULL, 0xD5A61266F0C9392CULL, 0xA9582618E03FC9AAULL,
      0x39ABDC4529B1661CULL};
  std::array<std::uint64_t, 4> acc{};
  for (std::uint64_t word : kJump) {
    for (int b = 0; b < 64; ++b) {
      if (word & (std::uint64_t{1} << b)) {
        for (int i = 0; i < 4; ++i) acc[i] ^= s_[i];
      }
      next();
    }
  }
  s_ = acc;
}

}  // namespace fastgym
