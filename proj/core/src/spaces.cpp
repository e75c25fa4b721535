#include "fastgym/spaces.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace fastgym {

DiscreteSpace::DiscreteSpace(std::int64_t n) : n_(n) {
  if (n < 1) throw std::invalid_argument("DiscreteSpace: n must be >= 1");
}

std::int64_t DiscreteSpace::sample(Rng& rng) const noexcept {
  return static_cast<std::int64_t>(rng.below(static_cast<std::uint64_t>(n_)));
}

BoxSpace::BoxSpace(std::vector<double> low, std::vector<double> high, Shape shape)
    : low_(std::move(low)), high_(std::move(high)), shape_(shape) {
  if (low_.size() != high_.size() || low_.size() != shape_.num_elements()) {
    throw std::invalid_argument("BoxSpace: bounds do not match shape " +
                                shape_.to_string());
  }
  for (std::size_t i = 0; i < low_.size(); ++i) {
    if (std::isnan(low_[i]) || std::isnan(high_[i]) || low_[i] > high_[i]) {
      throw std::invalid_argument("BoxSpace: require low <= high in dimension " +
                                  std::to_string(i));
    }
  }
}

BoxSpace::BoxSpace(std::vector<double> low, std::vector<double> high)
    : BoxSpace(low, high, Shape{low.size()}) {}

bool BoxSpace::bounded() const noexcept {
  for (std::size_t i = 0; i < low_.size(); ++i) {
    if (!std::isfinite(low_[i]) || !std::isfinite(high_[i])) return false;
  }
  return true;
}

Observation BoxSpace::sample(Rng& rng) const {
  if (!bounded()) {
    throw std::domain_error("BoxSpace::sample: cannot sample an unbounded box");
  }
  std::vector<double> values(low_.size());
  for (std::size_t i = 0; i < values.size(); ++i) {
    values[i] = rng.uniform(low_[i], high_[i]);
  }
  return Observation(std::move(values), shape_);
}

bool BoxSpace::contains(std::span<const double> values) const noexcept {
  if (values.size() != low_.size()) return false;
  for (std::size_t i = 0; i < values.size(); ++i) {
    // Written so that NaN is rejected.
    if (!(values[i] >= low_[i] && values[i] <= high_[i])) return false;
  }
  return true;
}

bool BoxSpace::contains(const Observation& obs) const noexcept {
  return obs.shape == shape_ && contains(obs.values());
}

Action sample(const Space& space, Rng& rng) {
  if (const auto* d = std::get_if<DiscreteSpace>(&space)) {
    return Action{d->sample(rng)};
  }
  return Action{std::get<BoxSpace>(space).sample(rng).data};
}

bool contains(const Space& space, const Action& action) noexcept {
  if (const auto* d = std::get_if<DiscreteSpace>(&space)) {
    const auto* a = std::get_if<std::int64_t>(&action);
    return a != nullptr && d->contains(*a);
  }
  const auto* v = std::get_if<std::vector<double>>(&action);
  return v != nullptr && std::get<BoxSpace>(space).contains(*v);
}

std::string describe(const Space& space) {
  std::ostringstream out;
  if (const auto* d = std::get_if<DiscreteSpace>(&space)) {
    out << "Discrete(" << d->n() << ")";
  } else {
    out << "Box" << std::get<BoxSpace>(space).shape().to_string();
  }
  return out.str();
}

}  // namespace fastgym
