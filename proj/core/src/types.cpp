#include "fastgym/types.hpp"

#include <cmath>
#include <stdexcept>

namespace fastgym {

Shape::Shape(std::initializer_list<std::size_t> dims)
    : Shape(std::span<const std::size_t>(dims.begin(), dims.size())) {}

Shape::Shape(std::span<const std::size_t> dims) {
  if (dims.size() > kMaxRank) {
    throw std::invalid_argument("Shape: rank exceeds " +
                                std::to_string(kMaxRank));
  }
  for (std::size_t d : dims) {
    if (d == 0) throw std::invalid_argument("Shape: dimensions must be positive");
    dims_[rank_++] = d;
  }
}

std::size_t Shape::num_elements() const noexcept {
  std::size_t n = 1;
  for (std::size_t i = 0; i < rank_; ++i) n *= dims_[i];
  return n;
}

std::string Shape::to_string() const {
  std::string out = "(";
  for (std::size_t i = 0; i < rank_; ++i) {
    if (i) out += ", ";
    out += std::to_string(dims_[i]);
  }
  if (rank_ == 1) out += ",";
  return out + ")";
}

Observation::Observation(std::vector<double> values, Shape s)
    : data(std::move(values)), shape(s) {
  if (shape.num_elements() != data.size()) {
    throw std::invalid_argument("Observation: shape " + shape.to_string() +
                                " does not match " +
                                std::to_string(data.size()) + " values");
  }
}

Observation::Observation(std::vector<double> values)
    : data(std::move(values)), shape{data.size()} {}

bool Observation::all_finite() const noexcept {
  for (double v : data) {
    if (!std::isfinite(v)) return false;
  }
  return true;
}

void Info::set(std::string key, InfoValue value) {
  for (auto& [k, v] : entries_) {
    if (k == key) {
      v = value;
      return;
    }
  }
  entries_.emplace_back(std::move(key), value);
}

const InfoValue* Info::find(std::string_view key) const noexcept {
  for (const auto& [k, v] : entries_) {
    if (k == key) return &v;
  }
  return nullptr;
}

bool Info::flag(std::string_view key) const noexcept {
  const InfoValue* v = find(key);
  if (v == nullptr) return false;
  const bool* b = std::get_if<bool>(v);
  return b != nullptr && *b;
}

}  // namespace fastgym
