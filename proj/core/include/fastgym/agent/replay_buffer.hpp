#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "fastgym/rng.hpp"
#include "fastgym/types.hpp"

namespace fastgym {

struct Transition {
  Observation state;
  std::int64_t action = 0;
  double reward = 0.0;
  Observation next_state;
  // True only when the episode ended through the dynamics; a time-limit
  // truncation still bootstraps from next_state.
  bool done = false;
};

// Fixed-capacity ring; once full, each push overwrites the oldest entry.
class ReplayBuffer {
 public:
  explicit ReplayBuffer(std::size_t capacity);

  void push(Transition t);

  std::size_t size() const noexcept { return size_; }
  std::size_t capacity() const noexcept { return slots_.size(); }
  bool full() const noexcept { return size_ == slots_.size(); }

  // i = 0 is the oldest stored transition.
  const Transition& oldest(std::size_t i) const noexcept {
    return slots_[(head_ + slots_.size() - size_ + i) % slots_.size()];
  }

  // batch_size indices drawn uniformly with replacement, one raw draw each.
  // Throws std::invalid_argument when the buffer is empty.
  std::vector<std::size_t> sample_indices(std::size_t batch_size, Rng& rng) const;
  const Transition& slot(std::size_t i) const noexcept { return slots_[i]; }

 private:
  std::vector<Transition> slots_;
  std::size_t head_ = 0;  // next write position
  std::size_t size_ = 0;
};

}  // namespace fastgym
