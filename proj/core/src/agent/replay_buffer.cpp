#include "fastgym/agent/replay_buffer.hpp"

#include <stdexcept>

namespace fastgym {

ReplayBuffer::ReplayBuffer(std::size_t capacity) {
  if (capacity == 0) throw std::invalid_argument("ReplayBuffer: capacity must be positive");
  slots_.resize(capacity);
}

void ReplayBuffer::push(Transition t) {
  slots_[head_] = std::move(t);
  head_ = (head_ + 1) % slots_.size();
  if (size_ < slots_.size()) ++size_;
}

std::vector<std::size_t> ReplayBuffer::sample_indices(std::size_t batch_size, Rng& rng) const {
  if (size_ == 0) throw std::invalid_argument("ReplayBuffer: cannot sample from empty buffer");
  std::vector<std::size_t> indices(batch_size);
  // Slots [0, size_) are occupied whether or not the ring has wrapped.
  for (std::size_t& i : indices) i = static_cast<std::size_t>(rng.below(size_));
  return indices;
}

}  // namespace fastgym
