// Copyright 2026 The eqlab Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "eqlab/buffers.hpp"

#include "eqlab/util.hpp"

namespace eqlab {

ReplayBuffer::ReplayBuffer(size_t capacity) : capacity_(capacity) {
  EQLAB_CHECK(capacity > 0, "replay buffer capacity must be positive");
}

void ReplayBuffer::Add(Transition transition) {
  if (data_.size() < capacity_) {
    data_.push_back(std::move(transition));
  } else {
    data_[head_] = std::move(transition);
    head_ = (head_ + 1) % capacity_;
  }
  ++total_added_;
}

const Transition& ReplayBuffer::at(size_t i) const {
  EQLAB_CHECK(i < data_.size(), "replay buffer index out of range");
  if (data_.size() < capacity_) return data_[i];
  return data_[(head_ + i) % capacity_];
}

std::vector<const Transition*> ReplayBuffer::SampleUniform(size_t n,
                                                           Rng& rng) const {
  EQLAB_CHECK(!data_.empty(), "sampling from an empty replay buffer");
  std::vector<const Transition*> sample;
  sample.reserve(n);
  for (size_t i = 0; i < n; ++i) {
    sample.push_back(&data_[rng.UniformInt(static_cast<int>(data_.size()))]);
  }
  return sample;
}

std::vector<const Transition*> ReplayBuffer::RecentWindow(size_t n) const {
  size_t take = std::min(n, data_.size());
  std::vector<const Transition*> window;
  window.reserve(take);
  for (size_t i = data_.size() - take; i < data_.size(); ++i) {
    window.push_back(&at(i));
  }
  return window;
}

SlBuffer::SlBuffer(size_t capacity, int num_actions)
    : capacity_(capacity), num_actions_(num_actions) {
  EQLAB_CHECK(capacity > 0, "reservoir capacity must be positive");
  EQLAB_CHECK(num_actions > 0, "reservoir action count must be positive");
}

void SlBuffer::Insert(const std::string& key, int action, Rng& rng) {
  EQLAB_CHECK(action >= 0 && action < num_actions_,
              "reservoir action out of range");
  ++items_seen_;
  if (items_.size() < capacity_) {
    items_.emplace_back(key, action);
    auto [it, inserted] = counts_.try_emplace(key, num_actions_, 0.0);
    it->second[action] += 1.0;
    return;
  }
  // Algorithm R: the N-th item replaces a uniform slot with probability
  // capacity / N.
  int64_t slot = static_cast<int64_t>(
      rng.UniformDouble() * static_cast<double>(items_seen_));
  if (slot >= static_cast<int64_t>(capacity_)) return;
  auto& [old_key, old_action] = items_[static_cast<size_t>(slot)];
  auto old_it = counts_.find(old_key);
  old_it->second[old_action] -= 1.0;
  double remaining = 0.0;
  for (double c : old_it->second) remaining += c;
  if (remaining <= 0.0) counts_.erase(old_it);
  items_[static_cast<size_t>(slot)] = {key, action};
  auto [it, inserted] = counts_.try_emplace(key, num_actions_, 0.0);
  it->second[action] += 1.0;
}

}  // namespace eqlab
