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

#ifndef EQLAB_BUFFERS_HPP_
#define EQLAB_BUFFERS_HPP_

#include <cstdint>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "eqlab/rng.hpp"

namespace eqlab {

// One agent-level step: from an information state to the agent's next
// information state (or the end of the episode), with the reward collected
// in between. Terminal transitions carry the agent's final payoff.
struct Transition {
  std::string key;
  int action = -1;
  double reward = 0.0;
  std::string next_key;  // empty when terminal
  bool terminal = false;
  int64_t episode = -1;
};

// Fixed-capacity circular buffer; the oldest entry is evicted first.
class ReplayBuffer {
 public:
  explicit ReplayBuffer(size_t capacity);

  void Add(Transition transition);
  size_t size() const { return data_.size(); }
  size_t capacity() const { return capacity_; }
  int64_t total_added() const { return total_added_; }

  // i = 0 is the oldest retained transition.
  const Transition& at(size_t i) const;

  // Uniform sample with replacement.
  std::vector<const Transition*> SampleUniform(size_t n, Rng& rng) const;

  // The most recent n transitions (all of them if fewer), in chronological
  // order.
  std::vector<const Transition*> RecentWindow(size_t n) const;

 private:
  size_t capacity_;
  size_t head_ = 0;  // next write position once full
  int64_t total_added_ = 0;
  std::vector<Transition> data_;
};

// Reservoir of (key, action) pairs with an items-seen counter: after N >=
// capacity insertions every seen item is retained with probability
// capacity / N. Per-key action counts over the current contents are
// maintained incrementally (vectors padded to `num_actions`).
class SlBuffer {
 public:
  SlBuffer(size_t capacity, int num_actions);

  void Insert(const std::string& key, int action, Rng& rng);

  size_t size() const { return items_.size(); }
  size_t capacity() const { return capacity_; }
  int64_t items_seen() const { return items_seen_; }
  const std::vector<std::pair<std::string, int>>& items() const {
    return items_;
  }

  // Action counts of the current contents, exactly.
  const std::unordered_map<std::string, std::vector<double>>& counts() const {
    return counts_;
  }

 private:
  size_t capacity_;
  int num_actions_;
  int64_t items_seen_ = 0;
  std::vector<std::pair<std::string, int>> items_;
  std::unordered_map<std::string, std::vector<double>> counts_;
};

}  // namespace eqlab

#endif  // EQLAB_BUFFERS_HPP_
