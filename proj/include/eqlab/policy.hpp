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

#ifndef EQLAB_POLICY_HPP_
#define EQLAB_POLICY_HPP_

#include <map>
#include <string>
#include <vector>

#include "eqlab/game.hpp"

namespace eqlab {

// Probability vector aligned with an ascending legal-action list.
using Distribution = std::vector<double>;

Distribution UniformDistribution(size_t num_actions);

// Behavioural strategy: a distribution over legal actions for every
// information-state key. Implementations must be total; unknown keys
// default to uniform so that early checkpoints are always evaluable.
class Policy {
 public:
  virtual ~Policy() = default;
  virtual Distribution ActionProbabilities(
      const std::string& key, const std::vector<ActionId>& legal) const = 0;
};

class UniformPolicy final : public Policy {
 public:
  Distribution ActionProbabilities(
      const std::string& key, const std::vector<ActionId>& legal) const override;
};

class TabularPolicy final : public Policy {
 public:
  TabularPolicy() = default;

  // `probabilities` is aligned with the ascending legal-action list at `key`.
  void SetProbabilities(const std::string& key, Distribution probabilities);

  Distribution ActionProbabilities(
      const std::string& key, const std::vector<ActionId>& legal) const override;

  bool HasKey(const std::string& key) const;
  const std::map<std::string, Distribution>& table() const { return table_; }

 private:
  std::map<std::string, Distribution> table_;
};

// Per-key convex combination (1 - alpha) * pi + alpha * br. Both policies
// must cover exactly the same key set.
TabularPolicy MixPolicies(const TabularPolicy& pi, const TabularPolicy& br,
                          double alpha);

}  // namespace eqlab

#endif  // EQLAB_POLICY_HPP_
