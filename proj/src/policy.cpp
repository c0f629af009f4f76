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

#include "eqlab/policy.hpp"

#include <cmath>

#include "eqlab/util.hpp"

namespace eqlab {

Distribution UniformDistribution(size_t num_actions) {
  EQLAB_CHECK(num_actions > 0, "distribution over empty action set");
  return Distribution(num_actions, 1.0 / static_cast<double>(num_actions));
}

Distribution UniformPolicy::ActionProbabilities(
    const std::string& key, const std::vector<ActionId>& legal) const {
  (void)key;
  return UniformDistribution(legal.size());
}

void TabularPolicy::SetProbabilities(const std::string& key,
                                     Distribution probabilities) {
  EQLAB_CHECK(!probabilities.empty(), "empty distribution for key " + key);
  double sum = 0.0;
  for (double p : probabilities) {
    EQLAB_CHECK(p >= 0.0 && std::isfinite(p),
                "invalid probability for key " + key);
    sum += p;
  }
  EQLAB_CHECK(std::abs(sum - 1.0) < 1e-9,
              "probabilities for key " + key + " sum to " +
                  FormatDouble(sum, 17));
  table_[key] = std::move(probabilities);
}

Distribution TabularPolicy::ActionProbabilities(
    const std::string& key, const std::vector<ActionId>& legal) const {
  auto it = table_.find(key);
  if (it == table_.end()) return UniformDistribution(legal.size());
  if (it->second.size() != legal.size()) {
    FatalError("policy for key " + key + " has " +
               std::to_string(it->second.size()) + " entries, expected " +
               std::to_string(legal.size()));
  }
  return it->second;
}

bool TabularPolicy::HasKey(const std::string& key) const {
  return table_.find(key) != table_.end();
}

TabularPolicy MixPolicies(const TabularPolicy& pi, const TabularPolicy& br,
                          double alpha) {
  EQLAB_CHECK(alpha >= 0.0 && alpha <= 1.0, "mixing weight outside [0, 1]");
  if (pi.table().size() != br.table().size()) {
    FatalError("policy key spaces differ: " +
               std::to_string(pi.table().size()) + " vs " +
               std::to_string(br.table().size()) + " keys");
  }
  TabularPolicy mixed;
  for (const auto& [key, pi_probs] : pi.table()) {
    if (!br.HasKey(key)) {
      FatalError("policy key spaces differ: key " + key +
                 " present on one side only");
    }
    const Distribution& br_probs = br.table().at(key);
    EQLAB_CHECK(br_probs.size() == pi_probs.size(),
                "distribution sizes differ at key " + key);
    Distribution out(pi_probs.size());
    for (size_t i = 0; i < out.size(); ++i) {
      out[i] = (1.0 - alpha) * pi_probs[i] + alpha * br_probs[i];
    }
    mixed.SetProbabilities(key, std::move(out));
  }
  return mixed;
}

}  // namespace eqlab
