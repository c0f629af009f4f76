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
//
// Regret matching over clipped advantages. The potential over a regret
// vector is the squared norm of its positive part; its gradient, normalized
// to the simplex, is the matched distribution. The ArmLearner regresses Q
// and V onto undiscounted Monte-Carlo returns and accumulates the clipped
// advantages per information state; its policy matches on that table.

#ifndef EQLAB_REGRET_HPP_
#define EQLAB_REGRET_HPP_

#include <cstdint>
#include <iosfwd>
#include <map>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "eqlab/buffers.hpp"
#include "eqlab/estimator.hpp"
#include "eqlab/game.hpp"
#include "eqlab/policy.hpp"

namespace eqlab {

// P(w) = sum_k max(w_k, 0)^2. Nonnegative, and zero exactly on the
// negative orthant.
double Potential(std::span<const double> regrets);

// Componentwise 2 * max(w_k, 0).
std::vector<double> PotentialGradient(std::span<const double> regrets);

// L1-normalized potential gradient; uniform when no component is positive.
Distribution MatchDistribution(std::span<const double> regrets);

struct ArmUpdateStats {
  double v_loss = 0.0;
  double q_loss = 0.0;
  double mean_abs_regret = 0.0;  // over the keys visited by the update
  int64_t iteration = 0;
};

class ArmLearner {
 public:
  // `q` predicts per-action returns padded to game.MaxActions(); `v`
  // predicts a single state value.
  ArmLearner(std::shared_ptr<const Game> game, std::unique_ptr<Estimator> q,
             std::unique_ptr<Estimator> v, double lr_q, double lr_v);

  // Matched distribution over `legal` from the cumulative clipped regrets
  // at `key`; uniform while they are all zero.
  Distribution PolicyAt(const std::string& key,
                        const std::vector<ActionId>& legal) const;

  // One update iteration over a sample of complete episodes: fits V and Q
  // toward Monte-Carlo returns, then folds the clipped advantages of every
  // visited key into the cumulative regret table.
  ArmUpdateStats Update(std::span<const Transition* const> sample);

  int64_t iteration() const { return iteration_; }
  const std::map<std::string, std::vector<double>>& cumulative_regrets()
      const {
    return cumulative_regrets_;
  }

  void Save(std::ostream& os) const;
  void Load(std::istream& is);

 private:
  std::shared_ptr<const Game> game_;
  std::unique_ptr<Estimator> q_;
  std::unique_ptr<Estimator> v_;
  double lr_q_;
  double lr_v_;
  bool needs_features_;
  int64_t iteration_ = 0;
  // Per key, aligned with the ascending legal-action list; >= 0 throughout.
  std::map<std::string, std::vector<double>> cumulative_regrets_;
};

}  // namespace eqlab

#endif  // EQLAB_REGRET_HPP_
