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
// Exact evaluation. TreeEvaluator expands the full game tree once and then
// answers best-response and expected-value queries with array passes:
// best responses maximize per information set under opponent-and-chance
// reach weighting, so exploitability is exact rather than sampled.

#ifndef EQLAB_EVAL_HPP_
#define EQLAB_EVAL_HPP_

#include <cstdint>
#include <functional>
#include <memory>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "eqlab/buffers.hpp"
#include "eqlab/game.hpp"
#include "eqlab/policy.hpp"
#include "eqlab/rng.hpp"

namespace eqlab {

struct EvalReport {
  double exploitability = 0.0;                  // (eps_0 + eps_1) / 2
  std::array<double, 2> best_response_values{}; // exact, per player
  std::array<double, 2> profile_values{};       // value of the profile itself
  int64_t episode = 0;                          // stamp set by the caller
  uint64_t seed = 0;
};

struct MatchReport {
  int64_t wins = 0;
  int64_t losses = 0;
  int64_t draws = 0;
  int64_t episodes = 0;
  double win_rate = 0.0;
  double loss_rate = 0.0;
  double draw_rate = 0.0;
  double avg_payoff = 0.0;  // player-1-seat (index 0) perspective
};

class Policy;

// Policy backed by a callable; used to evaluate learners in flight.
class FunctionPolicy final : public Policy {
 public:
  using Fn = std::function<Distribution(const std::string&,
                                        const std::vector<ActionId>&)>;
  explicit FunctionPolicy(Fn fn) : fn_(std::move(fn)) {}
  Distribution ActionProbabilities(
      const std::string& key, const std::vector<ActionId>& legal) const override {
    return fn_(key, legal);
  }

 private:
  Fn fn_;
};

class TreeEvaluator {
 public:
  explicit TreeEvaluator(std::shared_ptr<const Game> game);

  const Game& game() const { return *game_; }
  size_t num_nodes() const { return nodes_.size(); }
  size_t num_infostates(PlayerId player) const {
    return infostates_[player].size();
  }

  // Exact value of the best response for `br_player` holding the opponent
  // fixed: a bottom-up pass maximizing per information set under
  // opponent-and-chance reach weights.
  double BestResponseValue(const Policy& opponent, PlayerId br_player) const;

  // Expected value of the profile for `perspective`.
  double ExpectedValue(const Policy& p0, const Policy& p1,
                       PlayerId perspective = 0) const;

  EvalReport Exploitability(const Policy& p0, const Policy& p1) const;

  // Sequence-form accumulator for empirical average strategies: adds
  // `weight` * (own reach) * policy probability to `weights` for every
  // information state of `seat`. `weights` is indexed by infostate id.
  void AccumulateAverageStrategy(const Policy& policy, PlayerId seat,
                                 double weight,
                                 std::vector<std::vector<double>>* weights)
      const;
  std::vector<std::vector<double>> NewAverageStrategyWeights(PlayerId seat)
      const;
  // Normalizes accumulated weights into a policy (keys with no weight are
  // omitted and default to uniform).
  TabularPolicy AverageStrategyPolicy(
      PlayerId seat, const std::vector<std::vector<double>>& weights) const;

 private:
  struct Node {
    int32_t first_child = 0;
    int32_t num_children = 0;
    int32_t infostate = -1;  // per acting player; -1 for chance/terminal
    PlayerId player = kTerminalPlayerId;
    double payoff0 = 0.0;  // terminal payoff, player-0 perspective
  };
  struct InfoState {
    std::string key;
    std::vector<ActionId> legal;
    std::vector<int32_t> histories;
  };

  int32_t Expand(const State& state);
  std::vector<std::vector<Distribution>> InfostateProbabilities(
      const Policy& p0, const Policy& p1) const;

  std::shared_ptr<const Game> game_;
  std::vector<Node> nodes_;
  std::vector<int32_t> children_;
  std::vector<double> chance_probs_;  // parallel to children_
  std::vector<InfoState> infostates_[2];
  std::unordered_map<std::string, int32_t> infostate_index_[2];
};

// Plays one episode sampling both policies and chance; returns the returns.
std::vector<double> PlayEpisode(const Game& game, const Policy& p0,
                                const Policy& p1, Rng& rng);

// Head-to-head match; `policy_a` holds the player-1 seat (index 0).
// Win/loss/draw counted from the sign of A's payoff.
MatchReport PlayArena(const Game& game, const Policy& policy_a,
                      const Policy& policy_b, int64_t episodes, Rng& rng);

// Mean payoff of `policy` seated at `seat` against the uniform-random
// agent over `episodes` fresh games.
double LearningCurveProbe(const Game& game, const Policy& policy,
                          PlayerId seat, int64_t episodes, Rng& rng);

// A learner the regret probe can drive: play distribution plus an
// episode-completion hook that may trigger internal updates.
class ProbeLearner {
 public:
  virtual ~ProbeLearner() = default;
  virtual Distribution PolicyAt(const std::string& key,
                                const std::vector<ActionId>& legal) const = 0;
  virtual void OnEpisode(const std::vector<Transition>& transitions) = 0;
};

class ArmLearner;
class QLearner;

// Drives an ArmLearner from probe episodes on the usual transition cadence.
class ArmProbeLearner final : public ProbeLearner {
 public:
  ArmProbeLearner(ArmLearner* learner, int64_t update_every,
                  int64_t batch_size, size_t capacity = 200000);
  Distribution PolicyAt(const std::string& key,
                        const std::vector<ActionId>& legal) const override;
  void OnEpisode(const std::vector<Transition>& transitions) override;

 private:
  ArmLearner* learner_;
  int64_t update_every_;
  int64_t batch_size_;
  int64_t since_update_ = 0;
  ReplayBuffer buffer_;
};

// Same cadence for a Q-learner with a fixed exploration rate.
class QProbeLearner final : public ProbeLearner {
 public:
  QProbeLearner(QLearner* learner, double epsilon, int64_t update_every,
                int64_t batch_size, uint64_t seed, size_t capacity = 200000);
  Distribution PolicyAt(const std::string& key,
                        const std::vector<ActionId>& legal) const override;
  void OnEpisode(const std::vector<Transition>& transitions) override;

 private:
  QLearner* learner_;
  double epsilon_;
  int64_t update_every_;
  int64_t batch_size_;
  int64_t since_update_ = 0;
  ReplayBuffer buffer_;
  Rng rng_;
};

// A frozen policy under the probe interface.
class FixedProbeLearner final : public ProbeLearner {
 public:
  explicit FixedProbeLearner(const Policy* policy) : policy_(policy) {}
  Distribution PolicyAt(const std::string& key,
                        const std::vector<ActionId>& legal) const override {
    return policy_->ActionProbabilities(key, legal);
  }
  void OnEpisode(const std::vector<Transition>& transitions) override {}

 private:
  const Policy* policy_;
};

struct RegretCurvePoint {
  int64_t episodes = 0;
  double average_regret = 0.0;
};

// Trains `learner` against a fixed opponent and, at each checkpoint t,
// reports the average external regret of the learner's empirical average
// strategy: (best fixed response value) - (average strategy value), both
// exact. Checkpoints must be ascending; the last one is the episode budget.
std::vector<RegretCurvePoint> FixedOpponentRegretProbe(
    const TreeEvaluator& evaluator, ProbeLearner& learner,
    const Policy& opponent, PlayerId seat,
    std::span<const int64_t> checkpoints, Rng& rng);

}  // namespace eqlab

#endif  // EQLAB_EVAL_HPP_
