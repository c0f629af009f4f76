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
// Self-play agents. Each agent keeps a best-response learner (Q-learning
// for nfsp, regret matching for arm-nfsp), an average policy learned from
// its supervised memory, and the two replay memories. At the start of every
// episode an agent commits to playing its best response (probability alpha)
// or its average policy; best-response episodes feed the supervised memory.

#ifndef EQLAB_AGENTS_HPP_
#define EQLAB_AGENTS_HPP_

#include <cstdint>
#include <functional>
#include <memory>
#include <string>
#include <vector>

#include "eqlab/buffers.hpp"
#include "eqlab/config.hpp"
#include "eqlab/estimator.hpp"
#include "eqlab/game.hpp"
#include "eqlab/policy.hpp"
#include "eqlab/regret.hpp"
#include "eqlab/rng.hpp"

namespace eqlab {

enum class AgentVariant { kNfsp, kArmNfsp };
enum class EpisodeMode { kBestResponse, kAverage };

std::string AgentVariantName(AgentVariant variant);
AgentVariant AgentVariantFromName(const std::string& name);

// The average policy: exact per-key action frequencies of the supervised
// memory (tabular) or a softmax classifier trained by cross-entropy (mlp).
class AveragePolicy final : public Policy {
 public:
  // Tabular backend.
  explicit AveragePolicy(std::shared_ptr<const Game> game);
  // Mlp backend.
  AveragePolicy(std::shared_ptr<const Game> game, int hidden_dim, double lr,
                uint64_t seed);

  Distribution ActionProbabilities(
      const std::string& key, const std::vector<ActionId>& legal) const override;

  // Tabular: copies the buffer's exact action counts (returns 0).
  // Mlp: one cross-entropy SGD step on a uniform sample (returns the loss).
  double SlUpdate(const SlBuffer& buffer, int64_t batch_size, Rng& rng);

  void Save(std::ostream& os) const;
  void Load(std::istream& is);

 private:
  std::shared_ptr<const Game> game_;
  bool tabular_;
  std::unordered_map<std::string, std::vector<double>> counts_;
  std::unique_ptr<MlpEstimator> classifier_;
  double lr_ = 0.0;
};

// DQN-style best response: Q-learning with a periodically synced target
// network and epsilon-greedy exploration.
class QLearner {
 public:
  QLearner(std::shared_ptr<const Game> game, std::unique_ptr<Estimator> q,
           double lr, int64_t target_sync);

  // Epsilon-greedy distribution over `legal`; the greedy action is the
  // lowest-index maximizer.
  Distribution EpsilonGreedy(const std::string& key,
                             const std::vector<ActionId>& legal,
                             double epsilon) const;

  // One Q-learning step on `batch`: targets r for terminal transitions and
  // r + max_a' Q_target(s', a') otherwise. Returns the pre-update loss.
  double Update(std::span<const Transition* const> batch);

  int64_t updates() const { return updates_; }
  void Save(std::ostream& os) const;
  void Load(std::istream& is);

 private:
  std::shared_ptr<const Game> game_;
  std::unique_ptr<Estimator> q_;
  std::unique_ptr<Estimator> target_;
  double lr_;
  int64_t target_sync_;
  int64_t updates_ = 0;
  bool needs_features_;
};

struct AgentUpdateStats {
  bool rl_ran = false;
  bool sl_ran = false;
  double rl_loss = 0.0;
  double sl_loss = 0.0;
};

class Agent {
 public:
  Agent(AgentVariant variant, std::shared_ptr<const Game> game,
        PlayerId player, const TrainConfig& config, uint64_t seed);

  // Draws this episode's mode: best response with probability alpha.
  EpisodeMode SelectMode(Rng& rng);

  // Commits the episode mode and the exploration schedule position.
  void StartEpisode(int64_t episode_index);

  // Samples an action from the mode's policy restricted to `legal`, records
  // the pending transition into M_RL, and in best-response mode also the
  // (key, action) pair into M_SL.
  ActionId Step(const std::string& key, const std::vector<ActionId>& legal,
                Rng& rng);

  // Closes the episode with the agent's terminal payoff.
  void EndEpisode(double terminal_reward);

  bool ReadyToUpdate() const;
  AgentUpdateStats Update();

  Distribution BestResponseProbabilities(
      const std::string& key, const std::vector<ActionId>& legal) const;
  const AveragePolicy& average_policy() const { return pi_; }
  const ArmLearner* arm_learner() const { return arm_.get(); }

  EpisodeMode mode() const;
  double epsilon() const;
  AgentVariant variant() const { return variant_; }
  PlayerId player() const { return player_; }
  Rng& rng() { return rng_; }
  const ReplayBuffer& rl_buffer() const { return rl_; }
  const SlBuffer& sl_buffer() const { return sl_; }
  int64_t episodes_played() const { return episode_counter_; }

  // Writes/reads this agent's files (seat-prefixed) inside `dir`.
  void SaveCheckpoint(const std::string& dir) const;
  void LoadCheckpoint(const std::string& dir);

 private:
  void RecordTransition(const std::string* next_key, double reward,
                        bool terminal);

  AgentVariant variant_;
  std::shared_ptr<const Game> game_;
  PlayerId player_;
  TrainConfig config_;
  Rng rng_;
  std::unique_ptr<ArmLearner> arm_;
  std::unique_ptr<QLearner> q_;
  AveragePolicy pi_;
  ReplayBuffer rl_;
  SlBuffer sl_;
  EpisodeMode mode_ = EpisodeMode::kAverage;
  bool mode_set_ = false;
  int64_t episode_index_ = 0;
  int64_t episode_counter_ = 0;
  int64_t transitions_since_update_ = 0;
  bool pending_active_ = false;
  std::string pending_key_;
  ActionId pending_action_ = -1;
};

struct SelfPlayResult {
  int64_t episodes_played = 0;
  int64_t updates_run[2] = {0, 0};
};

// Plays config.episodes episodes of self-play, triggering agent updates on
// the recorded-transition cadence and invoking `on_eval` every
// config.eval_every episodes and at the final episode.
SelfPlayResult RunSelfPlay(const Game& game, Agent& agent0, Agent& agent1,
                           const TrainConfig& config, Rng& env_rng,
                           const std::function<void(int64_t)>& on_eval = {});

// Checkpoint directory access (meta plus per-seat policy files).
struct CheckpointMeta {
  std::string game;
  std::string algorithm;
  std::string backend;
  double alpha = 0.0;
  int64_t episodes = 0;
  uint64_t seed = 0;
};
void SaveRunCheckpoint(const std::string& dir, const Agent& agent0,
                       const Agent& agent1, const TrainConfig& config);
CheckpointMeta ReadCheckpointMeta(const std::string& dir);
std::unique_ptr<AveragePolicy> LoadAveragePolicyFromCheckpoint(
    const std::string& dir, std::shared_ptr<const Game> game, PlayerId seat);

}  // namespace eqlab

#endif  // EQLAB_AGENTS_HPP_
