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

#include "eqlab/eval.hpp"

#include <algorithm>
#include <cmath>

#include "eqlab/agents.hpp"
#include "eqlab/regret.hpp"
#include "eqlab/util.hpp"

namespace eqlab {

TreeEvaluator::TreeEvaluator(std::shared_ptr<const Game> game)
    : game_(std::move(game)) {
  std::unique_ptr<State> root = game_->NewInitialState();
  Expand(*root);
}

int32_t TreeEvaluator::Expand(const State& state) {
  const int32_t id = static_cast<int32_t>(nodes_.size());
  nodes_.emplace_back();
  if (state.IsTerminal()) {
    nodes_[id].player = kTerminalPlayerId;
    nodes_[id].payoff0 = state.Returns()[0];
    return id;
  }

  std::vector<ActionId> actions;
  std::vector<double> probs;
  if (state.IsChance()) {
    nodes_[id].player = kChancePlayerId;
    for (const auto& [action, prob] : state.ChanceOutcomes()) {
      actions.push_back(action);
      probs.push_back(prob);
    }
  } else {
    const PlayerId player = state.CurrentPlayer();
    nodes_[id].player = player;
    actions = state.LegalActions();
    probs.assign(actions.size(), 0.0);
    const std::string key = state.InformationStateKey();
    auto [it, inserted] = infostate_index_[player].try_emplace(
        key, static_cast<int32_t>(infostates_[player].size()));
    if (inserted) {
      InfoState info;
      info.key = key;
      info.legal = actions;
      infostates_[player].push_back(std::move(info));
    }
    nodes_[id].infostate = it->second;
    infostates_[player][it->second].histories.push_back(id);
  }

  const int32_t first = static_cast<int32_t>(children_.size());
  nodes_[id].first_child = first;
  nodes_[id].num_children = static_cast<int32_t>(actions.size());
  children_.resize(children_.size() + actions.size(), -1);
  chance_probs_.resize(children_.size(), 0.0);
  for (size_t i = 0; i < actions.size(); ++i) {
    chance_probs_[first + i] = probs[i];
  }
  for (size_t i = 0; i < actions.size(); ++i) {
    std::unique_ptr<State> child = state.Child(actions[i]);
    children_[first + i] = Expand(*child);
  }
  return id;
}

std::vector<std::vector<Distribution>> TreeEvaluator::InfostateProbabilities(
    const Policy& p0, const Policy& p1) const {
  std::vector<std::vector<Distribution>> probs(2);
  const Policy* policies[2] = {&p0, &p1};
  for (int player = 0; player < 2; ++player) {
    probs[player].reserve(infostates_[player].size());
    for (const InfoState& info : infostates_[player]) {
      probs[player].push_back(
          policies[player]->ActionProbabilities(info.key, info.legal));
    }
  }
  return probs;
}

double TreeEvaluator::BestResponseValue(const Policy& opponent,
                                        PlayerId br_player) const {
  EQLAB_CHECK(br_player == 0 || br_player == 1, "invalid best-response seat");
  const PlayerId opp = 1 - br_player;

  // Opponent action probabilities per opponent infostate.
  std::vector<Distribution> opp_probs;
  opp_probs.reserve(infostates_[opp].size());
  for (const InfoState& info : infostates_[opp]) {
    opp_probs.push_back(opponent.ActionProbabilities(info.key, info.legal));
  }

  // Top-down opponent-and-chance reach (children have larger node ids).
  std::vector<double> reach(nodes_.size(), 0.0);
  reach[0] = 1.0;
  for (size_t id = 0; id < nodes_.size(); ++id) {
    const Node& node = nodes_[id];
    if (node.player == kTerminalPlayerId || reach[id] == 0.0) continue;
    for (int32_t c = 0; c < node.num_children; ++c) {
      double factor = 1.0;
      if (node.player == kChancePlayerId) {
        factor = chance_probs_[node.first_child + c];
      } else if (node.player == opp) {
        factor = opp_probs[node.infostate][c];
      }
      reach[children_[node.first_child + c]] += reach[id] * factor;
    }
  }

  std::vector<double> value(nodes_.size(),
                            std::numeric_limits<double>::quiet_NaN());
  std::vector<int32_t> chosen(infostates_[br_player].size(), -1);
  auto node_value = [&](auto&& self, int32_t id) -> double {
    if (!std::isnan(value[id])) return value[id];
    const Node& node = nodes_[id];
    double v = 0.0;
    if (node.player == kTerminalPlayerId) {
      v = br_player == 0 ? node.payoff0 : -node.payoff0;
    } else if (node.player == kChancePlayerId) {
      for (int32_t c = 0; c < node.num_children; ++c) {
        v += chance_probs_[node.first_child + c] *
             self(self, children_[node.first_child + c]);
      }
    } else if (node.player == opp) {
      const Distribution& probs = opp_probs[node.infostate];
      for (int32_t c = 0; c < node.num_children; ++c) {
        if (probs[c] == 0.0) continue;
        v += probs[c] * self(self, children_[node.first_child + c]);
      }
    } else {
      // Choose once per information set, maximizing the reach-weighted sum
      // of action values over all histories in the set.
      if (chosen[node.infostate] < 0) {
        const InfoState& info = infostates_[br_player][node.infostate];
        int32_t best_action = 0;
        double best_value = -std::numeric_limits<double>::infinity();
        for (size_t a = 0; a < info.legal.size(); ++a) {
          double action_value = 0.0;
          for (int32_t h : info.histories) {
            const Node& hist = nodes_[h];
            action_value +=
                reach[h] *
                self(self, children_[hist.first_child + static_cast<int32_t>(a)]);
          }
          if (action_value > best_value) {
            best_value = action_value;
            best_action = static_cast<int32_t>(a);
          }
        }
        chosen[node.infostate] = best_action;
      }
      v = self(self, children_[node.first_child + chosen[node.infostate]]);
    }
    value[id] = v;
    return v;
  };
  return node_value(node_value, 0);
}

double TreeEvaluator::ExpectedValue(const Policy& p0, const Policy& p1,
                                    PlayerId perspective) const {
  EQLAB_CHECK(perspective == 0 || perspective == 1, "invalid perspective");
  std::vector<std::vector<Distribution>> probs =
      InfostateProbabilities(p0, p1);
  std::vector<double> value(nodes_.size(), 0.0);
  for (size_t i = nodes_.size(); i-- > 0;) {
    const Node& node = nodes_[i];
    if (node.player == kTerminalPlayerId) {
      value[i] = node.payoff0;
      continue;
    }
    double v = 0.0;
    for (int32_t c = 0; c < node.num_children; ++c) {
      double p = node.player == kChancePlayerId
                     ? chance_probs_[node.first_child + c]
                     : probs[node.player][node.infostate][c];
      v += p * value[children_[node.first_child + c]];
    }
    value[i] = v;
  }
  return perspective == 0 ? value[0] : -value[0];
}

EvalReport TreeEvaluator::Exploitability(const Policy& p0,
                                         const Policy& p1) const {
  EvalReport report;
  report.best_response_values[0] = BestResponseValue(p1, 0);
  report.best_response_values[1] = BestResponseValue(p0, 1);
  report.profile_values[0] = ExpectedValue(p0, p1, 0);
  report.profile_values[1] = -report.profile_values[0];
  report.exploitability = (report.best_response_values[0] +
                           report.best_response_values[1]) /
                          2.0;
  return report;
}

std::vector<std::vector<double>> TreeEvaluator::NewAverageStrategyWeights(
    PlayerId seat) const {
  std::vector<std::vector<double>> weights;
  weights.reserve(infostates_[seat].size());
  for (const InfoState& info : infostates_[seat]) {
    weights.emplace_back(info.legal.size(), 0.0);
  }
  return weights;
}

void TreeEvaluator::AccumulateAverageStrategy(
    const Policy& policy, PlayerId seat, double weight,
    std::vector<std::vector<double>>* weights) const {
  EQLAB_CHECK(weights->size() == infostates_[seat].size(),
              "average-strategy weights have the wrong shape");
  // Own reach only: chance and opponent moves keep the parent's weight.
  // All histories of one infostate share the same own reach (perfect
  // recall), so each infostate is accumulated at its first history.
  std::vector<double> own_reach(nodes_.size(), 0.0);
  own_reach[0] = 1.0;
  std::vector<Distribution> probs(infostates_[seat].size());
  std::vector<char> done(infostates_[seat].size(), 0);
  for (size_t id = 0; id < nodes_.size(); ++id) {
    const Node& node = nodes_[id];
    if (node.player == kTerminalPlayerId) continue;
    const bool own = node.player == seat;
    if (own && !done[node.infostate]) {
      const InfoState& info = infostates_[seat][node.infostate];
      probs[node.infostate] = policy.ActionProbabilities(info.key, info.legal);
      std::vector<double>& w = (*weights)[node.infostate];
      for (size_t a = 0; a < w.size(); ++a) {
        w[a] += weight * own_reach[id] * probs[node.infostate][a];
      }
      done[node.infostate] = 1;
    }
    for (int32_t c = 0; c < node.num_children; ++c) {
      double factor = own ? probs[node.infostate][c] : 1.0;
      own_reach[children_[node.first_child + c]] =
          std::max(own_reach[children_[node.first_child + c]],
                   own_reach[id] * factor);
    }
  }
}

TabularPolicy TreeEvaluator::AverageStrategyPolicy(
    PlayerId seat, const std::vector<std::vector<double>>& weights) const {
  TabularPolicy policy;
  for (size_t i = 0; i < infostates_[seat].size(); ++i) {
    double total = 0.0;
    for (double w : weights[i]) total += w;
    if (total <= 0.0) continue;
    Distribution probs(weights[i].size());
    for (size_t a = 0; a < probs.size(); ++a) probs[a] = weights[i][a] / total;
    policy.SetProbabilities(infostates_[seat][i].key, probs);
  }
  return policy;
}

// ---------------------------------------------------------------------------
// Sampled play

std::vector<double> PlayEpisode(const Game& game, const Policy& p0,
                                const Policy& p1, Rng& rng) {
  const Policy* policies[2] = {&p0, &p1};
  std::unique_ptr<State> state = game.NewInitialState();
  std::vector<double> probs;
  while (!state->IsTerminal()) {
    if (state->IsChance()) {
      std::vector<ChanceOutcome> outcomes = state->ChanceOutcomes();
      probs.clear();
      for (const auto& [action, p] : outcomes) probs.push_back(p);
      state = state->Child(outcomes[rng.SampleIndex(probs)].first);
      continue;
    }
    const PlayerId player = state->CurrentPlayer();
    std::vector<ActionId> legal = state->LegalActions();
    Distribution dist = policies[player]->ActionProbabilities(
        state->InformationStateKey(), legal);
    state = state->Child(legal[rng.SampleIndex(dist)]);
  }
  return state->Returns();
}

MatchReport PlayArena(const Game& game, const Policy& policy_a,
                      const Policy& policy_b, int64_t episodes, Rng& rng) {
  EQLAB_CHECK(episodes >= 1, "arena needs at least one episode");
  MatchReport report;
  report.episodes = episodes;
  double payoff_sum = 0.0;
  for (int64_t e = 0; e < episodes; ++e) {
    std::vector<double> returns = PlayEpisode(game, policy_a, policy_b, rng);
    payoff_sum += returns[0];
    if (returns[0] > 1e-12) {
      ++report.wins;
    } else if (returns[0] < -1e-12) {
      ++report.losses;
    } else {
      ++report.draws;
    }
  }
  report.win_rate = static_cast<double>(report.wins) / episodes;
  report.loss_rate = static_cast<double>(report.losses) / episodes;
  report.draw_rate = static_cast<double>(report.draws) / episodes;
  report.avg_payoff = payoff_sum / static_cast<double>(episodes);
  return report;
}

double LearningCurveProbe(const Game& game, const Policy& policy,
                          PlayerId seat, int64_t episodes, Rng& rng) {
  EQLAB_CHECK(episodes >= 1, "probe needs at least one episode");
  UniformPolicy random;
  double payoff_sum = 0.0;
  for (int64_t e = 0; e < episodes; ++e) {
    std::vector<double> returns =
        seat == 0 ? PlayEpisode(game, policy, random, rng)
                  : PlayEpisode(game, random, policy, rng);
    payoff_sum += returns[seat];
  }
  return payoff_sum / static_cast<double>(episodes);
}

// ---------------------------------------------------------------------------
// Regret probe

ArmProbeLearner::ArmProbeLearner(ArmLearner* learner, int64_t update_every,
                                 int64_t batch_size, size_t capacity)
    : learner_(learner),
      update_every_(update_every),
      batch_size_(batch_size),
      buffer_(capacity) {}

Distribution ArmProbeLearner::PolicyAt(
    const std::string& key, const std::vector<ActionId>& legal) const {
  return learner_->PolicyAt(key, legal);
}

void ArmProbeLearner::OnEpisode(const std::vector<Transition>& transitions) {
  for (const Transition& t : transitions) buffer_.Add(t);
  since_update_ += static_cast<int64_t>(transitions.size());
  if (since_update_ >= update_every_ &&
      buffer_.size() >= static_cast<size_t>(batch_size_)) {
    learner_->Update(buffer_.RecentWindow(static_cast<size_t>(batch_size_)));
    since_update_ = 0;
  }
}

QProbeLearner::QProbeLearner(QLearner* learner, double epsilon,
                             int64_t update_every, int64_t batch_size,
                             uint64_t seed, size_t capacity)
    : learner_(learner),
      epsilon_(epsilon),
      update_every_(update_every),
      batch_size_(batch_size),
      buffer_(capacity),
      rng_(seed) {}

Distribution QProbeLearner::PolicyAt(
    const std::string& key, const std::vector<ActionId>& legal) const {
  return learner_->EpsilonGreedy(key, legal, epsilon_);
}

void QProbeLearner::OnEpisode(const std::vector<Transition>& transitions) {
  for (const Transition& t : transitions) buffer_.Add(t);
  since_update_ += static_cast<int64_t>(transitions.size());
  if (since_update_ >= update_every_ &&
      buffer_.size() >= static_cast<size_t>(batch_size_)) {
    learner_->Update(
        buffer_.SampleUniform(static_cast<size_t>(batch_size_), rng_));
    since_update_ = 0;
  }
}

std::vector<RegretCurvePoint> FixedOpponentRegretProbe(
    const TreeEvaluator& evaluator, ProbeLearner& learner,
    const Policy& opponent, PlayerId seat,
    std::span<const int64_t> checkpoints, Rng& rng) {
  EQLAB_CHECK(!checkpoints.empty(), "regret probe needs checkpoints");
  for (size_t i = 1; i < checkpoints.size(); ++i) {
    EQLAB_CHECK(checkpoints[i] > checkpoints[i - 1],
                "regret probe checkpoints must ascend");
  }
  const Game& game = evaluator.game();
  const double best_fixed = evaluator.BestResponseValue(opponent, seat);
  FunctionPolicy learner_policy(
      [&learner](const std::string& key, const std::vector<ActionId>& legal) {
        return learner.PolicyAt(key, legal);
      });

  std::vector<std::vector<double>> weights =
      evaluator.NewAverageStrategyWeights(seat);
  std::vector<RegretCurvePoint> curve;
  size_t next_checkpoint = 0;
  const int64_t total = checkpoints.back();
  std::vector<double> probs;
  std::vector<Transition> transitions;
  for (int64_t episode = 1; episode <= total; ++episode) {
    // The policy the learner holds now is the one that plays this episode;
    // fold it into the running average before any update can change it.
    evaluator.AccumulateAverageStrategy(learner_policy, seat, 1.0, &weights);

    transitions.clear();
    std::unique_ptr<State> state = game.NewInitialState();
    bool pending = false;
    std::string pending_key;
    ActionId pending_action = -1;
    while (!state->IsTerminal()) {
      if (state->IsChance()) {
        std::vector<ChanceOutcome> outcomes = state->ChanceOutcomes();
        probs.clear();
        for (const auto& [action, p] : outcomes) probs.push_back(p);
        state = state->Child(outcomes[rng.SampleIndex(probs)].first);
        continue;
      }
      const PlayerId player = state->CurrentPlayer();
      std::vector<ActionId> legal = state->LegalActions();
      const std::string key = state->InformationStateKey();
      Distribution dist = player == seat
                              ? learner.PolicyAt(key, legal)
                              : opponent.ActionProbabilities(key, legal);
      ActionId action = legal[rng.SampleIndex(dist)];
      if (player == seat) {
        if (pending) {
          transitions.push_back(
              {pending_key, pending_action, 0.0, key, false, episode});
        }
        pending = true;
        pending_key = key;
        pending_action = action;
      }
      state = state->Child(action);
    }
    if (pending) {
      transitions.push_back({pending_key, pending_action,
                             state->Returns()[seat], std::string(), true,
                             episode});
    }
    learner.OnEpisode(transitions);

    if (episode == checkpoints[next_checkpoint]) {
      TabularPolicy average = evaluator.AverageStrategyPolicy(seat, weights);
      double achieved = seat == 0
                            ? evaluator.ExpectedValue(average, opponent, 0)
                            : evaluator.ExpectedValue(opponent, average, 1);
      curve.push_back({episode, best_fixed - achieved});
      ++next_checkpoint;
    }
  }
  return curve;
}

}  // namespace eqlab
