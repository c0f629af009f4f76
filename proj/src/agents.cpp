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

#include "eqlab/agents.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <map>
#include <sstream>

#include "eqlab/util.hpp"

namespace eqlab {

namespace {

std::unique_ptr<Estimator> MakeEstimator(const Game& game,
                                         const TrainConfig& config,
                                         int output_dim, MlpLoss loss,
                                         uint64_t seed) {
  if (config.backend == "tabular") {
    return std::make_unique<TabularEstimator>(output_dim);
  }
  MlpEstimator::Config mlp;
  mlp.input_dim = game.FeatureDim();
  mlp.hidden_dim = static_cast<int>(config.mlp_hidden);
  mlp.output_dim = output_dim;
  mlp.activation = MlpActivation::kTanh;
  mlp.loss = loss;
  mlp.seed = seed;
  return std::make_unique<MlpEstimator>(mlp);
}

void WriteFile(const std::string& path, const std::string& contents) {
  std::ofstream os(path, std::ios::binary);
  if (!os) FatalError("cannot write " + path);
  os << contents;
  if (!os) FatalError("write failed for " + path);
}

std::ifstream OpenFile(const std::string& path) {
  std::ifstream is(path, std::ios::binary);
  if (!is) FatalError("cannot read " + path);
  return is;
}

}  // namespace

std::string AgentVariantName(AgentVariant variant) {
  return variant == AgentVariant::kNfsp ? "nfsp" : "arm-nfsp";
}

AgentVariant AgentVariantFromName(const std::string& name) {
  if (name == "nfsp") return AgentVariant::kNfsp;
  if (name == "arm-nfsp") return AgentVariant::kArmNfsp;
  FatalError("unknown agent variant '" + name + "'");
}

// ---------------------------------------------------------------------------
// AveragePolicy

AveragePolicy::AveragePolicy(std::shared_ptr<const Game> game)
    : game_(std::move(game)), tabular_(true) {}

AveragePolicy::AveragePolicy(std::shared_ptr<const Game> game, int hidden_dim,
                             double lr, uint64_t seed)
    : game_(std::move(game)), tabular_(false), lr_(lr) {
  MlpEstimator::Config config;
  config.input_dim = game_->FeatureDim();
  config.hidden_dim = hidden_dim;
  config.output_dim = game_->MaxActions();
  config.activation = MlpActivation::kTanh;
  config.loss = MlpLoss::kSoftmaxCrossEntropy;
  config.seed = seed;
  classifier_ = std::make_unique<MlpEstimator>(config);
}

Distribution AveragePolicy::ActionProbabilities(
    const std::string& key, const std::vector<ActionId>& legal) const {
  EQLAB_CHECK(!legal.empty(), "policy queried with no legal actions");
  if (tabular_) {
    auto it = counts_.find(key);
    if (it == counts_.end()) return UniformDistribution(legal.size());
    double total = 0.0;
    for (ActionId a : legal) total += it->second[a];
    if (total <= 0.0) return UniformDistribution(legal.size());
    Distribution probs(legal.size());
    for (size_t i = 0; i < legal.size(); ++i) {
      probs[i] = it->second[legal[i]] / total;
    }
    return probs;
  }
  std::vector<double> features = game_->EncodeFeatures(key);
  std::vector<double> logits = classifier_->Predict(key, features);
  double max_logit = -1e300;
  for (ActionId a : legal) max_logit = std::max(max_logit, logits[a]);
  Distribution probs(legal.size());
  double denom = 0.0;
  for (size_t i = 0; i < legal.size(); ++i) {
    probs[i] = std::exp(logits[legal[i]] - max_logit);
    denom += probs[i];
  }
  for (double& p : probs) p /= denom;
  return probs;
}

double AveragePolicy::SlUpdate(const SlBuffer& buffer, int64_t batch_size,
                               Rng& rng) {
  if (buffer.size() == 0) {
    throw NotReadyError("sl update: supervised memory is empty");
  }
  if (tabular_) {
    counts_ = buffer.counts();
    return 0.0;
  }
  const size_t n = std::min<size_t>(batch_size, buffer.size());
  TrainBatch batch;
  batch.reserve(n);
  const int num_actions = game_->MaxActions();
  for (size_t i = 0; i < n; ++i) {
    const auto& [key, action] =
        buffer.items()[rng.UniformInt(static_cast<int>(buffer.size()))];
    TrainExample example;
    example.key = key;
    example.features = game_->EncodeFeatures(key);
    example.target.assign(num_actions, 0.0);
    example.target[action] = 1.0;
    example.mask.assign(num_actions, 0);
    for (ActionId a : game_->LegalActionsFromKey(key)) example.mask[a] = 1;
    batch.push_back(std::move(example));
  }
  return classifier_->FitBatch(batch, lr_);
}

void AveragePolicy::Save(std::ostream& os) const {
  if (tabular_) {
    os << "avg-policy-v1 tabular " << game_->MaxActions() << ' '
       << counts_.size() << '\n';
    std::map<std::string, const std::vector<double>*> sorted;
    for (const auto& [key, row] : counts_) sorted[key] = &row;
    for (const auto& [key, row] : sorted) {
      os << key << '\t';
      for (size_t i = 0; i < row->size(); ++i) {
        if (i > 0) os << ' ';
        os << FormatDouble((*row)[i], 17);
      }
      os << '\n';
    }
    return;
  }
  os << "avg-policy-v1 mlp " << FormatDouble(lr_, 17) << '\n';
  classifier_->Save(os);
}

void AveragePolicy::Load(std::istream& is) {
  std::string header;
  if (!std::getline(is, header)) FatalError("empty average-policy file");
  std::istringstream hs(header);
  std::string magic, backend;
  hs >> magic >> backend;
  EQLAB_CHECK(magic == "avg-policy-v1",
              "bad average-policy header: " + header);
  if (backend == "tabular") {
    tabular_ = true;
    classifier_.reset();
    int num_actions = 0;
    size_t rows = 0;
    hs >> num_actions >> rows;
    EQLAB_CHECK(num_actions == game_->MaxActions(),
                "average policy action count mismatch");
    counts_.clear();
    for (size_t r = 0; r < rows; ++r) {
      std::string line;
      if (!std::getline(is, line)) FatalError("truncated average-policy file");
      size_t tab = line.find('\t');
      EQLAB_CHECK(tab != std::string::npos, "bad average-policy row");
      std::vector<double> row;
      std::istringstream vs(line.substr(tab + 1));
      std::string token;
      while (vs >> token) row.push_back(ParseDouble(token, "policy count"));
      EQLAB_CHECK(static_cast<int>(row.size()) == num_actions,
                  "bad average-policy row length");
      counts_[line.substr(0, tab)] = std::move(row);
    }
    return;
  }
  EQLAB_CHECK(backend == "mlp", "bad average-policy header: " + header);
  std::string lr_token;
  hs >> lr_token;
  lr_ = ParseDouble(lr_token, "average policy learning rate");
  tabular_ = false;
  counts_.clear();
  std::unique_ptr<Estimator> loaded = LoadEstimator(is);
  auto* mlp = dynamic_cast<MlpEstimator*>(loaded.get());
  EQLAB_CHECK(mlp != nullptr, "average-policy estimator is not an mlp");
  loaded.release();
  classifier_.reset(mlp);
}

// ---------------------------------------------------------------------------
// QLearner

QLearner::QLearner(std::shared_ptr<const Game> game,
                   std::unique_ptr<Estimator> q, double lr,
                   int64_t target_sync)
    : game_(std::move(game)),
      q_(std::move(q)),
      lr_(lr),
      target_sync_(target_sync) {
  EQLAB_CHECK(q_->OutputDim() == game_->MaxActions(),
              "Q estimator output dimension mismatch");
  target_ = q_->Clone();
  needs_features_ = q_->kind() == EstimatorKind::kMlp;
}

Distribution QLearner::EpsilonGreedy(const std::string& key,
                                     const std::vector<ActionId>& legal,
                                     double epsilon) const {
  EQLAB_CHECK(!legal.empty(), "policy queried with no legal actions");
  std::vector<double> features;
  if (needs_features_) features = game_->EncodeFeatures(key);
  std::vector<double> q_values = q_->Predict(key, features);
  size_t greedy = 0;
  for (size_t i = 1; i < legal.size(); ++i) {
    if (q_values[legal[i]] > q_values[legal[greedy]]) greedy = i;
  }
  Distribution probs(legal.size(), epsilon / static_cast<double>(legal.size()));
  probs[greedy] += 1.0 - epsilon;
  return probs;
}

double QLearner::Update(std::span<const Transition* const> batch) {
  if (batch.empty()) {
    throw NotReadyError("rl update: no transitions available");
  }
  const int num_actions = game_->MaxActions();
  TrainBatch examples;
  examples.reserve(batch.size());
  for (const Transition* t : batch) {
    double target = t->reward;
    if (!t->terminal) {
      std::vector<double> features;
      if (needs_features_) features = game_->EncodeFeatures(t->next_key);
      std::vector<double> next_q = target_->Predict(t->next_key, features);
      double best = -1e300;
      for (ActionId a : game_->LegalActionsFromKey(t->next_key)) {
        best = std::max(best, next_q[a]);
      }
      target += best;
    }
    TrainExample example;
    example.key = t->key;
    if (needs_features_) example.features = game_->EncodeFeatures(t->key);
    example.target.assign(num_actions, 0.0);
    example.target[t->action] = target;
    example.mask.assign(num_actions, 0);
    example.mask[t->action] = 1;
    examples.push_back(std::move(example));
  }
  double loss = q_->FitBatch(examples, lr_);
  ++updates_;
  if (updates_ % target_sync_ == 0) target_ = q_->Clone();
  return loss;
}

void QLearner::Save(std::ostream& os) const {
  os << "q-learner-v1 " << updates_ << '\n';
  q_->Save(os);
}

void QLearner::Load(std::istream& is) {
  std::string header;
  if (!std::getline(is, header)) FatalError("empty q-learner file");
  std::istringstream hs(header);
  std::string magic;
  hs >> magic >> updates_;
  EQLAB_CHECK(magic == "q-learner-v1", "bad q-learner header: " + header);
  q_ = LoadEstimator(is);
  EQLAB_CHECK(q_->OutputDim() == game_->MaxActions(),
              "Q estimator output dimension mismatch");
  target_ = q_->Clone();
  needs_features_ = q_->kind() == EstimatorKind::kMlp;
}

// ---------------------------------------------------------------------------
// Agent

Agent::Agent(AgentVariant variant, std::shared_ptr<const Game> game,
             PlayerId player, const TrainConfig& config, uint64_t seed)
    : variant_(variant),
      game_(game),
      player_(player),
      config_(config),
      rng_(Rng::DeriveStream(seed, 0)),
      pi_(config.backend == "tabular"
              ? AveragePolicy(game)
              : AveragePolicy(game, static_cast<int>(config.mlp_hidden),
                              config.lr_pi, Rng::DeriveStream(seed, 1))),
      rl_(static_cast<size_t>(config.rl_capacity)),
      sl_(static_cast<size_t>(config.sl_capacity), game->MaxActions()) {
  if (variant_ == AgentVariant::kArmNfsp) {
    arm_ = std::make_unique<ArmLearner>(
        game_,
        MakeEstimator(*game_, config, game_->MaxActions(),
                      MlpLoss::kSquaredError, Rng::DeriveStream(seed, 2)),
        MakeEstimator(*game_, config, 1, MlpLoss::kSquaredError,
                      Rng::DeriveStream(seed, 3)),
        config.lr_q, config.lr_v);
  } else {
    q_ = std::make_unique<QLearner>(
        game_,
        MakeEstimator(*game_, config, game_->MaxActions(),
                      MlpLoss::kSquaredError, Rng::DeriveStream(seed, 2)),
        config.lr_q, config.target_sync);
  }
}

EpisodeMode Agent::SelectMode(Rng& rng) {
  return rng.UniformDouble() < config_.alpha ? EpisodeMode::kBestResponse
                                             : EpisodeMode::kAverage;
}

void Agent::StartEpisode(int64_t episode_index) {
  EQLAB_CHECK(!pending_active_, "StartEpisode during an open episode");
  episode_index_ = episode_index;
  mode_ = SelectMode(rng_);
  mode_set_ = true;
}

EpisodeMode Agent::mode() const {
  EQLAB_CHECK(mode_set_, "episode mode queried before StartEpisode");
  return mode_;
}

double Agent::epsilon() const {
  double horizon = static_cast<double>(std::max<int64_t>(
      config_.episodes - 1, 1));
  double fraction =
      std::min(1.0, static_cast<double>(episode_index_) / horizon);
  return config_.eps_start + (config_.eps_end - config_.eps_start) * fraction;
}

Distribution Agent::BestResponseProbabilities(
    const std::string& key, const std::vector<ActionId>& legal) const {
  if (variant_ == AgentVariant::kArmNfsp) return arm_->PolicyAt(key, legal);
  return q_->EpsilonGreedy(key, legal, epsilon());
}

ActionId Agent::Step(const std::string& key,
                     const std::vector<ActionId>& legal, Rng& rng) {
  EQLAB_CHECK(mode_set_, "Step before StartEpisode");
  if (legal.empty()) FatalError("Step with an empty legal-action set");
  Distribution probs = mode_ == EpisodeMode::kBestResponse
                           ? BestResponseProbabilities(key, legal)
                           : pi_.ActionProbabilities(key, legal);
  ActionId action = legal[rng.SampleIndex(probs)];
  RecordTransition(&key, 0.0, false);
  pending_active_ = true;
  pending_key_ = key;
  pending_action_ = action;
  if (mode_ == EpisodeMode::kBestResponse) {
    sl_.Insert(key, action, rng);
  }
  return action;
}

void Agent::RecordTransition(const std::string* next_key, double reward,
                             bool terminal) {
  if (!pending_active_) return;
  Transition transition;
  transition.key = pending_key_;
  transition.action = pending_action_;
  transition.reward = reward;
  transition.next_key = terminal ? std::string() : *next_key;
  transition.terminal = terminal;
  transition.episode = episode_counter_;
  rl_.Add(std::move(transition));
  ++transitions_since_update_;
  pending_active_ = false;
}

void Agent::EndEpisode(double terminal_reward) {
  RecordTransition(nullptr, terminal_reward, true);
  ++episode_counter_;
  mode_set_ = false;
}

bool Agent::ReadyToUpdate() const {
  return transitions_since_update_ >= config_.update_every;
}

AgentUpdateStats Agent::Update() {
  AgentUpdateStats stats;
  if (sl_.size() > 0) {
    stats.sl_loss = pi_.SlUpdate(sl_, config_.batch_size, rng_);
    stats.sl_ran = true;
  }
  if (rl_.size() >= static_cast<size_t>(config_.batch_size)) {
    if (variant_ == AgentVariant::kArmNfsp) {
      auto window = rl_.RecentWindow(static_cast<size_t>(config_.batch_size));
      ArmUpdateStats arm_stats = arm_->Update(window);
      stats.rl_loss = arm_stats.q_loss;
    } else {
      auto batch = rl_.SampleUniform(static_cast<size_t>(config_.batch_size),
                                     rng_);
      stats.rl_loss = q_->Update(batch);
    }
    stats.rl_ran = true;
  }
  transitions_since_update_ = 0;
  return stats;
}

void Agent::SaveCheckpoint(const std::string& dir) const {
  const std::string prefix =
      dir + "/agent" + std::to_string(player_) + "_";
  {
    std::ostringstream os;
    pi_.Save(os);
    WriteFile(prefix + "pi.txt", os.str());
  }
  std::ostringstream os;
  if (variant_ == AgentVariant::kArmNfsp) {
    arm_->Save(os);
  } else {
    q_->Save(os);
  }
  WriteFile(prefix + "learner.txt", os.str());
}

void Agent::LoadCheckpoint(const std::string& dir) {
  const std::string prefix =
      dir + "/agent" + std::to_string(player_) + "_";
  {
    std::ifstream is = OpenFile(prefix + "pi.txt");
    pi_.Load(is);
  }
  std::ifstream is = OpenFile(prefix + "learner.txt");
  if (variant_ == AgentVariant::kArmNfsp) {
    arm_->Load(is);
  } else {
    q_->Load(is);
  }
}

// ---------------------------------------------------------------------------
// Self-play loop

SelfPlayResult RunSelfPlay(const Game& game, Agent& agent0, Agent& agent1,
                           const TrainConfig& config, Rng& env_rng,
                           const std::function<void(int64_t)>& on_eval) {
  SelfPlayResult result;
  Agent* agents[2] = {&agent0, &agent1};
  std::vector<double> chance_probs;
  for (int64_t episode = 1; episode <= config.episodes; ++episode) {
    agent0.StartEpisode(episode - 1);
    agent1.StartEpisode(episode - 1);
    std::unique_ptr<State> state = game.NewInitialState();
    while (!state->IsTerminal()) {
      if (state->IsChance()) {
        std::vector<ChanceOutcome> outcomes = state->ChanceOutcomes();
        chance_probs.clear();
        for (const auto& [action, prob] : outcomes) {
          chance_probs.push_back(prob);
        }
        int pick = env_rng.SampleIndex(chance_probs);
        state = state->Child(outcomes[pick].first);
        continue;
      }
      PlayerId player = state->CurrentPlayer();
      Agent& agent = *agents[player];
      ActionId action = agent.Step(state->InformationStateKey(),
                                   state->LegalActions(), agent.rng());
      state = state->Child(action);
    }
    std::vector<double> returns = state->Returns();
    agent0.EndEpisode(returns[0]);
    agent1.EndEpisode(returns[1]);
    for (int p = 0; p < 2; ++p) {
      if (agents[p]->ReadyToUpdate()) {
        agents[p]->Update();
        ++result.updates_run[p];
      }
    }
    ++result.episodes_played;
    if (on_eval &&
        (episode % config.eval_every == 0 || episode == config.episodes)) {
      on_eval(episode);
    }
  }
  return result;
}

// ---------------------------------------------------------------------------
// Checkpoint directory

void SaveRunCheckpoint(const std::string& dir, const Agent& agent0,
                       const Agent& agent1, const TrainConfig& config) {
  std::filesystem::create_directories(dir);
  std::ostringstream meta;
  meta << "checkpoint-v1\n"
       << "game=" << config.game << '\n'
       << "algorithm=" << config.algorithm << '\n'
       << "backend=" << config.backend << '\n'
       << "alpha=" << FormatDouble(config.alpha, 17) << '\n'
       << "episodes=" << agent0.episodes_played() << '\n'
       << "seed=" << config.seed << '\n';
  WriteFile(dir + "/meta", meta.str());
  agent0.SaveCheckpoint(dir);
  agent1.SaveCheckpoint(dir);
}

CheckpointMeta ReadCheckpointMeta(const std::string& dir) {
  std::ifstream is = OpenFile(dir + "/meta");
  std::string line;
  if (!std::getline(is, line) || line != "checkpoint-v1") {
    FatalError("bad checkpoint meta header in " + dir);
  }
  CheckpointMeta meta;
  while (std::getline(is, line)) {
    if (line.empty()) continue;
    size_t eq = line.find('=');
    EQLAB_CHECK(eq != std::string::npos, "bad checkpoint meta line: " + line);
    std::string key = line.substr(0, eq);
    std::string value = line.substr(eq + 1);
    if (key == "game") {
      meta.game = value;
    } else if (key == "algorithm") {
      meta.algorithm = value;
    } else if (key == "backend") {
      meta.backend = value;
    } else if (key == "alpha") {
      meta.alpha = ParseDouble(value, "alpha");
    } else if (key == "episodes") {
      meta.episodes = ParseInt64(value, "episodes");
    } else if (key == "seed") {
      meta.seed = ParseUint64(value, "seed");
    } else {
      FatalError("unknown checkpoint meta key '" + key + "'");
    }
  }
  return meta;
}

std::unique_ptr<AveragePolicy> LoadAveragePolicyFromCheckpoint(
    const std::string& dir, std::shared_ptr<const Game> game, PlayerId seat) {
  CheckpointMeta meta = ReadCheckpointMeta(dir);
  if (meta.game != game->Name()) {
    FatalError("checkpoint " + dir + " was trained on game '" + meta.game +
               "', not '" + game->Name() + "'");
  }
  auto policy = std::make_unique<AveragePolicy>(game);
  std::ifstream is =
      OpenFile(dir + "/agent" + std::to_string(seat) + "_pi.txt");
  policy->Load(is);
  return policy;
}

}  // namespace eqlab
