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

#include "eqlab/regret.hpp"

#include <algorithm>
#include <cmath>
#include <istream>
#include <ostream>
#include <sstream>
#include <unordered_map>

#include "eqlab/util.hpp"

namespace eqlab {

double Potential(std::span<const double> regrets) {
  double potential = 0.0;
  for (double r : regrets) {
    if (r > 0.0) potential += r * r;
  }
  return potential;
}

std::vector<double> PotentialGradient(std::span<const double> regrets) {
  std::vector<double> gradient(regrets.size());
  for (size_t k = 0; k < regrets.size(); ++k) {
    gradient[k] = regrets[k] > 0.0 ? 2.0 * regrets[k] : 0.0;
  }
  return gradient;
}

Distribution MatchDistribution(std::span<const double> regrets) {
  EQLAB_CHECK(!regrets.empty(), "matching on an empty regret vector");
  std::vector<double> gradient = PotentialGradient(regrets);
  double norm = 0.0;
  for (double g : gradient) norm += g;
  if (norm <= 0.0) return UniformDistribution(regrets.size());
  for (double& g : gradient) g /= norm;
  return gradient;
}

ArmLearner::ArmLearner(std::shared_ptr<const Game> game,
                       std::unique_ptr<Estimator> q,
                       std::unique_ptr<Estimator> v, double lr_q, double lr_v)
    : game_(std::move(game)),
      q_(std::move(q)),
      v_(std::move(v)),
      lr_q_(lr_q),
      lr_v_(lr_v) {
  EQLAB_CHECK(q_->OutputDim() == game_->MaxActions(),
              "Q estimator output dimension mismatch");
  EQLAB_CHECK(v_->OutputDim() == 1, "V estimator must have one output");
  needs_features_ = q_->kind() == EstimatorKind::kMlp ||
                    v_->kind() == EstimatorKind::kMlp;
}

Distribution ArmLearner::PolicyAt(const std::string& key,
                                  const std::vector<ActionId>& legal) const {
  EQLAB_CHECK(!legal.empty(), "policy queried with no legal actions");
  auto it = cumulative_regrets_.find(key);
  if (it == cumulative_regrets_.end()) {
    return UniformDistribution(legal.size());
  }
  EQLAB_CHECK(it->second.size() == legal.size(),
              "legal-action count changed for key " + key);
  return MatchDistribution(it->second);
}

ArmUpdateStats ArmLearner::Update(std::span<const Transition* const> sample) {
  if (sample.empty()) {
    throw NotReadyError("arm update: no transitions available");
  }

  // Undiscounted Monte-Carlo return for each transition: suffix sums of
  // rewards within its episode (transitions arrive in episode order).
  std::vector<double> returns(sample.size());
  std::unordered_map<int64_t, std::vector<size_t>> episodes;
  for (size_t i = 0; i < sample.size(); ++i) {
    episodes[sample[i]->episode].push_back(i);
  }
  for (auto& [episode, indices] : episodes) {
    double suffix = 0.0;
    for (auto it = indices.rbegin(); it != indices.rend(); ++it) {
      suffix += sample[*it]->reward;
      returns[*it] = suffix;
    }
  }

  std::unordered_map<std::string, std::vector<double>> feature_cache;
  auto features_of = [&](const std::string& key) -> const std::vector<double>& {
    auto [it, inserted] = feature_cache.try_emplace(key);
    if (inserted && needs_features_) it->second = game_->EncodeFeatures(key);
    return it->second;
  };

  TrainBatch v_batch;
  TrainBatch q_batch;
  v_batch.reserve(sample.size());
  q_batch.reserve(sample.size());
  const int num_actions = game_->MaxActions();
  std::map<std::string, bool> visited;
  for (size_t i = 0; i < sample.size(); ++i) {
    const Transition& t = *sample[i];
    visited[t.key] = true;

    TrainExample v_example;
    v_example.key = t.key;
    v_example.features = features_of(t.key);
    v_example.target = {returns[i]};
    v_batch.push_back(std::move(v_example));

    TrainExample q_example;
    q_example.key = t.key;
    q_example.features = features_of(t.key);
    q_example.target.assign(num_actions, 0.0);
    q_example.target[t.action] = returns[i];
    q_example.mask.assign(num_actions, 0);
    q_example.mask[t.action] = 1;
    q_batch.push_back(std::move(q_example));
  }

  ArmUpdateStats stats;
  stats.v_loss = v_->FitBatch(v_batch, lr_v_);
  stats.q_loss = q_->FitBatch(q_batch, lr_q_);

  double regret_sum = 0.0;
  size_t regret_terms = 0;
  for (const auto& [key, unused] : visited) {
    std::vector<ActionId> legal = game_->LegalActionsFromKey(key);
    const std::vector<double>& features = features_of(key);
    std::vector<double> q_values = q_->Predict(key, features);
    double v_value = v_->Predict(key, features)[0];
    auto [it, inserted] =
        cumulative_regrets_.try_emplace(key, legal.size(), 0.0);
    EQLAB_CHECK(it->second.size() == legal.size(),
                "legal-action count changed for key " + key);
    for (size_t a = 0; a < legal.size(); ++a) {
      double updated = it->second[a] + (q_values[legal[a]] - v_value);
      it->second[a] = std::max(updated, 0.0);
      regret_sum += it->second[a];
      ++regret_terms;
    }
  }
  stats.mean_abs_regret =
      regret_terms > 0 ? regret_sum / static_cast<double>(regret_terms) : 0.0;
  stats.iteration = ++iteration_;
  return stats;
}

void ArmLearner::Save(std::ostream& os) const {
  os << "arm-learner-v1 " << iteration_ << ' ' << cumulative_regrets_.size()
     << '\n';
  q_->Save(os);
  v_->Save(os);
  for (const auto& [key, regrets] : cumulative_regrets_) {
    os << key << '\t';
    for (size_t i = 0; i < regrets.size(); ++i) {
      if (i > 0) os << ',';
      os << FormatDouble(regrets[i], 17);
    }
    os << '\n';
  }
}

void ArmLearner::Load(std::istream& is) {
  std::string header;
  if (!std::getline(is, header)) FatalError("empty arm learner file");
  std::istringstream hs(header);
  std::string magic;
  int64_t iteration = 0;
  size_t rows = 0;
  hs >> magic >> iteration >> rows;
  EQLAB_CHECK(magic == "arm-learner-v1", "bad arm learner header: " + header);
  q_ = LoadEstimator(is);
  v_ = LoadEstimator(is);
  EQLAB_CHECK(q_->OutputDim() == game_->MaxActions(),
              "Q estimator output dimension mismatch");
  EQLAB_CHECK(v_->OutputDim() == 1, "V estimator must have one output");
  needs_features_ = q_->kind() == EstimatorKind::kMlp ||
                    v_->kind() == EstimatorKind::kMlp;
  iteration_ = iteration;
  cumulative_regrets_.clear();
  for (size_t r = 0; r < rows; ++r) {
    std::string line;
    if (!std::getline(is, line)) FatalError("truncated arm learner file");
    size_t tab = line.find('\t');
    EQLAB_CHECK(tab != std::string::npos, "bad regret table row");
    std::string key = line.substr(0, tab);
    std::vector<double> regrets;
    for (const std::string& token :
         SplitString(line.substr(tab + 1), ',')) {
      regrets.push_back(ParseDouble(token, "regret value"));
    }
    cumulative_regrets_[key] = std::move(regrets);
  }
}

}  // namespace eqlab
