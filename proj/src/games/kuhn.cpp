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

#include "eqlab/games/kuhn.hpp"

#include "eqlab/util.hpp"

namespace eqlab {

namespace {
constexpr ActionId kPass = 0;
constexpr ActionId kBet = 1;
constexpr int kNumCards = 3;
}  // namespace

std::unique_ptr<State> KuhnGame::NewInitialState() const {
  return std::make_unique<KuhnState>();
}

std::vector<ActionId> KuhnGame::LegalActionsFromKey(
    const std::string& key) const {
  EncodeFeatures(key);  // validates
  return {kPass, kBet};
}

std::vector<double> KuhnGame::EncodeFeatures(const std::string& key) const {
  std::vector<std::string> parts = SplitString(key, ':');
  if (parts.size() != 3 || parts[0].size() != 1 || parts[1].size() != 1 ||
      (parts[0][0] != '0' && parts[0][0] != '1')) {
    FatalError("not a kuhn information-state key: '" + key + "'");
  }
  int card = parts[1][0] - '0';
  if (card < 0 || card >= kNumCards) {
    FatalError("not a kuhn information-state key: '" + key + "'");
  }
  const std::string& bets = parts[2];
  if (bets.size() > 3) {
    FatalError("not a kuhn information-state key: '" + key + "'");
  }
  std::vector<double> features(FeatureDim(), 0.0);
  features[card] = 1.0;
  for (size_t slot = 0; slot < bets.size(); ++slot) {
    int action;
    if (bets[slot] == 'p') {
      action = kPass;
    } else if (bets[slot] == 'b') {
      action = kBet;
    } else {
      FatalError("not a kuhn information-state key: '" + key + "'");
    }
    features[3 + 2 * slot + action] = 1.0;
  }
  return features;
}

PlayerId KuhnState::CurrentPlayer() const {
  if (cards_[0] < 0 || cards_[1] < 0) return kChancePlayerId;
  if (BettingOver()) return kTerminalPlayerId;
  return static_cast<PlayerId>(bets_.size() % 2);
}

bool KuhnState::BettingOver() const {
  if (bets_.size() < 2) return false;
  if (bets_ == "pb") return false;
  return true;  // pp, bp, bb, pbp, pbb
}

std::unique_ptr<State> KuhnState::Clone() const {
  return std::make_unique<KuhnState>(*this);
}

std::vector<ActionId> KuhnState::LegalActionsInternal() const {
  return {kPass, kBet};
}

std::vector<ChanceOutcome> KuhnState::ChanceOutcomesInternal() const {
  std::vector<ChanceOutcome> outcomes;
  if (cards_[0] < 0) {
    for (int c = 0; c < kNumCards; ++c) outcomes.push_back({c, 1.0 / 3.0});
  } else {
    for (int c = 0; c < kNumCards; ++c) {
      if (c != cards_[0]) outcomes.push_back({c, 0.5});
    }
  }
  return outcomes;
}

std::vector<double> KuhnState::ReturnsInternal() const {
  // Contributions: 1 ante each plus 1 per own bet/call.
  double contrib[2] = {1.0, 1.0};
  for (size_t i = 0; i < bets_.size(); ++i) {
    if (bets_[i] == 'b') contrib[i % 2] += 1.0;
  }
  int winner;
  if (bets_ == "bp") {
    winner = 0;  // player 1 folded
  } else if (bets_ == "pbp") {
    winner = 1;  // player 0 folded
  } else {
    winner = cards_[0] > cards_[1] ? 0 : 1;
  }
  double won = contrib[1 - winner];
  std::vector<double> returns(2);
  returns[winner] = won;
  returns[1 - winner] = -won;
  return returns;
}

std::string KuhnState::InformationStateKeyInternal(PlayerId player) const {
  std::string key;
  key.reserve(8);
  key.push_back(static_cast<char>('0' + player));
  key.push_back(':');
  key.push_back(static_cast<char>('0' + cards_[player]));
  key.push_back(':');
  key += bets_;
  return key;
}

void KuhnState::DoApplyAction(ActionId action) {
  if (cards_[0] < 0) {
    cards_[0] = action;
  } else if (cards_[1] < 0) {
    cards_[1] = action;
  } else {
    bets_.push_back(action == kBet ? 'b' : 'p');
  }
}

}  // namespace eqlab
