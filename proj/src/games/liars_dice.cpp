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

#include "eqlab/games/liars_dice.hpp"

#include "eqlab/util.hpp"

namespace eqlab {

namespace {
constexpr int kNumFaces = 6;
constexpr int kNumBids = 12;
constexpr ActionId kLiar = 12;

[[noreturn]] void BadKey(const std::string& key) {
  FatalError("not a liars_dice information-state key: '" + key + "'");
}

// Parses the bid field; returns bid ids, sets `liar` if "L" terminates it.
std::vector<int> ParseBids(const std::string& field, bool* liar,
                           const std::string& key) {
  std::vector<int> bids;
  *liar = false;
  if (field.empty()) return bids;
  int previous = -1;
  for (const std::string& token : SplitString(field, ',')) {
    if (*liar) BadKey(key);  // nothing may follow "L"
    if (token == "L") {
      if (bids.empty()) BadKey(key);
      *liar = true;
      continue;
    }
    if (token.empty() || token.size() > 2) BadKey(key);
    for (char c : token) {
      if (c < '0' || c > '9') BadKey(key);
    }
    int bid = std::stoi(token);
    if (bid < 0 || bid >= kNumBids || bid <= previous) BadKey(key);
    bids.push_back(bid);
    previous = bid;
  }
  return bids;
}
}  // namespace

std::unique_ptr<State> LiarsDiceGame::NewInitialState() const {
  return std::make_unique<LiarsDiceState>();
}

std::vector<double> LiarsDiceGame::EncodeFeatures(
    const std::string& key) const {
  std::vector<std::string> parts = SplitString(key, ':');
  if (parts.size() != 3 || parts[0].size() != 1 || parts[1].size() != 1 ||
      (parts[0][0] != '0' && parts[0][0] != '1')) {
    BadKey(key);
  }
  int face = parts[1][0] - '0';
  if (face < 1 || face > kNumFaces) BadKey(key);
  bool liar = false;
  std::vector<int> bids = ParseBids(parts[2], &liar, key);

  std::vector<double> features(FeatureDim(), 0.0);
  features[face - 1] = 1.0;
  for (int bid : bids) features[6 + bid] = 1.0;
  return features;
}

std::vector<ActionId> LiarsDiceGame::LegalActionsFromKey(
    const std::string& key) const {
  EncodeFeatures(key);  // validates
  std::vector<std::string> parts = SplitString(key, ':');
  bool liar = false;
  std::vector<int> bids = ParseBids(parts[2], &liar, key);
  std::vector<ActionId> legal;
  int lowest = bids.empty() ? 0 : bids.back() + 1;
  for (int bid = lowest; bid < kNumBids; ++bid) legal.push_back(bid);
  if (!bids.empty()) legal.push_back(kLiar);
  return legal;
}

PlayerId LiarsDiceState::CurrentPlayer() const {
  if (faces_[0] < 0 || faces_[1] < 0) return kChancePlayerId;
  if (liar_called_) return kTerminalPlayerId;
  return static_cast<PlayerId>(bids_.size() % 2);
}

std::unique_ptr<State> LiarsDiceState::Clone() const {
  return std::make_unique<LiarsDiceState>(*this);
}

std::vector<ActionId> LiarsDiceState::LegalActionsInternal() const {
  std::vector<ActionId> legal;
  int lowest = bids_.empty() ? 0 : bids_.back() + 1;
  for (int bid = lowest; bid < kNumBids; ++bid) legal.push_back(bid);
  if (!bids_.empty()) legal.push_back(kLiar);
  return legal;
}

std::vector<ChanceOutcome> LiarsDiceState::ChanceOutcomesInternal() const {
  std::vector<ChanceOutcome> outcomes;
  for (int i = 0; i < kNumFaces; ++i) {
    outcomes.push_back({i, 1.0 / kNumFaces});
  }
  return outcomes;
}

std::vector<double> LiarsDiceState::ReturnsInternal() const {
  const int last_bid = bids_.back();
  const int quantity = last_bid / kNumFaces + 1;
  const int face = last_bid % kNumFaces + 1;
  const int count = (faces_[0] == face ? 1 : 0) + (faces_[1] == face ? 1 : 0);
  const int challenger = static_cast<int>(bids_.size()) % 2;
  const bool bid_stands = count >= quantity;
  std::vector<double> returns(2);
  returns[challenger] = bid_stands ? -1.0 : 1.0;
  returns[1 - challenger] = -returns[challenger];
  return returns;
}

std::string LiarsDiceState::InformationStateKeyInternal(
    PlayerId player) const {
  std::string key;
  key.reserve(24);
  key.push_back(static_cast<char>('0' + player));
  key.push_back(':');
  key.push_back(static_cast<char>('0' + faces_[player]));
  key.push_back(':');
  for (size_t i = 0; i < bids_.size(); ++i) {
    if (i > 0) key.push_back(',');
    key += std::to_string(bids_[i]);
  }
  if (liar_called_) {
    if (!bids_.empty()) key.push_back(',');
    key.push_back('L');
  }
  return key;
}

void LiarsDiceState::DoApplyAction(ActionId action) {
  if (faces_[0] < 0) {
    faces_[0] = action + 1;
  } else if (faces_[1] < 0) {
    faces_[1] = action + 1;
  } else if (action == kLiar) {
    liar_called_ = true;
  } else {
    bids_.push_back(action);
  }
}

}  // namespace eqlab
