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

#include "eqlab/games/leduc.hpp"

#include <algorithm>

#include "eqlab/util.hpp"

namespace eqlab {

namespace {
constexpr ActionId kFold = 0;
constexpr ActionId kCall = 1;
constexpr ActionId kRaise = 2;
constexpr int kDeckSize = 6;
constexpr int kMaxRaisesPerRound = 2;
constexpr int kBetSize[2] = {2, 4};

int Rank(int card) { return card / 2; }

[[noreturn]] void BadKey(const std::string& key) {
  FatalError("not a leduc information-state key: '" + key + "'");
}

int ActionFromMoveChar(char c, const std::string& key) {
  switch (c) {
    case 'f': return kFold;
    case 'c': return kCall;
    case 'r': return kRaise;
    default: BadKey(key);
  }
}
}  // namespace

std::unique_ptr<State> LeducGame::NewInitialState() const {
  return std::make_unique<LeducState>();
}

std::vector<double> LeducGame::EncodeFeatures(const std::string& key) const {
  std::vector<std::string> parts = SplitString(key, ':');
  if (parts.size() != 5 || parts[0].size() != 1 || parts[1].size() != 1 ||
      parts[2].size() != 1 || (parts[0][0] != '0' && parts[0][0] != '1')) {
    BadKey(key);
  }
  int private_card = parts[1][0] - '0';
  if (private_card < 0 || private_card >= kDeckSize) BadKey(key);
  int public_card = -1;
  if (parts[2][0] != '-') {
    public_card = parts[2][0] - '0';
    if (public_card < 0 || public_card >= kDeckSize ||
        public_card == private_card) {
      BadKey(key);
    }
  }
  if (public_card < 0 && !parts[4].empty()) BadKey(key);

  std::vector<double> features(FeatureDim(), 0.0);
  for (int round = 0; round < 2; ++round) {
    const std::string& moves = parts[3 + round];
    if (moves.size() > 4) BadKey(key);
    int raises = 0;
    for (size_t slot = 0; slot < moves.size(); ++slot) {
      int action = ActionFromMoveChar(moves[slot], key);
      if (action == kRaise && ++raises > kMaxRaisesPerRound) BadKey(key);
      features[15 * round + 3 * slot + action] = 1.0;
    }
  }
  features[30 + private_card] = 1.0;
  if (public_card >= 0) features[36 + public_card] = 1.0;
  return features;
}

std::vector<ActionId> LeducGame::LegalActionsFromKey(
    const std::string& key) const {
  EncodeFeatures(key);  // validates
  std::vector<std::string> parts = SplitString(key, ':');
  int round = parts[2][0] == '-' ? 0 : 1;
  const std::string& moves = parts[3 + round];
  int raises = static_cast<int>(std::count(moves.begin(), moves.end(), 'r'));
  if (raises < kMaxRaisesPerRound) return {kFold, kCall, kRaise};
  return {kFold, kCall};
}

PlayerId LeducState::CurrentPlayer() const {
  if (private_[0] < 0 || private_[1] < 0 || awaiting_public_) {
    return kChancePlayerId;
  }
  if (folder_ >= 0 || showdown_) return kTerminalPlayerId;
  return static_cast<PlayerId>(moves_this_round_ % 2);
}

std::unique_ptr<State> LeducState::Clone() const {
  return std::make_unique<LeducState>(*this);
}

std::vector<ActionId> LeducState::LegalActionsInternal() const {
  if (raises_ < kMaxRaisesPerRound) return {kFold, kCall, kRaise};
  return {kFold, kCall};
}

std::vector<ChanceOutcome> LeducState::ChanceOutcomesInternal() const {
  std::vector<ChanceOutcome> outcomes;
  bool used[kDeckSize] = {};
  int remaining = kDeckSize;
  for (int card : {private_[0], private_[1], public_}) {
    if (card >= 0) {
      used[card] = true;
      --remaining;
    }
  }
  for (int card = 0; card < kDeckSize; ++card) {
    if (!used[card]) outcomes.push_back({card, 1.0 / remaining});
  }
  return outcomes;
}

std::vector<double> LeducState::ReturnsInternal() const {
  std::vector<double> returns(2, 0.0);
  if (folder_ >= 0) {
    returns[folder_] = -contrib_[folder_];
    returns[1 - folder_] = contrib_[folder_];
    return returns;
  }
  // Showdown: a private card pairing the public card wins, otherwise the
  // higher rank; both contributions are equal here.
  int winner = -1;
  if (Rank(private_[0]) == Rank(public_)) {
    winner = 0;
  } else if (Rank(private_[1]) == Rank(public_)) {
    winner = 1;
  } else if (Rank(private_[0]) != Rank(private_[1])) {
    winner = Rank(private_[0]) > Rank(private_[1]) ? 0 : 1;
  }
  if (winner >= 0) {
    returns[winner] = contrib_[1 - winner];
    returns[1 - winner] = -contrib_[1 - winner];
  }
  return returns;
}

std::string LeducState::InformationStateKeyInternal(PlayerId player) const {
  std::string key;
  key.reserve(16);
  key.push_back(static_cast<char>('0' + player));
  key.push_back(':');
  key.push_back(static_cast<char>('0' + private_[player]));
  key.push_back(':');
  key.push_back(public_ < 0 ? '-' : static_cast<char>('0' + public_));
  key.push_back(':');
  key += moves_[0];
  key.push_back(':');
  key += moves_[1];
  return key;
}

void LeducState::DoApplyAction(ActionId action) {
  if (private_[0] < 0) {
    private_[0] = action;
    return;
  }
  if (private_[1] < 0) {
    private_[1] = action;
    return;
  }
  if (awaiting_public_) {
    public_ = action;
    awaiting_public_ = false;
    round_ = 1;
    raises_ = 0;
    moves_this_round_ = 0;
    return;
  }
  const int actor = moves_this_round_ % 2;
  const int owed = std::max(contrib_[0], contrib_[1]);
  switch (action) {
    case kFold:
      moves_[round_].push_back('f');
      folder_ = actor;
      break;
    case kCall:
      moves_[round_].push_back('c');
      contrib_[actor] = owed;
      if (moves_this_round_ > 0) {
        if (round_ == 0) {
          awaiting_public_ = true;
        } else {
          showdown_ = true;
        }
      }
      ++moves_this_round_;
      break;
    case kRaise:
      moves_[round_].push_back('r');
      contrib_[actor] = owed + kBetSize[round_];
      ++raises_;
      ++moves_this_round_;
      break;
    default:
      FatalError("unreachable leduc action " + std::to_string(action));
  }
}

}  // namespace eqlab
