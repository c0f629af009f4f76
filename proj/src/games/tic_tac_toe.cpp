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

#include "eqlab/games/tic_tac_toe.hpp"

#include "eqlab/util.hpp"

namespace eqlab {

namespace {
constexpr int kLines[8][3] = {{0, 1, 2}, {3, 4, 5}, {6, 7, 8}, {0, 3, 6},
                              {1, 4, 7}, {2, 5, 8}, {0, 4, 8}, {2, 4, 6}};

[[noreturn]] void BadKey(const std::string& key) {
  FatalError("not a tic_tac_toe information-state key: '" + key + "'");
}

std::string ValidatedBoard(const std::string& key) {
  std::vector<std::string> parts = SplitString(key, ':');
  if (parts.size() != 2 || parts[0].size() != 1 ||
      (parts[0][0] != '0' && parts[0][0] != '1') || parts[1].size() != 9) {
    BadKey(key);
  }
  int xs = 0;
  int os = 0;
  for (char c : parts[1]) {
    if (c == 'x') {
      ++xs;
    } else if (c == 'o') {
      ++os;
    } else if (c != '.') {
      BadKey(key);
    }
  }
  if (xs != os && xs != os + 1) BadKey(key);
  return parts[1];
}
}  // namespace

std::unique_ptr<State> TicTacToeGame::NewInitialState() const {
  return std::make_unique<TicTacToeState>();
}

std::vector<double> TicTacToeGame::EncodeFeatures(
    const std::string& key) const {
  std::string board = ValidatedBoard(key);
  std::vector<double> features(FeatureDim(), 0.0);
  for (int cell = 0; cell < 9; ++cell) {
    int channel = board[cell] == '.' ? 0 : (board[cell] == 'x' ? 1 : 2);
    features[3 * cell + channel] = 1.0;
  }
  return features;
}

std::vector<ActionId> TicTacToeGame::LegalActionsFromKey(
    const std::string& key) const {
  std::string board = ValidatedBoard(key);
  std::vector<ActionId> legal;
  for (int cell = 0; cell < 9; ++cell) {
    if (board[cell] == '.') legal.push_back(cell);
  }
  return legal;
}

int TicTacToeState::Winner() const {
  for (const auto& line : kLines) {
    char c = board_[line[0]];
    if (c != '.' && c == board_[line[1]] && c == board_[line[2]]) {
      return c == 'x' ? 0 : 1;
    }
  }
  return -1;
}

PlayerId TicTacToeState::CurrentPlayer() const {
  if (Winner() >= 0 || num_moves_ == 9) return kTerminalPlayerId;
  return static_cast<PlayerId>(num_moves_ % 2);
}

std::unique_ptr<State> TicTacToeState::Clone() const {
  return std::make_unique<TicTacToeState>(*this);
}

std::vector<ActionId> TicTacToeState::LegalActionsInternal() const {
  std::vector<ActionId> legal;
  for (int cell = 0; cell < 9; ++cell) {
    if (board_[cell] == '.') legal.push_back(cell);
  }
  return legal;
}

std::vector<ChanceOutcome> TicTacToeState::ChanceOutcomesInternal() const {
  FatalError("tic_tac_toe has no chance nodes");
}

std::vector<double> TicTacToeState::ReturnsInternal() const {
  switch (Winner()) {
    case 0: return {1.0, -1.0};
    case 1: return {-1.0, 1.0};
    default: return {0.0, 0.0};
  }
}

std::string TicTacToeState::InformationStateKeyInternal(
    PlayerId player) const {
  std::string key;
  key.reserve(12);
  key.push_back(static_cast<char>('0' + player));
  key.push_back(':');
  key.append(board_.begin(), board_.end());
  return key;
}

void TicTacToeState::DoApplyAction(ActionId action) {
  board_[action] = num_moves_ % 2 == 0 ? 'x' : 'o';
  ++num_moves_;
}

}  // namespace eqlab
