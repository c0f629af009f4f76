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
// Tic-Tac-Toe on a 3x3 grid; player 0 plays x and moves first. Actions are
// cell indices 0..8 in row-major order. Three in a row wins (+1 / -1), a
// full board with no line draws (0 / 0). Perfect information: both players'
// information states are the board itself.
//
// Information-state key: "<player>:<board>" with board 9 characters over
// {., x, o}, e.g. "1:x...o....". Feature layout (27): index 3 * cell +
// channel with channel one-hot over {empty=0, x=1, o=2}.

#ifndef EQLAB_GAMES_TIC_TAC_TOE_HPP_
#define EQLAB_GAMES_TIC_TAC_TOE_HPP_

#include <array>
#include <memory>
#include <string>
#include <vector>

#include "eqlab/game.hpp"

namespace eqlab {

class TicTacToeGame final : public Game {
 public:
  std::string Name() const override { return "tic_tac_toe"; }
  std::unique_ptr<State> NewInitialState() const override;
  double MinPayoff() const override { return -1.0; }
  double MaxPayoff() const override { return 1.0; }
  int MaxGameLength() const override { return 9; }
  int MaxActions() const override { return 9; }
  int FeatureDim() const override { return 27; }
  std::vector<double> EncodeFeatures(const std::string& key) const override;
  std::vector<ActionId> LegalActionsFromKey(
      const std::string& key) const override;
};

class TicTacToeState final : public State {
 public:
  TicTacToeState() { board_.fill('.'); }
  PlayerId CurrentPlayer() const override;
  std::unique_ptr<State> Clone() const override;

 protected:
  std::vector<ActionId> LegalActionsInternal() const override;
  std::vector<ChanceOutcome> ChanceOutcomesInternal() const override;
  std::vector<double> ReturnsInternal() const override;
  std::string InformationStateKeyInternal(PlayerId player) const override;
  void DoApplyAction(ActionId action) override;

 private:
  // 0 or 1 if that player has three in a row, else -1.
  int Winner() const;
  std::array<char, 9> board_;
  int num_moves_ = 0;
};

}  // namespace eqlab

#endif  // EQLAB_GAMES_TIC_TAC_TOE_HPP_
