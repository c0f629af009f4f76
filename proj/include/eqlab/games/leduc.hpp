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
// Leduc poker. Deck of 6 cards (ranks J, Q, K in two suits; card id / 2 is
// the rank), antes of 1 chip, two betting rounds with bet sizes 2 and 4 and
// at most two raises per round. One public card is revealed before round 2;
// at showdown a private card pairing the public card wins, otherwise the
// higher rank wins and equal ranks split. Player 0 opens both rounds.
// Actions: 0 = fold, 1 = call (check when nothing is owed), 2 = raise.
// Folding is legal at any decision and forfeits the folder's current
// contribution; at the raise cap the action set shrinks to {fold, call}.
//
// Information-state key:
//   "<player>:<private card>:<public card or '-'>:<round-1 moves>:<round-2 moves>"
// with moves over {f, c, r}, e.g. "1:4:-:cr:".
//
// Feature layout (42):
//   [0..29]   betting history: index 15*round + 3*slot + action with
//             round in {0,1}, slot in {0..4} the move's position within its
//             round, and action one-hot over {fold=0, call=1, raise=2}.
//             Reachable histories use at most 4 moves per round; the fifth
//             slot pads the block to its fixed length of 30.
//   [30..35]  private card one-hot.
//   [36..41]  public card one-hot (all zero before the reveal).

#ifndef EQLAB_GAMES_LEDUC_HPP_
#define EQLAB_GAMES_LEDUC_HPP_

#include <memory>
#include <string>
#include <vector>

#include "eqlab/game.hpp"

namespace eqlab {

class LeducGame final : public Game {
 public:
  std::string Name() const override { return "leduc"; }
  std::unique_ptr<State> NewInitialState() const override;
  double MinPayoff() const override { return -13.0; }
  double MaxPayoff() const override { return 13.0; }
  int MaxGameLength() const override { return 11; }
  int MaxActions() const override { return 3; }
  int FeatureDim() const override { return 42; }
  std::vector<double> EncodeFeatures(const std::string& key) const override;
  std::vector<ActionId> LegalActionsFromKey(
      const std::string& key) const override;
};

class LeducState final : public State {
 public:
  LeducState() = default;
  PlayerId CurrentPlayer() const override;
  std::unique_ptr<State> Clone() const override;

 protected:
  std::vector<ActionId> LegalActionsInternal() const override;
  std::vector<ChanceOutcome> ChanceOutcomesInternal() const override;
  std::vector<double> ReturnsInternal() const override;
  std::string InformationStateKeyInternal(PlayerId player) const override;
  void DoApplyAction(ActionId action) override;

 private:
  int private_[2] = {-1, -1};
  int public_ = -1;
  int round_ = 0;
  std::string moves_[2];       // per-round move characters
  int contrib_[2] = {1, 1};    // antes included
  int raises_ = 0;             // in the current round
  int moves_this_round_ = 0;
  int folder_ = -1;
  bool awaiting_public_ = false;
  bool showdown_ = false;
};

}  // namespace eqlab

#endif  // EQLAB_GAMES_LEDUC_HPP_
