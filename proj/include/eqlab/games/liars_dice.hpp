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
// Liar's Dice, 1 die versus 1 die, no wild faces. Each player privately
// rolls one six-sided die, then players alternate bids (quantity, face)
// with quantity in {1, 2} and face in {1..6}, ordered lexicographically by
// quantity then face; every bid must strictly exceed the previous one.
// Bid id = 6 * (quantity - 1) + (face - 1), in 0..11; action 12 is "Liar",
// legal once a bid exists. On a challenge the last bid stands iff at least
// `quantity` dice show `face`; the challenge loser scores -1, the winner +1.
//
// Information-state key: "<player>:<face>:<bids>" with bids a comma-joined
// ascending id list, "L" appended once Liar is called, e.g. "1:4:2,7".
//
// Feature layout (18): [0..5] own face one-hot; [6..17] indicator per bid
// id made so far.

#ifndef EQLAB_GAMES_LIARS_DICE_HPP_
#define EQLAB_GAMES_LIARS_DICE_HPP_

#include <memory>
#include <string>
#include <vector>

#include "eqlab/game.hpp"

namespace eqlab {

class LiarsDiceGame final : public Game {
 public:
  std::string Name() const override { return "liars_dice"; }
  std::unique_ptr<State> NewInitialState() const override;
  double MinPayoff() const override { return -1.0; }
  double MaxPayoff() const override { return 1.0; }
  int MaxGameLength() const override { return 15; }
  int MaxActions() const override { return 13; }
  int FeatureDim() const override { return 18; }
  std::vector<double> EncodeFeatures(const std::string& key) const override;
  std::vector<ActionId> LegalActionsFromKey(
      const std::string& key) const override;
};

class LiarsDiceState final : public State {
 public:
  LiarsDiceState() = default;
  PlayerId CurrentPlayer() const override;
  std::unique_ptr<State> Clone() const override;

 protected:
  std::vector<ActionId> LegalActionsInternal() const override;
  std::vector<ChanceOutcome> ChanceOutcomesInternal() const override;
  std::vector<double> ReturnsInternal() const override;
  std::string InformationStateKeyInternal(PlayerId player) const override;
  void DoApplyAction(ActionId action) override;

 private:
  int faces_[2] = {-1, -1};  // 1..6 once rolled
  std::vector<int> bids_;
  bool liar_called_ = false;
};

}  // namespace eqlab

#endif  // EQLAB_GAMES_LIARS_DICE_HPP_
