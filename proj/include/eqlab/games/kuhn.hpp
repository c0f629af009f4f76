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
// Kuhn poker: three cards {J=0, Q=1, K=2}, one card each, antes of 1, a
// single betting round with a 1-chip bet. Actions: 0 = pass (check/fold),
// 1 = bet (bet/call). The smallest nontrivial imperfect-information game;
// its known analytic equilibrium family makes it the exactness oracle for
// the evaluator tests.
//
// Information-state key: "<player>:<card>:<bets>" with bets over {p, b},
// e.g. "1:0:b". Feature layout (9): [0..2] card one-hot; [3..8] move slot
// s in {0,1,2} times action {pass=0, bet=1} at index 3 + 2*s + a.

#ifndef EQLAB_GAMES_KUHN_HPP_
#define EQLAB_GAMES_KUHN_HPP_

#include <memory>
#include <string>
#include <vector>

#include "eqlab/game.hpp"

namespace eqlab {

class KuhnGame final : public Game {
 public:
  std::string Name() const override { return "kuhn"; }
  std::unique_ptr<State> NewInitialState() const override;
  double MinPayoff() const override { return -2.0; }
  double MaxPayoff() const override { return 2.0; }
  int MaxGameLength() const override { return 5; }
  int MaxActions() const override { return 2; }
  int FeatureDim() const override { return 9; }
  std::vector<double> EncodeFeatures(const std::string& key) const override;
  std::vector<ActionId> LegalActionsFromKey(
      const std::string& key) const override;
};

class KuhnState final : public State {
 public:
  KuhnState() = default;
  PlayerId CurrentPlayer() const override;
  std::unique_ptr<State> Clone() const override;

 protected:
  std::vector<ActionId> LegalActionsInternal() const override;
  std::vector<ChanceOutcome> ChanceOutcomesInternal() const override;
  std::vector<double> ReturnsInternal() const override;
  std::string InformationStateKeyInternal(PlayerId player) const override;
  void DoApplyAction(ActionId action) override;

 private:
  bool BettingOver() const;
  int cards_[2] = {-1, -1};
  std::string bets_;
};

}  // namespace eqlab

#endif  // EQLAB_GAMES_KUHN_HPP_
