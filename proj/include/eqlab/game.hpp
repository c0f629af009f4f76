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
// Core abstraction for two-player zero-sum extensive-form games with
// perfect recall and explicit chance nodes. States are immutable values:
// Child() returns a fresh state and never modifies the parent, so states
// can be shared freely across rollout workers and evaluators.

#ifndef EQLAB_GAME_HPP_
#define EQLAB_GAME_HPP_

#include <array>
#include <memory>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace eqlab {

using ActionId = int;
using PlayerId = int;

inline constexpr PlayerId kChancePlayerId = -1;
inline constexpr PlayerId kTerminalPlayerId = -2;
inline constexpr int kNumPlayers = 2;

// (outcome id, probability); probabilities at a chance node sum to 1
// within 1e-12.
using ChanceOutcome = std::pair<ActionId, double>;

class State {
 public:
  virtual ~State() = default;

  // Acting player, kChancePlayerId, or kTerminalPlayerId.
  virtual PlayerId CurrentPlayer() const = 0;
  bool IsTerminal() const { return CurrentPlayer() == kTerminalPlayerId; }
  bool IsChance() const { return CurrentPlayer() == kChancePlayerId; }

  // Legal actions in ascending ActionId order, duplicate-free and non-empty.
  // At chance nodes these are the outcome ids. Error on terminal states.
  std::vector<ActionId> LegalActions() const;

  // Error unless this is a chance node.
  std::vector<ChanceOutcome> ChanceOutcomes() const;

  // Per-player returns; error unless terminal. Entries sum to 0 exactly.
  std::vector<double> Returns() const;

  // Identifier of the information state from `player`'s point of view.
  // Stable across runs, equal exactly for states that player cannot
  // distinguish. Error on chance nodes.
  std::string InformationStateKey(PlayerId player) const;
  std::string InformationStateKey() const {
    return InformationStateKey(CurrentPlayer());
  }

  // The unique child reached by `action`. Checks legality and reports the
  // offending action together with the state it was applied to.
  std::unique_ptr<State> Child(ActionId action) const;

  virtual std::unique_ptr<State> Clone() const = 0;

  const std::vector<ActionId>& History() const { return history_; }
  std::string HistoryString() const;

 protected:
  virtual std::vector<ActionId> LegalActionsInternal() const = 0;
  virtual std::vector<ChanceOutcome> ChanceOutcomesInternal() const = 0;
  virtual std::vector<double> ReturnsInternal() const = 0;
  virtual std::string InformationStateKeyInternal(PlayerId player) const = 0;
  // Trusts that `action` is legal.
  virtual void DoApplyAction(ActionId action) = 0;

  std::vector<ActionId> history_;
};

class Game {
 public:
  virtual ~Game() = default;

  virtual std::string Name() const = 0;
  int NumPlayers() const { return kNumPlayers; }
  virtual std::unique_ptr<State> NewInitialState() const = 0;

  // Tight payoff bounds over all terminal states.
  virtual double MinPayoff() const = 0;
  virtual double MaxPayoff() const = 0;
  double PayoffRange() const { return MaxPayoff() - MinPayoff(); }

  virtual int MaxGameLength() const = 0;

  // Padded action-space size; estimators store vectors of this length and
  // callers mask to the legal subset.
  virtual int MaxActions() const = 0;

  // Fixed-length one-hot feature encoding of an information-state key.
  // The exact per-game layouts are documented in the README and covered by
  // golden-vector tests. Errors on keys that do not belong to this game.
  virtual int FeatureDim() const = 0;
  virtual std::vector<double> EncodeFeatures(const std::string& key) const = 0;

  // Legal actions at the information state named by `key`. Well-defined
  // because states sharing a key expose identical legal-action lists.
  virtual std::vector<ActionId> LegalActionsFromKey(
      const std::string& key) const = 0;
};

// Exhaustive per-player sets of information-state keys of acting players,
// collected by a full tree walk.
std::array<std::set<std::string>, kNumPlayers> EnumerateInfoStates(
    const Game& game);

}  // namespace eqlab

#endif  // EQLAB_GAME_HPP_
