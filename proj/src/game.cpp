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

#include "eqlab/game.hpp"

#include <algorithm>

#include "eqlab/util.hpp"

namespace eqlab {

std::vector<ActionId> State::LegalActions() const {
  if (IsTerminal()) {
    FatalError("LegalActions queried on terminal state " + HistoryString());
  }
  if (IsChance()) {
    std::vector<ActionId> outcomes;
    for (const auto& [action, prob] : ChanceOutcomesInternal()) {
      outcomes.push_back(action);
    }
    return outcomes;
  }
  return LegalActionsInternal();
}

std::vector<ChanceOutcome> State::ChanceOutcomes() const {
  if (!IsChance()) {
    FatalError("ChanceOutcomes queried on non-chance state " +
               HistoryString());
  }
  return ChanceOutcomesInternal();
}

std::vector<double> State::Returns() const {
  if (!IsTerminal()) {
    FatalError("Returns queried on non-terminal state " + HistoryString());
  }
  return ReturnsInternal();
}

std::string State::InformationStateKey(PlayerId player) const {
  if (IsChance()) {
    FatalError("InformationStateKey queried on chance state " +
               HistoryString());
  }
  if (player < 0 || player >= kNumPlayers) {
    FatalError("InformationStateKey queried for invalid player " +
               std::to_string(player));
  }
  return InformationStateKeyInternal(player);
}

std::unique_ptr<State> State::Child(ActionId action) const {
  if (IsTerminal()) {
    FatalError("Child(" + std::to_string(action) +
               ") on terminal state " + HistoryString());
  }
  std::vector<ActionId> legal = LegalActions();
  if (!std::binary_search(legal.begin(), legal.end(), action)) {
    std::string where = IsChance() ? "chance state " + HistoryString()
                                   : "state " + InformationStateKey();
    FatalError("illegal action " + std::to_string(action) + " at " + where);
  }
  std::unique_ptr<State> child = Clone();
  child->DoApplyAction(action);
  child->history_.push_back(action);
  return child;
}

std::string State::HistoryString() const {
  std::string out = "[";
  for (size_t i = 0; i < history_.size(); ++i) {
    if (i > 0) out += " ";
    out += std::to_string(history_[i]);
  }
  out += "]";
  return out;
}

std::array<std::set<std::string>, kNumPlayers> EnumerateInfoStates(
    const Game& game) {
  std::array<std::set<std::string>, kNumPlayers> keys;
  std::vector<std::unique_ptr<State>> stack;
  stack.push_back(game.NewInitialState());
  while (!stack.empty()) {
    std::unique_ptr<State> state = std::move(stack.back());
    stack.pop_back();
    if (state->IsTerminal()) continue;
    if (!state->IsChance()) {
      keys[state->CurrentPlayer()].insert(state->InformationStateKey());
    }
    for (ActionId action : state->LegalActions()) {
      stack.push_back(state->Child(action));
    }
  }
  return keys;
}

}  // namespace eqlab
