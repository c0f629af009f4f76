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

#include "eqlab/games/registry.hpp"

#include "eqlab/games/kuhn.hpp"
#include "eqlab/games/leduc.hpp"
#include "eqlab/games/liars_dice.hpp"
#include "eqlab/games/tic_tac_toe.hpp"
#include "eqlab/util.hpp"

namespace eqlab {

const std::vector<std::string>& SupportedGames() {
  static const std::vector<std::string> kGames = {"kuhn", "leduc",
                                                  "liars_dice", "tic_tac_toe"};
  return kGames;
}

std::shared_ptr<const Game> BuildGame(const std::string& name) {
  if (name == "kuhn") return std::make_shared<KuhnGame>();
  if (name == "leduc") return std::make_shared<LeducGame>();
  if (name == "liars_dice") return std::make_shared<LiarsDiceGame>();
  if (name == "tic_tac_toe") return std::make_shared<TicTacToeGame>();
  FatalError("unknown game '" + name + "'; supported games: " +
             JoinStrings(SupportedGames(), ", "));
}

}  // namespace eqlab
