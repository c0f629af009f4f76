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

#ifndef EQLAB_GAMES_REGISTRY_HPP_
#define EQLAB_GAMES_REGISTRY_HPP_

#include <memory>
#include <string>
#include <vector>

#include "eqlab/game.hpp"

namespace eqlab {

const std::vector<std::string>& SupportedGames();

// Builds a game by name; errors with the supported list on unknown names.
std::shared_ptr<const Game> BuildGame(const std::string& name);

}  // namespace eqlab

#endif  // EQLAB_GAMES_REGISTRY_HPP_
