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

#include "eqlab/config.hpp"

#include <istream>
#include <sstream>

#include "eqlab/games/registry.hpp"
#include "eqlab/util.hpp"

namespace eqlab {

namespace {

void RequireRange(bool ok, const std::string& key, const std::string& value,
                  const std::string& requirement) {
  if (!ok) {
    FatalError("config value out of range for '" + key + "': " + value +
               " (" + requirement + ")");
  }
}

std::string Trim(const std::string& s) {
  size_t begin = s.find_first_not_of(" \t\r");
  if (begin == std::string::npos) return "";
  size_t end = s.find_last_not_of(" \t\r");
  return s.substr(begin, end - begin + 1);
}

}  // namespace

void ApplyConfigValue(TrainConfig& config, const std::string& key,
                      const std::string& value) {
  if (key == "game") {
    bool known = false;
    for (const std::string& name : SupportedGames()) known |= name == value;
    RequireRange(known, key, value,
                 "one of " + JoinStrings(SupportedGames(), ", "));
    config.game = value;
  } else if (key == "algorithm") {
    RequireRange(value == "nfsp" || value == "arm-nfsp", key, value,
                 "nfsp or arm-nfsp");
    config.algorithm = value;
  } else if (key == "backend") {
    RequireRange(value == "tabular" || value == "mlp", key, value,
                 "tabular or mlp");
    config.backend = value;
  } else if (key == "episodes") {
    config.episodes = ParseInt64(value, key);
    RequireRange(config.episodes >= 0, key, value, ">= 0");
  } else if (key == "alpha") {
    config.alpha = ParseDouble(value, key);
    RequireRange(config.alpha > 0.0 && config.alpha < 1.0, key, value,
                 "in (0, 1)");
  } else if (key == "lr_q") {
    config.lr_q = ParseDouble(value, key);
    RequireRange(config.lr_q > 0.0, key, value, "> 0");
  } else if (key == "lr_v") {
    config.lr_v = ParseDouble(value, key);
    RequireRange(config.lr_v > 0.0, key, value, "> 0");
  } else if (key == "lr_pi") {
    config.lr_pi = ParseDouble(value, key);
    RequireRange(config.lr_pi > 0.0, key, value, "> 0");
  } else if (key == "rl_capacity") {
    config.rl_capacity = ParseInt64(value, key);
    RequireRange(config.rl_capacity >= 1, key, value, ">= 1");
  } else if (key == "sl_capacity") {
    config.sl_capacity = ParseInt64(value, key);
    RequireRange(config.sl_capacity >= 1, key, value, ">= 1");
  } else if (key == "update_every") {
    config.update_every = ParseInt64(value, key);
    RequireRange(config.update_every >= 1, key, value, ">= 1");
  } else if (key == "batch_size") {
    config.batch_size = ParseInt64(value, key);
    RequireRange(config.batch_size >= 1, key, value, ">= 1");
  } else if (key == "target_sync") {
    config.target_sync = ParseInt64(value, key);
    RequireRange(config.target_sync >= 1, key, value, ">= 1");
  } else if (key == "eps_start") {
    config.eps_start = ParseDouble(value, key);
    RequireRange(config.eps_start >= 0.0 && config.eps_start <= 1.0, key,
                 value, "in [0, 1]");
  } else if (key == "eps_end") {
    config.eps_end = ParseDouble(value, key);
    RequireRange(config.eps_end >= 0.0 && config.eps_end <= 1.0, key, value,
                 "in [0, 1]");
  } else if (key == "mlp_hidden") {
    config.mlp_hidden = ParseInt64(value, key);
    RequireRange(config.mlp_hidden >= 0, key, value, ">= 0");
  } else if (key == "eval_every") {
    config.eval_every = ParseInt64(value, key);
    RequireRange(config.eval_every >= 1, key, value, ">= 1");
  } else if (key == "checkpoint_every") {
    config.checkpoint_every = ParseInt64(value, key);
    RequireRange(config.checkpoint_every >= 0, key, value, ">= 0");
  } else if (key == "seed") {
    config.seed = ParseUint64(value, key);
  } else if (key == "out_dir") {
    RequireRange(!value.empty(), key, value, "non-empty");
    config.out_dir = value;
  } else if (key == "seeds") {
    config.seeds = ParseInt64(value, key);
    RequireRange(config.seeds >= 1, key, value, ">= 1");
  } else {
    FatalError("unknown config key '" + key + "'");
  }
}

void ValidateTrainConfig(const TrainConfig& config) {
  if (config.checkpoint_every > 0 &&
      config.checkpoint_every % config.eval_every != 0) {
    FatalError(
        "config value out of range for 'checkpoint_every': must be 0 or a "
        "multiple of eval_every");
  }
  if (config.batch_size > config.rl_capacity) {
    FatalError(
        "config value out of range for 'batch_size': must not exceed "
        "rl_capacity");
  }
}

TrainConfig ParseTrainConfig(
    std::istream& file,
    const std::vector<std::pair<std::string, std::string>>& overrides) {
  TrainConfig config;
  std::string line;
  int line_number = 0;
  while (std::getline(file, line)) {
    ++line_number;
    std::string stripped = Trim(line);
    if (stripped.empty() || stripped[0] == '#') continue;
    size_t eq = stripped.find('=');
    if (eq == std::string::npos) {
      FatalError("malformed config line " + std::to_string(line_number) +
                 ": '" + line + "'");
    }
    ApplyConfigValue(config, Trim(stripped.substr(0, eq)),
                     Trim(stripped.substr(eq + 1)));
  }
  for (const auto& [key, value] : overrides) {
    ApplyConfigValue(config, key, value);
  }
  ValidateTrainConfig(config);
  return config;
}

std::string ConfigToString(const TrainConfig& config) {
  std::ostringstream os;
  os << "algorithm=" << config.algorithm << '\n'
     << "alpha=" << FormatDouble(config.alpha, 10) << '\n'
     << "backend=" << config.backend << '\n'
     << "batch_size=" << config.batch_size << '\n'
     << "checkpoint_every=" << config.checkpoint_every << '\n'
     << "eps_end=" << FormatDouble(config.eps_end, 10) << '\n'
     << "eps_start=" << FormatDouble(config.eps_start, 10) << '\n'
     << "episodes=" << config.episodes << '\n'
     << "eval_every=" << config.eval_every << '\n'
     << "game=" << config.game << '\n'
     << "lr_pi=" << FormatDouble(config.lr_pi, 10) << '\n'
     << "lr_q=" << FormatDouble(config.lr_q, 10) << '\n'
     << "lr_v=" << FormatDouble(config.lr_v, 10) << '\n'
     << "mlp_hidden=" << config.mlp_hidden << '\n'
     << "out_dir=" << config.out_dir << '\n'
     << "rl_capacity=" << config.rl_capacity << '\n'
     << "seed=" << config.seed << '\n'
     << "seeds=" << config.seeds << '\n'
     << "sl_capacity=" << config.sl_capacity << '\n'
     << "target_sync=" << config.target_sync << '\n'
     << "update_every=" << config.update_every << '\n';
  return os.str();
}

}  // namespace eqlab
