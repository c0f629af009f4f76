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

#ifndef EQLAB_CONFIG_HPP_
#define EQLAB_CONFIG_HPP_

#include <cstdint>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

namespace eqlab {

// Run hyperparameters. Config files hold `key=value` lines ('#' comments);
// CLI flags override file values. Unknown keys and out-of-range values are
// rejected with the key named in the error.
struct TrainConfig {
  std::string game = "kuhn";          // kuhn | leduc | liars_dice | tic_tac_toe
  std::string algorithm = "arm-nfsp"; // nfsp | arm-nfsp
  std::string backend = "tabular";    // tabular | mlp
  int64_t episodes = 500000;          // >= 0
  double alpha = 0.1;                 // anticipatory parameter, in (0, 1)
  double lr_q = 0.1;                  // > 0
  double lr_v = 0.1;                  // > 0
  double lr_pi = 0.05;                // > 0, mlp average-policy head
  int64_t rl_capacity = 200000;       // >= 1
  int64_t sl_capacity = 2000000;      // >= 1
  int64_t update_every = 128;         // transitions between updates, >= 1
  int64_t batch_size = 128;           // >= 1
  int64_t target_sync = 300;          // Q-learning target refresh, >= 1
  double eps_start = 0.06;            // in [0, 1]
  double eps_end = 0.001;             // in [0, 1]
  int64_t mlp_hidden = 64;            // >= 0 (0 = linear)
  int64_t eval_every = 10000;         // episodes between evaluations, >= 1
  int64_t checkpoint_every = 100000;  // 0 = final only; multiple of eval_every
  uint64_t seed = 1;
  std::string out_dir = "runs";
  int64_t seeds = 1;                  // parallel independent runs, >= 1
};

// Applies one key=value pair, validating the value. Errors name the key.
void ApplyConfigValue(TrainConfig& config, const std::string& key,
                      const std::string& value);

// Parses `key=value` lines, then applies `overrides` on top, then validates.
TrainConfig ParseTrainConfig(
    std::istream& file,
    const std::vector<std::pair<std::string, std::string>>& overrides = {});

// Cross-field checks; also run by ParseTrainConfig.
void ValidateTrainConfig(const TrainConfig& config);

// Fully resolved config as sorted `key=value` lines (the run-log echo and
// the manifest both embed this).
std::string ConfigToString(const TrainConfig& config);

}  // namespace eqlab

#endif  // EQLAB_CONFIG_HPP_
