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
// Run orchestration behind the CLI: training with evaluation cadence and
// persistence (curve CSV, checkpoints, manifest), checkpoint evaluation,
// head-to-head arenas, and per-seed curve merging.
//
// Normative CSV schemas (floats printed with 10 significant digits):
//   curves: episode,exploitability,algorithm,game,seed
//   arena:  player1,player2,episodes,win_rate,loss_rate,draw_rate,avg_payoff,seed

#ifndef EQLAB_RUNNER_HPP_
#define EQLAB_RUNNER_HPP_

#include <string>
#include <vector>

#include "eqlab/agents.hpp"
#include "eqlab/config.hpp"
#include "eqlab/eval.hpp"

namespace eqlab {

inline constexpr const char* kCurveCsvHeader =
    "episode,exploitability,algorithm,game,seed";
inline constexpr const char* kArenaCsvHeader =
    "player1,player2,episodes,win_rate,loss_rate,draw_rate,avg_payoff,seed";

struct TrainOutcome {
  std::string run_dir;
  EvalReport final_report;
  std::vector<std::pair<int64_t, double>> curve;  // (episode, exploitability)
};

// One single-threaded training run writing into config.out_dir: curve.csv,
// run.log, periodic checkpoint_<episode>/ directories, checkpoint_final/,
// and manifest.txt (resolved config plus sha256 of every output).
// An existing TreeEvaluator for config.game may be shared; pass nullptr to
// build one locally.
TrainOutcome RunTrain(const TrainConfig& config,
                      const TreeEvaluator* shared_evaluator = nullptr);

// Fans out config.seeds independent runs (seed, seed+1, ...) into
// out_dir/seed_<s>/ subdirectories, in parallel, one thread per run.
std::vector<TrainOutcome> RunTrainSeeds(const TrainConfig& config);

// Exploitability of a checkpoint's average-strategy profile. Appends a
// curve-schema row to csv_path when non-empty.
EvalReport RunEval(const std::string& checkpoint_dir,
                   const std::string& game_name,
                   const std::string& csv_path = "");

// Head-to-head match between two checkpoints' average strategies;
// checkpoint A holds the player-1 seat. Appends an arena-schema row to
// csv_path when non-empty.
MatchReport RunArena(const std::string& checkpoint_a,
                     const std::string& checkpoint_b,
                     const std::string& game_name, int64_t episodes,
                     uint64_t seed, const std::string& csv_path = "");

// Merges curve CSVs (per-seed runs) into mean/std columns grouped by
// (episode, algorithm, game); writes
// episode,mean_exploitability,std_exploitability,runs,algorithm,game.
void MergeCurves(const std::vector<std::string>& curve_csvs,
                 const std::string& out_path);

}  // namespace eqlab

#endif  // EQLAB_RUNNER_HPP_
