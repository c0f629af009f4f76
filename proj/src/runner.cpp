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

#include "eqlab/runner.hpp"

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <map>
#include <sstream>
#include <thread>

#include "eqlab/games/registry.hpp"
#include "eqlab/util.hpp"

namespace eqlab {

namespace fs = std::filesystem;

namespace {

std::string ReadFileBytes(const std::string& path) {
  std::ifstream is(path, std::ios::binary);
  if (!is) FatalError("cannot read " + path);
  std::ostringstream os;
  os << is.rdbuf();
  return os.str();
}

void AppendCsvRow(const std::string& path, const std::string& header,
                  const std::string& row) {
  bool fresh = !fs::exists(path) || fs::file_size(path) == 0;
  std::ofstream os(path, std::ios::binary | std::ios::app);
  if (!os) FatalError("cannot write " + path);
  if (fresh) os << header << '\n';
  os << row << '\n';
  if (!os) FatalError("write failed for " + path);
}

class RunLog {
 public:
  explicit RunLog(const std::string& path) : os_(path, std::ios::binary) {
    if (!os_) FatalError("cannot write " + path);
  }
  void Line(const std::string& message) {
    os_ << Iso8601Now() << ' ' << message << '\n';
    os_.flush();
  }

 private:
  std::ofstream os_;
};

}  // namespace

TrainOutcome RunTrain(const TrainConfig& config,
                      const TreeEvaluator* shared_evaluator) {
  ValidateTrainConfig(config);
  std::shared_ptr<const Game> game = BuildGame(config.game);
  std::unique_ptr<TreeEvaluator> local_evaluator;
  if (shared_evaluator == nullptr) {
    local_evaluator = std::make_unique<TreeEvaluator>(game);
  } else {
    EQLAB_CHECK(shared_evaluator->game().Name() == config.game,
                "shared evaluator built for a different game");
  }
  const TreeEvaluator& evaluator =
      shared_evaluator != nullptr ? *shared_evaluator : *local_evaluator;

  fs::create_directories(config.out_dir);
  const std::string curve_path = config.out_dir + "/curve.csv";
  if (fs::exists(curve_path)) fs::remove(curve_path);
  RunLog log(config.out_dir + "/run.log");
  log.Line("run starting with resolved config:");
  {
    std::istringstream lines(ConfigToString(config));
    std::string line;
    while (std::getline(lines, line)) log.Line("  " + line);
  }

  const AgentVariant variant = AgentVariantFromName(config.algorithm);
  Agent agent0(variant, game, 0, config, Rng::DeriveStream(config.seed, 1));
  Agent agent1(variant, game, 1, config, Rng::DeriveStream(config.seed, 2));
  Rng env_rng(Rng::DeriveStream(config.seed, 0));

  TrainOutcome outcome;
  outcome.run_dir = config.out_dir;
  std::vector<std::string> outputs;

  auto on_eval = [&](int64_t episode) {
    EvalReport report =
        evaluator.Exploitability(agent0.average_policy(),
                                 agent1.average_policy());
    report.episode = episode;
    report.seed = config.seed;
    std::string row = std::to_string(episode) + ',' +
                      FormatDouble(report.exploitability, 10) + ',' +
                      config.algorithm + ',' + config.game + ',' +
                      std::to_string(config.seed);
    AppendCsvRow(curve_path, kCurveCsvHeader, row);
    outcome.curve.emplace_back(episode, report.exploitability);
    outcome.final_report = report;
    log.Line("episode " + std::to_string(episode) + " exploitability " +
             FormatDouble(report.exploitability, 10));
    if (config.checkpoint_every > 0 && episode % config.checkpoint_every == 0 &&
        episode != config.episodes) {
      const std::string dir =
          config.out_dir + "/checkpoint_" + std::to_string(episode);
      SaveRunCheckpoint(dir, agent0, agent1, config);
      for (const auto& entry : fs::directory_iterator(dir)) {
        outputs.push_back(entry.path().string());
      }
      log.Line("checkpoint written to " + dir);
    }
  };

  RunSelfPlay(*game, agent0, agent1, config, env_rng, on_eval);

  if (config.episodes == 0) {
    // Still produce a valid (empty-curve) run directory.
    EvalReport report = evaluator.Exploitability(agent0.average_policy(),
                                                 agent1.average_policy());
    report.seed = config.seed;
    outcome.final_report = report;
    AppendCsvRow(curve_path, kCurveCsvHeader, "");  // header only
  }

  const std::string final_dir = config.out_dir + "/checkpoint_final";
  SaveRunCheckpoint(final_dir, agent0, agent1, config);
  for (const auto& entry : fs::directory_iterator(final_dir)) {
    outputs.push_back(entry.path().string());
  }
  outputs.push_back(curve_path);

  std::ostringstream manifest;
  manifest << "manifest-v1\n";
  {
    std::istringstream lines(ConfigToString(config));
    std::string line;
    while (std::getline(lines, line)) manifest << "config " << line << '\n';
  }
  std::sort(outputs.begin(), outputs.end());
  for (const std::string& path : outputs) {
    manifest << "output sha256 " << Sha256Hex(ReadFileBytes(path)) << ' '
             << fs::relative(path, config.out_dir).string() << '\n';
  }
  std::ofstream manifest_os(config.out_dir + "/manifest.txt",
                            std::ios::binary);
  manifest_os << manifest.str();
  log.Line("run finished after " + std::to_string(config.episodes) +
           " episodes");
  return outcome;
}

std::vector<TrainOutcome> RunTrainSeeds(const TrainConfig& config) {
  if (config.seeds == 1) return {RunTrain(config)};
  std::vector<TrainOutcome> outcomes(config.seeds);
  std::vector<std::string> errors(config.seeds);
  std::shared_ptr<const Game> game = BuildGame(config.game);
  TreeEvaluator evaluator(game);
  std::vector<std::thread> workers;
  workers.reserve(config.seeds);
  for (int64_t i = 0; i < config.seeds; ++i) {
    workers.emplace_back([&, i]() {
      TrainConfig run = config;
      run.seeds = 1;
      run.seed = config.seed + static_cast<uint64_t>(i);
      run.out_dir = config.out_dir + "/seed_" + std::to_string(run.seed);
      try {
        outcomes[i] = RunTrain(run, &evaluator);
      } catch (const std::exception& e) {
        errors[i] = e.what();
      }
    });
  }
  for (std::thread& worker : workers) worker.join();
  for (const std::string& error : errors) {
    if (!error.empty()) FatalError("seed run failed: " + error);
  }
  return outcomes;
}

EvalReport RunEval(const std::string& checkpoint_dir,
                   const std::string& game_name, const std::string& csv_path) {
  std::shared_ptr<const Game> game = BuildGame(game_name);
  CheckpointMeta meta = ReadCheckpointMeta(checkpoint_dir);
  std::unique_ptr<AveragePolicy> pi0 =
      LoadAveragePolicyFromCheckpoint(checkpoint_dir, game, 0);
  std::unique_ptr<AveragePolicy> pi1 =
      LoadAveragePolicyFromCheckpoint(checkpoint_dir, game, 1);
  TreeEvaluator evaluator(game);
  EvalReport report = evaluator.Exploitability(*pi0, *pi1);
  report.episode = meta.episodes;
  report.seed = meta.seed;
  if (!csv_path.empty()) {
    std::string row = std::to_string(report.episode) + ',' +
                      FormatDouble(report.exploitability, 10) + ',' +
                      meta.algorithm + ',' + meta.game + ',' +
                      std::to_string(meta.seed);
    AppendCsvRow(csv_path, kCurveCsvHeader, row);
  }
  return report;
}

MatchReport RunArena(const std::string& checkpoint_a,
                     const std::string& checkpoint_b,
                     const std::string& game_name, int64_t episodes,
                     uint64_t seed, const std::string& csv_path) {
  std::shared_ptr<const Game> game = BuildGame(game_name);
  CheckpointMeta meta_a = ReadCheckpointMeta(checkpoint_a);
  CheckpointMeta meta_b = ReadCheckpointMeta(checkpoint_b);
  std::unique_ptr<AveragePolicy> policy_a =
      LoadAveragePolicyFromCheckpoint(checkpoint_a, game, 0);
  std::unique_ptr<AveragePolicy> policy_b =
      LoadAveragePolicyFromCheckpoint(checkpoint_b, game, 1);
  Rng rng(seed);
  MatchReport report = PlayArena(*game, *policy_a, *policy_b, episodes, rng);
  if (!csv_path.empty()) {
    std::string row = meta_a.algorithm + ',' + meta_b.algorithm + ',' +
                      std::to_string(episodes) + ',' +
                      FormatDouble(report.win_rate, 10) + ',' +
                      FormatDouble(report.loss_rate, 10) + ',' +
                      FormatDouble(report.draw_rate, 10) + ',' +
                      FormatDouble(report.avg_payoff, 10) + ',' +
                      std::to_string(seed);
    AppendCsvRow(csv_path, kArenaCsvHeader, row);
  }
  return report;
}

void MergeCurves(const std::vector<std::string>& curve_csvs,
                 const std::string& out_path) {
  EQLAB_CHECK(!curve_csvs.empty(), "no curve files to merge");
  // (episode, algorithm, game) -> exploitability samples
  std::map<std::tuple<int64_t, std::string, std::string>, std::vector<double>>
      groups;
  for (const std::string& path : curve_csvs) {
    std::ifstream is(path);
    if (!is) FatalError("cannot read " + path);
    std::string line;
    if (!std::getline(is, line)) FatalError("empty curve file " + path);
    if (line != kCurveCsvHeader) {
      FatalError("unexpected curve header in " + path + ": " + line);
    }
    while (std::getline(is, line)) {
      if (line.empty()) continue;
      std::vector<std::string> cells = SplitString(line, ',');
      EQLAB_CHECK(cells.size() == 5, "bad curve row in " + path);
      groups[{ParseInt64(cells[0], "episode"), cells[2], cells[3]}].push_back(
          ParseDouble(cells[1], "exploitability"));
    }
  }
  std::ofstream os(out_path, std::ios::binary);
  if (!os) FatalError("cannot write " + out_path);
  os << "episode,mean_exploitability,std_exploitability,runs,algorithm,game\n";
  for (const auto& [group, values] : groups) {
    const auto& [episode, algorithm, game] = group;
    double mean = 0.0;
    for (double v : values) mean += v;
    mean /= static_cast<double>(values.size());
    double variance = 0.0;
    for (double v : values) variance += (v - mean) * (v - mean);
    variance /= static_cast<double>(values.size());
    os << episode << ',' << FormatDouble(mean, 10) << ','
       << FormatDouble(std::sqrt(variance), 10) << ',' << values.size() << ','
       << algorithm << ',' << game << '\n';
  }
}

}  // namespace eqlab
