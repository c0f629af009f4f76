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
// Function-approximation layer. Two interchangeable backends implement the
// same contract so every learner runs on either: an exact per-key table and
// a small single-hidden-layer feedforward net trained by plain SGD. Action
// masking is the caller's responsibility; estimators store padded vectors.

#ifndef EQLAB_ESTIMATOR_HPP_
#define EQLAB_ESTIMATOR_HPP_

#include <cstdint>
#include <iosfwd>
#include <memory>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

namespace eqlab {

enum class EstimatorKind { kTabular, kMlp };
enum class MlpActivation { kTanh, kIdentity };
enum class MlpLoss { kSquaredError, kSoftmaxCrossEntropy };

struct TrainExample {
  std::string key;               // tabular lookup
  std::vector<double> features;  // mlp input
  std::vector<double> target;    // padded to the output dimension
  std::vector<uint8_t> mask;     // constrained outputs; empty means all
};
using TrainBatch = std::vector<TrainExample>;

class Estimator {
 public:
  virtual ~Estimator() = default;
  virtual EstimatorKind kind() const = 0;
  virtual int OutputDim() const = 0;

  // Deterministic given parameters. Tabular backends ignore `features`,
  // the mlp ignores `key`. For cross-entropy heads the outputs are logits.
  virtual std::vector<double> Predict(
      const std::string& key, std::span<const double> features) const = 0;

  // One update step: per-key running-average step (tabular) or one SGD step
  // on the batch-mean gradient (mlp). Returns the pre-update mean loss.
  virtual double FitBatch(const TrainBatch& batch, double lr) = 0;

  virtual void Save(std::ostream& os) const = 0;
  virtual std::unique_ptr<Estimator> Clone() const = 0;
};

class TabularEstimator final : public Estimator {
 public:
  explicit TabularEstimator(int output_dim);
  EstimatorKind kind() const override { return EstimatorKind::kTabular; }
  int OutputDim() const override { return output_dim_; }
  std::vector<double> Predict(
      const std::string& key, std::span<const double> features) const override;
  double FitBatch(const TrainBatch& batch, double lr) override;
  void Save(std::ostream& os) const override;
  std::unique_ptr<Estimator> Clone() const override;

 private:
  int output_dim_;
  std::unordered_map<std::string, std::vector<double>> values_;
};

class MlpEstimator final : public Estimator {
 public:
  struct Config {
    int input_dim = 1;
    int hidden_dim = 64;  // 0 builds a single linear layer
    int output_dim = 1;
    MlpActivation activation = MlpActivation::kTanh;
    MlpLoss loss = MlpLoss::kSquaredError;
    uint64_t seed = 0;
  };

  // Weights uniform(-0.05, 0.05) from `config.seed`, biases zero.
  explicit MlpEstimator(const Config& config);

  EstimatorKind kind() const override { return EstimatorKind::kMlp; }
  int OutputDim() const override { return config_.output_dim; }
  const Config& config() const { return config_; }
  std::vector<double> Predict(
      const std::string& key, std::span<const double> features) const override;
  double FitBatch(const TrainBatch& batch, double lr) override;
  void Save(std::ostream& os) const override;
  std::unique_ptr<Estimator> Clone() const override;

  // Maximum relative error between the analytic gradient and central finite
  // differences (step 1e-5) over all parameters, for one example.
  double GradientCheck(const TrainExample& example) const;

  std::vector<double> parameters() const;  // flattened, for tests
  void set_parameters(std::span<const double> values);

 private:
  struct Gradients;
  double LossAndGradient(const TrainBatch& batch, Gradients* grads) const;

  Config config_;
  // hidden_dim > 0: w1 (hidden x in), b1, w2 (out x hidden), b2.
  // hidden_dim == 0: w2 (out x in), b2.
  std::vector<double> w1_, b1_, w2_, b2_;
};

std::unique_ptr<Estimator> LoadEstimator(std::istream& is);

}  // namespace eqlab

#endif  // EQLAB_ESTIMATOR_HPP_
