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

#include "eqlab/estimator.hpp"

#include <algorithm>
#include <cmath>
#include <istream>
#include <map>
#include <ostream>
#include <sstream>

#include "eqlab/rng.hpp"
#include "eqlab/util.hpp"

namespace eqlab {

namespace {

void CheckExample(const TrainExample& example, int output_dim) {
  EQLAB_CHECK(static_cast<int>(example.target.size()) == output_dim,
              "target dimension mismatch: got " +
                  std::to_string(example.target.size()) + ", expected " +
                  std::to_string(output_dim));
  EQLAB_CHECK(example.mask.empty() ||
                  static_cast<int>(example.mask.size()) == output_dim,
              "mask dimension mismatch");
  bool any = example.mask.empty();
  for (uint8_t m : example.mask) any = any || m;
  EQLAB_CHECK(any, "mask with no constrained entry");
  for (size_t k = 0; k < example.target.size(); ++k) {
    if ((example.mask.empty() || example.mask[k]) &&
        !std::isfinite(example.target[k])) {
      FatalError("non-finite training target");
    }
  }
}

bool Masked(const TrainExample& example, size_t k) {
  return example.mask.empty() || example.mask[k];
}

std::string ActivationName(MlpActivation a) {
  return a == MlpActivation::kTanh ? "tanh" : "identity";
}

std::string LossName(MlpLoss l) {
  return l == MlpLoss::kSquaredError ? "se" : "ce";
}

void WriteRow(std::ostream& os, std::span<const double> row) {
  for (size_t i = 0; i < row.size(); ++i) {
    if (i > 0) os << ' ';
    os << FormatDouble(row[i], 17);
  }
  os << '\n';
}

std::vector<double> ReadRow(std::istream& is, size_t expected,
                            const std::string& what) {
  std::string line;
  if (!std::getline(is, line)) {
    FatalError("truncated estimator file reading " + what);
  }
  std::istringstream ss(line);
  std::vector<double> row;
  std::string token;
  while (ss >> token) row.push_back(ParseDouble(token, what));
  EQLAB_CHECK(row.size() == expected, "bad row length in " + what);
  return row;
}

}  // namespace

// ---------------------------------------------------------------------------
// TabularEstimator

TabularEstimator::TabularEstimator(int output_dim) : output_dim_(output_dim) {
  EQLAB_CHECK(output_dim > 0, "estimator output dimension must be positive");
}

std::vector<double> TabularEstimator::Predict(
    const std::string& key, std::span<const double> features) const {
  (void)features;
  auto it = values_.find(key);
  if (it == values_.end()) return std::vector<double>(output_dim_, 0.0);
  return it->second;
}

double TabularEstimator::FitBatch(const TrainBatch& batch, double lr) {
  EQLAB_CHECK(lr > 0.0, "learning rate must be positive");
  EQLAB_CHECK(!batch.empty(), "empty training batch");
  double loss = 0.0;
  size_t terms = 0;
  for (const TrainExample& example : batch) {
    CheckExample(example, output_dim_);
    auto it = values_.find(example.key);
    for (size_t k = 0; k < example.target.size(); ++k) {
      if (!Masked(example, k)) continue;
      double value = it == values_.end() ? 0.0 : it->second[k];
      double diff = value - example.target[k];
      loss += diff * diff;
      ++terms;
    }
  }
  for (const TrainExample& example : batch) {
    auto [it, inserted] =
        values_.try_emplace(example.key, output_dim_, 0.0);
    for (size_t k = 0; k < example.target.size(); ++k) {
      if (!Masked(example, k)) continue;
      it->second[k] += lr * (example.target[k] - it->second[k]);
    }
  }
  return loss / static_cast<double>(terms);
}

void TabularEstimator::Save(std::ostream& os) const {
  os << "estimator-v1 tabular " << output_dim_ << ' ' << values_.size()
     << '\n';
  std::map<std::string, const std::vector<double>*> sorted;
  for (const auto& [key, row] : values_) sorted[key] = &row;
  for (const auto& [key, row] : sorted) {
    os << key << '\t';
    WriteRow(os, *row);
  }
}

std::unique_ptr<Estimator> TabularEstimator::Clone() const {
  return std::make_unique<TabularEstimator>(*this);
}

// ---------------------------------------------------------------------------
// MlpEstimator

struct MlpEstimator::Gradients {
  std::vector<double> w1, b1, w2, b2;
};

MlpEstimator::MlpEstimator(const Config& config) : config_(config) {
  EQLAB_CHECK(config.input_dim > 0, "mlp input dimension must be positive");
  EQLAB_CHECK(config.hidden_dim >= 0, "mlp hidden dimension must be >= 0");
  EQLAB_CHECK(config.output_dim > 0, "mlp output dimension must be positive");
  Rng rng(config.seed);
  auto init = [&rng](std::vector<double>& w, size_t n) {
    w.resize(n);
    for (double& v : w) v = rng.UniformDouble() * 0.1 - 0.05;
  };
  if (config.hidden_dim > 0) {
    init(w1_, static_cast<size_t>(config.hidden_dim) * config.input_dim);
    b1_.assign(config.hidden_dim, 0.0);
    init(w2_, static_cast<size_t>(config.output_dim) * config.hidden_dim);
  } else {
    init(w2_, static_cast<size_t>(config.output_dim) * config.input_dim);
  }
  b2_.assign(config.output_dim, 0.0);
}

std::vector<double> MlpEstimator::Predict(
    const std::string& key, std::span<const double> features) const {
  (void)key;
  EQLAB_CHECK(static_cast<int>(features.size()) == config_.input_dim,
              "mlp input dimension mismatch: got " +
                  std::to_string(features.size()) + ", expected " +
                  std::to_string(config_.input_dim));
  const int in = config_.input_dim;
  const int hidden = config_.hidden_dim;
  const int out = config_.output_dim;
  std::vector<double> output(out);
  if (hidden > 0) {
    std::vector<double> h(hidden);
    for (int j = 0; j < hidden; ++j) {
      double z = b1_[j];
      const double* row = &w1_[static_cast<size_t>(j) * in];
      for (int i = 0; i < in; ++i) z += row[i] * features[i];
      h[j] = config_.activation == MlpActivation::kTanh ? std::tanh(z) : z;
    }
    for (int k = 0; k < out; ++k) {
      double z = b2_[k];
      const double* row = &w2_[static_cast<size_t>(k) * hidden];
      for (int j = 0; j < hidden; ++j) z += row[j] * h[j];
      output[k] = z;
    }
  } else {
    for (int k = 0; k < out; ++k) {
      double z = b2_[k];
      const double* row = &w2_[static_cast<size_t>(k) * in];
      for (int i = 0; i < in; ++i) z += row[i] * features[i];
      output[k] = z;
    }
  }
  return output;
}

double MlpEstimator::LossAndGradient(const TrainBatch& batch,
                                     Gradients* grads) const {
  const int in = config_.input_dim;
  const int hidden = config_.hidden_dim;
  const int out = config_.output_dim;
  if (grads != nullptr) {
    grads->w1.assign(w1_.size(), 0.0);
    grads->b1.assign(b1_.size(), 0.0);
    grads->w2.assign(w2_.size(), 0.0);
    grads->b2.assign(b2_.size(), 0.0);
  }

  // Loss normalizer: total masked entries (squared error) or batch size
  // (cross-entropy).
  size_t se_terms = 0;
  if (config_.loss == MlpLoss::kSquaredError) {
    for (const TrainExample& example : batch) {
      for (size_t k = 0; k < example.target.size(); ++k) {
        if (Masked(example, k)) ++se_terms;
      }
    }
    EQLAB_CHECK(se_terms > 0, "no constrained outputs in batch");
  }
  const double norm = config_.loss == MlpLoss::kSquaredError
                          ? static_cast<double>(se_terms)
                          : static_cast<double>(batch.size());

  double loss = 0.0;
  std::vector<double> h(hidden), pre(hidden), dy(out);
  for (const TrainExample& example : batch) {
    CheckExample(example, out);
    EQLAB_CHECK(static_cast<int>(example.features.size()) == in,
                "mlp input dimension mismatch in batch");
    const std::vector<double>& x = example.features;

    if (hidden > 0) {
      for (int j = 0; j < hidden; ++j) {
        double z = b1_[j];
        const double* row = &w1_[static_cast<size_t>(j) * in];
        for (int i = 0; i < in; ++i) z += row[i] * x[i];
        pre[j] = z;
        h[j] = config_.activation == MlpActivation::kTanh ? std::tanh(z) : z;
      }
    }
    const std::vector<double>& last = hidden > 0 ? h : x;
    const int last_dim = hidden > 0 ? hidden : in;

    std::vector<double> y(out);
    for (int k = 0; k < out; ++k) {
      double z = b2_[k];
      const double* row = &w2_[static_cast<size_t>(k) * last_dim];
      for (int j = 0; j < last_dim; ++j) z += row[j] * last[j];
      y[k] = z;
    }

    std::fill(dy.begin(), dy.end(), 0.0);
    if (config_.loss == MlpLoss::kSquaredError) {
      for (int k = 0; k < out; ++k) {
        if (!Masked(example, k)) continue;
        double diff = y[k] - example.target[k];
        loss += diff * diff / norm;
        dy[k] = 2.0 * diff / norm;
      }
    } else {
      // Softmax over the masked entries; targets are a distribution there.
      double max_logit = -1e300;
      for (int k = 0; k < out; ++k) {
        if (Masked(example, k)) max_logit = std::max(max_logit, y[k]);
      }
      double denom = 0.0;
      std::vector<double> p(out, 0.0);
      for (int k = 0; k < out; ++k) {
        if (!Masked(example, k)) continue;
        p[k] = std::exp(y[k] - max_logit);
        denom += p[k];
      }
      for (int k = 0; k < out; ++k) {
        if (!Masked(example, k)) continue;
        p[k] /= denom;
        if (example.target[k] > 0.0) {
          loss += -example.target[k] * std::log(std::max(p[k], 1e-300)) / norm;
        }
        dy[k] = (p[k] - example.target[k]) / norm;
      }
    }

    if (grads == nullptr) continue;
    for (int k = 0; k < out; ++k) {
      if (dy[k] == 0.0) continue;
      grads->b2[k] += dy[k];
      double* row = &grads->w2[static_cast<size_t>(k) * last_dim];
      for (int j = 0; j < last_dim; ++j) row[j] += dy[k] * last[j];
    }
    if (hidden > 0) {
      for (int j = 0; j < hidden; ++j) {
        double dh = 0.0;
        for (int k = 0; k < out; ++k) {
          if (dy[k] == 0.0) continue;
          dh += dy[k] * w2_[static_cast<size_t>(k) * hidden + j];
        }
        if (dh == 0.0) continue;
        double dpre = dh;
        if (config_.activation == MlpActivation::kTanh) {
          dpre *= 1.0 - h[j] * h[j];
        }
        grads->b1[j] += dpre;
        double* row = &grads->w1[static_cast<size_t>(j) * in];
        for (int i = 0; i < in; ++i) row[i] += dpre * x[i];
      }
    }
  }
  return loss;
}

double MlpEstimator::FitBatch(const TrainBatch& batch, double lr) {
  EQLAB_CHECK(lr > 0.0, "learning rate must be positive");
  EQLAB_CHECK(!batch.empty(), "empty training batch");
  Gradients grads;
  double loss = LossAndGradient(batch, &grads);
  for (size_t i = 0; i < w1_.size(); ++i) w1_[i] -= lr * grads.w1[i];
  for (size_t i = 0; i < b1_.size(); ++i) b1_[i] -= lr * grads.b1[i];
  for (size_t i = 0; i < w2_.size(); ++i) w2_[i] -= lr * grads.w2[i];
  for (size_t i = 0; i < b2_.size(); ++i) b2_[i] -= lr * grads.b2[i];
  return loss;
}

std::vector<double> MlpEstimator::parameters() const {
  std::vector<double> flat;
  flat.reserve(w1_.size() + b1_.size() + w2_.size() + b2_.size());
  for (const auto* block : {&w1_, &b1_, &w2_, &b2_}) {
    flat.insert(flat.end(), block->begin(), block->end());
  }
  return flat;
}

void MlpEstimator::set_parameters(std::span<const double> values) {
  EQLAB_CHECK(values.size() ==
                  w1_.size() + b1_.size() + w2_.size() + b2_.size(),
              "parameter vector size mismatch");
  size_t offset = 0;
  for (auto* block : {&w1_, &b1_, &w2_, &b2_}) {
    std::copy(values.begin() + offset, values.begin() + offset + block->size(),
              block->begin());
    offset += block->size();
  }
}

double MlpEstimator::GradientCheck(const TrainExample& example) const {
  TrainBatch batch = {example};
  Gradients grads;
  LossAndGradient(batch, &grads);
  std::vector<double> analytic;
  for (const auto* block : {&grads.w1, &grads.b1, &grads.w2, &grads.b2}) {
    analytic.insert(analytic.end(), block->begin(), block->end());
  }

  MlpEstimator probe(*this);
  std::vector<double> params = parameters();
  const double step = 1e-5;
  double max_rel_error = 0.0;
  for (size_t i = 0; i < params.size(); ++i) {
    double saved = params[i];
    params[i] = saved + step;
    probe.set_parameters(params);
    double loss_plus = probe.LossAndGradient(batch, nullptr);
    params[i] = saved - step;
    probe.set_parameters(params);
    double loss_minus = probe.LossAndGradient(batch, nullptr);
    params[i] = saved;
    double numeric = (loss_plus - loss_minus) / (2.0 * step);
    double rel = std::abs(analytic[i] - numeric) /
                 std::max(std::abs(analytic[i]) + std::abs(numeric), 1e-6);
    max_rel_error = std::max(max_rel_error, rel);
  }
  return max_rel_error;
}

void MlpEstimator::Save(std::ostream& os) const {
  os << "estimator-v1 mlp " << config_.input_dim << ' ' << config_.hidden_dim
     << ' ' << config_.output_dim << ' ' << ActivationName(config_.activation)
     << ' ' << LossName(config_.loss) << '\n';
  const int in = config_.input_dim;
  const int hidden = config_.hidden_dim;
  const int out = config_.output_dim;
  if (hidden > 0) {
    for (int j = 0; j < hidden; ++j) {
      WriteRow(os, std::span<const double>(&w1_[static_cast<size_t>(j) * in],
                                           in));
    }
    WriteRow(os, b1_);
    for (int k = 0; k < out; ++k) {
      WriteRow(os, std::span<const double>(
                       &w2_[static_cast<size_t>(k) * hidden], hidden));
    }
  } else {
    for (int k = 0; k < out; ++k) {
      WriteRow(os, std::span<const double>(&w2_[static_cast<size_t>(k) * in],
                                           in));
    }
  }
  WriteRow(os, b2_);
}

std::unique_ptr<Estimator> MlpEstimator::Clone() const {
  return std::make_unique<MlpEstimator>(*this);
}

// ---------------------------------------------------------------------------

std::unique_ptr<Estimator> LoadEstimator(std::istream& is) {
  std::string header;
  if (!std::getline(is, header)) FatalError("empty estimator file");
  std::istringstream hs(header);
  std::string magic, kind;
  hs >> magic >> kind;
  EQLAB_CHECK(magic == "estimator-v1", "bad estimator header: " + header);

  if (kind == "tabular") {
    int output_dim = 0;
    size_t rows = 0;
    hs >> output_dim >> rows;
    EQLAB_CHECK(output_dim > 0, "bad tabular estimator header: " + header);
    auto estimator = std::make_unique<TabularEstimator>(output_dim);
    TrainBatch batch;
    for (size_t r = 0; r < rows; ++r) {
      std::string line;
      if (!std::getline(is, line)) FatalError("truncated estimator file");
      size_t tab = line.find('\t');
      EQLAB_CHECK(tab != std::string::npos, "bad tabular estimator row");
      TrainExample example;
      example.key = line.substr(0, tab);
      std::istringstream vs(line.substr(tab + 1));
      std::string token;
      while (vs >> token) {
        example.target.push_back(ParseDouble(token, "tabular value"));
      }
      EQLAB_CHECK(static_cast<int>(example.target.size()) == output_dim,
                  "bad tabular estimator row length");
      batch.push_back(std::move(example));
    }
    // Learning rate 1 writes each row verbatim.
    if (!batch.empty()) estimator->FitBatch(batch, 1.0);
    return estimator;
  }

  if (kind == "mlp") {
    MlpEstimator::Config config;
    std::string activation, loss;
    hs >> config.input_dim >> config.hidden_dim >> config.output_dim >>
        activation >> loss;
    config.activation = activation == "tanh" ? MlpActivation::kTanh
                                             : MlpActivation::kIdentity;
    config.loss =
        loss == "se" ? MlpLoss::kSquaredError : MlpLoss::kSoftmaxCrossEntropy;
    EQLAB_CHECK((activation == "tanh" || activation == "identity") &&
                    (loss == "se" || loss == "ce"),
                "bad mlp estimator header: " + header);
    auto estimator = std::make_unique<MlpEstimator>(config);
    std::vector<double> params;
    const int in = config.input_dim;
    const int hidden = config.hidden_dim;
    const int out = config.output_dim;
    auto append = [&params, &is](size_t n, const std::string& what) {
      std::vector<double> row = ReadRow(is, n, what);
      params.insert(params.end(), row.begin(), row.end());
    };
    if (hidden > 0) {
      for (int j = 0; j < hidden; ++j) append(in, "mlp hidden weights");
      append(hidden, "mlp hidden bias");
      for (int k = 0; k < out; ++k) append(hidden, "mlp output weights");
    } else {
      for (int k = 0; k < out; ++k) append(in, "mlp output weights");
    }
    append(out, "mlp output bias");
    estimator->set_parameters(params);
    return estimator;
  }

  FatalError("unknown estimator kind '" + kind + "'");
}

}  // namespace eqlab
