// Copyright 2026 The bpfree Authors
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


#ifndef BPFREE_QML_CLASSIFIER_HPP
#define BPFREE_QML_CLASSIFIER_HPP

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "bpfree/hea/circuit.hpp"
#include "bpfree/init/init.hpp"
#include "bpfree/qml/dataset.hpp"

namespace bpfree {

/// Lower and upper clamp applied to probabilities before the logarithm.
inline constexpr double kProbClamp = 1e-12;

/// Encodes `x` on |0^N>, runs the circuit and returns <Y_0>. The circuit must
/// be a chain with the zero preset and N >= dim(x).
double readout_y0(const HeaCircuit& circuit, const ParamMatrix& params,
                  std::span<const double> x);

/// p(+1) = (1 + s <Y_0>) / 2 clipped to [0, 1]; s = readout_sign (+1 or -1).
double predict_prob(const HeaCircuit& circuit, const ParamMatrix& params,
                    std::span<const double> x, int readout_sign = 1);

/// +1 iff p(+1) >= 1/2.
int predict_label(const HeaCircuit& circuit, const ParamMatrix& params,
                  std::span<const double> x, int readout_sign = 1);

double accuracy(const HeaCircuit& circuit, const ParamMatrix& params, const Dataset& data,
                int readout_sign = 1, std::size_t threads = 1);

/// Mean binary cross entropy -(1/B) sum ln max(p_correct, 1e-12) with
/// p_correct = (1 + y s <Y_0>) / 2, and its exact gradient.
std::pair<double, GradResult> bce_loss(std::span<const DataPoint> batch,
                                       const HeaCircuit& circuit, const ParamMatrix& params,
                                       int readout_sign = 1, std::size_t threads = 1);

struct TrainConfig {
    std::size_t n_qubits = 0;
    std::size_t depth = 16;
    bool periodic = false;
    std::size_t batch = 25;
    std::size_t epochs = 10;
    double lr = 0.01;
    /// Seeds the initial parameters.
    std::uint64_t init_seed = 0;
    /// Seeds the per-epoch shuffles.
    std::uint64_t shuffle_seed = 0;
    int readout_sign = 1;
    std::size_t threads = 1;

    /// Throws std::invalid_argument on an unusable configuration.
    void validate() const;
};

struct StepLoss {
    std::size_t epoch;
    std::size_t step;
    double loss;
};

struct EpochAccuracy {
    std::size_t epoch;
    double test_accuracy;
    /// Mean minibatch loss over the epoch; NaN for epoch 0.
    double mean_train_loss;
};

struct LearningRecord {
    std::vector<StepLoss> steps;
    std::vector<EpochAccuracy> epochs;
    ParamMatrix final_params;
};

/// Training-set order for epoch e >= 1: Fisher-Yates driven by
/// Rng(sub_seed(shuffle_seed, e)).
std::vector<std::size_t> epoch_order(std::size_t n_points, std::uint64_t shuffle_seed,
                                     std::size_t epoch);

/// Minibatch Adam on the BCE loss. Each epoch uses floor(n_train / B) full
/// batches; leftover points are skipped for that epoch. Epoch 0 is the test
/// accuracy of the initial parameters.
LearningRecord train(const Dataset& train_set, const Dataset& test_set, const TrainConfig& config,
                     const InitScheme& scheme);

/// Splits into the first `n_first` points and the rest.
std::pair<Dataset, Dataset> split(const Dataset& data, std::size_t n_first);

} // namespace bpfree

#endif // BPFREE_QML_CLASSIFIER_HPP
