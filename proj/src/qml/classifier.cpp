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


#include "bpfree/qml/classifier.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>
#include <tuple>

#include "bpfree/grad/gradient.hpp"
#include "bpfree/init/random.hpp"
#include "bpfree/qcore/parallel.hpp"
#include "bpfree/vqe/adam.hpp"

namespace bpfree {

namespace {

void check_sign(int s) {
    if (s != 1 && s != -1) {
        throw std::invalid_argument("readout sign must be +1 or -1");
    }
}

void check_circuit(const HeaCircuit& circuit) {
    if (circuit.initial_state() != InitialState::Zero) {
        throw std::invalid_argument("classifier circuits start from |0^N>");
    }
}

StateVector encoded(const HeaCircuit& circuit, std::span<const double> x) {
    const EncodingLayer enc(std::vector<double>(x.begin(), x.end()));
    return apply_encoding(StateVector::zero(circuit.n_qubits()), enc, circuit.lattice());
}

} // namespace

double readout_y0(const HeaCircuit& circuit, const ParamMatrix& params,
                  std::span<const double> x) {
    check_circuit(circuit);
    const auto obs = make_observable(ObservableKind::LocalY1, circuit.n_qubits());
    return expectation(run(circuit, params, encoded(circuit, x)), obs);
}

double predict_prob(const HeaCircuit& circuit, const ParamMatrix& params,
                    std::span<const double> x, int readout_sign) {
    check_sign(readout_sign);
    const double y = readout_y0(circuit, params, x);
    return std::clamp(0.5 * (1.0 + readout_sign * y), 0.0, 1.0);
}

int predict_label(const HeaCircuit& circuit, const ParamMatrix& params,
                  std::span<const double> x, int readout_sign) {
    return predict_prob(circuit, params, x, readout_sign) >= 0.5 ? 1 : -1;
}

double accuracy(const HeaCircuit& circuit, const ParamMatrix& params, const Dataset& data,
                int readout_sign, std::size_t threads) {
    std::vector<int> hit(data.size(), 0);
    parallel_for(data.size(), threads, [&](std::size_t i) {
        const auto& p = data[i];
        hit[i] = predict_label(circuit, params, p.x, readout_sign) == p.label ? 1 : 0;
    });
    std::size_t correct = 0;
    for (int h : hit) {
        correct += static_cast<std::size_t>(h);
    }
    return data.size() == 0 ? 0.0
                            : static_cast<double>(correct) / static_cast<double>(data.size());
}

std::pair<double, GradResult> bce_loss(std::span<const DataPoint> batch,
                                       const HeaCircuit& circuit, const ParamMatrix& params,
                                       int readout_sign, std::size_t threads) {
    if (batch.empty()) {
        throw std::invalid_argument("bce_loss: empty batch");
    }
    check_sign(readout_sign);
    check_circuit(circuit);
    circuit.check_params(params);
    const auto obs = make_observable(ObservableKind::LocalY1, circuit.n_qubits());
    const double inv_b = 1.0 / static_cast<double>(batch.size());

    std::vector<double> losses(batch.size());
    std::vector<GradResult> grads(batch.size());
    parallel_for(batch.size(), threads, [&](std::size_t k) {
        const auto& pt = batch[k];
        if (pt.label != 1 && pt.label != -1) {
            throw std::invalid_argument("bce_loss: label must be +1 or -1");
        }
        auto [y0, dy] = value_and_grad_adjoint(circuit, params, encoded(circuit, pt.x), obs);
        const double ys = static_cast<double>(pt.label * readout_sign);
        const double p_correct = 0.5 * (1.0 + ys * y0);
        double weight = 0.0;
        if (p_correct > kProbClamp) {
            losses[k] = -std::log(std::min(p_correct, 1.0));
            weight = -ys / (2.0 * p_correct) * inv_b;
        } else {
            losses[k] = -std::log(kProbClamp);
        }
        for (double& g : dy.values()) {
            g *= weight;
        }
        grads[k] = std::move(dy);
    });

    double loss = 0.0;
    GradResult total(params.rows(), params.cols());
    for (std::size_t k = 0; k < batch.size(); ++k) {
        loss += losses[k];
        const auto src = grads[k].values();
        auto dst = total.values();
        for (std::size_t i = 0; i < dst.size(); ++i) {
            dst[i] += src[i];
        }
    }
    return {loss * inv_b, std::move(total)};
}

void TrainConfig::validate() const {
    if (n_qubits < 2) {
        throw std::invalid_argument("TrainConfig: n_qubits is required (>= 2)");
    }
    if (depth == 0) {
        throw std::invalid_argument("TrainConfig: depth must be positive");
    }
    if (batch == 0) {
        throw std::invalid_argument("TrainConfig: batch must be positive");
    }
    if (!(lr > 0.0) || !std::isfinite(lr)) {
        throw std::invalid_argument("TrainConfig: lr must be positive");
    }
    check_sign(readout_sign);
}

std::vector<std::size_t> epoch_order(std::size_t n_points, std::uint64_t shuffle_seed,
                                     std::size_t epoch) {
    std::vector<std::size_t> order(n_points);
    for (std::size_t i = 0; i < n_points; ++i) {
        order[i] = i;
    }
    Rng rng(sub_seed(shuffle_seed, epoch));
    for (std::size_t i = n_points; i > 1; --i) {
        const std::size_t j = rng.below(i);
        std::swap(order[i - 1], order[j]);
    }
    return order;
}

LearningRecord train(const Dataset& train_set, const Dataset& test_set, const TrainConfig& config,
                     const InitScheme& scheme) {
    config.validate();
    if (train_set.dim() != test_set.dim()) {
        throw std::invalid_argument("train: training and test dimensions differ");
    }
    if (train_set.dim() > config.n_qubits) {
        throw std::invalid_argument("train: data dimension " + std::to_string(train_set.dim()) +
                                    " exceeds n_qubits " + std::to_string(config.n_qubits));
    }
    if (config.epochs > 0 && train_set.size() < config.batch) {
        throw std::invalid_argument("train: training set smaller than one batch");
    }
    const HeaCircuit circuit(chain_1d(config.n_qubits, config.periodic), config.depth);
    LearningRecord rec;
    ParamMatrix params = sample(scheme, circuit, config.init_seed);
    AdamState adam = AdamState::init(params.size(), config.lr);

    rec.epochs.push_back({0, accuracy(circuit, params, test_set, config.readout_sign,
                                      config.threads),
                          std::numeric_limits<double>::quiet_NaN()});
    const std::size_t steps_per_epoch = train_set.size() / config.batch;
    std::vector<DataPoint> batch(config.batch);
    for (std::size_t e = 1; e <= config.epochs; ++e) {
        const auto order = epoch_order(train_set.size(), config.shuffle_seed, e);
        double sum = 0.0;
        for (std::size_t s = 0; s < steps_per_epoch; ++s) {
            for (std::size_t k = 0; k < config.batch; ++k) {
                batch[k] = train_set[order[s * config.batch + k]];
            }
            auto [loss, grad] =
                bce_loss(batch, circuit, params, config.readout_sign, config.threads);
            rec.steps.push_back({e, s, loss});
            sum += loss;
            std::tie(adam, params) = adam_step(std::move(adam), std::move(params), grad);
        }
        rec.epochs.push_back(
            {e, accuracy(circuit, params, test_set, config.readout_sign, config.threads),
             sum / static_cast<double>(steps_per_epoch)});
    }
    rec.final_params = std::move(params);
    return rec;
}

std::pair<Dataset, Dataset> split(const Dataset& data, std::size_t n_first) {
    if (n_first == 0 || n_first >= data.size()) {
        throw std::invalid_argument("split: need 0 < n_first < size");
    }
    const auto& pts = data.points();
    std::vector<DataPoint> a(pts.begin(), pts.begin() + static_cast<std::ptrdiff_t>(n_first));
    std::vector<DataPoint> b(pts.begin() + static_cast<std::ptrdiff_t>(n_first), pts.end());
    return {Dataset(data.name() + "[train]", data.dim(), std::move(a)),
            Dataset(data.name() + "[test]", data.dim(), std::move(b))};
}

} // namespace bpfree
