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


#include "bpfree/vqe/vqe.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>
#include <tuple>

#include "bpfree/grad/gradient.hpp"
#include "bpfree/qcore/parallel.hpp"

namespace bpfree {

double VqeConfig::learning_rate() const {
    if (lr) {
        return *lr;
    }
    return model == Model::H1 ? 0.005 : 0.001;
}

double normalized_energy(double energy, double e_gs) {
    if (e_gs == 0.0) {
        throw std::invalid_argument("normalized energy undefined for E_GS = 0");
    }
    return (energy - e_gs) / std::abs(e_gs);
}

VqeRun run_vqe(const VqeConfig& config) {
    if (config.p == 0) {
        throw std::invalid_argument("run_vqe: p must be positive");
    }
    const Observable h = build_model(config.model, config.n, config.field);
    const HeaCircuit circuit(chain_1d(config.n, config.periodic), config.p, config.initial);

    VqeRun run;
    run.config = config;
    run.e_gs = config.e_gs ? *config.e_gs : ground_energy(h, config.gs_method);
    run.trace.reserve(config.steps + 1);

    const StateVector initial = circuit.initial();
    ParamMatrix params = sample(config.scheme, circuit, config.seed);
    AdamState adam = AdamState::init(params.size(), config.learning_rate());
    const double slack = 1e-9 * std::max(1.0, std::abs(run.e_gs));
    for (std::size_t t = 0;; ++t) {
        auto [energy, grad] = value_and_grad_adjoint(circuit, params, initial, h);
        if (energy < run.e_gs - slack) {
            throw NumericalError("run_vqe: energy " + std::to_string(energy) +
                                 " below the ground energy " + std::to_string(run.e_gs));
        }
        run.trace.push_back({t, energy, normalized_energy(energy, run.e_gs)});
        if (t == config.steps) {
            break;
        }
        std::tie(adam, params) = adam_step(std::move(adam), std::move(params), grad);
    }
    run.final_params = std::move(params);
    return run;
}

std::vector<VqeRun> run_vqe_ensemble(VqeConfig config, const std::vector<std::uint64_t>& seeds,
                                     std::size_t threads) {
    if (!config.e_gs) {
        config.e_gs = ground_energy(build_model(config.model, config.n, config.field),
                                    config.gs_method);
    }
    std::vector<VqeRun> runs(seeds.size());
    parallel_for(seeds.size(), threads, [&](std::size_t k) {
        VqeConfig c = config;
        c.seed = seeds[k];
        runs[k] = run_vqe(c);
    });
    return runs;
}

} // namespace bpfree
