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


#ifndef BPFREE_VQE_VQE_HPP
#define BPFREE_VQE_VQE_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "bpfree/init/init.hpp"
#include "bpfree/vqe/adam.hpp"
#include "bpfree/vqe/ground_energy.hpp"
#include "bpfree/vqe/hamiltonians.hpp"

namespace bpfree {

struct VqeConfig {
    Model model = Model::H2;
    std::size_t n = 4;
    std::size_t p = 1;
    double field = 1.0;
    bool periodic = false;
    InitScheme scheme = InitScheme::small();
    std::uint64_t seed = 0;
    std::size_t steps = 0;
    /// Defaults to 0.005 for H1 and 0.001 for H2.
    std::optional<double> lr;
    InitialState initial = InitialState::YPlus;
    GroundMethod gs_method = GroundMethod::Auto;
    /// Ground energy to reuse instead of recomputing.
    std::optional<double> e_gs;

    double learning_rate() const;
};

struct TracePoint {
    std::size_t step;
    double energy;
    double normalized_energy;
};

struct VqeRun {
    VqeConfig config;
    double e_gs = 0.0;
    /// steps + 1 entries: the energy before each update and after the last.
    std::vector<TracePoint> trace;
    ParamMatrix final_params;
};

/// (E - E_GS) / |E_GS|. Throws std::invalid_argument when E_GS = 0.
double normalized_energy(double energy, double e_gs);

/// Adam on exact adjoint gradients. Throws NumericalError if an energy drops
/// below E_GS by more than 1e-9 |E_GS|.
VqeRun run_vqe(const VqeConfig& config);

/// One run per seed; the ground energy is computed once and shared.
std::vector<VqeRun> run_vqe_ensemble(VqeConfig config, const std::vector<std::uint64_t>& seeds,
                                     std::size_t threads = 1);

} // namespace bpfree

#endif // BPFREE_VQE_VQE_HPP
