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


#ifndef BPFREE_VQE_GROUND_ENERGY_HPP
#define BPFREE_VQE_GROUND_ENERGY_HPP

#include <string_view>

#include "bpfree/qcore/pauli.hpp"

namespace bpfree {

enum class GroundMethod { Auto, Lanczos, Dense };

GroundMethod parse_ground_method(std::string_view name);

struct LanczosOptions {
    std::size_t basis_size = 60;
    std::size_t max_restarts = 200;
    /// Converged once ||H x - e x|| falls below this.
    double residual_tol = 1e-7;
    std::uint64_t seed = 0x5eed;
};

/// Lowest eigenvalue by restarted Lanczos with full reorthogonalization on
/// the matrix-free Pauli-sum action. Throws NumericalError when the restart
/// cap is reached. Needs N <= 20.
double ground_energy_lanczos(const Observable& obs, const LanczosOptions& options = {});

/// Lowest eigenvalue of the dense matrix. Needs N <= 12.
double ground_energy_dense(const Observable& obs);

/// Auto uses Lanczos.
double ground_energy(const Observable& obs, GroundMethod method = GroundMethod::Auto);

} // namespace bpfree

#endif // BPFREE_VQE_GROUND_ENERGY_HPP
