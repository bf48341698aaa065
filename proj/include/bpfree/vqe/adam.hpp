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


#ifndef BPFREE_VQE_ADAM_HPP
#define BPFREE_VQE_ADAM_HPP

#include <utility>
#include <vector>

#include "bpfree/hea/circuit.hpp"

namespace bpfree {

struct AdamState {
    std::size_t step = 0;
    std::vector<double> first_moment;
    std::vector<double> second_moment;
    double lr = 0.001;
    double beta1 = 0.9;
    double beta2 = 0.999;
    double eps = 1e-8;

    /// Zero moments sized for `n_params`. Throws unless lr > 0, 0 <= beta < 1
    /// and eps > 0.
    static AdamState init(std::size_t n_params, double lr, double beta1 = 0.9,
                          double beta2 = 0.999, double eps = 1e-8);
};

/// Bias-corrected Adam:
///   m <- b1 m + (1 - b1) g,  v <- b2 v + (1 - b2) g^2,
///   theta <- theta - lr (m / (1 - b1^t)) / (sqrt(v / (1 - b2^t)) + eps).
std::pair<AdamState, ParamMatrix> adam_step(AdamState state, ParamMatrix params,
                                            const GradResult& grad);

} // namespace bpfree

#endif // BPFREE_VQE_ADAM_HPP
