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


#include "bpfree/vqe/adam.hpp"

#include <cmath>
#include <stdexcept>

namespace bpfree {

AdamState AdamState::init(std::size_t n_params, double lr, double beta1, double beta2,
                          double eps) {
    if (!(lr > 0.0) || !std::isfinite(lr)) {
        throw std::invalid_argument("adam: learning rate must be positive");
    }
    if (!(beta1 >= 0.0 && beta1 < 1.0) || !(beta2 >= 0.0 && beta2 < 1.0)) {
        throw std::invalid_argument("adam: betas must lie in [0, 1)");
    }
    if (!(eps > 0.0)) {
        throw std::invalid_argument("adam: eps must be positive");
    }
    AdamState s;
    s.first_moment.assign(n_params, 0.0);
    s.second_moment.assign(n_params, 0.0);
    s.lr = lr;
    s.beta1 = beta1;
    s.beta2 = beta2;
    s.eps = eps;
    return s;
}

std::pair<AdamState, ParamMatrix> adam_step(AdamState state, ParamMatrix params,
                                            const GradResult& grad) {
    if (grad.rows() != params.rows() || grad.cols() != params.cols() ||
        state.first_moment.size() != params.size() ||
        state.second_moment.size() != params.size()) {
        throw std::invalid_argument("adam_step: shape mismatch");
    }
    if (!grad.all_finite()) {
        throw std::invalid_argument("adam_step: non-finite gradient");
    }
    ++state.step;
    const double t = static_cast<double>(state.step);
    const double c1 = 1.0 - std::pow(state.beta1, t);
    const double c2 = 1.0 - std::pow(state.beta2, t);
    auto theta = params.values();
    const auto g = grad.values();
    for (std::size_t k = 0; k < theta.size(); ++k) {
        double& m = state.first_moment[k];
        double& v = state.second_moment[k];
        m = state.beta1 * m + (1.0 - state.beta1) * g[k];
        v = state.beta2 * v + (1.0 - state.beta2) * g[k] * g[k];
        theta[k] -= state.lr * (m / c1) / (std::sqrt(v / c2) + state.eps);
    }
    return {std::move(state), std::move(params)};
}

} // namespace bpfree
