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


#ifndef BPFREE_TRANSFORM_BOUNDS_HPP
#define BPFREE_TRANSFORM_BOUNDS_HPP

#include "json.hpp"

#include "bpfree/hea/circuit.hpp"
#include "bpfree/transform/generator_circuit.hpp"

namespace bpfree {

/// Speed-limit and truncated Floquet-Magnus quantities for one gradient slot.
///
/// Each generator layer l is written as exp(-i H_l theta_max_l) with
/// theta_max_l = max_j |theta_{l,j}| and H_l = sum_j G_j theta_{l,j} / theta_max_l
/// (H_l = 0 when every angle of the layer vanishes). U_A collects the layers of
/// blocks >= split_block, U_B the earlier ones; H_A and H_B are the
/// angle-weighted averages sum_l theta_max_l H_l / t.
struct BoundReport {
    double g = 0.0;        ///< |Tr[rho' [G, O]]|, rho' including any residual CZ layer.
    double K = 0.0;        ///< max{||H_B||, ||[H_A, O]||}.
    double Q = 0.0;        ///< max{||[G, O]||, ||G||}.
    double t_c = 0.0;      ///< g / (4 K Q); +inf when K Q = 0.
    double H_max = 0.0;    ///< max_l ||H_l|| over every layer.
    double J = 0.0;        ///< max_l max_site sum of |theta_{l,j}| / theta_max_l over generators on the site.
    std::size_t k = 0;     ///< 1 + max lattice degree.
    long long r0 = 0;      ///< floor(1 / (32 k J t_A)); kNoTruncationLimit when J t_A = 0.
    double fm_error = 0.0; ///< Truncation error at r = 1; meaningful when r0 >= 1.
    double t_A = 0.0;
    double t_B = 0.0;
    std::size_t split_block = 0;
    Slot slot{0, 0};
};

inline constexpr long long kNoTruncationLimit = (1LL << 62);

/// g / (4 K Q). Throws std::invalid_argument unless K, Q > 0 and g >= 0.
double critical_time(double g, double K, double Q);

/// Requires N <= cap, split_block <= slot.block < depth.
BoundReport norms_for_bound(const HeaCircuit& circuit, const ParamMatrix& params,
                            std::size_t split_block, const Observable& obs, const Slot& slot,
                            std::size_t cap = kDefaultDenseCap);

/// Flat object; non-finite values are written as null.
nlohmann::json to_json(const BoundReport& report);

} // namespace bpfree

#endif // BPFREE_TRANSFORM_BOUNDS_HPP
