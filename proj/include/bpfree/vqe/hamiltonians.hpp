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


#ifndef BPFREE_VQE_HAMILTONIANS_HPP
#define BPFREE_VQE_HAMILTONIANS_HPP

#include <string_view>

#include "bpfree/qcore/pauli.hpp"

namespace bpfree {

/// Open-chain Heisenberg model with a longitudinal field:
/// sum_i (X_i X_{i+1} + Y_i Y_{i+1} + Z_i Z_{i+1}) + h sum_i Z_i. Needs n >= 2.
Observable build_h1(std::size_t n, double h);

/// Cluster model: -sum_{i=1}^{n-3} Z_{i-1} X_i Z_{i+1} - X_0 Z_1 - Z_{n-2} X_{n-1}
/// - h sum_i Z_i (0-based). Needs n >= 3.
Observable build_h2(std::size_t n, double h);

enum class Model { H1, H2 };

Model parse_model(std::string_view name);
std::string_view to_string(Model model);
Observable build_model(Model model, std::size_t n, double h);

} // namespace bpfree

#endif // BPFREE_VQE_HAMILTONIANS_HPP
