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


#ifndef BPFREE_GRAD_GRADIENT_HPP
#define BPFREE_GRAD_GRADIENT_HPP

#include <string_view>
#include <utility>

#include "bpfree/hea/circuit.hpp"
#include "bpfree/qcore/pauli.hpp"

namespace bpfree {

enum class ObservableKind { LocalY1, GlobalY1Z };

ObservableKind parse_observable_kind(std::string_view name);
std::string_view to_string(ObservableKind kind);

/// Y_0, or Y_0 Z_1 ... Z_{n-1}.
Observable make_observable(ObservableKind kind, std::size_t n);

/// C(theta) = <psi(theta)|O|psi(theta)> with psi(theta) = U(theta)|initial>.
double cost(const HeaCircuit& circuit, const ParamMatrix& params, const StateVector& initial,
            const Observable& obs);

/// Exact gradient by one forward pass and one reverse sweep over two
/// statevectors. Also returns C(theta).
std::pair<double, GradResult> value_and_grad_adjoint(const HeaCircuit& circuit,
                                                     const ParamMatrix& params,
                                                     const StateVector& initial,
                                                     const Observable& obs);

GradResult grad_adjoint(const HeaCircuit& circuit, const ParamMatrix& params,
                        const StateVector& initial, const Observable& obs);

/// [C(theta + pi/2 e_ij) - C(theta - pi/2 e_ij)] / 2 for every entry.
GradResult grad_param_shift(const HeaCircuit& circuit, const ParamMatrix& params,
                            const StateVector& initial, const Observable& obs,
                            std::size_t threads = 1);

/// [C(theta + h e_ij) - C(theta - h e_ij)] / (2h). Throws unless h > 0.
GradResult grad_fd(const HeaCircuit& circuit, const ParamMatrix& params,
                   const StateVector& initial, const Observable& obs, double step,
                   std::size_t threads = 1);

} // namespace bpfree

#endif // BPFREE_GRAD_GRADIENT_HPP
