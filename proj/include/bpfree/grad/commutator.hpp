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


#ifndef BPFREE_GRAD_COMMUTATOR_HPP
#define BPFREE_GRAD_COMMUTATOR_HPP

#include <span>

#include "bpfree/grad/gradient.hpp"
#include "bpfree/hea/lattice.hpp"

namespace bpfree {

/// Closed-form Pauli expansion of (i/2)[X_0, V^dagger O V], with V the final
/// block at angles `row` (length 2N, the first N entries equal to a shared
/// theta). The result is
///   -cos(row[N]) (cos theta Z_0 + sin theta Y_0) prod_{j in T} (cos theta Z_j + sin theta Y_j)
/// where T is the neighbourhood of qubit 0 for the local observable and its
/// complement in {1..N-1} for the global one. Its expectation in the state
/// entering the final block equals dC/d(theta of RX on qubit 0, final block).
/// Terms with a zero coefficient are dropped.
Observable commutator_oracle(const LatticeGraph& lattice, std::span<const double> row,
                             ObservableKind kind);

} // namespace bpfree

#endif // BPFREE_GRAD_COMMUTATOR_HPP
