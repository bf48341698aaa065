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

#ifndef BPFREE_QCORE_COMMON_HPP
#define BPFREE_QCORE_COMMON_HPP

#include <complex>
#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace bpfree {

using cplx = std::complex<double>;

inline constexpr cplx kI{0.0, 1.0};

// Largest register the statevector kernels accept. 2^30 amplitudes is 16 GiB.
inline constexpr std::size_t kMaxStateQubits = 30;

/// Raised when a computation leaves its numerically valid regime (non-real
/// expectation, solver non-convergence, broken unitarity).
class NumericalError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

inline std::size_t dim_of(std::size_t n_qubits) { return std::size_t{1} << n_qubits; }

} // namespace bpfree

#endif // BPFREE_QCORE_COMMON_HPP
