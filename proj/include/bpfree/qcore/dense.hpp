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

#ifndef BPFREE_QCORE_DENSE_HPP
#define BPFREE_QCORE_DENSE_HPP

#include <functional>
#include <span>

#include <Eigen/Dense>

#include "bpfree/qcore/pauli.hpp"

namespace bpfree {

inline constexpr std::size_t kDefaultDenseCap = 14;

Eigen::MatrixXcd dense_matrix(const PauliString& p, std::size_t cap = kDefaultDenseCap);
Eigen::MatrixXcd dense_matrix(const Observable& obs, std::size_t cap = kDefaultDenseCap);

/// Matrix of a linear map given by its in-place action on amplitude buffers.
/// Column k is the image of basis state k.
Eigen::MatrixXcd dense_unitary(std::size_t n_qubits,
                               const std::function<void(std::span<cplx>)>& apply,
                               std::size_t cap = kDefaultDenseCap);

/// Largest |eigenvalue| of a Hermitian matrix, i.e. its operator norm.
double hermitian_norm(const Eigen::MatrixXcd& h);

/// Phase-aligned distance min_phi ||a - e^{i phi} b||_F.
double phase_aligned_distance(const Eigen::MatrixXcd& a, const Eigen::MatrixXcd& b);

} // namespace bpfree

#endif // BPFREE_QCORE_DENSE_HPP
