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


#ifndef BPFREE_MBL_FLOQUET_HPP
#define BPFREE_MBL_FLOQUET_HPP

#include <span>
#include <vector>

#include <Eigen/Dense>

#include "bpfree/hea/lattice.hpp"
#include "bpfree/qcore/dense.hpp"

namespace bpfree {

/// RX(theta/2)^{(x) n}, then RZ(phases), then CZ on every lattice edge, then
/// RX(theta/2)^{(x) n}, as a dense 2^n x 2^n matrix. The result is
/// complex-symmetric.
Eigen::MatrixXcd build_v_tilde(std::size_t n, double theta, std::span<const double> phases,
                               const LatticeGraph& lattice, std::size_t cap = kDefaultDenseCap);

/// v = sum_k exp(-i E_k) |E_k><E_k| with real orthonormal |E_k>, sorted by E.
struct FloquetSpectrum {
    std::size_t n_qubits = 0;
    std::vector<double> quasi_energies; ///< in (-pi, pi]
    Eigen::MatrixXd eigenvectors;       ///< column k is |E_k>
    double max_residual = 0.0;          ///< max_k ||B |E_k> - b_k |E_k>||
};

/// Splits v = A + iB into commuting real symmetric parts, diagonalizes A,
/// then B within each cluster of A-eigenvalues closer than degeneracy_tol.
/// Throws std::invalid_argument for a non-symmetric or non-unitary v and
/// NumericalError if the residual of B on any eigenvector exceeds 1e-6.
FloquetSpectrum floquet_eig(const Eigen::MatrixXcd& v, double degeneracy_tol = 1e-8);

/// Maps an angle to (-pi, pi].
double wrap_quasi_energy(double e);

} // namespace bpfree

#endif // BPFREE_MBL_FLOQUET_HPP
