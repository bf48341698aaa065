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

#include "bpfree/qcore/dense.hpp"

#include <stdexcept>
#include <string>
#include <vector>

#include "bpfree/qcore/statevector.hpp"

namespace bpfree {

namespace {

void require_cap(std::size_t n, std::size_t cap) {
    if (n > cap) {
        throw std::invalid_argument("dense_matrix: " + std::to_string(n) +
                                    " qubits exceeds the dense cap of " + std::to_string(cap));
    }
}

} // namespace

Eigen::MatrixXcd dense_matrix(const PauliString& p, std::size_t cap) {
    return dense_unitary(
        p.n_qubits(), [&](std::span<cplx> v) { kernels::apply_pauli(v, p); }, cap);
}

Eigen::MatrixXcd dense_matrix(const Observable& obs, std::size_t cap) {
    const std::size_t n = obs.n_qubits();
    require_cap(n, cap);
    const std::size_t dim = dim_of(n);
    Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(static_cast<Eigen::Index>(dim),
                                                static_cast<Eigen::Index>(dim));
    std::vector<cplx> col(dim);
    std::vector<cplx> basis(dim);
    for (std::size_t k = 0; k < dim; ++k) {
        basis[k] = 1.0;
        kernels::apply_observable(obs, basis, col);
        basis[k] = 0.0;
        for (std::size_t r = 0; r < dim; ++r) {
            m(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(k)) = col[r];
        }
    }
    return m;
}

Eigen::MatrixXcd dense_unitary(std::size_t n_qubits,
                               const std::function<void(std::span<cplx>)>& apply,
                               std::size_t cap) {
    require_cap(n_qubits, cap);
    const auto dim = static_cast<Eigen::Index>(dim_of(n_qubits));
    Eigen::MatrixXcd m = Eigen::MatrixXcd::Identity(dim, dim);
    for (Eigen::Index k = 0; k < dim; ++k) {
        apply(std::span<cplx>(m.col(k).data(), static_cast<std::size_t>(dim)));
    }
    return m;
}

double hermitian_norm(const Eigen::MatrixXcd& h) {
    if (h.size() == 0) {
        return 0.0;
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(h, Eigen::EigenvaluesOnly);
    if (es.info() != Eigen::Success) {
        throw NumericalError("hermitian_norm: eigensolver failed");
    }
    return es.eigenvalues().cwiseAbs().maxCoeff();
}

double phase_aligned_distance(const Eigen::MatrixXcd& a, const Eigen::MatrixXcd& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) {
        throw std::invalid_argument("phase_aligned_distance: shape mismatch");
    }
    // The optimal phase aligns b with a: e^{i phi} = <b, a> / |<b, a>|.
    const cplx overlap = (b.adjoint() * a).trace();
    const cplx phase = std::abs(overlap) > 0.0 ? overlap / std::abs(overlap) : cplx{1.0};
    return (a - phase * b).norm();
}

} // namespace bpfree
