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

#ifndef BPFREE_QCORE_STATEVECTOR_HPP
#define BPFREE_QCORE_STATEVECTOR_HPP

#include <span>
#include <utility>
#include <vector>

#include "bpfree/qcore/common.hpp"
#include "bpfree/qcore/pauli.hpp"

namespace bpfree {

/// Normalized pure state of n qubits. Qubit j is bit j of the amplitude index.
class StateVector {
  public:
    /// |0...0>.
    static StateVector zero(std::size_t n_qubits);
    static StateVector basis(std::size_t n_qubits, std::size_t index);
    /// Takes ownership of amplitudes; throws unless the norm is 1 within 1e-10.
    static StateVector from_amplitudes(std::size_t n_qubits, std::vector<cplx> amps);
    /// Rescales the amplitudes to unit norm; throws on a zero vector.
    static StateVector normalized(std::size_t n_qubits, std::vector<cplx> amps);

    std::size_t n_qubits() const { return n_qubits_; }
    std::size_t dim() const { return amps_.size(); }
    std::span<const cplx> amplitudes() const { return amps_; }
    cplx operator[](std::size_t i) const { return amps_[i]; }
    double norm() const;

    /// In-place access for gate kernels; callers keep the state normalized.
    std::span<cplx> mutable_amplitudes() { return amps_; }
    std::vector<cplx> release() && { return std::move(amps_); }

    friend bool operator==(const StateVector&, const StateVector&) = default;

  private:
    StateVector(std::size_t n, std::vector<cplx> amps) : n_qubits_(n), amps_(std::move(amps)) {}

    std::size_t n_qubits_;
    std::vector<cplx> amps_;
};

/// Diagonal +-1 action of CZ on every listed edge, precomputed per basis state.
class CzLayer {
  public:
    CzLayer(std::size_t n_qubits, std::span<const std::pair<std::size_t, std::size_t>> edges);

    std::size_t n_qubits() const { return n_qubits_; }
    /// True when basis state `index` picks up a -1.
    bool negates(std::size_t index) const { return odd_[index] != 0; }
    void apply(std::span<cplx> amps) const;

  private:
    std::size_t n_qubits_;
    std::vector<std::uint8_t> odd_;
};

// Raw kernels on an amplitude buffer of length 2^n. They do not require unit
// norm, so the adjoint sweep can run them on costate vectors.
namespace kernels {

void apply_pauli(std::span<cplx> amps, const PauliString& p);
/// exp(-i angle P / 2) = cos(angle/2) I - i sin(angle/2) P for a Hermitian P.
void apply_rotation(std::span<cplx> amps, const PauliString& generator, double angle);
void apply_rx(std::span<cplx> amps, std::size_t qubit, double angle);
void apply_rz(std::span<cplx> amps, std::size_t qubit, double angle);
void apply_cz(std::span<cplx> amps, std::size_t j, std::size_t k);

/// <a|b>, summed in index order.
cplx inner(std::span<const cplx> a, std::span<const cplx> b);
/// <bra| P |ket>.
cplx pauli_matrix_element(std::span<const cplx> bra, const PauliString& p,
                          std::span<const cplx> ket);
/// <bra| X_q |ket> and <bra| Z_q |ket>.
cplx x_matrix_element(std::span<const cplx> bra, std::size_t qubit, std::span<const cplx> ket);
cplx z_matrix_element(std::span<const cplx> bra, std::size_t qubit, std::span<const cplx> ket);
/// out = O in. `out` must not alias `in`.
void apply_observable(const Observable& obs, std::span<const cplx> in, std::span<cplx> out);

} // namespace kernels

StateVector apply_pauli(StateVector state, const PauliString& p);
/// Throws std::invalid_argument unless the generator phase is +1.
StateVector apply_rotation(StateVector state, const PauliString& generator, double angle);
StateVector apply_cz(StateVector state, std::size_t j, std::size_t k);

/// Sum_k c_k <psi|P_k|psi>, terms in list order and amplitudes in index order.
/// Throws NumericalError if the imaginary residue exceeds 1e-8 (scaled by the
/// coefficient l1 norm when that is above 1).
double expectation(const StateVector& state, const Observable& obs);

} // namespace bpfree

#endif // BPFREE_QCORE_STATEVECTOR_HPP
