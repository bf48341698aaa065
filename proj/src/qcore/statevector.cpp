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

#include "bpfree/qcore/statevector.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <stdexcept>
#include <string>

namespace bpfree {

namespace {

void require_register(std::size_t n) {
    if (n == 0 || n > kMaxStateQubits) {
        throw std::invalid_argument("StateVector: n_qubits must be in [1, " +
                                    std::to_string(kMaxStateQubits) + "]");
    }
}

void require_match(std::size_t dim, const PauliString& p) {
    if (dim_of(p.n_qubits()) != dim) {
        throw std::invalid_argument("qubit-count mismatch between state and Pauli string");
    }
}

void require_qubit(std::size_t dim, std::size_t q) {
    if (q >= 64 || (std::size_t{1} << q) >= dim) {
        throw std::out_of_range("qubit index out of range");
    }
}

// P|s> = factor(s) |s ^ x_mask>, with factor(s) = phase * i^{#Y} * (-1)^{|s & z_mask|}.
struct PauliAction {
    std::uint64_t x;
    std::uint64_t z;
    cplx base;

    explicit PauliAction(const PauliString& p)
        : x(p.x_mask()), z(p.z_mask()),
          base(phase_value(p.phase() * static_cast<Phase>(p.y_count() & 3))) {}

    cplx factor(std::size_t s) const {
        return (std::popcount(static_cast<std::uint64_t>(s) & z) & 1) ? -base : base;
    }
};

} // namespace

StateVector StateVector::zero(std::size_t n_qubits) { return basis(n_qubits, 0); }

StateVector StateVector::basis(std::size_t n_qubits, std::size_t index) {
    require_register(n_qubits);
    std::vector<cplx> amps(dim_of(n_qubits));
    if (index >= amps.size()) {
        throw std::out_of_range("StateVector::basis: index out of range");
    }
    amps[index] = 1.0;
    return StateVector(n_qubits, std::move(amps));
}

StateVector StateVector::from_amplitudes(std::size_t n_qubits, std::vector<cplx> amps) {
    require_register(n_qubits);
    if (amps.size() != dim_of(n_qubits)) {
        throw std::invalid_argument("StateVector: amplitude count must be 2^n_qubits");
    }
    StateVector s(n_qubits, std::move(amps));
    if (std::abs(s.norm() - 1.0) > 1e-10) {
        throw std::invalid_argument("StateVector: amplitudes are not normalized");
    }
    return s;
}

StateVector StateVector::normalized(std::size_t n_qubits, std::vector<cplx> amps) {
    require_register(n_qubits);
    if (amps.size() != dim_of(n_qubits)) {
        throw std::invalid_argument("StateVector: amplitude count must be 2^n_qubits");
    }
    StateVector s(n_qubits, std::move(amps));
    const double nrm = s.norm();
    if (!(nrm > 0.0) || !std::isfinite(nrm)) {
        throw std::invalid_argument("StateVector: cannot normalize a zero vector");
    }
    for (auto& a : s.amps_) {
        a /= nrm;
    }
    return s;
}

double StateVector::norm() const {
    double s = 0.0;
    for (const auto& a : amps_) {
        s += std::norm(a);
    }
    return std::sqrt(s);
}

CzLayer::CzLayer(std::size_t n_qubits,
                 std::span<const std::pair<std::size_t, std::size_t>> edges)
    : n_qubits_(n_qubits), odd_(dim_of(n_qubits), 0) {
    require_register(n_qubits);
    for (const auto& [j, k] : edges) {
        if (j >= n_qubits || k >= n_qubits || j == k) {
            throw std::invalid_argument("CzLayer: invalid edge");
        }
        const std::size_t mask = (std::size_t{1} << j) | (std::size_t{1} << k);
        for (std::size_t s = 0; s < odd_.size(); ++s) {
            if ((s & mask) == mask) {
                odd_[s] ^= 1;
            }
        }
    }
}

void CzLayer::apply(std::span<cplx> amps) const {
    if (amps.size() != odd_.size()) {
        throw std::invalid_argument("CzLayer::apply: qubit-count mismatch");
    }
    for (std::size_t s = 0; s < amps.size(); ++s) {
        if (odd_[s]) {
            amps[s] = -amps[s];
        }
    }
}

namespace kernels {

void apply_pauli(std::span<cplx> amps, const PauliString& p) {
    require_match(amps.size(), p);
    const PauliAction act(p);
    if (act.x == 0) {
        for (std::size_t s = 0; s < amps.size(); ++s) {
            amps[s] *= act.factor(s);
        }
        return;
    }
    const std::uint64_t high = std::uint64_t{1} << (63 - std::countl_zero(act.x));
    for (std::size_t s = 0; s < amps.size(); ++s) {
        if (s & high) {
            continue;
        }
        const std::size_t t = s ^ act.x;
        const cplx as = amps[s];
        const cplx at = amps[t];
        amps[t] = act.factor(s) * as;
        amps[s] = act.factor(t) * at;
    }
}

void apply_rotation(std::span<cplx> amps, const PauliString& generator, double angle) {
    require_match(amps.size(), generator);
    if (!generator.hermitian()) {
        throw std::invalid_argument("apply_rotation: generator must be Hermitian");
    }
    if (angle == 0.0) {
        return;
    }
    const double c = std::cos(angle / 2.0);
    const double sn = std::sin(angle / 2.0);
    const PauliAction act(generator);
    const cplx mis{0.0, -sn};
    if (act.x == 0) {
        for (std::size_t s = 0; s < amps.size(); ++s) {
            amps[s] *= c + mis * act.factor(s);
        }
        return;
    }
    const std::uint64_t high = std::uint64_t{1} << (63 - std::countl_zero(act.x));
    for (std::size_t s = 0; s < amps.size(); ++s) {
        if (s & high) {
            continue;
        }
        const std::size_t t = s ^ act.x;
        const cplx as = amps[s];
        const cplx at = amps[t];
        amps[s] = c * as + mis * act.factor(t) * at;
        amps[t] = c * at + mis * act.factor(s) * as;
    }
}

void apply_rx(std::span<cplx> amps, std::size_t qubit, double angle) {
    require_qubit(amps.size(), qubit);
    if (angle == 0.0) {
        return;
    }
    const double c = std::cos(angle / 2.0);
    const double sn = std::sin(angle / 2.0);
    const std::size_t stride = std::size_t{1} << qubit;
    for (std::size_t base = 0; base < amps.size(); base += 2 * stride) {
        for (std::size_t s = base; s < base + stride; ++s) {
            const cplx a0 = amps[s];
            const cplx a1 = amps[s + stride];
            // -i sin * a = (sin * a.imag, -sin * a.real)
            amps[s] = {c * a0.real() + sn * a1.imag(), c * a0.imag() - sn * a1.real()};
            amps[s + stride] = {c * a1.real() + sn * a0.imag(), c * a1.imag() - sn * a0.real()};
        }
    }
}

void apply_rz(std::span<cplx> amps, std::size_t qubit, double angle) {
    require_qubit(amps.size(), qubit);
    if (angle == 0.0) {
        return;
    }
    const cplx lo = std::polar(1.0, -angle / 2.0);
    const cplx hi = std::conj(lo);
    const std::size_t stride = std::size_t{1} << qubit;
    for (std::size_t base = 0; base < amps.size(); base += 2 * stride) {
        for (std::size_t s = base; s < base + stride; ++s) {
            amps[s] *= lo;
            amps[s + stride] *= hi;
        }
    }
}

void apply_cz(std::span<cplx> amps, std::size_t j, std::size_t k) {
    require_qubit(amps.size(), j);
    require_qubit(amps.size(), k);
    if (j == k) {
        throw std::invalid_argument("apply_cz: control and target coincide");
    }
    const std::size_t mask = (std::size_t{1} << j) | (std::size_t{1} << k);
    for (std::size_t s = mask; s < amps.size(); s = (s + 1) | mask) {
        amps[s] = -amps[s];
    }
}

cplx inner(std::span<const cplx> a, std::span<const cplx> b) {
    if (a.size() != b.size()) {
        throw std::invalid_argument("inner: dimension mismatch");
    }
    cplx acc = 0.0;
    for (std::size_t s = 0; s < a.size(); ++s) {
        acc += std::conj(a[s]) * b[s];
    }
    return acc;
}

cplx pauli_matrix_element(std::span<const cplx> bra, const PauliString& p,
                          std::span<const cplx> ket) {
    require_match(ket.size(), p);
    if (bra.size() != ket.size()) {
        throw std::invalid_argument("pauli_matrix_element: dimension mismatch");
    }
    const PauliAction act(p);
    cplx acc = 0.0;
    for (std::size_t s = 0; s < ket.size(); ++s) {
        acc += std::conj(bra[s ^ act.x]) * act.factor(s) * ket[s];
    }
    return acc;
}

cplx x_matrix_element(std::span<const cplx> bra, std::size_t qubit, std::span<const cplx> ket) {
    require_qubit(ket.size(), qubit);
    const std::size_t bit = std::size_t{1} << qubit;
    cplx acc = 0.0;
    for (std::size_t s = 0; s < ket.size(); ++s) {
        acc += std::conj(bra[s ^ bit]) * ket[s];
    }
    return acc;
}

cplx z_matrix_element(std::span<const cplx> bra, std::size_t qubit, std::span<const cplx> ket) {
    require_qubit(ket.size(), qubit);
    const std::size_t bit = std::size_t{1} << qubit;
    cplx acc = 0.0;
    for (std::size_t s = 0; s < ket.size(); ++s) {
        const cplx v = std::conj(bra[s]) * ket[s];
        acc += (s & bit) ? -v : v;
    }
    return acc;
}

void apply_observable(const Observable& obs, std::span<const cplx> in, std::span<cplx> out) {
    if (dim_of(obs.n_qubits()) != in.size() || in.size() != out.size()) {
        throw std::invalid_argument("apply_observable: qubit-count mismatch");
    }
    std::fill(out.begin(), out.end(), cplx{0.0});
    for (const auto& term : obs.terms()) {
        const PauliAction act(term.pauli);
        const cplx base = term.coeff * act.base;
        for (std::size_t s = 0; s < in.size(); ++s) {
            const bool odd = std::popcount(static_cast<std::uint64_t>(s) & act.z) & 1;
            out[s ^ act.x] += (odd ? -base : base) * in[s];
        }
    }
}

} // namespace kernels

StateVector apply_pauli(StateVector state, const PauliString& p) {
    kernels::apply_pauli(state.mutable_amplitudes(), p);
    return state;
}

StateVector apply_rotation(StateVector state, const PauliString& generator, double angle) {
    if (generator.phase() != Phase::PlusOne) {
        throw std::invalid_argument("apply_rotation: generator phase must be +1");
    }
    kernels::apply_rotation(state.mutable_amplitudes(), generator, angle);
    return state;
}

StateVector apply_cz(StateVector state, std::size_t j, std::size_t k) {
    kernels::apply_cz(state.mutable_amplitudes(), j, k);
    return state;
}

double expectation(const StateVector& state, const Observable& obs) {
    if (obs.n_qubits() != state.n_qubits()) {
        throw std::invalid_argument("expectation: qubit-count mismatch");
    }
    const auto amps = state.amplitudes();
    cplx acc = 0.0;
    for (const auto& term : obs.terms()) {
        acc += term.coeff * kernels::pauli_matrix_element(amps, term.pauli, amps);
    }
    const double scale = std::max(1.0, obs.coefficient_l1());
    if (std::abs(acc.imag()) > 1e-8 * scale) {
        throw NumericalError("expectation: imaginary residue " + std::to_string(acc.imag()) +
                             " indicates a non-Hermitian observable");
    }
    return acc.real();
}

} // namespace bpfree
