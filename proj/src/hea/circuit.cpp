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

#include "bpfree/hea/circuit.hpp"

#include <bit>
#include <cmath>
#include <stdexcept>
#include <string>

namespace bpfree {

InitialState parse_initial_state(std::string_view name) {
    if (name == "zero") {
        return InitialState::Zero;
    }
    if (name == "y_plus") {
        return InitialState::YPlus;
    }
    throw std::invalid_argument("unknown initial-state preset '" + std::string(name) +
                                "' (expected zero or y_plus)");
}

std::string_view to_string(InitialState s) {
    return s == InitialState::Zero ? "zero" : "y_plus";
}

StateVector preset_state(InitialState preset, std::size_t n) {
    if (preset == InitialState::Zero) {
        return StateVector::zero(n);
    }
    const std::size_t dim = dim_of(n);
    std::vector<cplx> amps(dim);
    const double mag = std::pow(0.5, 0.5 * static_cast<double>(n));
    static constexpr cplx kPow[] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
    for (std::size_t s = 0; s < dim; ++s) {
        amps[s] = mag * kPow[std::popcount(static_cast<std::uint64_t>(s)) & 3];
    }
    return StateVector::normalized(n, std::move(amps));
}

StateVector preset_state(std::string_view name, std::size_t n) {
    return preset_state(parse_initial_state(name), n);
}

HeaCircuit::HeaCircuit(LatticeGraph lattice, std::size_t depth, InitialState initial)
    : lattice_(std::move(lattice)), depth_(depth), initial_(initial),
      cz_(std::make_shared<CzLayer>(lattice_.n_qubits(), lattice_.edges())) {}

void HeaCircuit::check_params(const ParamMatrix& params) const {
    if (params.rows() != depth_ || params.cols() != 2 * n_qubits()) {
        throw std::invalid_argument("parameter matrix is " + std::to_string(params.rows()) + "x" +
                                    std::to_string(params.cols()) + ", circuit expects " +
                                    std::to_string(depth_) + "x" +
                                    std::to_string(2 * n_qubits()));
    }
    if (!params.all_finite()) {
        throw std::invalid_argument("parameter matrix has non-finite entries");
    }
}

namespace kernels {

void apply_rx_layer(std::span<cplx> amps, std::span<const double> angles) {
    for (std::size_t q = 0; q < angles.size(); ++q) {
        apply_rx(amps, q, angles[q]);
    }
}

void apply_rz_layer(std::span<cplx> amps, std::span<const double> angles) {
    for (std::size_t q = 0; q < angles.size(); ++q) {
        apply_rz(amps, q, angles[q]);
    }
}

void apply_block(std::span<cplx> amps, const HeaCircuit& circuit, std::size_t block,
                 const ParamMatrix& params) {
    const std::size_t n = circuit.n_qubits();
    const auto row = params.row(block);
    apply_rx_layer(amps, row.first(n));
    apply_rz_layer(amps, row.subspan(n, n));
    circuit.cz_layer().apply(amps);
}

} // namespace kernels

StateVector apply_block(StateVector state, const HeaCircuit& circuit, std::size_t block_index,
                        const ParamMatrix& params) {
    circuit.check_params(params);
    if (state.n_qubits() != circuit.n_qubits()) {
        throw std::invalid_argument("apply_block: qubit-count mismatch");
    }
    if (block_index >= circuit.depth()) {
        throw std::out_of_range("apply_block: block index " + std::to_string(block_index) +
                                " out of range");
    }
    kernels::apply_block(state.mutable_amplitudes(), circuit, block_index, params);
    return state;
}

StateVector run(const HeaCircuit& circuit, const ParamMatrix& params, StateVector initial) {
    circuit.check_params(params);
    if (initial.n_qubits() != circuit.n_qubits()) {
        throw std::invalid_argument("run: qubit-count mismatch");
    }
    for (std::size_t b = 0; b < circuit.depth(); ++b) {
        kernels::apply_block(initial.mutable_amplitudes(), circuit, b, params);
    }
    return initial;
}

StateVector run(const HeaCircuit& circuit, const ParamMatrix& params) {
    return run(circuit, params, circuit.initial());
}

Eigen::MatrixXcd dense_unitary(const HeaCircuit& circuit, const ParamMatrix& params,
                               std::size_t cap) {
    circuit.check_params(params);
    return dense_unitary(
        circuit.n_qubits(),
        [&](std::span<cplx> v) {
            for (std::size_t b = 0; b < circuit.depth(); ++b) {
                kernels::apply_block(v, circuit, b, params);
            }
        },
        cap);
}

EncodingLayer::EncodingLayer(std::vector<double> raw) : raw_(std::move(raw)) {
    if (raw_.empty()) {
        throw std::invalid_argument("EncodingLayer: data vector is empty");
    }
    for (double x : raw_) {
        if (!std::isfinite(x)) {
            throw std::invalid_argument("EncodingLayer: data vector has non-finite entries");
        }
    }
}

std::vector<double> EncodingLayer::normalized() const {
    double ss = 0.0;
    for (double x : raw_) {
        ss += x * x;
    }
    const double nrm = std::sqrt(ss);
    if (!(nrm > 0.0)) {
        throw std::invalid_argument("EncodingLayer: zero-norm data vector");
    }
    std::vector<double> out(raw_.size());
    for (std::size_t i = 0; i < raw_.size(); ++i) {
        out[i] = raw_[i] / nrm;
    }
    return out;
}

StateVector apply_encoding(StateVector state, const EncodingLayer& enc,
                           const LatticeGraph& lattice) {
    const std::size_t n = state.n_qubits();
    if (lattice.n_qubits() != n) {
        throw std::invalid_argument("apply_encoding: qubit-count mismatch");
    }
    if (!lattice.is_chain()) {
        throw std::invalid_argument("apply_encoding: encoding is defined on 1D chains only");
    }
    if (enc.dim() > n) {
        throw std::invalid_argument("apply_encoding: data dimension " + std::to_string(enc.dim()) +
                                    " exceeds qubit count " + std::to_string(n));
    }
    const auto phi = enc.normalized();
    auto amps = state.mutable_amplitudes();
    const std::size_t first = n - enc.dim();
    for (std::size_t i = 0; i < phi.size(); ++i) {
        kernels::apply_rx(amps, first + i, phi[i]);
    }
    for (const auto& [j, k] : lattice.edges()) {
        kernels::apply_cz(amps, j, k);
    }
    return state;
}

} // namespace bpfree
