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


#include "bpfree/transform/generator_circuit.hpp"

#include <stdexcept>
#include <string>

namespace bpfree {

PauliString conjugate_by_cz_layer(const PauliString& p, const LatticeGraph& lattice) {
    const std::size_t n = p.n_qubits();
    if (lattice.n_qubits() != n) {
        throw std::invalid_argument("conjugate_by_cz_layer: qubit-count mismatch");
    }
    PauliString out(n);
    out.set_phase(p.phase());
    for (std::size_t k = 0; k < n; ++k) {
        const Pauli a = p.letter(k);
        if (a == Pauli::I) {
            continue;
        }
        PauliString image = PauliString::single(n, k, a);
        if (a == Pauli::X || a == Pauli::Y) {
            for (std::size_t l : lattice.neighbors(k)) {
                image.set_letter(l, Pauli::Z);
            }
        }
        out = pauli_mul(out, image);
    }
    return out;
}

GeneratorCircuit::GeneratorCircuit(LatticeGraph lattice, std::size_t depth, InitialState initial,
                                   std::vector<GeneratorLayer> layers, bool residual_prefix_cz)
    : lattice_(std::move(lattice)), depth_(depth), initial_(initial), layers_(std::move(layers)),
      residual_(residual_prefix_cz) {}

std::size_t GeneratorCircuit::layer_of(const Slot& slot) const {
    for (std::size_t l = 0; l < layers_.size(); ++l) {
        for (const auto& g : layers_[l].gates) {
            if (g.slot == slot) {
                return l;
            }
        }
    }
    throw std::out_of_range("GeneratorCircuit: slot (" + std::to_string(slot.block) + "," +
                            std::to_string(slot.column) + ") not present");
}

const GeneratorGate& GeneratorCircuit::gate_of(const Slot& slot) const {
    for (const auto& g : layers_[layer_of(slot)].gates) {
        if (g.slot == slot) {
            return g;
        }
    }
    throw std::logic_error("unreachable");
}

StateVector GeneratorCircuit::effective_initial() const {
    StateVector s = preset_state(initial_, n_qubits());
    if (residual_) {
        for (const auto& [j, k] : lattice_.edges()) {
            kernels::apply_cz(s.mutable_amplitudes(), j, k);
        }
    }
    return s;
}

std::string_view to_string(GeneratorLayer::Kind kind) {
    switch (kind) {
    case GeneratorLayer::Kind::X:
        return "x";
    case GeneratorLayer::Kind::Lambda:
        return "lambda";
    case GeneratorLayer::Kind::Z:
        return "z";
    }
    return "?";
}

GeneratorCircuit remove_cz(const HeaCircuit& circuit) {
    const std::size_t n = circuit.n_qubits();
    const std::size_t p = circuit.depth();
    const LatticeGraph& lat = circuit.lattice();
    std::vector<GeneratorLayer> layers;
    layers.reserve(2 * p);
    for (std::size_t b = 0; b < p; ++b) {
        const bool lambda = (p - b - 1) % 2 == 0;
        GeneratorLayer rx{b, lambda ? GeneratorLayer::Kind::Lambda : GeneratorLayer::Kind::X, {}};
        GeneratorLayer rz{b, GeneratorLayer::Kind::Z, {}};
        for (std::size_t q = 0; q < n; ++q) {
            PauliString x = PauliString::single(n, q, Pauli::X);
            if (lambda) {
                x = conjugate_by_cz_layer(x, lat);
            }
            rx.gates.push_back({std::move(x), rx_slot(b, q)});
            rz.gates.push_back({PauliString::single(n, q, Pauli::Z), rz_slot(b, q, n)});
        }
        layers.push_back(std::move(rx));
        layers.push_back(std::move(rz));
    }
    return GeneratorCircuit(lat, p, circuit.initial_state(), std::move(layers), p % 2 == 1);
}

namespace {

void check_shape(const GeneratorCircuit& gc, const ParamMatrix& params) {
    if (params.rows() != gc.source_depth() || params.cols() != 2 * gc.n_qubits()) {
        throw std::invalid_argument("generator circuit: parameter shape mismatch");
    }
    if (!params.all_finite()) {
        throw std::invalid_argument("generator circuit: non-finite parameters");
    }
}

void apply_all(std::span<cplx> amps, const GeneratorCircuit& gc, const ParamMatrix& params) {
    if (gc.residual_prefix_cz()) {
        for (const auto& [j, k] : gc.lattice().edges()) {
            kernels::apply_cz(amps, j, k);
        }
    }
    for (const auto& layer : gc.layers()) {
        for (const auto& g : layer.gates) {
            kernels::apply_rotation(amps, g.generator, params.at(g.slot.block, g.slot.column));
        }
    }
}

} // namespace

StateVector run(const GeneratorCircuit& gc, const ParamMatrix& params, StateVector state) {
    check_shape(gc, params);
    if (state.n_qubits() != gc.n_qubits()) {
        throw std::invalid_argument("generator circuit: qubit-count mismatch");
    }
    apply_all(state.mutable_amplitudes(), gc, params);
    return state;
}

StateVector run(const GeneratorCircuit& gc, const ParamMatrix& params) {
    return run(gc, params, preset_state(gc.initial_state(), gc.n_qubits()));
}

Eigen::MatrixXcd dense_unitary(const GeneratorCircuit& gc, const ParamMatrix& params,
                               std::size_t cap) {
    check_shape(gc, params);
    return dense_unitary(
        gc.n_qubits(), [&](std::span<cplx> v) { apply_all(v, gc, params); }, cap);
}

double equivalence_residual(const HeaCircuit& circuit, const ParamMatrix& params,
                            std::size_t cap) {
    const GeneratorCircuit gc = remove_cz(circuit);
    return phase_aligned_distance(dense_unitary(circuit, params, cap),
                                  dense_unitary(gc, params, cap));
}

nlohmann::json to_json(const GeneratorCircuit& gc) {
    nlohmann::json layers = nlohmann::json::array();
    for (const auto& layer : gc.layers()) {
        nlohmann::json gates = nlohmann::json::array();
        for (const auto& g : layer.gates) {
            gates.push_back({{"pauli", g.generator.letters_string()},
                             {"block", g.slot.block},
                             {"slot", g.slot.column},
                             {"angle_ref", "theta[" + std::to_string(g.slot.block) + "][" +
                                               std::to_string(g.slot.column) + "]"}});
        }
        layers.push_back({{"block", layer.block},
                          {"kind", std::string(to_string(layer.kind))},
                          {"gates", std::move(gates)}});
    }
    return {{"n_qubits", gc.n_qubits()},
            {"source_depth", gc.source_depth()},
            {"residual_prefix_cz", gc.residual_prefix_cz()},
            {"layers", std::move(layers)}};
}

} // namespace bpfree
