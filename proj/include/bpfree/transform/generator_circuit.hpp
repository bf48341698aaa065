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


#ifndef BPFREE_TRANSFORM_GENERATOR_CIRCUIT_HPP
#define BPFREE_TRANSFORM_GENERATOR_CIRCUIT_HPP

#include <optional>
#include <vector>

#include <Eigen/Dense>

#include "json.hpp"

#include "bpfree/hea/circuit.hpp"
#include "bpfree/qcore/pauli.hpp"

namespace bpfree {

/// U P U^dagger for U the CZ layer on every lattice edge. Z is fixed; X_k and
/// Y_k pick up Z on every neighbour of k.
PauliString conjugate_by_cz_layer(const PauliString& p, const LatticeGraph& lattice);

/// exp(-i G theta/2), with theta read from `slot` of the source parameters.
struct GeneratorGate {
    PauliString generator;
    Slot slot;
};

struct GeneratorLayer {
    enum class Kind { X, Lambda, Z };
    std::size_t block;
    Kind kind;
    std::vector<GeneratorGate> gates;
};

/// CZ-free rewriting of an HEA. Layers are listed in application order. When
/// residual_prefix_cz is set, one CZ layer acts on the initial state first.
class GeneratorCircuit {
  public:
    GeneratorCircuit(LatticeGraph lattice, std::size_t depth, InitialState initial,
                     std::vector<GeneratorLayer> layers, bool residual_prefix_cz);

    const LatticeGraph& lattice() const { return lattice_; }
    std::size_t n_qubits() const { return lattice_.n_qubits(); }
    std::size_t source_depth() const { return depth_; }
    InitialState initial_state() const { return initial_; }
    const std::vector<GeneratorLayer>& layers() const { return layers_; }
    bool residual_prefix_cz() const { return residual_; }

    /// Layer index holding the gate for `slot`.
    std::size_t layer_of(const Slot& slot) const;
    const GeneratorGate& gate_of(const Slot& slot) const;

    /// The initial state with the residual CZ layer folded in.
    StateVector effective_initial() const;

  private:
    LatticeGraph lattice_;
    std::size_t depth_;
    InitialState initial_;
    std::vector<GeneratorLayer> layers_;
    bool residual_;
};

std::string_view to_string(GeneratorLayer::Kind kind);

/// Block b (0-based) of a depth-p circuit uses Lambda_j = X_j prod_{l in N(j)} Z_l
/// when p - b - 1 is even and keeps X generators otherwise. Every block
/// contributes an X or Lambda layer followed by a Z layer; odd p leaves one
/// CZ layer as a prefix on the initial state.
GeneratorCircuit remove_cz(const HeaCircuit& circuit);

/// Applies the residual CZ layer (if flagged) and then every layer to `state`.
StateVector run(const GeneratorCircuit& gc, const ParamMatrix& params, StateVector state);
/// Same, starting from the source circuit's preset initial state.
StateVector run(const GeneratorCircuit& gc, const ParamMatrix& params);

/// Includes the residual CZ layer.
Eigen::MatrixXcd dense_unitary(const GeneratorCircuit& gc, const ParamMatrix& params,
                               std::size_t cap = kDefaultDenseCap);

/// Phase-aligned Frobenius distance between the source and rewritten unitaries.
double equivalence_residual(const HeaCircuit& circuit, const ParamMatrix& params,
                            std::size_t cap = kDefaultDenseCap);

/// {"n_qubits", "source_depth", "residual_prefix_cz", "layers": [{"block",
/// "kind", "gates": [{"pauli", "block", "slot", "angle_ref"}]}]}.
nlohmann::json to_json(const GeneratorCircuit& gc);

} // namespace bpfree

#endif // BPFREE_TRANSFORM_GENERATOR_CIRCUIT_HPP
