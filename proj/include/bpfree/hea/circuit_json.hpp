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


#ifndef BPFREE_HEA_CIRCUIT_JSON_HPP
#define BPFREE_HEA_CIRCUIT_JSON_HPP

#include <optional>

#include "json.hpp"

#include "bpfree/hea/circuit.hpp"

namespace bpfree {

/// A circuit plus its optional data-encoding prefix.
struct CircuitSpec {
    HeaCircuit circuit;
    std::optional<EncodingLayer> encoding;
};

/// Schema:
///   {"n_qubits": N,
///    "lattice": "chain" | "grid" | [[j, k], ...],
///    "periodic": bool            (chain only, default false),
///    "rows": R, "cols": C        (grid only, R*C == N),
///    "p": depth,
///    "initial_state": "zero" | "y_plus"   (default "zero"),
///    "encoding": {"raw": [...]}  (optional)}
/// Throws std::invalid_argument on any schema violation.
CircuitSpec circuit_from_json(const nlohmann::json& doc);
nlohmann::json circuit_to_json(const HeaCircuit& circuit,
                               const std::optional<EncodingLayer>& encoding = std::nullopt);

LatticeGraph lattice_from_json(const nlohmann::json& doc);
nlohmann::json lattice_to_json(const LatticeGraph& lattice);

} // namespace bpfree

#endif // BPFREE_HEA_CIRCUIT_JSON_HPP
