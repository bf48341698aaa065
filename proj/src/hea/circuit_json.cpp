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


#include "bpfree/hea/circuit_json.hpp"

#include <stdexcept>
#include <string>

namespace bpfree {

using nlohmann::json;

namespace {

std::size_t get_count(const json& doc, const char* key) {
    if (!doc.contains(key)) {
        throw std::invalid_argument(std::string("circuit JSON: missing field '") + key + "'");
    }
    const json& v = doc.at(key);
    if (!v.is_number_integer() || v.get<long long>() < 0) {
        throw std::invalid_argument(std::string("circuit JSON: '") + key +
                                    "' must be a non-negative integer");
    }
    return v.get<std::size_t>();
}

} // namespace

LatticeGraph lattice_from_json(const json& doc) {
    if (!doc.is_object()) {
        throw std::invalid_argument("circuit JSON: document must be an object");
    }
    const std::size_t n = get_count(doc, "n_qubits");
    if (!doc.contains("lattice")) {
        throw std::invalid_argument("circuit JSON: missing field 'lattice'");
    }
    const json& lat = doc.at("lattice");
    if (lat.is_string()) {
        const auto kind = lat.get<std::string>();
        if (kind == "chain") {
            const bool periodic = doc.value("periodic", false);
            return chain_1d(n, periodic);
        }
        if (kind == "grid") {
            const std::size_t rows = get_count(doc, "rows");
            const std::size_t cols = get_count(doc, "cols");
            if (rows * cols != n) {
                throw std::invalid_argument("circuit JSON: rows*cols must equal n_qubits");
            }
            return grid_2d(rows, cols);
        }
        throw std::invalid_argument("circuit JSON: unknown lattice '" + kind + "'");
    }
    if (lat.is_array()) {
        std::vector<Edge> edges;
        for (const auto& e : lat) {
            if (!e.is_array() || e.size() != 2 || !e[0].is_number_unsigned() ||
                !e[1].is_number_unsigned()) {
                throw std::invalid_argument("circuit JSON: edges must be [j, k] index pairs");
            }
            edges.emplace_back(e[0].get<std::size_t>(), e[1].get<std::size_t>());
        }
        return LatticeGraph(n, std::move(edges));
    }
    throw std::invalid_argument("circuit JSON: 'lattice' must be a name or an edge list");
}

json lattice_to_json(const LatticeGraph& lattice) {
    json doc;
    doc["n_qubits"] = lattice.n_qubits();
    switch (lattice.kind()) {
    case LatticeGraph::Kind::Chain:
        doc["lattice"] = "chain";
        break;
    case LatticeGraph::Kind::PeriodicChain:
        doc["lattice"] = "chain";
        doc["periodic"] = true;
        break;
    case LatticeGraph::Kind::Grid:
        doc["lattice"] = "grid";
        doc["rows"] = lattice.rows();
        doc["cols"] = lattice.cols();
        break;
    case LatticeGraph::Kind::Explicit: {
        json edges = json::array();
        for (const auto& [j, k] : lattice.edges()) {
            edges.push_back({j, k});
        }
        doc["lattice"] = std::move(edges);
        break;
    }
    }
    return doc;
}

CircuitSpec circuit_from_json(const json& doc) {
    try {
        LatticeGraph lattice = lattice_from_json(doc);
        const std::size_t p = get_count(doc, "p");
        const InitialState init = parse_initial_state(doc.value("initial_state", "zero"));
        std::optional<EncodingLayer> enc;
        if (doc.contains("encoding") && !doc.at("encoding").is_null()) {
            const json& e = doc.at("encoding");
            if (!e.is_object() || !e.contains("raw") || !e.at("raw").is_array()) {
                throw std::invalid_argument("circuit JSON: encoding must be {\"raw\": [...]}");
            }
            enc.emplace(e.at("raw").get<std::vector<double>>());
        }
        return CircuitSpec{HeaCircuit(std::move(lattice), p, init), std::move(enc)};
    } catch (const json::exception& ex) {
        throw std::invalid_argument(std::string("circuit JSON: ") + ex.what());
    }
}

json circuit_to_json(const HeaCircuit& circuit, const std::optional<EncodingLayer>& encoding) {
    json doc = lattice_to_json(circuit.lattice());
    doc["p"] = circuit.depth();
    doc["initial_state"] = std::string(to_string(circuit.initial_state()));
    if (encoding) {
        doc["encoding"] = {{"raw", std::vector<double>(encoding->raw().begin(),
                                                        encoding->raw().end())}};
    }
    return doc;
}

} // namespace bpfree
