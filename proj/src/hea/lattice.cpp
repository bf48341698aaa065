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

#include "bpfree/hea/lattice.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <string>

namespace bpfree {

LatticeGraph::LatticeGraph(std::size_t n_qubits, std::vector<Edge> edges, Kind kind,
                           std::size_t rows, std::size_t cols)
    : n_qubits_(n_qubits), edges_(std::move(edges)), adjacency_(n_qubits), kind_(kind),
      rows_(rows), cols_(cols) {
    if (n_qubits == 0) {
        throw std::invalid_argument("LatticeGraph: n_qubits must be positive");
    }
    std::set<Edge> seen;
    for (auto& e : edges_) {
        if (e.first >= n_qubits || e.second >= n_qubits) {
            throw std::invalid_argument("LatticeGraph: edge (" + std::to_string(e.first) + "," +
                                        std::to_string(e.second) + ") out of range");
        }
        if (e.first == e.second) {
            throw std::invalid_argument("LatticeGraph: self-loop on qubit " +
                                        std::to_string(e.first));
        }
        if (e.first > e.second) {
            std::swap(e.first, e.second);
        }
        if (!seen.insert(e).second) {
            throw std::invalid_argument("LatticeGraph: duplicate edge (" +
                                        std::to_string(e.first) + "," +
                                        std::to_string(e.second) + ")");
        }
        adjacency_[e.first].push_back(e.second);
        adjacency_[e.second].push_back(e.first);
    }
    for (auto& nb : adjacency_) {
        std::sort(nb.begin(), nb.end());
    }
}

const std::vector<std::size_t>& LatticeGraph::neighbors(std::size_t qubit) const {
    if (qubit >= n_qubits_) {
        throw std::out_of_range("LatticeGraph::neighbors: qubit out of range");
    }
    return adjacency_[qubit];
}

std::size_t LatticeGraph::max_degree() const {
    std::size_t d = 0;
    for (const auto& nb : adjacency_) {
        d = std::max(d, nb.size());
    }
    return d;
}

bool LatticeGraph::is_chain() const {
    std::set<Edge> have(edges_.begin(), edges_.end());
    std::set<Edge> open;
    for (std::size_t j = 0; j + 1 < n_qubits_; ++j) {
        open.insert({j, j + 1});
    }
    if (have == open) {
        return true;
    }
    if (n_qubits_ >= 3) {
        open.insert({0, n_qubits_ - 1});
        return have == open;
    }
    return false;
}

LatticeGraph chain_1d(std::size_t n, bool periodic) {
    if (n < 2) {
        throw std::invalid_argument("chain_1d: need at least 2 qubits");
    }
    if (periodic && n < 3) {
        throw std::invalid_argument("chain_1d: a periodic chain needs at least 3 qubits");
    }
    std::vector<Edge> edges;
    for (std::size_t j = 0; j + 1 < n; ++j) {
        edges.emplace_back(j, j + 1);
    }
    if (periodic) {
        edges.emplace_back(0, n - 1);
    }
    return LatticeGraph(n, std::move(edges),
                        periodic ? LatticeGraph::Kind::PeriodicChain : LatticeGraph::Kind::Chain);
}

LatticeGraph grid_2d(std::size_t rows, std::size_t cols) {
    if (rows == 0 || cols == 0 || rows * cols < 2) {
        throw std::invalid_argument("grid_2d: need rows, cols >= 1 and at least 2 sites");
    }
    std::vector<Edge> edges;
    for (std::size_t r = 0; r < rows; ++r) {
        for (std::size_t c = 0; c < cols; ++c) {
            const std::size_t q = r * cols + c;
            if (c + 1 < cols) {
                edges.emplace_back(q, q + 1);
            }
            if (r + 1 < rows) {
                edges.emplace_back(q, q + cols);
            }
        }
    }
    return LatticeGraph(rows * cols, std::move(edges), LatticeGraph::Kind::Grid, rows, cols);
}

} // namespace bpfree
