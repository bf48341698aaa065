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

#ifndef BPFREE_HEA_LATTICE_HPP
#define BPFREE_HEA_LATTICE_HPP

#include <cstddef>
#include <utility>
#include <vector>

namespace bpfree {

using Edge = std::pair<std::size_t, std::size_t>;

/// Interaction graph of the entangling layer. Edges are stored as (min, max)
/// in the order given; self-loops and duplicates are rejected.
class LatticeGraph {
  public:
    enum class Kind { Chain, PeriodicChain, Grid, Explicit };

    LatticeGraph(std::size_t n_qubits, std::vector<Edge> edges, Kind kind = Kind::Explicit,
                 std::size_t rows = 0, std::size_t cols = 0);

    std::size_t n_qubits() const { return n_qubits_; }
    const std::vector<Edge>& edges() const { return edges_; }
    const std::vector<std::size_t>& neighbors(std::size_t qubit) const;
    std::size_t degree(std::size_t qubit) const { return neighbors(qubit).size(); }
    std::size_t max_degree() const;

    Kind kind() const { return kind_; }
    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    /// True for the open or periodic nearest-neighbour chain on 0..n-1,
    /// whatever the edge order.
    bool is_chain() const;

  private:
    std::size_t n_qubits_;
    std::vector<Edge> edges_;
    std::vector<std::vector<std::size_t>> adjacency_;
    Kind kind_;
    std::size_t rows_;
    std::size_t cols_;
};

/// Open chain (0,1),(1,2),...,(n-2,n-1); the periodic flag adds (0,n-1) and
/// needs n >= 3.
LatticeGraph chain_1d(std::size_t n, bool periodic = false);

/// Open-boundary rows x cols grid; qubit index r*cols + c.
LatticeGraph grid_2d(std::size_t rows, std::size_t cols);

} // namespace bpfree

#endif // BPFREE_HEA_LATTICE_HPP
