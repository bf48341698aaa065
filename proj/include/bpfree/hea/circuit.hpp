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

#ifndef BPFREE_HEA_CIRCUIT_HPP
#define BPFREE_HEA_CIRCUIT_HPP

#include <cmath>
#include <memory>
#include <stdexcept>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <Eigen/Dense>

#include "bpfree/hea/lattice.hpp"
#include "bpfree/qcore/dense.hpp"
#include "bpfree/qcore/statevector.hpp"

namespace bpfree {

/// Row-major p x 2N grid of reals indexed like the angle matrix. The tag keeps
/// parameters and gradients from being mixed up.
template <class Tag>
class AngleGrid {
  public:
    AngleGrid() = default;
    AngleGrid(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), v_(rows * cols) {}
    AngleGrid(std::size_t rows, std::size_t cols, std::vector<double> values)
        : rows_(rows), cols_(cols), v_(std::move(values)) {
        if (v_.size() != rows * cols) {
            throw std::invalid_argument("AngleGrid: value count does not match shape");
        }
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    std::size_t size() const { return v_.size(); }

    double& at(std::size_t i, std::size_t j) { return v_[index(i, j)]; }
    double at(std::size_t i, std::size_t j) const { return v_[index(i, j)]; }
    std::span<double> row(std::size_t i) { return {v_.data() + index(i, 0), cols_}; }
    std::span<const double> row(std::size_t i) const { return {v_.data() + index(i, 0), cols_}; }
    std::span<double> values() { return v_; }
    std::span<const double> values() const { return v_; }

    bool all_finite() const {
        for (double x : v_) {
            if (!std::isfinite(x)) {
                return false;
            }
        }
        return true;
    }

    friend bool operator==(const AngleGrid&, const AngleGrid&) = default;

  private:
    std::size_t index(std::size_t i, std::size_t j) const {
        if (i >= rows_ || j >= cols_) {
            throw std::out_of_range("AngleGrid: index out of range");
        }
        return i * cols_ + j;
    }

    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<double> v_;
};

struct ParamTag {};
struct GradTag {};

/// at(i, j) is the angle of block i, column j. Columns 0..N-1 hold the
/// RX angles of qubits 0..N-1, columns N..2N-1 the RZ angles.
using ParamMatrix = AngleGrid<ParamTag>;
/// at(i, j) = dC/d(params.at(i, j)).
using GradResult = AngleGrid<GradTag>;

/// 0-based (block, column) address of one angle. One-based theta_{i,j}
/// corresponds to {i-1, j-1}; the RX gate on qubit q of block b is {b, q} and
/// the RZ gate is {b, N+q}.
struct Slot {
    std::size_t block;
    std::size_t column;
    friend bool operator==(const Slot&, const Slot&) = default;
};

inline Slot rx_slot(std::size_t block, std::size_t qubit) { return {block, qubit}; }
inline Slot rz_slot(std::size_t block, std::size_t qubit, std::size_t n_qubits) {
    return {block, n_qubits + qubit};
}

enum class InitialState { Zero, YPlus };

InitialState parse_initial_state(std::string_view name);
std::string_view to_string(InitialState s);

/// |0^n> or ((|0> + i|1>)/sqrt 2)^{(x) n}.
StateVector preset_state(InitialState preset, std::size_t n);
StateVector preset_state(std::string_view name, std::size_t n);

/// Hardware-efficient ansatz: `depth` blocks, each an RX layer, an RZ layer,
/// then CZ on every lattice edge. Immutable and shareable across threads.
class HeaCircuit {
  public:
    HeaCircuit(LatticeGraph lattice, std::size_t depth,
               InitialState initial = InitialState::Zero);

    const LatticeGraph& lattice() const { return lattice_; }
    std::size_t n_qubits() const { return lattice_.n_qubits(); }
    std::size_t depth() const { return depth_; }
    InitialState initial_state() const { return initial_; }
    std::size_t num_params() const { return 2 * n_qubits() * depth_; }
    const CzLayer& cz_layer() const { return *cz_; }

    ParamMatrix zero_params() const { return ParamMatrix(depth_, 2 * n_qubits()); }
    /// Throws std::invalid_argument unless params is depth x 2N and finite.
    void check_params(const ParamMatrix& params) const;
    StateVector initial() const { return preset_state(initial_, n_qubits()); }

  private:
    LatticeGraph lattice_;
    std::size_t depth_;
    InitialState initial_;
    std::shared_ptr<const CzLayer> cz_;
};

namespace kernels {
void apply_rx_layer(std::span<cplx> amps, std::span<const double> angles);
void apply_rz_layer(std::span<cplx> amps, std::span<const double> angles);
void apply_block(std::span<cplx> amps, const HeaCircuit& circuit, std::size_t block,
                 const ParamMatrix& params);
} // namespace kernels

StateVector apply_block(StateVector state, const HeaCircuit& circuit, std::size_t block_index,
                        const ParamMatrix& params);

/// V(theta_p) ... V(theta_1)|initial>.
StateVector run(const HeaCircuit& circuit, const ParamMatrix& params, StateVector initial);
/// Same, starting from the circuit's preset initial state.
StateVector run(const HeaCircuit& circuit, const ParamMatrix& params);

Eigen::MatrixXcd dense_unitary(const HeaCircuit& circuit, const ParamMatrix& params,
                               std::size_t cap = kDefaultDenseCap);

/// Angle encoding of a d-dimensional data vector onto the last d qubits.
class EncodingLayer {
  public:
    explicit EncodingLayer(std::vector<double> raw);

    std::size_t dim() const { return raw_.size(); }
    std::span<const double> raw() const { return raw_; }
    /// raw / ||raw||_2.
    std::vector<double> normalized() const;

  private:
    std::vector<double> raw_;
};

/// RX(phi_i / ||phi||) on qubits N-d..N-1 in order, then the chain's CZ layer.
/// The lattice must be a 1D chain with N >= d qubits.
StateVector apply_encoding(StateVector state, const EncodingLayer& enc,
                           const LatticeGraph& lattice);

} // namespace bpfree

#endif // BPFREE_HEA_CIRCUIT_HPP
