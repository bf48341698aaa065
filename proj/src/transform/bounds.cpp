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


#include "bpfree/transform/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

namespace bpfree {

double critical_time(double g, double K, double Q) {
    if (!(K > 0.0) || !(Q > 0.0)) {
        throw std::invalid_argument("critical_time: K and Q must be positive");
    }
    if (!(g >= 0.0)) {
        throw std::invalid_argument("critical_time: g must be non-negative");
    }
    return g / (4.0 * K * Q);
}

namespace {

struct LayerData {
    double theta_max = 0.0;
    Eigen::MatrixXcd weighted; // theta_max * H_l = sum_j G_j theta_j
    double J = 0.0;
};

LayerData layer_data(const GeneratorLayer& layer, const ParamMatrix& params, std::size_t n,
                     std::size_t cap) {
    const std::size_t dim = dim_of(n);
    LayerData d;
    d.weighted = Eigen::MatrixXcd::Zero(static_cast<Eigen::Index>(dim),
                                        static_cast<Eigen::Index>(dim));
    for (const auto& g : layer.gates) {
        d.theta_max = std::max(d.theta_max, std::abs(params.at(g.slot.block, g.slot.column)));
    }
    if (d.theta_max == 0.0) {
        return d;
    }
    std::vector<double> site(n, 0.0);
    for (const auto& g : layer.gates) {
        const double th = params.at(g.slot.block, g.slot.column);
        if (th != 0.0) {
            d.weighted += th * dense_matrix(g.generator, cap);
        }
        for (std::size_t q : g.generator.support()) {
            site[q] += std::abs(th) / d.theta_max;
        }
    }
    d.J = *std::max_element(site.begin(), site.end());
    return d;
}

double commutator_norm(const Eigen::MatrixXcd& a, const Eigen::MatrixXcd& b) {
    // i[a, b] is Hermitian for Hermitian a, b.
    const Eigen::MatrixXcd c = kI * (a * b - b * a);
    return hermitian_norm(c);
}

} // namespace

BoundReport norms_for_bound(const HeaCircuit& circuit, const ParamMatrix& params,
                            std::size_t split_block, const Observable& obs, const Slot& slot,
                            std::size_t cap) {
    circuit.check_params(params);
    const std::size_t n = circuit.n_qubits();
    if (n > cap) {
        throw std::invalid_argument("norms_for_bound: " + std::to_string(n) +
                                    " qubits exceed the dense cap " + std::to_string(cap));
    }
    if (obs.n_qubits() != n) {
        throw std::invalid_argument("norms_for_bound: observable qubit-count mismatch");
    }
    if (slot.block >= circuit.depth() || slot.column >= 2 * n) {
        throw std::out_of_range("norms_for_bound: slot out of range");
    }
    if (split_block > slot.block) {
        throw std::invalid_argument("norms_for_bound: the slot's block must lie in U_A");
    }

    const GeneratorCircuit gc = remove_cz(circuit);
    const auto dim = static_cast<Eigen::Index>(dim_of(n));
    Eigen::MatrixXcd sum_a = Eigen::MatrixXcd::Zero(dim, dim);
    Eigen::MatrixXcd sum_b = Eigen::MatrixXcd::Zero(dim, dim);

    BoundReport r;
    r.slot = slot;
    r.split_block = split_block;
    r.k = 1 + circuit.lattice().max_degree();
    for (const auto& layer : gc.layers()) {
        const LayerData d = layer_data(layer, params, n, cap);
        if (d.theta_max > 0.0) {
            r.H_max = std::max(r.H_max, hermitian_norm(d.weighted / d.theta_max));
        }
        r.J = std::max(r.J, d.J);
        if (layer.block >= split_block) {
            r.t_A += d.theta_max;
            sum_a += d.weighted;
        } else {
            r.t_B += d.theta_max;
            sum_b += d.weighted;
        }
    }

    const Eigen::MatrixXcd o = dense_matrix(obs, cap);
    const Eigen::MatrixXcd g = dense_matrix(gc.gate_of(slot).generator, cap);
    const double h_b = r.t_B > 0.0 ? hermitian_norm(sum_b / r.t_B) : 0.0;
    const double ha_o = r.t_A > 0.0 ? commutator_norm(sum_a / r.t_A, o) : 0.0;
    r.K = std::max(h_b, ha_o);
    r.Q = std::max(commutator_norm(g, o), hermitian_norm(g));

    const StateVector psi = gc.effective_initial();
    const Eigen::Map<const Eigen::VectorXcd> v(psi.amplitudes().data(), dim);
    const Eigen::MatrixXcd comm = g * o - o * g;
    r.g = std::abs(v.dot(comm * v));

    r.t_c = (r.K > 0.0 && r.Q > 0.0) ? critical_time(r.g, r.K, r.Q)
                                     : std::numeric_limits<double>::infinity();

    const double x = 32.0 * static_cast<double>(r.k) * r.J * r.t_A;
    if (x == 0.0 || 1.0 / x >= static_cast<double>(kNoTruncationLimit)) {
        r.r0 = kNoTruncationLimit;
    } else {
        r.r0 = static_cast<long long>(std::floor(1.0 / x));
    }
    const double two_kj = 2.0 * static_cast<double>(r.k) * r.J;
    const int exponent = static_cast<int>(std::min<long long>(r.r0, 4096));
    r.fm_error = 6.0 * r.H_max * std::ldexp(1.0, -exponent) * r.t_A +
                 r.H_max * two_kj * two_kj * r.t_A * r.t_A * r.t_A;
    return r;
}

nlohmann::json to_json(const BoundReport& r) {
    auto num = [](double x) -> nlohmann::json {
        return std::isfinite(x) ? nlohmann::json(x) : nlohmann::json(nullptr);
    };
    return {{"g", num(r.g)},
            {"K", num(r.K)},
            {"Q", num(r.Q)},
            {"t_c", num(r.t_c)},
            {"H_max", num(r.H_max)},
            {"J", num(r.J)},
            {"k", r.k},
            {"r0", r.r0 >= kNoTruncationLimit ? nlohmann::json(nullptr) : nlohmann::json(r.r0)},
            {"fm_error", num(r.fm_error)},
            {"t_A", num(r.t_A)},
            {"t_B", num(r.t_B)},
            {"split_block", r.split_block},
            {"slot_block", r.slot.block},
            {"slot_column", r.slot.column}};
}

} // namespace bpfree
