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


#include "bpfree/grad/gradient.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>
#include <vector>

#include "bpfree/qcore/parallel.hpp"

namespace bpfree {

ObservableKind parse_observable_kind(std::string_view name) {
    if (name == "local_y1") {
        return ObservableKind::LocalY1;
    }
    if (name == "global_y1z") {
        return ObservableKind::GlobalY1Z;
    }
    throw std::invalid_argument("unknown observable '" + std::string(name) +
                                "' (expected local_y1 or global_y1z)");
}

std::string_view to_string(ObservableKind kind) {
    return kind == ObservableKind::LocalY1 ? "local_y1" : "global_y1z";
}

Observable make_observable(ObservableKind kind, std::size_t n) {
    PauliString p = PauliString::single(n, 0, Pauli::Y);
    if (kind == ObservableKind::GlobalY1Z) {
        for (std::size_t j = 1; j < n; ++j) {
            p.set_letter(j, Pauli::Z);
        }
    }
    return Observable::from_pauli(p);
}

namespace {

void check_inputs(const HeaCircuit& circuit, const ParamMatrix& params,
                  const StateVector& initial, const Observable& obs) {
    circuit.check_params(params);
    if (initial.n_qubits() != circuit.n_qubits() || obs.n_qubits() != circuit.n_qubits()) {
        throw std::invalid_argument("gradient: qubit-count mismatch");
    }
}

GradResult shifted_differences(const HeaCircuit& circuit, const ParamMatrix& params,
                               const StateVector& initial, const Observable& obs, double shift,
                               double scale, std::size_t threads) {
    GradResult g(params.rows(), params.cols());
    const std::size_t cols = params.cols();
    parallel_for(params.size(), threads, [&](std::size_t idx) {
        const std::size_t i = idx / cols;
        const std::size_t j = idx % cols;
        ParamMatrix plus = params;
        ParamMatrix minus = params;
        plus.at(i, j) += shift;
        minus.at(i, j) -= shift;
        const double cp = expectation(run(circuit, plus, initial), obs);
        const double cm = expectation(run(circuit, minus, initial), obs);
        g.at(i, j) = (cp - cm) * scale;
    });
    return g;
}

} // namespace

double cost(const HeaCircuit& circuit, const ParamMatrix& params, const StateVector& initial,
            const Observable& obs) {
    check_inputs(circuit, params, initial, obs);
    return expectation(run(circuit, params, initial), obs);
}

std::pair<double, GradResult> value_and_grad_adjoint(const HeaCircuit& circuit,
                                                     const ParamMatrix& params,
                                                     const StateVector& initial,
                                                     const Observable& obs) {
    check_inputs(circuit, params, initial, obs);
    const std::size_t n = circuit.n_qubits();
    std::vector<cplx> psi = run(circuit, params, initial).release();
    std::vector<cplx> lam(psi.size());
    kernels::apply_observable(obs, psi, lam);
    const double value = kernels::inner(psi, lam).real();

    GradResult g(params.rows(), params.cols());
    const CzLayer& cz = circuit.cz_layer();
    for (std::size_t b = circuit.depth(); b-- > 0;) {
        cz.apply(psi);
        cz.apply(lam);
        const auto row = params.row(b);
        for (std::size_t q = n; q-- > 0;) {
            g.at(b, n + q) = kernels::z_matrix_element(lam, q, psi).imag();
            kernels::apply_rz(psi, q, -row[n + q]);
            kernels::apply_rz(lam, q, -row[n + q]);
        }
        for (std::size_t q = n; q-- > 0;) {
            g.at(b, q) = kernels::x_matrix_element(lam, q, psi).imag();
            kernels::apply_rx(psi, q, -row[q]);
            kernels::apply_rx(lam, q, -row[q]);
        }
    }
    return {value, std::move(g)};
}

GradResult grad_adjoint(const HeaCircuit& circuit, const ParamMatrix& params,
                        const StateVector& initial, const Observable& obs) {
    return value_and_grad_adjoint(circuit, params, initial, obs).second;
}

GradResult grad_param_shift(const HeaCircuit& circuit, const ParamMatrix& params,
                            const StateVector& initial, const Observable& obs,
                            std::size_t threads) {
    check_inputs(circuit, params, initial, obs);
    return shifted_differences(circuit, params, initial, obs, std::numbers::pi / 2.0, 0.5,
                                     threads);
}

GradResult grad_fd(const HeaCircuit& circuit, const ParamMatrix& params,
                   const StateVector& initial, const Observable& obs, double step,
                   std::size_t threads) {
    if (!(step > 0.0) || !std::isfinite(step)) {
        throw std::invalid_argument("grad_fd: step must be positive");
    }
    check_inputs(circuit, params, initial, obs);
    return shifted_differences(circuit, params, initial, obs, step, 0.5 / step, threads);
}

} // namespace bpfree
