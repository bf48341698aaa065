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


#include "bpfree/cli/selftest.hpp"

#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <stdexcept>

#include "bpfree/grad/commutator.hpp"
#include "bpfree/grad/gradient.hpp"
#include "bpfree/init/init.hpp"
#include "bpfree/init/random.hpp"
#include "bpfree/mbl/diagnostics.hpp"
#include "bpfree/qml/classifier.hpp"
#include "bpfree/transform/generator_circuit.hpp"
#include "bpfree/vqe/ground_energy.hpp"
#include "bpfree/vqe/hamiltonians.hpp"

namespace bpfree::cli {

namespace {

constexpr std::uint64_t kSeed = 20260101;

std::string sci(double x) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.3e", x);
    return buf;
}

double max_abs_diff(std::span<const double> a, std::span<const double> b) {
    double m = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        m = std::max(m, std::abs(a[i] - b[i]));
    }
    return m;
}

CheckResult check(const std::string& name, const std::function<std::string()>& body) {
    try {
        const std::string failure = body();
        return {name, failure.empty(), failure};
    } catch (const std::exception& e) {
        return {name, false, std::string("exception: ") + e.what()};
    }
}

std::string engine_agreement(Fault fault) {
    for (std::size_t k = 0; k < 6; ++k) {
        const HeaCircuit circuit(chain_1d(4), 3);
        const auto params = sample(InitScheme::random(), circuit, sub_seed(kSeed, k));
        const auto kind = k % 2 ? ObservableKind::GlobalY1Z : ObservableKind::LocalY1;
        const auto obs = make_observable(kind, 4);
        const auto init = circuit.initial();
        const auto adj = grad_adjoint(circuit, params, init, obs);
        auto shift = grad_param_shift(circuit, params, init, obs);
        if (fault == Fault::ParamShiftSign) {
            for (double& g : shift.values()) {
                g = -g;
            }
        }
        const auto fd = grad_fd(circuit, params, init, obs, 1e-5);
        const double d_shift = max_abs_diff(adj.values(), shift.values());
        const double d_fd = max_abs_diff(adj.values(), fd.values());
        if (!(d_shift <= 1e-10)) {
            return "max |adjoint - parameter shift| = " + sci(d_shift);
        }
        if (!(d_fd <= 1e-6)) {
            return "max |adjoint - finite difference| = " + sci(d_fd);
        }
    }
    return "";
}

std::string zero_anchor() {
    for (auto kind : {ObservableKind::LocalY1, ObservableKind::GlobalY1Z}) {
        const HeaCircuit circuit(chain_1d(4), 3);
        const auto g = grad_adjoint(circuit, circuit.zero_params(), circuit.initial(),
                                    make_observable(kind, 4));
        for (std::size_t b = 0; b < 3; ++b) {
            if (!(std::abs(g.at(b, 0) + 1.0) <= 1e-10)) {
                return "block " + std::to_string(b) + " gradient " + sci(g.at(b, 0));
            }
        }
    }
    return "";
}

std::string commutator_agreement() {
    Rng rng(sub_seed(kSeed, 100));
    for (auto kind : {ObservableKind::LocalY1, ObservableKind::GlobalY1Z}) {
        const HeaCircuit circuit(chain_1d(4), 2);
        auto params = sample(InitScheme::random(), circuit, sub_seed(kSeed, 101));
        const double theta = rng.uniform(0.0, 2.0 * std::numbers::pi);
        for (std::size_t q = 0; q < 4; ++q) {
            params.at(1, q) = theta;
        }
        const auto g = grad_adjoint(circuit, params, circuit.initial(), make_observable(kind, 4));
        const auto before = apply_block(circuit.initial(), circuit, 0, params);
        const double oracle =
            expectation(before, commutator_oracle(circuit.lattice(), params.row(1), kind));
        if (!(std::abs(oracle - g.at(1, 0)) <= 1e-10)) {
            return "oracle " + sci(oracle) + " vs gradient " + sci(g.at(1, 0));
        }
    }
    return "";
}

std::string transform_equivalence() {
    for (std::size_t p = 1; p <= 4; ++p) {
        const HeaCircuit circuit(chain_1d(4), p);
        const auto params = sample(InitScheme::random(), circuit, sub_seed(kSeed, 200 + p));
        const double r = equivalence_residual(circuit, params);
        if (!(r < 1e-10)) {
            return "p=" + std::to_string(p) + " residual " + sci(r);
        }
    }
    return "";
}

std::string entropy_units() {
    std::vector<double> product(16, 0.0);
    product[0] = 1.0;
    if (!(std::abs(half_chain_entropy(product, 4)) <= 1e-10)) {
        return "product state entropy is not 0";
    }
    // Bell pairs (0,2) and (1,3) straddle the cut between qubits {0,1} and {2,3}.
    std::vector<double> bell(16, 0.0);
    for (std::size_t a = 0; a < 2; ++a) {
        for (std::size_t b = 0; b < 2; ++b) {
            bell[a | (b << 1) | (a << 2) | (b << 3)] = 0.5;
        }
    }
    const double s = half_chain_entropy(bell, 4);
    if (!(std::abs(s - 2.0) <= 1e-10)) {
        return "two Bell pairs give entropy " + sci(s);
    }
    if (!(std::abs(page_entropy(2) - (1.0 - 0.5 / std::log(2.0))) <= 1e-12)) {
        return "page entropy";
    }
    return "";
}

std::string gap_ratio_units() {
    const std::vector<double> even{0.0, 1.0, 2.0, 3.0};
    const std::vector<double> mixed{0.0, 1.0, 3.0};
    if (!(std::abs(gap_ratios(even) - 1.0) <= 1e-12)) {
        return "equal spacing does not give r = 1";
    }
    if (!(std::abs(gap_ratios(mixed) - 0.5) <= 1e-12)) {
        return "spacings 1, 2 do not give r = 1/2";
    }
    return "";
}

std::string floquet_reconstruction() {
    const auto lattice = chain_1d(4);
    const auto phases = disorder_phases(kSeed, 4, 0);
    const auto v = build_v_tilde(4, 0.3 * std::numbers::pi, phases, lattice);
    const auto spec = floquet_eig(v);
    Eigen::VectorXcd ph(spec.quasi_energies.size());
    for (std::size_t k = 0; k < spec.quasi_energies.size(); ++k) {
        ph[static_cast<Eigen::Index>(k)] = std::polar(1.0, -spec.quasi_energies[k]);
    }
    const Eigen::MatrixXcd q = spec.eigenvectors.cast<cplx>();
    const double err = (q * ph.asDiagonal() * q.transpose() - v).cwiseAbs().maxCoeff();
    if (!(err <= 1e-10)) {
        return "reconstruction error " + sci(err);
    }
    return "";
}

std::string ground_energy_agreement() {
    const auto h = build_h1(6, 1.0);
    const double a = ground_energy_lanczos(h);
    const double b = ground_energy_dense(h);
    if (!(std::abs(a - b) <= 1e-8)) {
        return "Lanczos " + sci(a) + " vs dense " + sci(b);
    }
    return "";
}

std::string init_determinism() {
    const HeaCircuit circuit(chain_1d(5), 4);
    for (auto scheme : {InitScheme::small(), InitScheme::mbl(), InitScheme::random()}) {
        if (!(sample(scheme, circuit, kSeed) == sample(scheme, circuit, kSeed))) {
            return std::string(to_string(scheme.tag)) + " draws differ";
        }
    }
    return "";
}

std::string bce_gradient() {
    const HeaCircuit circuit(chain_1d(4), 2);
    const auto params = sample(InitScheme::random(), circuit, sub_seed(kSeed, 300));
    const std::vector<DataPoint> batch{{{0.3, -1.2}, 1}, {{0.8, 0.1}, -1}, {{-0.5, 0.7}, 1}};
    const auto [loss, grad] = bce_loss(batch, circuit, params);
    const double h = 1e-5;
    double worst = 0.0;
    for (std::size_t i = 0; i < params.rows(); ++i) {
        for (std::size_t j = 0; j < params.cols(); ++j) {
            auto up = params;
            auto down = params;
            up.at(i, j) += h;
            down.at(i, j) -= h;
            const double fd =
                (bce_loss(batch, circuit, up).first - bce_loss(batch, circuit, down).first) /
                (2.0 * h);
            worst = std::max(worst, std::abs(fd - grad.at(i, j)));
        }
    }
    if (!(worst <= 1e-6) || !(loss >= 0.0)) {
        return "max |adjoint - finite difference| = " + sci(worst);
    }
    return "";
}

} // namespace

Fault parse_fault(std::string_view name) {
    if (name == "none" || name.empty()) {
        return Fault::None;
    }
    if (name == "param-shift-sign") {
        return Fault::ParamShiftSign;
    }
    throw std::invalid_argument("unknown fault '" + std::string(name) + "'");
}

std::vector<CheckResult> run_selftest(Fault fault) {
    return {
        check("grad: engine-agreement", [&] { return engine_agreement(fault); }),
        check("grad: zero-parameter-anchor", zero_anchor),
        check("grad: commutator-oracle", commutator_agreement),
        check("transform: equivalence", transform_equivalence),
        check("mbl: entropy-units", entropy_units),
        check("mbl: gap-ratio-units", gap_ratio_units),
        check("mbl: floquet-reconstruction", floquet_reconstruction),
        check("vqe: ground-energy-agreement", ground_energy_agreement),
        check("init: determinism", init_determinism),
        check("qml: bce-gradient", bce_gradient),
    };
}

std::string format_report(const std::vector<CheckResult>& results) {
    std::string out;
    std::size_t passed = 0;
    for (const auto& r : results) {
        if (r.passed) {
            ++passed;
            out += "PASS " + r.name + "\n";
        } else {
            out += "FAIL " + r.name + ": " + r.detail + "\n";
        }
    }
    out += "selftest: " + std::to_string(passed) + "/" + std::to_string(results.size()) +
           " checks passed\n";
    return out;
}

} // namespace bpfree::cli
