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


#include "bpfree/vqe/ground_energy.hpp"

#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "bpfree/init/random.hpp"
#include "bpfree/qcore/dense.hpp"
#include "bpfree/qcore/statevector.hpp"

namespace bpfree {

GroundMethod parse_ground_method(std::string_view name) {
    if (name == "auto") {
        return GroundMethod::Auto;
    }
    if (name == "lanczos") {
        return GroundMethod::Lanczos;
    }
    if (name == "dense") {
        return GroundMethod::Dense;
    }
    throw std::invalid_argument("unknown ground-state method '" + std::string(name) +
                                "' (expected auto, lanczos or dense)");
}

namespace {

using Vec = std::vector<cplx>;

double norm(const Vec& v) { return std::sqrt(kernels::inner(v, v).real()); }

void axpy(cplx a, const Vec& x, Vec& y) {
    for (std::size_t i = 0; i < y.size(); ++i) {
        y[i] += a * x[i];
    }
}

void scale(Vec& v, double s) {
    for (auto& a : v) {
        a *= s;
    }
}

} // namespace

double ground_energy_lanczos(const Observable& obs, const LanczosOptions& opt) {
    const std::size_t n = obs.n_qubits();
    if (n == 0 || n > 20) {
        throw std::invalid_argument("ground_energy_lanczos: need 1 <= N <= 20");
    }
    if (opt.basis_size < 2) {
        throw std::invalid_argument("ground_energy_lanczos: basis size must be at least 2");
    }
    const std::size_t dim = dim_of(n);
    const std::size_t m = std::min(opt.basis_size, dim);

    Vec x(dim);
    Rng rng(opt.seed);
    for (auto& a : x) {
        a = {rng.uniform(-1.0, 1.0), rng.uniform(-1.0, 1.0)};
    }
    scale(x, 1.0 / norm(x));

    std::vector<Vec> basis;
    Vec w(dim);
    double best = 0.0;
    for (std::size_t restart = 0; restart < opt.max_restarts; ++restart) {
        basis.assign(1, x);
        std::vector<double> alpha;
        std::vector<double> beta;
        bool exhausted = false;
        for (std::size_t j = 0; j < m; ++j) {
            kernels::apply_observable(obs, basis[j], w);
            alpha.push_back(kernels::inner(basis[j], w).real());
            for (int pass = 0; pass < 2; ++pass) {
                for (const auto& v : basis) {
                    axpy(-kernels::inner(v, w), v, w);
                }
            }
            const double b = norm(w);
            if (j + 1 == m) {
                beta.push_back(b);
                break;
            }
            if (b < 1e-12) {
                beta.push_back(0.0);
                exhausted = true;
                break;
            }
            beta.push_back(b);
            Vec next = w;
            scale(next, 1.0 / b);
            basis.push_back(std::move(next));
        }

        const auto k = static_cast<Eigen::Index>(alpha.size());
        Eigen::MatrixXd t = Eigen::MatrixXd::Zero(k, k);
        for (Eigen::Index i = 0; i < k; ++i) {
            t(i, i) = alpha[static_cast<std::size_t>(i)];
            if (i + 1 < k) {
                t(i, i + 1) = t(i + 1, i) = beta[static_cast<std::size_t>(i)];
            }
        }
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(t);
        best = es.eigenvalues()(0);
        const Eigen::VectorXd y = es.eigenvectors().col(0);
        const double residual = std::abs(beta.back() * y(k - 1));

        std::fill(x.begin(), x.end(), cplx{0.0});
        for (Eigen::Index i = 0; i < k; ++i) {
            axpy(y(i), basis[static_cast<std::size_t>(i)], x);
        }
        scale(x, 1.0 / norm(x));
        if (exhausted || residual <= opt.residual_tol) {
            return best;
        }
    }
    throw NumericalError("ground_energy_lanczos: no convergence after " +
                         std::to_string(opt.max_restarts) + " restarts (last estimate " +
                         std::to_string(best) + ")");
}

double ground_energy_dense(const Observable& obs) {
    if (obs.n_qubits() > 12) {
        throw std::invalid_argument("ground_energy_dense: N above 12");
    }
    const Eigen::MatrixXcd h = dense_matrix(obs, 12);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(h, Eigen::EigenvaluesOnly);
    if (es.info() != Eigen::Success) {
        throw NumericalError("ground_energy_dense: eigensolver failed");
    }
    return es.eigenvalues()(0);
}

double ground_energy(const Observable& obs, GroundMethod method) {
    return method == GroundMethod::Dense ? ground_energy_dense(obs) : ground_energy_lanczos(obs);
}

} // namespace bpfree
