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


#include "bpfree/mbl/floquet.hpp"

#include <algorithm>
#include <cmath>
#include <mutex>
#include <numbers>
#include <numeric>
#include <stdexcept>
#include <string>

#include <lapacke.h>

#include "bpfree/init/random.hpp"
#include "bpfree/qcore/statevector.hpp"

extern "C" void openblas_set_num_threads(int);

namespace bpfree {

Eigen::MatrixXcd build_v_tilde(std::size_t n, double theta, std::span<const double> phases,
                               const LatticeGraph& lattice, std::size_t cap) {
    if (lattice.n_qubits() != n || phases.size() != n) {
        throw std::invalid_argument("build_v_tilde: need n phases on an n-qubit lattice");
    }
    if (!std::isfinite(theta)) {
        throw std::invalid_argument("build_v_tilde: non-finite theta");
    }
    for (double phi : phases) {
        if (!std::isfinite(phi)) {
            throw std::invalid_argument("build_v_tilde: non-finite phase");
        }
    }
    if (n > cap) {
        throw std::invalid_argument("build_v_tilde: " + std::to_string(n) +
                                    " qubits exceed the dense cap " + std::to_string(cap));
    }
    const CzLayer cz(n, lattice.edges());
    return dense_unitary(
        n,
        [&](std::span<cplx> amps) {
            for (std::size_t q = 0; q < n; ++q) {
                kernels::apply_rx(amps, q, theta / 2.0);
            }
            for (std::size_t q = 0; q < n; ++q) {
                kernels::apply_rz(amps, q, phases[q]);
            }
            cz.apply(amps);
            for (std::size_t q = 0; q < n; ++q) {
                kernels::apply_rx(amps, q, theta / 2.0);
            }
        },
        cap);
}

double wrap_quasi_energy(double e) {
    constexpr double pi = std::numbers::pi;
    e = std::remainder(e, 2.0 * pi);
    if (e <= -pi) {
        e = pi;
    }
    return e + 0.0;
}

namespace {

void symmetric_eigen(Eigen::MatrixXd& a, Eigen::VectorXd& w) {
    static std::once_flag once;
    std::call_once(once, [] { openblas_set_num_threads(1); });
    const auto n = static_cast<lapack_int>(a.rows());
    w.resize(a.rows());
    const lapack_int info =
        LAPACKE_dsyevd(LAPACK_COL_MAJOR, 'V', 'U', n, a.data(), n, w.data());
    if (info != 0) {
        throw NumericalError("dsyevd failed with info " + std::to_string(info));
    }
}

void check_input(const Eigen::MatrixXcd& v) {
    if (v.rows() != v.cols() || v.rows() == 0) {
        throw std::invalid_argument("floquet_eig: matrix must be square and non-empty");
    }
    const double asym = (v - v.transpose()).cwiseAbs().maxCoeff();
    if (!(asym <= 1e-10)) {
        throw std::invalid_argument("floquet_eig: matrix is not symmetric");
    }
    // v^dagger v x = x on a few fixed random probes.
    Rng rng(0xF10Cu);
    for (int probe = 0; probe < 3; ++probe) {
        Eigen::VectorXcd x(v.rows());
        for (Eigen::Index i = 0; i < x.size(); ++i) {
            x(i) = cplx(rng.uniform(-1.0, 1.0), rng.uniform(-1.0, 1.0));
        }
        x.normalize();
        const Eigen::VectorXcd y = v.adjoint() * (v * x);
        if (!((y - x).norm() <= 1e-10)) {
            throw std::invalid_argument("floquet_eig: matrix is not unitary");
        }
    }
}

} // namespace

FloquetSpectrum floquet_eig(const Eigen::MatrixXcd& v, double degeneracy_tol) {
    check_input(v);
    if (!(degeneracy_tol >= 0.0)) {
        throw std::invalid_argument("floquet_eig: degeneracy tolerance must be non-negative");
    }
    const Eigen::Index dim = v.rows();
    Eigen::MatrixXd q = v.real();
    const Eigen::MatrixXd b = v.imag();
    Eigen::VectorXd a;
    symmetric_eigen(q, a);
    Eigen::MatrixXd bq = b * q;

    Eigen::VectorXd bdiag(dim);
    for (Eigen::Index s = 0; s < dim;) {
        Eigen::Index e = s + 1;
        while (e < dim && a(e) - a(e - 1) <= degeneracy_tol) {
            ++e;
        }
        const Eigen::Index m = e - s;
        if (m == 1) {
            bdiag(s) = q.col(s).dot(bq.col(s));
        } else {
            Eigen::MatrixXd sub = q.middleCols(s, m).transpose() * bq.middleCols(s, m);
            sub = 0.5 * (sub + sub.transpose()).eval();
            Eigen::VectorXd w;
            symmetric_eigen(sub, w);
            q.middleCols(s, m) = (q.middleCols(s, m) * sub).eval();
            bq.middleCols(s, m) = (bq.middleCols(s, m) * sub).eval();
            bdiag.segment(s, m) = w;
        }
        s = e;
    }

    FloquetSpectrum out;
    out.n_qubits = 0;
    for (Eigen::Index d = dim; d > 1; d >>= 1) {
        ++out.n_qubits;
    }
    std::vector<double> energy(static_cast<std::size_t>(dim));
    for (Eigen::Index k = 0; k < dim; ++k) {
        energy[static_cast<std::size_t>(k)] = wrap_quasi_energy(-std::atan2(bdiag(k), a(k)));
    }

    for (Eigen::Index k = 0; k < dim; ++k) {
        out.max_residual =
            std::max(out.max_residual, (bq.col(k) - bdiag(k) * q.col(k)).norm());
    }
    if (!(out.max_residual <= 1e-6)) {
        throw NumericalError("floquet_eig: eigenpair residual " +
                             std::to_string(out.max_residual) +
                             " (degenerate clusters not resolved)");
    }

    std::vector<std::size_t> order(energy.size());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t i, std::size_t j) { return energy[i] < energy[j]; });
    out.quasi_energies.resize(order.size());
    out.eigenvectors.resize(dim, dim);
    for (std::size_t k = 0; k < order.size(); ++k) {
        out.quasi_energies[k] = energy[order[k]];
        out.eigenvectors.col(static_cast<Eigen::Index>(k)) =
            q.col(static_cast<Eigen::Index>(order[k]));
    }
    return out;
}

} // namespace bpfree
