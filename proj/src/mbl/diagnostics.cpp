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


#include "bpfree/mbl/diagnostics.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include <Eigen/SVD>

#include "bpfree/init/random.hpp"
#include "bpfree/qcore/parallel.hpp"

namespace bpfree {

double half_chain_entropy(std::span<const double> vec, std::size_t n) {
    if (n == 0 || n % 2 != 0) {
        throw std::invalid_argument("half_chain_entropy: n must be even and positive");
    }
    if (n > 30 || vec.size() != dim_of(n)) {
        throw std::invalid_argument("half_chain_entropy: vector length must be 2^n");
    }
    const auto side = static_cast<Eigen::Index>(dim_of(n / 2));
    const Eigen::Map<const Eigen::MatrixXd> m(vec.data(), side, side);
    const double nrm2 = m.squaredNorm();
    if (std::abs(nrm2 - 1.0) > 1e-8) {
        throw std::invalid_argument("half_chain_entropy: vector is not normalized");
    }
    const Eigen::JacobiSVD<Eigen::MatrixXd> svd(m);
    double s = 0.0;
    for (Eigen::Index k = 0; k < svd.singularValues().size(); ++k) {
        const double p = svd.singularValues()(k) * svd.singularValues()(k);
        if (p > 0.0) {
            s -= p * std::log2(p);
        }
    }
    return std::max(s, 0.0);
}

double page_entropy(std::size_t n) {
    return static_cast<double>(n) / 2.0 - std::numbers::log2e / 2.0;
}

double gap_ratios(std::span<const double> quasi_energies, bool wrap) {
    if (quasi_energies.size() < 3) {
        throw std::invalid_argument("gap_ratios: need at least 3 levels");
    }
    std::vector<double> e(quasi_energies.begin(), quasi_energies.end());
    for (double x : e) {
        if (!std::isfinite(x)) {
            throw std::invalid_argument("gap_ratios: non-finite level");
        }
    }
    std::sort(e.begin(), e.end());
    std::vector<double> gap;
    gap.reserve(e.size());
    for (std::size_t i = 0; i + 1 < e.size(); ++i) {
        gap.push_back(e[i + 1] - e[i]);
    }
    if (wrap) {
        gap.push_back(e.front() + 2.0 * std::numbers::pi - e.back());
    }
    double sum = 0.0;
    for (std::size_t i = 0; i + 1 < gap.size(); ++i) {
        const double lo = std::min(gap[i], gap[i + 1]);
        const double hi = std::max(gap[i], gap[i + 1]);
        sum += hi == 0.0 ? 1.0 : lo / hi;
    }
    return sum / static_cast<double>(gap.size() - 1);
}

std::vector<double> disorder_phases(std::uint64_t master, std::size_t n, std::size_t r) {
    Rng rng(sub_seed(sub_seed(master, n), r));
    std::vector<double> phi(n);
    for (double& x : phi) {
        x = rng.uniform(-std::numbers::pi, std::numbers::pi);
    }
    return phi;
}

namespace {

struct Realization {
    double entropy = 0.0;
    double variance = 0.0;
    double ratio = 0.0;
};

std::pair<double, double> mean_and_stderr(const std::vector<double>& x) {
    double mean = 0.0;
    for (double v : x) {
        mean += v;
    }
    mean /= static_cast<double>(x.size());
    if (x.size() < 2) {
        return {mean, 0.0};
    }
    double ss = 0.0;
    for (double v : x) {
        ss += (v - mean) * (v - mean);
    }
    const double var = ss / static_cast<double>(x.size() - 1);
    return {mean, std::sqrt(var / static_cast<double>(x.size()))};
}

} // namespace

std::vector<MblPoint> phase_scan(const PhaseScanConfig& config) {
    if (config.n_list.empty() || config.theta_over_pi.empty()) {
        throw std::invalid_argument("phase_scan: N and theta lists must be non-empty");
    }
    if (config.realizations == 0) {
        throw std::invalid_argument("phase_scan: realizations must be at least 1");
    }
    for (std::size_t n : config.n_list) {
        if (n < 2 || n % 2 != 0 || n > 14) {
            throw std::invalid_argument("phase_scan: N must be even and in [2, 14]");
        }
    }
    std::vector<MblPoint> out;
    for (std::size_t n : config.n_list) {
        const LatticeGraph lattice = chain_1d(n, config.periodic);
        for (double t : config.theta_over_pi) {
            if (!std::isfinite(t)) {
                throw std::invalid_argument("phase_scan: non-finite theta");
            }
            std::vector<Realization> res(config.realizations);
            parallel_for(config.realizations, config.threads, [&](std::size_t r) {
                const auto phi = disorder_phases(config.master_seed, n, r);
                const auto v = build_v_tilde(n, t * std::numbers::pi, phi, lattice);
                const FloquetSpectrum spec = floquet_eig(v, config.degeneracy_tol);
                const auto dim = spec.eigenvectors.cols();
                double s1 = 0.0;
                double s2 = 0.0;
                for (Eigen::Index k = 0; k < dim; ++k) {
                    const double s = half_chain_entropy(
                        {spec.eigenvectors.col(k).data(), static_cast<std::size_t>(dim)}, n);
                    s1 += s;
                    s2 += s * s;
                }
                s1 /= static_cast<double>(dim);
                s2 /= static_cast<double>(dim);
                res[r] = {s1, std::max(0.0, s2 - s1 * s1),
                          gap_ratios(spec.quasi_energies, config.wrap_gap)};
            });
            std::vector<double> e(res.size()), var(res.size()), ratio(res.size());
            for (std::size_t r = 0; r < res.size(); ++r) {
                e[r] = res[r].entropy;
                var[r] = res[r].variance;
                ratio[r] = res[r].ratio;
            }
            MblPoint pt;
            pt.theta_over_pi = t;
            pt.n = n;
            pt.realizations = config.realizations;
            std::tie(pt.mean_entropy, pt.entropy_stderr) = mean_and_stderr(e);
            std::tie(pt.entropy_variance, pt.variance_stderr) = mean_and_stderr(var);
            std::tie(pt.gap_ratio, pt.gap_ratio_stderr) = mean_and_stderr(ratio);
            out.push_back(pt);
        }
    }
    return out;
}

} // namespace bpfree
