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


#ifndef BPFREE_MBL_DIAGNOSTICS_HPP
#define BPFREE_MBL_DIAGNOSTICS_HPP

#include <cstdint>
#include <span>
#include <vector>

#include "bpfree/mbl/floquet.hpp"

namespace bpfree {

/// Entanglement entropy (log base 2) between qubits 0..n/2-1 and the rest.
/// The vector must be normalized within 1e-8 and n must be even.
double half_chain_entropy(std::span<const double> vec, std::size_t n);

/// n/2 - log2(e)/2.
double page_entropy(std::size_t n);

/// Mean adjacent gap ratio of the sorted levels, with r = 1 for 0/0 and r = 0
/// for x/0. `wrap` adds the gap from the highest level round to the lowest
/// plus 2 pi. Needs at least 3 levels.
double gap_ratios(std::span<const double> quasi_energies, bool wrap = false);

struct MblPoint {
    double theta_over_pi = 0.0;
    std::size_t n = 0;
    std::size_t realizations = 0;
    double mean_entropy = 0.0;
    double entropy_stderr = 0.0;
    double entropy_variance = 0.0;
    double variance_stderr = 0.0;
    double gap_ratio = 0.0;
    double gap_ratio_stderr = 0.0;
};

struct PhaseScanConfig {
    std::vector<std::size_t> n_list;
    std::vector<double> theta_over_pi;
    std::size_t realizations = 1;
    std::uint64_t master_seed = 0;
    bool periodic = false;
    bool wrap_gap = false;
    double degeneracy_tol = 1e-8;
    std::size_t threads = 1;
};

/// Phases of realization r at size n: U[-pi, pi] draws from the stream
/// sub_seed(sub_seed(master, n), r), shared across every theta.
std::vector<double> disorder_phases(std::uint64_t master, std::size_t n, std::size_t r);

/// One point per (n, theta) in list order. Per realization: eigenstate mean
/// entropy, eigenstate entropy variance and mean gap ratio; the point holds
/// their realization means and standard errors.
std::vector<MblPoint> phase_scan(const PhaseScanConfig& config);

} // namespace bpfree

#endif // BPFREE_MBL_DIAGNOSTICS_HPP
