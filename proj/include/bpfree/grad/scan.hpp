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


#ifndef BPFREE_GRAD_SCAN_HPP
#define BPFREE_GRAD_SCAN_HPP

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "bpfree/grad/gradient.hpp"
#include "bpfree/init/init.hpp"

namespace bpfree {

/// Lattice used at every N of a scan.
struct LatticeFamily {
    enum class Kind { Chain, PeriodicChain, Grid };
    Kind kind = Kind::Chain;
    /// Grid row count; 0 picks the most square factorization of N.
    std::size_t rows = 0;

    LatticeGraph make(std::size_t n) const;
    std::string name() const;
};

/// Which gradient entries feed the per-sample statistic.
enum class ScanTarget {
    RxQubit0LayerMean, ///< mean over blocks i of (dC/d theta[i][0])^2
    LastRxQubit0,      ///< (dC/d theta[p-1][0])^2
    LastRzQubit0,      ///< (dC/d theta[p-1][N])^2
};

ScanTarget parse_scan_target(std::string_view name);
std::string_view to_string(ScanTarget target);

struct ScanConfig {
    InitScheme scheme;
    LatticeFamily lattice;
    std::vector<std::size_t> n_list;
    std::vector<std::size_t> p_list;
    ObservableKind observable = ObservableKind::LocalY1;
    std::size_t samples = 1;
    std::uint64_t master_seed = 0;
    ScanTarget target = ScanTarget::RxQubit0LayerMean;
    InitialState initial = InitialState::Zero;
    std::size_t threads = 1;
};

struct ScanRecord {
    std::string scheme;
    std::size_t n = 0;
    std::size_t p = 0;
    std::string observable;
    std::size_t samples = 0;
    double mean_sq_grad = 0.0;
    double std_error = 0.0;
    std::uint64_t seed = 0;
    std::string target;
};

/// Seed of sample s at (N, p): sub_seed(sub_seed(master, N * 65536 + p), s).
std::uint64_t scan_sample_seed(std::uint64_t master, std::size_t n, std::size_t p,
                               std::size_t s);

/// One record per (N, p) in list order; std_error is the sample standard
/// deviation (n - 1 denominator) over sqrt(samples).
std::vector<ScanRecord> scan(const ScanConfig& config);

/// Statistics of the raw final-block gradient entry at one (N, p).
struct SlotStats {
    std::size_t n = 0;
    std::size_t p = 0;
    std::size_t samples = 0;
    double mean = 0.0;
    double variance = 0.0;
    double mean_sq = 0.0;
    double mean_sq_stderr = 0.0;
};

struct LongTimeConfig {
    LatticeFamily lattice;
    std::size_t n = 2;
    std::vector<std::size_t> p_list;
    std::size_t samples = 1;
    std::uint64_t master_seed = 0;
    ObservableKind observable = ObservableKind::LocalY1;
    InitScheme scheme = InitScheme::mbl();
    /// LastRzQubit0 (default) or LastRxQubit0.
    ScanTarget target = ScanTarget::LastRzQubit0;
    std::size_t threads = 1;
};

/// Mean, variance and mean square of the final-block gradient entry for each p.
std::vector<SlotStats> long_time_rz_scan(const LongTimeConfig& config);

} // namespace bpfree

#endif // BPFREE_GRAD_SCAN_HPP
