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


#include "bpfree/grad/scan.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "bpfree/init/random.hpp"
#include "bpfree/qcore/parallel.hpp"

namespace bpfree {

LatticeGraph LatticeFamily::make(std::size_t n) const {
    switch (kind) {
    case Kind::Chain:
        return chain_1d(n);
    case Kind::PeriodicChain:
        return chain_1d(n, true);
    case Kind::Grid: {
        std::size_t r = rows;
        if (r == 0) {
            r = 1;
            for (std::size_t d = 1; d * d <= n; ++d) {
                if (n % d == 0) {
                    r = d;
                }
            }
        }
        if (n % r != 0) {
            throw std::invalid_argument("grid lattice: " + std::to_string(n) +
                                        " qubits do not fill " + std::to_string(r) + " rows");
        }
        return grid_2d(r, n / r);
    }
    }
    throw std::logic_error("unreachable");
}

std::string LatticeFamily::name() const {
    switch (kind) {
    case Kind::Chain:
        return "chain";
    case Kind::PeriodicChain:
        return "periodic_chain";
    case Kind::Grid:
        return rows == 0 ? "grid" : "grid" + std::to_string(rows) + "xC";
    }
    return "?";
}

ScanTarget parse_scan_target(std::string_view name) {
    if (name == "rx0-layer-mean") {
        return ScanTarget::RxQubit0LayerMean;
    }
    if (name == "rx0-last") {
        return ScanTarget::LastRxQubit0;
    }
    if (name == "rz0-last") {
        return ScanTarget::LastRzQubit0;
    }
    throw std::invalid_argument("unknown scan target '" + std::string(name) +
                                "' (expected rx0-layer-mean, rx0-last or rz0-last)");
}

std::string_view to_string(ScanTarget target) {
    switch (target) {
    case ScanTarget::RxQubit0LayerMean:
        return "rx0-layer-mean";
    case ScanTarget::LastRxQubit0:
        return "rx0-last";
    case ScanTarget::LastRzQubit0:
        return "rz0-last";
    }
    return "?";
}

std::uint64_t scan_sample_seed(std::uint64_t master, std::size_t n, std::size_t p,
                               std::size_t s) {
    return sub_seed(sub_seed(master, static_cast<std::uint64_t>(n) * 65536u + p), s);
}

namespace {

struct Moments {
    double mean = 0.0;
    double variance = 0.0; // n - 1 denominator; 0 for a single value
};

Moments moments(const std::vector<double>& x) {
    Moments m;
    for (double v : x) {
        m.mean += v;
    }
    m.mean /= static_cast<double>(x.size());
    if (x.size() > 1) {
        double ss = 0.0;
        for (double v : x) {
            ss += (v - m.mean) * (v - m.mean);
        }
        m.variance = ss / static_cast<double>(x.size() - 1);
    }
    return m;
}

// Raw gradient values per sample: one value per block for the layer mean,
// otherwise the single targeted entry.
std::vector<std::vector<double>> collect(const HeaCircuit& circuit, const InitScheme& scheme,
                                         const Observable& obs, ScanTarget target,
                                         std::size_t samples, std::uint64_t master,
                                         std::size_t threads) {
    const std::size_t n = circuit.n_qubits();
    const std::size_t p = circuit.depth();
    const StateVector initial = circuit.initial();
    std::vector<std::vector<double>> out(samples);
    parallel_for(samples, threads, [&](std::size_t s) {
        const ParamMatrix params = sample(scheme, circuit, scan_sample_seed(master, n, p, s));
        const GradResult g = grad_adjoint(circuit, params, initial, obs);
        switch (target) {
        case ScanTarget::RxQubit0LayerMean:
            for (std::size_t i = 0; i < p; ++i) {
                out[s].push_back(g.at(i, 0));
            }
            break;
        case ScanTarget::LastRxQubit0:
            out[s].push_back(g.at(p - 1, 0));
            break;
        case ScanTarget::LastRzQubit0:
            out[s].push_back(g.at(p - 1, n));
            break;
        }
    });
    return out;
}

} // namespace

std::vector<ScanRecord> scan(const ScanConfig& config) {
    if (config.n_list.empty() || config.p_list.empty()) {
        throw std::invalid_argument("scan: N and p lists must be non-empty");
    }
    if (config.samples == 0) {
        throw std::invalid_argument("scan: samples must be at least 1");
    }
    std::vector<ScanRecord> records;
    for (std::size_t n : config.n_list) {
        const LatticeGraph lattice = config.lattice.make(n);
        const Observable obs = make_observable(config.observable, n);
        for (std::size_t p : config.p_list) {
            if (p == 0) {
                throw std::invalid_argument("scan: p must be positive");
            }
            const HeaCircuit circuit(lattice, p, config.initial);
            const auto raw = collect(circuit, config.scheme, obs, config.target, config.samples,
                                     config.master_seed, config.threads);
            std::vector<double> stat(raw.size());
            for (std::size_t s = 0; s < raw.size(); ++s) {
                double acc = 0.0;
                for (double v : raw[s]) {
                    acc += v * v;
                }
                stat[s] = acc / static_cast<double>(raw[s].size());
            }
            const Moments m = moments(stat);
            ScanRecord r;
            r.scheme = std::string(to_string(config.scheme.tag));
            r.n = n;
            r.p = p;
            r.observable = std::string(to_string(config.observable));
            r.samples = config.samples;
            r.mean_sq_grad = m.mean;
            r.std_error = std::sqrt(m.variance / static_cast<double>(stat.size()));
            r.seed = config.master_seed;
            r.target = std::string(to_string(config.target));
            records.push_back(std::move(r));
        }
    }
    return records;
}

std::vector<SlotStats> long_time_rz_scan(const LongTimeConfig& config) {
    if (config.p_list.empty()) {
        throw std::invalid_argument("long_time_rz_scan: p list must be non-empty");
    }
    if (config.samples == 0) {
        throw std::invalid_argument("long_time_rz_scan: samples must be at least 1");
    }
    if (config.target == ScanTarget::RxQubit0LayerMean) {
        throw std::invalid_argument("long_time_rz_scan: target must be a single final-block slot");
    }
    const LatticeGraph lattice = config.lattice.make(config.n);
    const Observable obs = make_observable(config.observable, config.n);
    std::vector<SlotStats> out;
    for (std::size_t p : config.p_list) {
        if (p == 0) {
            throw std::invalid_argument("long_time_rz_scan: p must be positive");
        }
        const HeaCircuit circuit(lattice, p);
        const auto raw = collect(circuit, config.scheme, obs, config.target, config.samples,
                                 config.master_seed, config.threads);
        std::vector<double> val(raw.size());
        std::vector<double> sq(raw.size());
        for (std::size_t s = 0; s < raw.size(); ++s) {
            val[s] = raw[s][0];
            sq[s] = val[s] * val[s];
        }
        const Moments mv = moments(val);
        const Moments ms = moments(sq);
        out.push_back({config.n, p, config.samples, mv.mean, mv.variance, ms.mean,
                       std::sqrt(ms.variance / static_cast<double>(sq.size()))});
    }
    return out;
}

} // namespace bpfree
