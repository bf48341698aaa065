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


#include "bpfree/init/init.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "bpfree/init/random.hpp"

namespace bpfree {

InitScheme InitScheme::mbl(double theta_max) {
    if (!(theta_max >= 0.0) || !std::isfinite(theta_max)) {
        throw std::invalid_argument("mbl init: theta_max must be finite and non-negative");
    }
    InitScheme s = of(Tag::Mbl);
    s.theta_max = theta_max;
    return s;
}

InitScheme InitScheme::mbl_fixed(double theta) {
    if (!std::isfinite(theta)) {
        throw std::invalid_argument("mbl init: fixed theta must be finite");
    }
    InitScheme s = of(Tag::Mbl);
    s.theta_max = theta;
    s.fixed_theta = theta;
    return s;
}

InitScheme InitScheme::gaussian(long long weight) {
    if (weight <= 0) {
        throw std::invalid_argument("gaussian init: observable weight S must be positive");
    }
    InitScheme s = of(Tag::Gaussian);
    s.weight = weight;
    return s;
}

std::string_view to_string(InitScheme::Tag tag) {
    switch (tag) {
    case InitScheme::Tag::Small:
        return "small";
    case InitScheme::Tag::Mbl:
        return "mbl";
    case InitScheme::Tag::Random:
        return "random";
    case InitScheme::Tag::Gaussian:
        return "gaussian";
    }
    return "?";
}

InitScheme::Tag parse_scheme_tag(std::string_view name) {
    if (name == "small") {
        return InitScheme::Tag::Small;
    }
    if (name == "mbl") {
        return InitScheme::Tag::Mbl;
    }
    if (name == "random") {
        return InitScheme::Tag::Random;
    }
    if (name == "gaussian") {
        return InitScheme::Tag::Gaussian;
    }
    throw std::invalid_argument("unknown init scheme '" + std::string(name) +
                                "' (expected small, mbl, random or gaussian)");
}

ParamMatrix sample(const InitScheme& scheme, std::size_t depth, std::size_t n,
                   std::uint64_t seed) {
    constexpr double pi = std::numbers::pi;
    ParamMatrix out(depth, 2 * n);
    if (depth == 0) {
        return out;
    }
    Rng rng(seed);
    switch (scheme.tag) {
    case InitScheme::Tag::Small: {
        const double upper = pi / (static_cast<double>(depth) * static_cast<double>(n));
        for (double& x : out.values()) {
            x = rng.uniform(0.0, upper);
        }
        break;
    }
    case InitScheme::Tag::Mbl:
        for (std::size_t i = 0; i < depth; ++i) {
            const double theta =
                scheme.fixed_theta ? *scheme.fixed_theta : rng.uniform(0.0, scheme.theta_max);
            auto row = out.row(i);
            for (std::size_t q = 0; q < n; ++q) {
                row[q] = theta;
            }
            for (std::size_t q = 0; q < n; ++q) {
                row[n + q] = rng.uniform(-pi, pi);
            }
        }
        break;
    case InitScheme::Tag::Random:
        for (double& x : out.values()) {
            x = rng.uniform(0.0, 2.0 * pi);
        }
        break;
    case InitScheme::Tag::Gaussian: {
        if (scheme.weight <= 0) {
            throw std::invalid_argument("gaussian init: observable weight S must be positive");
        }
        const double sd =
            1.0 / std::sqrt(static_cast<double>(scheme.weight) * static_cast<double>(depth));
        for (double& x : out.values()) {
            x = sd * rng.normal();
        }
        break;
    }
    }
    return out;
}

ParamMatrix sample(const InitScheme& scheme, const HeaCircuit& circuit, std::uint64_t seed) {
    return sample(scheme, circuit.depth(), circuit.n_qubits(), seed);
}

} // namespace bpfree
