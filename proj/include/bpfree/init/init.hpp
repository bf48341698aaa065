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


#ifndef BPFREE_INIT_INIT_HPP
#define BPFREE_INIT_INIT_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "bpfree/hea/circuit.hpp"

namespace bpfree {

/// Parameter-initialization rule.
///   Small:    every angle ~ U[0, pi/(p N)].
///   Mbl:      per block, RX angles share one draw ~ U[0, theta_max] (or the
///             fixed value), RZ angles ~ U[-pi, pi].
///   Random:   every angle ~ U[0, 2 pi).
///   Gaussian: every angle ~ N(0, 1/(S p)).
struct InitScheme {
    enum class Tag { Small, Mbl, Random, Gaussian };

    Tag tag = Tag::Small;
    double theta_max = 0.1;
    std::optional<double> fixed_theta;
    long long weight = 0;

    static InitScheme of(Tag tag) {
        InitScheme s;
        s.tag = tag;
        return s;
    }
    static InitScheme small() { return of(Tag::Small); }
    static InitScheme mbl(double theta_max = 0.1);
    static InitScheme mbl_fixed(double theta);
    static InitScheme random() { return of(Tag::Random); }
    /// Throws std::invalid_argument unless S >= 1.
    static InitScheme gaussian(long long weight);
};

std::string_view to_string(InitScheme::Tag tag);
InitScheme::Tag parse_scheme_tag(std::string_view name);

/// Deterministic in (scheme, circuit shape, seed). Entries are drawn block by
/// block in column order.
ParamMatrix sample(const InitScheme& scheme, const HeaCircuit& circuit, std::uint64_t seed);
ParamMatrix sample(const InitScheme& scheme, std::size_t depth, std::size_t n_qubits,
                   std::uint64_t seed);

} // namespace bpfree

#endif // BPFREE_INIT_INIT_HPP
