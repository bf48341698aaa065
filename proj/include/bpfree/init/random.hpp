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


#ifndef BPFREE_INIT_RANDOM_HPP
#define BPFREE_INIT_RANDOM_HPP

#include <cstdint>
#include <random>

namespace bpfree {

/// One splitmix64 output step applied to x.
std::uint64_t splitmix64(std::uint64_t x);

/// splitmix64(master ^ index). sub_seed(0, 0) == 0xE220A8397B1DCDAF.
std::uint64_t sub_seed(std::uint64_t master, std::uint64_t index);

/// mt19937_64 with portable uniform and normal transforms, so streams match
/// bit for bit across standard libraries.
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next_u64() { return engine_(); }
    /// Uniform on [0, 1) with 53 random bits.
    double uniform();
    /// Uniform on [lo, hi).
    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }
    /// Standard normal via the Box-Muller transform.
    double normal();
    /// Uniform integer in [0, n).
    std::uint64_t below(std::uint64_t n);

  private:
    std::mt19937_64 engine_;
    bool has_spare_ = false;
    double spare_ = 0.0;
};

} // namespace bpfree

#endif // BPFREE_INIT_RANDOM_HPP
