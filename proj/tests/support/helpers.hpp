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


#ifndef BPFREE_TESTS_SUPPORT_HELPERS_HPP
#define BPFREE_TESTS_SUPPORT_HELPERS_HPP

#include <random>
#include <vector>

#include "bpfree/hea/circuit.hpp"
#include "bpfree/qcore/statevector.hpp"
#include "dense_oracle.hpp"

namespace testing_support {

inline oracle::Vec to_vec(const bpfree::StateVector& s) {
    oracle::Vec v(static_cast<Eigen::Index>(s.dim()));
    for (std::size_t i = 0; i < s.dim(); ++i) {
        v(static_cast<Eigen::Index>(i)) = s[i];
    }
    return v;
}

inline double max_diff(const oracle::Vec& a, const oracle::Vec& b) {
    return (a - b).cwiseAbs().maxCoeff();
}

inline bpfree::StateVector random_state(std::size_t n, std::uint64_t seed) {
    std::mt19937_64 g(seed);
    std::normal_distribution<double> nd;
    std::vector<bpfree::cplx> a(std::size_t{1} << n);
    for (auto& x : a) {
        x = {nd(g), nd(g)};
    }
    return bpfree::StateVector::normalized(n, std::move(a));
}

inline std::vector<std::vector<double>> rows_of(const bpfree::ParamMatrix& pm) {
    std::vector<std::vector<double>> out;
    for (std::size_t i = 0; i < pm.rows(); ++i) {
        const auto r = pm.row(i);
        out.emplace_back(r.begin(), r.end());
    }
    return out;
}

inline bpfree::ParamMatrix random_params(std::size_t p, std::size_t n, std::uint64_t seed,
                                         double lo = -3.2, double hi = 3.2) {
    std::mt19937_64 g(seed);
    std::uniform_real_distribution<double> u(lo, hi);
    bpfree::ParamMatrix pm(p, 2 * n);
    for (double& x : pm.values()) {
        x = u(g);
    }
    return pm;
}

inline oracle::Edges edges_of(const bpfree::LatticeGraph& g) {
    return oracle::Edges(g.edges().begin(), g.edges().end());
}

} // namespace testing_support

#endif // BPFREE_TESTS_SUPPORT_HELPERS_HPP
