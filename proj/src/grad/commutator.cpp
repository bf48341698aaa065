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


#include "bpfree/grad/commutator.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

namespace bpfree {

Observable commutator_oracle(const LatticeGraph& lattice, std::span<const double> row,
                             ObservableKind kind) {
    const std::size_t n = lattice.n_qubits();
    if (row.size() != 2 * n) {
        throw std::invalid_argument("commutator_oracle: row must hold 2N angles");
    }
    for (double x : row) {
        if (!std::isfinite(x)) {
            throw std::invalid_argument("commutator_oracle: non-finite angle");
        }
    }
    const double theta = row[0];
    for (std::size_t q = 1; q < n; ++q) {
        if (row[q] != theta) {
            throw std::invalid_argument("commutator_oracle: RX angles of the row must be equal");
        }
    }
    if (n > 63) {
        throw std::invalid_argument("commutator_oracle: at most 63 qubits");
    }

    std::vector<std::size_t> sites{0};
    const auto& nb = lattice.neighbors(0);
    if (kind == ObservableKind::LocalY1) {
        sites.insert(sites.end(), nb.begin(), nb.end());
    } else {
        for (std::size_t j = 1; j < n; ++j) {
            if (std::find(nb.begin(), nb.end(), j) == nb.end()) {
                sites.push_back(j);
            }
        }
    }

    const double c = std::cos(theta);
    const double s = std::sin(theta);
    const double prefactor = -std::cos(row[n]);
    Observable out(n);
    if (prefactor == 0.0) {
        return out;
    }
    // Bit t of `choice` picks Y (set) or Z (clear) on sites[t].
    const std::uint64_t count = std::uint64_t{1} << sites.size();
    for (std::uint64_t choice = 0; choice < count; ++choice) {
        double coeff = prefactor;
        PauliString p(n);
        for (std::size_t t = 0; t < sites.size(); ++t) {
            const bool y = (choice >> t) & 1;
            coeff *= y ? s : c;
            p.set_letter(sites[t], y ? Pauli::Y : Pauli::Z);
        }
        if (coeff != 0.0) {
            out.add(coeff, std::move(p));
        }
    }
    return out;
}

} // namespace bpfree
