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


#include "bpfree/vqe/hamiltonians.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace bpfree {

namespace {

PauliString word(std::size_t n, std::initializer_list<std::pair<std::size_t, Pauli>> letters) {
    PauliString p(n);
    for (const auto& [q, a] : letters) {
        p.set_letter(q, a);
    }
    return p;
}

void check_field(double h) {
    if (!std::isfinite(h)) {
        throw std::invalid_argument("field strength must be finite");
    }
}

} // namespace

Observable build_h1(std::size_t n, double h) {
    if (n < 2) {
        throw std::invalid_argument("build_h1: need at least 2 qubits");
    }
    check_field(h);
    Observable obs(n);
    for (std::size_t i = 0; i + 1 < n; ++i) {
        for (Pauli a : {Pauli::X, Pauli::Y, Pauli::Z}) {
            obs.add(1.0, word(n, {{i, a}, {i + 1, a}}));
        }
    }
    for (std::size_t i = 0; i < n; ++i) {
        obs.add(h, PauliString::single(n, i, Pauli::Z));
    }
    return obs;
}

Observable build_h2(std::size_t n, double h) {
    if (n < 3) {
        throw std::invalid_argument("build_h2: need at least 3 qubits");
    }
    check_field(h);
    Observable obs(n);
    for (std::size_t i = 1; i + 2 < n; ++i) {
        obs.add(-1.0, word(n, {{i - 1, Pauli::Z}, {i, Pauli::X}, {i + 1, Pauli::Z}}));
    }
    obs.add(-1.0, word(n, {{0, Pauli::X}, {1, Pauli::Z}}));
    obs.add(-1.0, word(n, {{n - 2, Pauli::Z}, {n - 1, Pauli::X}}));
    for (std::size_t i = 0; i < n; ++i) {
        obs.add(-h, PauliString::single(n, i, Pauli::Z));
    }
    return obs;
}

Model parse_model(std::string_view name) {
    if (name == "h1") {
        return Model::H1;
    }
    if (name == "h2") {
        return Model::H2;
    }
    throw std::invalid_argument("unknown model '" + std::string(name) + "' (expected h1 or h2)");
}

std::string_view to_string(Model model) { return model == Model::H1 ? "h1" : "h2"; }

Observable build_model(Model model, std::size_t n, double h) {
    return model == Model::H1 ? build_h1(n, h) : build_h2(n, h);
}

} // namespace bpfree
