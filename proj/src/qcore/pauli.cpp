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

#include "bpfree/qcore/pauli.hpp"

#include <cmath>
#include <stdexcept>

namespace bpfree {

Phase operator*(Phase a, Phase b) {
    return static_cast<Phase>((static_cast<int>(a) + static_cast<int>(b)) & 3);
}

cplx phase_value(Phase p) {
    switch (p) {
    case Phase::PlusOne:
        return {1.0, 0.0};
    case Phase::PlusI:
        return {0.0, 1.0};
    case Phase::MinusOne:
        return {-1.0, 0.0};
    case Phase::MinusI:
        return {0.0, -1.0};
    }
    return {1.0, 0.0};
}

PauliString::PauliString(std::size_t n_qubits) : letters_(n_qubits, Pauli::I) {
    if (n_qubits == 0) {
        throw std::invalid_argument("PauliString: n_qubits must be positive");
    }
}

PauliString::PauliString(std::string_view text) {
    if (text.starts_with("+i")) {
        phase_ = Phase::PlusI;
        text.remove_prefix(2);
    } else if (text.starts_with("-i")) {
        phase_ = Phase::MinusI;
        text.remove_prefix(2);
    } else if (text.starts_with('+')) {
        text.remove_prefix(1);
    } else if (text.starts_with('-')) {
        phase_ = Phase::MinusOne;
        text.remove_prefix(1);
    }
    if (text.empty()) {
        throw std::invalid_argument("PauliString: empty letter string");
    }
    letters_.reserve(text.size());
    for (char c : text) {
        switch (c) {
        case 'I':
        case '_':
            letters_.push_back(Pauli::I);
            break;
        case 'X':
            letters_.push_back(Pauli::X);
            break;
        case 'Y':
            letters_.push_back(Pauli::Y);
            break;
        case 'Z':
            letters_.push_back(Pauli::Z);
            break;
        default:
            throw std::invalid_argument(std::string("PauliString: invalid letter '") + c + "'");
        }
    }
}

PauliString PauliString::single(std::size_t n_qubits, std::size_t qubit, Pauli letter) {
    if (qubit >= n_qubits) {
        throw std::out_of_range("PauliString::single: qubit index out of range");
    }
    PauliString p(n_qubits);
    p.letters_[qubit] = letter;
    return p;
}

std::size_t PauliString::weight() const {
    std::size_t w = 0;
    for (Pauli l : letters_) {
        w += l != Pauli::I;
    }
    return w;
}

std::vector<std::size_t> PauliString::support() const {
    std::vector<std::size_t> out;
    for (std::size_t j = 0; j < letters_.size(); ++j) {
        if (letters_[j] != Pauli::I) {
            out.push_back(j);
        }
    }
    return out;
}

namespace {

void require_mask_width(std::size_t n) {
    if (n > 64) {
        throw std::invalid_argument("PauliString: bit masks need n_qubits <= 64");
    }
}

} // namespace

std::uint64_t PauliString::x_mask() const {
    require_mask_width(letters_.size());
    std::uint64_t m = 0;
    for (std::size_t j = 0; j < letters_.size(); ++j) {
        if (letters_[j] == Pauli::X || letters_[j] == Pauli::Y) {
            m |= std::uint64_t{1} << j;
        }
    }
    return m;
}

std::uint64_t PauliString::z_mask() const {
    require_mask_width(letters_.size());
    std::uint64_t m = 0;
    for (std::size_t j = 0; j < letters_.size(); ++j) {
        if (letters_[j] == Pauli::Z || letters_[j] == Pauli::Y) {
            m |= std::uint64_t{1} << j;
        }
    }
    return m;
}

std::size_t PauliString::y_count() const {
    std::size_t c = 0;
    for (Pauli l : letters_) {
        c += l == Pauli::Y;
    }
    return c;
}

bool PauliString::commutes_with(const PauliString& other) const {
    if (other.n_qubits() != n_qubits()) {
        throw std::invalid_argument("PauliString::commutes_with: qubit-count mismatch");
    }
    std::size_t anti = 0;
    for (std::size_t j = 0; j < letters_.size(); ++j) {
        const Pauli a = letters_[j];
        const Pauli b = other.letters_[j];
        anti += a != Pauli::I && b != Pauli::I && a != b;
    }
    return anti % 2 == 0;
}

std::string PauliString::letters_string() const {
    static constexpr char kChars[] = {'I', 'X', 'Y', 'Z'};
    std::string s;
    s.reserve(letters_.size());
    for (Pauli l : letters_) {
        s.push_back(kChars[static_cast<int>(l)]);
    }
    return s;
}

std::string PauliString::to_string() const {
    static constexpr const char* kPrefix[] = {"+", "+i", "-", "-i"};
    return kPrefix[static_cast<int>(phase_)] + letters_string();
}

PauliString pauli_mul(const PauliString& a, const PauliString& b) {
    if (a.n_qubits() != b.n_qubits()) {
        throw std::invalid_argument("pauli_mul: qubit-count mismatch");
    }
    PauliString out(a.n_qubits());
    int power = static_cast<int>(a.phase()) + static_cast<int>(b.phase());
    for (std::size_t j = 0; j < a.n_qubits(); ++j) {
        const int la = static_cast<int>(a.letter(j));
        const int lb = static_cast<int>(b.letter(j));
        out.set_letter(j, static_cast<Pauli>(la ^ lb));
        if (la != 0 && lb != 0 && la != lb) {
            // XY = iZ, YZ = iX, ZX = iY; the reversed orders pick up -i.
            power += ((lb - la + 3) % 3 == 1) ? 1 : 3;
        }
    }
    out.set_phase(static_cast<Phase>(power & 3));
    return out;
}

Observable Observable::from_pauli(const PauliString& p, double coeff) {
    Observable o(p.n_qubits());
    o.add(coeff, p);
    return o;
}

Observable& Observable::add(double coeff, PauliString pauli) {
    if (pauli.n_qubits() != n_qubits_) {
        throw std::invalid_argument("Observable::add: qubit-count mismatch");
    }
    if (!pauli.hermitian()) {
        throw std::invalid_argument("Observable::add: term " + pauli.to_string() +
                                    " is not Hermitian");
    }
    if (!std::isfinite(coeff)) {
        throw std::invalid_argument("Observable::add: non-finite coefficient");
    }
    terms_.push_back({coeff, std::move(pauli)});
    return *this;
}

double Observable::coefficient_l1() const {
    double s = 0.0;
    for (const auto& t : terms_) {
        s += std::abs(t.coeff);
    }
    return s;
}

} // namespace bpfree
