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

#ifndef BPFREE_QCORE_PAULI_HPP
#define BPFREE_QCORE_PAULI_HPP

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "bpfree/qcore/common.hpp"

namespace bpfree {

// The encoding makes the letter of a product the XOR of the factors' letters.
enum class Pauli : std::uint8_t { I = 0, X = 1, Y = 2, Z = 3 };

/// Global phase i^k of a Pauli string, stored as k mod 4.
enum class Phase : std::uint8_t { PlusOne = 0, PlusI = 1, MinusOne = 2, MinusI = 3 };

Phase operator*(Phase a, Phase b);
cplx phase_value(Phase p);

/// Signed Pauli word phase * P_0 (x) P_1 (x) ... on n qubits.
///
/// Letter j acts on qubit j. String forms list qubit 0 first, so "ZXI" is
/// Z_0 X_1 I_2, optionally prefixed with one of "+", "-", "+i", "-i".
class PauliString {
  public:
    explicit PauliString(std::size_t n_qubits);
    explicit PauliString(std::string_view text);

    static PauliString single(std::size_t n_qubits, std::size_t qubit, Pauli letter);

    std::size_t n_qubits() const { return letters_.size(); }
    Pauli letter(std::size_t qubit) const { return letters_.at(qubit); }
    void set_letter(std::size_t qubit, Pauli letter) { letters_.at(qubit) = letter; }
    Phase phase() const { return phase_; }
    void set_phase(Phase phase) { phase_ = phase; }

    std::size_t weight() const;
    std::vector<std::size_t> support() const;
    bool is_identity() const { return weight() == 0; }
    bool hermitian() const { return phase_ == Phase::PlusOne || phase_ == Phase::MinusOne; }

    // Bit j of x_mask is set for X or Y on qubit j; z_mask for Z or Y.
    std::uint64_t x_mask() const;
    std::uint64_t z_mask() const;
    std::size_t y_count() const;

    bool commutes_with(const PauliString& other) const;

    /// Letters only, qubit 0 first, e.g. "ZXZII".
    std::string letters_string() const;
    /// Letters with a phase prefix, e.g. "-iXY".
    std::string to_string() const;

    friend bool operator==(const PauliString&, const PauliString&) = default;

  private:
    std::vector<Pauli> letters_;
    Phase phase_ = Phase::PlusOne;
};

/// Group product a*b with accumulated phase.
PauliString pauli_mul(const PauliString& a, const PauliString& b);

/// Real linear combination of Hermitian Pauli strings on a common register.
class Observable {
  public:
    struct Term {
        double coeff;
        PauliString pauli;
    };

    explicit Observable(std::size_t n_qubits) : n_qubits_(n_qubits) {}

    static Observable from_pauli(const PauliString& p, double coeff = 1.0);

    /// Throws std::invalid_argument on a qubit-count mismatch or a non-Hermitian
    /// (+-i phase) string.
    Observable& add(double coeff, PauliString pauli);

    std::size_t n_qubits() const { return n_qubits_; }
    const std::vector<Term>& terms() const { return terms_; }
    std::size_t size() const { return terms_.size(); }
    double coefficient_l1() const;

  private:
    std::size_t n_qubits_;
    std::vector<Term> terms_;
};

} // namespace bpfree

#endif // BPFREE_QCORE_PAULI_HPP
