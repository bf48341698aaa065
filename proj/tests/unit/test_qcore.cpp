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


#include <cmath>
#include <numbers>
#include <random>

#include <gtest/gtest.h>

#include "bpfree/qcore/dense.hpp"
#include "bpfree/qcore/parallel.hpp"
#include "bpfree/qcore/statevector.hpp"
#include "helpers.hpp"

using namespace bpfree;
using testing_support::max_diff;
using testing_support::random_state;
using testing_support::to_vec;

namespace {

std::string random_letters(std::mt19937_64& g, std::size_t n) {
    static const char kL[] = "IXYZ";
    std::string s;
    for (std::size_t i = 0; i < n; ++i) {
        s += kL[g() % 4];
    }
    return s;
}

oracle::Mat signed_matrix(const PauliString& p) {
    return phase_value(p.phase()) * oracle::pauli(p.letters_string());
}

} // namespace

TEST(PauliMul, XTimesYIsIZ) {
    const auto r = pauli_mul(PauliString("XI"), PauliString("YI"));
    EXPECT_EQ(r.letters_string(), "ZI");
    EXPECT_EQ(r.phase(), Phase::PlusI);
}

TEST(PauliMul, Involution) {
    for (const char* s : {"X", "Y", "Z", "I"}) {
        const auto r = pauli_mul(PauliString(s), PauliString(s));
        EXPECT_TRUE(r.is_identity());
        EXPECT_EQ(r.phase(), Phase::PlusOne);
    }
}

TEST(PauliMul, MatchesDenseProduct) {
    const PauliString a("XZ");
    const PauliString b("ZZ");
    const auto r = pauli_mul(a, b);
    EXPECT_LT((signed_matrix(r) - signed_matrix(a) * signed_matrix(b)).cwiseAbs().maxCoeff(),
              1e-15);
    // X Z = -i Y on qubit 0, Z Z = I on qubit 1.
    EXPECT_EQ(r.letters_string(), "YI");
    EXPECT_EQ(r.phase(), Phase::MinusI);
}

TEST(PauliMul, RejectsQubitMismatch) {
    EXPECT_THROW(pauli_mul(PauliString("X"), PauliString("XX")), std::invalid_argument);
}

TEST(PauliMul, ClosureAndAssociativityOnRandomTriples) {
    std::mt19937_64 g(11);
    for (int t = 0; t < 200; ++t) {
        PauliString a(random_letters(g, 4));
        PauliString b(random_letters(g, 4));
        PauliString c(random_letters(g, 4));
        a.set_phase(static_cast<Phase>(g() % 4));
        const auto left = pauli_mul(pauli_mul(a, b), c);
        const auto right = pauli_mul(a, pauli_mul(b, c));
        EXPECT_EQ(left, right);
        EXPECT_LT((signed_matrix(left) - signed_matrix(a) * signed_matrix(b) * signed_matrix(c))
                      .cwiseAbs()
                      .maxCoeff(),
                  1e-14);
    }
}

TEST(PauliString, WeightIgnoresPhase) {
    PauliString p("XIZY");
    EXPECT_EQ(p.weight(), 3u);
    p.set_phase(Phase::MinusI);
    EXPECT_EQ(p.weight(), 3u);
}

TEST(ApplyPauli, XAndYOnZero) {
    const auto x = apply_pauli(StateVector::zero(1), PauliString("X"));
    EXPECT_EQ(x[1], cplx(1, 0));
    const auto y = apply_pauli(StateVector::zero(1), PauliString("Y"));
    EXPECT_EQ(y[1], cplx(0, 1));
    EXPECT_EQ(y[0], cplx(0, 0));
}

TEST(ApplyPauli, MatchesDenseOnThreeQubits) {
    const auto s = random_state(3, 5);
    const PauliString p("XIZ");
    const auto out = apply_pauli(s, p);
    EXPECT_LT(max_diff(to_vec(out), oracle::pauli("XIZ") * to_vec(s)), 1e-14);
    EXPECT_NEAR(out.norm(), 1.0, 1e-12);
}

TEST(ApplyPauli, RejectsQubitMismatch) {
    EXPECT_THROW(apply_pauli(StateVector::zero(2), PauliString("X")), std::invalid_argument);
}

TEST(ApplyRotation, RxPiOnZero) {
    const auto s = apply_rotation(StateVector::zero(1), PauliString("X"), std::numbers::pi);
    EXPECT_NEAR(std::abs(s[0]), 0.0, 1e-15);
    EXPECT_NEAR(s[1].real(), 0.0, 1e-15);
    EXPECT_NEAR(s[1].imag(), -1.0, 1e-15);
}

TEST(ApplyRotation, ZeroAngleIsBitwiseIdentity) {
    const auto s = random_state(3, 6);
    EXPECT_EQ(apply_rotation(s, PauliString("XYZ"), 0.0), s);
}

TEST(ApplyRotation, RzInverse) {
    const auto s = random_state(3, 7);
    const auto t = apply_rotation(apply_rotation(s, PauliString("IZI"), 0.77), PauliString("IZI"),
                                  -0.77);
    EXPECT_LT(max_diff(to_vec(t), to_vec(s)), 1e-12);
}

TEST(ApplyRotation, RejectsNonUnitPhase) {
    EXPECT_THROW(apply_rotation(StateVector::zero(1), PauliString("-X"), 0.3),
                 std::invalid_argument);
    EXPECT_THROW(apply_rotation(StateVector::zero(1), PauliString("+iX"), 0.3),
                 std::invalid_argument);
}

TEST(ApplyRotation, FourPiPeriodic) {
    const auto s = random_state(4, 8);
    const PauliString p("XZYI");
    const auto a = apply_rotation(s, p, 0.4);
    const auto b = apply_rotation(s, p, 0.4 + 4 * std::numbers::pi);
    EXPECT_LT(max_diff(to_vec(a), to_vec(b)), 1e-12);
}

TEST(ApplyCz, ActionOnBasis) {
    for (std::size_t k = 0; k < 4; ++k) {
        const auto s = apply_cz(StateVector::basis(2, k), 0, 1);
        EXPECT_EQ(s[k], k == 3 ? cplx(-1, 0) : cplx(1, 0));
    }
}

TEST(ApplyCz, SymmetricInControlAndTarget) {
    const auto s = random_state(4, 9);
    EXPECT_EQ(apply_cz(s, 1, 3), apply_cz(s, 3, 1));
}

TEST(ApplyCz, RejectsBadQubits) {
    EXPECT_THROW(apply_cz(StateVector::zero(2), 1, 1), std::invalid_argument);
    EXPECT_THROW(apply_cz(StateVector::zero(2), 0, 2), std::out_of_range);
}

TEST(Expectation, Basics) {
    EXPECT_DOUBLE_EQ(expectation(StateVector::zero(1), Observable::from_pauli(PauliString("Z"))),
                     1.0);
    const auto plus = StateVector::normalized(1, {1.0, 1.0});
    EXPECT_NEAR(expectation(plus, Observable::from_pauli(PauliString("X"))), 1.0, 1e-15);
}

TEST(Expectation, MatchesDenseQuadraticForm) {
    const auto s = random_state(4, 10);
    Observable obs(4);
    obs.add(0.7, PauliString("XYIZ")).add(-1.3, PauliString("ZZII")).add(0.2, PauliString("IYYX"));
    const oracle::Mat m = 0.7 * oracle::pauli("XYIZ") - 1.3 * oracle::pauli("ZZII") +
                          0.2 * oracle::pauli("IYYX");
    const auto v = to_vec(s);
    EXPECT_NEAR(expectation(s, obs), (v.adjoint() * m * v)(0).real(), 1e-13);
}

TEST(Expectation, RejectsNonHermitianTerms) {
    Observable obs(1);
    EXPECT_THROW(obs.add(1.0, PauliString("+iZ")), std::invalid_argument);
}

TEST(DenseMatrix, ZAndCap) {
    const auto z = dense_matrix(PauliString("Z"));
    EXPECT_EQ(z(0, 0), cplx(1, 0));
    EXPECT_EQ(z(1, 1), cplx(-1, 0));
    EXPECT_THROW(dense_matrix(PauliString(std::string(15, 'Z'))), std::invalid_argument);
}

TEST(DenseMatrix, IdentityMap) {
    const auto u = dense_unitary(3, [](std::span<cplx>) {});
    EXPECT_LT((u - oracle::Mat::Identity(8, 8)).cwiseAbs().maxCoeff(), 1e-15);
}

TEST(DenseMatrix, ObservableMatchesOracle) {
    Observable obs(3);
    obs.add(0.5, PauliString("XYZ")).add(2.0, PauliString("IIX"));
    const oracle::Mat m = 0.5 * oracle::pauli("XYZ") + 2.0 * oracle::pauli("IIX");
    EXPECT_LT((dense_matrix(obs) - m).cwiseAbs().maxCoeff(), 1e-15);
}

TEST(Properties, GateSequencesMatchOracleAndKeepNorm) {
    std::mt19937_64 g(12);
    std::uniform_real_distribution<double> ang(-4, 4);
    for (std::size_t n = 1; n <= 6; ++n) {
        auto s = random_state(n, 100 + n);
        oracle::Vec v = to_vec(s);
        for (int step = 0; step < 40; ++step) {
            const int kind = static_cast<int>(g() % 3);
            if (kind == 0 || n == 1) {
                const auto letters = random_letters(g, n);
                const double t = ang(g);
                s = apply_rotation(s, PauliString(letters), t);
                v = oracle::rotation(oracle::pauli(letters), t) * v;
            } else if (kind == 1) {
                const auto letters = random_letters(g, n);
                s = apply_pauli(s, PauliString(letters));
                v = oracle::pauli(letters) * v;
            } else {
                const std::size_t j = g() % n;
                std::size_t k = g() % n;
                if (k == j) {
                    k = (j + 1) % n;
                }
                s = apply_cz(s, j, k);
                v = oracle::cz(j, k, n) * v;
            }
            ASSERT_LT(max_diff(to_vec(s), v), 1e-12);
            ASSERT_LT(std::abs(s.norm() - 1.0), 1e-10);
        }
    }
}

TEST(Parallel, EveryIndexOnceAndErrorsPropagate) {
    std::vector<int> hits(1000, 0);
    parallel_for(hits.size(), 4, [&](std::size_t i) { hits[i] += 1; });
    for (int h : hits) {
        EXPECT_EQ(h, 1);
    }
    EXPECT_THROW(parallel_for(10, 3,
                              [](std::size_t i) {
                                  if (i == 7) {
                                      throw std::runtime_error("boom");
                                  }
                              }),
                 std::runtime_error);
}
