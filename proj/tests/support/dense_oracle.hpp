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


#ifndef BPFREE_TESTS_SUPPORT_DENSE_ORACLE_HPP
#define BPFREE_TESTS_SUPPORT_DENSE_ORACLE_HPP

// Kronecker-product reference simulator. Shares no code with the library
// kernels: every gate is a full 2^n x 2^n matrix built from 2x2 factors.

#include <cmath>
#include <complex>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <Eigen/Dense>

namespace oracle {

using cplx = std::complex<double>;
using Mat = Eigen::MatrixXcd;
using Vec = Eigen::VectorXcd;

inline Mat pauli2(char c) {
    Mat m(2, 2);
    switch (c) {
    case 'I':
        m << 1, 0, 0, 1;
        break;
    case 'X':
        m << 0, 1, 1, 0;
        break;
    case 'Y':
        m << 0, cplx(0, -1), cplx(0, 1), 0;
        break;
    case 'Z':
        m << 1, 0, 0, -1;
        break;
    default:
        throw std::invalid_argument("oracle::pauli2: bad letter");
    }
    return m;
}

inline Mat kron(const Mat& a, const Mat& b) {
    Mat out(a.rows() * b.rows(), a.cols() * b.cols());
    for (Eigen::Index i = 0; i < a.rows(); ++i) {
        for (Eigen::Index j = 0; j < a.cols(); ++j) {
            out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
        }
    }
    return out;
}

/// letters[q] acts on qubit q; qubit q is bit q of the basis index, so the
/// highest qubit is the leftmost Kronecker factor.
inline Mat pauli(const std::string& letters) {
    Mat m = Mat::Identity(1, 1);
    for (std::size_t q = letters.size(); q-- > 0;) {
        m = kron(m, pauli2(letters[q]));
    }
    return m;
}

/// One-qubit matrix u placed on qubit q of n.
inline Mat embed(const Mat& u, std::size_t q, std::size_t n) {
    Mat m = Mat::Identity(1, 1);
    for (std::size_t k = n; k-- > 0;) {
        m = kron(m, k == q ? u : Mat(Mat::Identity(2, 2)));
    }
    return m;
}

inline Mat rx2(double t) {
    Mat m(2, 2);
    m << std::cos(t / 2), cplx(0, -std::sin(t / 2)), cplx(0, -std::sin(t / 2)), std::cos(t / 2);
    return m;
}

inline Mat rz2(double t) {
    Mat m = Mat::Zero(2, 2);
    m(0, 0) = std::polar(1.0, -t / 2);
    m(1, 1) = std::polar(1.0, t / 2);
    return m;
}

/// |1><1| (x) |1><1| projector route: CZ = I - 2 P11.
inline Mat cz(std::size_t j, std::size_t k, std::size_t n) {
    Mat p1 = Mat::Zero(2, 2);
    p1(1, 1) = 1;
    const Mat dim_id = Mat::Identity(std::size_t{1} << n, std::size_t{1} << n);
    return dim_id - 2.0 * embed(p1, j, n) * embed(p1, k, n);
}

/// exp(-i theta P / 2) by Eigen's eigendecomposition of the Hermitian P.
inline Mat rotation(const Mat& p, double theta) {
    Eigen::SelfAdjointEigenSolver<Mat> es(p);
    Vec ph(es.eigenvalues().size());
    for (Eigen::Index i = 0; i < ph.size(); ++i) {
        ph(i) = std::polar(1.0, -theta * es.eigenvalues()(i) / 2.0);
    }
    return es.eigenvectors() * ph.asDiagonal() * es.eigenvectors().adjoint();
}

using Edges = std::vector<std::pair<std::size_t, std::size_t>>;

inline Mat cz_layer(const Edges& edges, std::size_t n) {
    Mat u = Mat::Identity(std::size_t{1} << n, std::size_t{1} << n);
    for (const auto& [j, k] : edges) {
        u = cz(j, k, n) * u;
    }
    return u;
}

/// Block i: RX on qubits 0..n-1 with row[q], RZ with row[n+q], then CZs.
inline Mat block(const std::vector<double>& row, const Edges& edges, std::size_t n) {
    Mat u = Mat::Identity(std::size_t{1} << n, std::size_t{1} << n);
    for (std::size_t q = 0; q < n; ++q) {
        u = embed(rx2(row[q]), q, n) * u;
    }
    for (std::size_t q = 0; q < n; ++q) {
        u = embed(rz2(row[n + q]), q, n) * u;
    }
    return cz_layer(edges, n) * u;
}

inline Mat hea(const std::vector<std::vector<double>>& rows, const Edges& edges, std::size_t n) {
    Mat u = Mat::Identity(std::size_t{1} << n, std::size_t{1} << n);
    for (const auto& r : rows) {
        u = block(r, edges, n) * u;
    }
    return u;
}

inline Vec basis(std::size_t n, std::size_t index) {
    Vec v = Vec::Zero(std::size_t{1} << n);
    v(index) = 1.0;
    return v;
}

/// Open chain edges (0,1), ..., (n-2, n-1).
inline Edges chain(std::size_t n) {
    Edges e;
    for (std::size_t j = 0; j + 1 < n; ++j) {
        e.emplace_back(j, j + 1);
    }
    return e;
}

} // namespace oracle

#endif // BPFREE_TESTS_SUPPORT_DENSE_ORACLE_HPP
