// Copyright 2026 The entclass Authors
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

#ifndef ENTCLASS_TESTS_TEST_UTIL_H
#define ENTCLASS_TESTS_TEST_UTIL_H

#include <cstdint>
#include <random>
#include <vector>

#include "entclass/ghz.h"
#include "entclass/qstate.h"

namespace entclass::testing {

inline std::mt19937_64 make_rng(std::uint64_t seed) {
    return std::mt19937_64(seed);
}

/// Random nonnegative weights normalized as lambda0+ + lambda0- + 2 sum = 1.
/// With probability `sparse` each weight is forced to zero.
inline RhoNParams random_params(int n, std::mt19937_64 &rng, double sparse = 0.0) {
    std::uniform_real_distribution<double> u(0.0, 1.0);
    auto draw = [&] { return u(rng) < sparse ? 0.0 : u(rng); };
    RhoNParams p;
    p.n_qubits = n;
    p.lambda0_plus = draw();
    p.lambda0_minus = draw();
    p.lambdas.resize(lambda_count(n));
    for (double &l : p.lambdas) {
        l = draw();
    }
    if (p.trace() == 0.0) {
        p.lambda0_plus = 1.0;
    }
    return RhoNParams::rescaled(n, p.lambda0_plus, p.lambda0_minus, p.lambdas);
}

/// Ginibre-distributed mixed state G G^dagger / tr.
inline DensityMatrix random_density_matrix(int n, std::mt19937_64 &rng) {
    std::normal_distribution<double> g(0.0, 1.0);
    auto d = Eigen::Index{1} << n;
    Matrix m(d, d);
    for (Eigen::Index r = 0; r < d; ++r) {
        for (Eigen::Index c = 0; c < d; ++c) {
            m(r, c) = Complex(g(rng), g(rng));
        }
    }
    Matrix rho = m * m.adjoint();
    rho /= rho.trace().real();
    rho = (rho + rho.adjoint()) / 2.0;
    return DensityMatrix(n, rho);
}

inline StateVector random_ket(int n, std::mt19937_64 &rng) {
    std::normal_distribution<double> g(0.0, 1.0);
    StateVector v(Eigen::Index{1} << n);
    for (Eigen::Index i = 0; i < v.size(); ++i) {
        v(i) = Complex(g(rng), g(rng));
    }
    return v / v.norm();
}

/// Dense kron of two matrices, A's indices high.
inline Matrix kron(const Matrix &a, const Matrix &b) {
    Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
    for (Eigen::Index i = 0; i < a.rows(); ++i) {
        for (Eigen::Index j = 0; j < a.cols(); ++j) {
            out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
        }
    }
    return out;
}

}  // namespace entclass::testing

#endif
