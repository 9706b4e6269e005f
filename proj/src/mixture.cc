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

#include "entclass/mixture.h"

#include <cmath>
#include <string>

#include "entclass/error.h"

namespace entclass {

namespace {

void check_mixture_args(int n_qubits, double x) {
    if (n_qubits < 2 || n_qubits > 62) {
        throw PreconditionError("mixture needs 2 <= N <= 62, got " + std::to_string(n_qubits));
    }
    if (!(x >= 0.0 && x <= 1.0)) {
        throw InvariantError("mixture weight must lie in [0, 1], got " + std::to_string(x));
    }
}

}  // namespace

RhoNParams ghz_mixture_params(int n_qubits, double x) {
    check_mixture_args(n_qubits, x);
    double floor = (1.0 - x) / std::ldexp(1.0, n_qubits);
    RhoNParams p;
    p.n_qubits = n_qubits;
    p.lambda0_plus = x + floor;
    p.lambda0_minus = floor;
    p.lambdas.assign(lambda_count(n_qubits), floor);
    p.validate();
    return p;
}

DensityMatrix ghz_mixture_state(int n_qubits, double x) {
    check_mixture_args(n_qubits, x);
    if (n_qubits > default_max_qubits()) {
        throw SizeCapError("dense mixture of " + std::to_string(n_qubits) + " qubits exceeds the cap");
    }
    StateVector ghz = ghz_basis_state(n_qubits, GhzIndex{0, Sign::kPlus});
    auto d = static_cast<Eigen::Index>(std::uint64_t{1} << n_qubits);
    Matrix m = x * (ghz * ghz.adjoint()) + Matrix::Identity(d, d) * ((1.0 - x) / static_cast<double>(d));
    return DensityMatrix(n_qubits, std::move(m));
}

Threshold separability_threshold(int n_qubits) {
    if (n_qubits < 2 || n_qubits > 62) {
        throw PreconditionError("threshold needs 2 <= N <= 62, got " + std::to_string(n_qubits));
    }
    Rational r{1, 1 + (std::uint64_t{1} << (n_qubits - 1))};
    return {r, r.value()};
}

bool mixture_fully_separable(int n_qubits, Rational x) {
    if (x.den == 0 || x.num > x.den) {
        throw InvariantError("mixture weight must be a fraction in [0, 1]");
    }
    Rational t = separability_threshold(n_qubits).exact;
    return static_cast<unsigned __int128>(x.num) * t.den <= static_cast<unsigned __int128>(t.num) * x.den;
}

}  // namespace entclass
