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

#include "entclass/ghz.h"

#include <cmath>
#include <string>

#include "entclass/error.h"

namespace entclass {

namespace {

void check_qubits(int n_qubits) {
    if (n_qubits < 2 || n_qubits > 30) {
        throw PreconditionError("GHZ family needs 2..30 qubits, got " + std::to_string(n_qubits));
    }
}

}  // namespace

GhzBranches ghz_branches(int n_qubits, std::uint64_t j) {
    check_qubits(n_qubits);
    std::uint64_t top = lambda_count(n_qubits);
    if (j > top) {
        throw PreconditionError("GHZ index j=" + std::to_string(j) + " outside 0.." + std::to_string(top));
    }
    return GhzBranches{j << 1, ((top - j) << 1) | 1};
}

StateVector ghz_basis_state(int n_qubits, GhzIndex idx) {
    GhzBranches br = ghz_branches(n_qubits, idx.j);
    StateVector v = StateVector::Zero(Eigen::Index{1} << n_qubits);
    double amp = 1.0 / std::sqrt(2.0);
    v(static_cast<Eigen::Index>(br.zero_branch)) = amp;
    v(static_cast<Eigen::Index>(br.one_branch)) = idx.sigma == Sign::kPlus ? amp : -amp;
    return v;
}

double RhoNParams::trace() const {
    double s = 0.0;
    for (double l : lambdas) {
        s += l;
    }
    return lambda0_plus + lambda0_minus + 2.0 * s;
}

void RhoNParams::validate(double tol) const {
    check_qubits(n_qubits);
    if (lambdas.size() != lambda_count(n_qubits)) {
        throw InvariantError(
            "expected " + std::to_string(lambda_count(n_qubits)) + " lambdas for n=" + std::to_string(n_qubits) +
            ", got " + std::to_string(lambdas.size()));
    }
    auto check_nonneg = [&](double v, const std::string &name) {
        if (!std::isfinite(v) || v < -tol) {
            throw InvariantError(name + " must be nonnegative, got " + std::to_string(v));
        }
    };
    check_nonneg(lambda0_plus, "lambda0_plus");
    check_nonneg(lambda0_minus, "lambda0_minus");
    for (std::size_t i = 0; i < lambdas.size(); ++i) {
        check_nonneg(lambdas[i], "lambda_" + std::to_string(i + 1));
    }
    double tr = trace();
    if (!(std::abs(tr - 1.0) <= tol)) {
        throw InvariantError("parameters are not normalized: lambda0+ + lambda0- + 2*sum(lambda) = " + std::to_string(tr));
    }
}

RhoNParams RhoNParams::make(int n_qubits, double lambda0_plus, double lambda0_minus, std::vector<double> lambdas) {
    RhoNParams p{n_qubits, lambda0_plus, lambda0_minus, std::move(lambdas)};
    p.validate();
    return p;
}

RhoNParams RhoNParams::rescaled(int n_qubits, double lambda0_plus, double lambda0_minus, std::vector<double> lambdas) {
    RhoNParams p{n_qubits, lambda0_plus, lambda0_minus, std::move(lambdas)};
    double tr = p.trace();
    if (!(tr > 0.0) || !std::isfinite(tr)) {
        throw InvariantError("parameters have no positive weight to rescale");
    }
    p.lambda0_plus /= tr;
    p.lambda0_minus /= tr;
    for (double &l : p.lambdas) {
        l /= tr;
    }
    p.validate();
    return p;
}

DensityMatrix rho_from_params(const RhoNParams &p) {
    p.validate();
    int n = p.n_qubits;
    auto d = Eigen::Index{1} << n;
    Matrix m = Matrix::Zero(d, d);
    for (std::uint64_t j = 0; j <= lambda_count(n); ++j) {
        double w_plus = j == 0 ? p.lambda0_plus : p.lambda(j);
        double w_minus = j == 0 ? p.lambda0_minus : p.lambda(j);
        GhzBranches br = ghz_branches(n, j);
        auto a = static_cast<Eigen::Index>(br.zero_branch);
        auto b = static_cast<Eigen::Index>(br.one_branch);
        double diag = (w_plus + w_minus) / 2.0;
        double coh = (w_plus - w_minus) / 2.0;
        m(a, a) += diag;
        m(b, b) += diag;
        m(a, b) += coh;
        m(b, a) += coh;
    }
    return DensityMatrix(n, std::move(m));
}

RhoNParams extract_params(const DensityMatrix &rho) {
    if (!rho.normalized()) {
        throw PreconditionError("parameter extraction needs a normalized state");
    }
    int n = rho.n_qubits();
    check_qubits(n);
    RhoNParams p;
    p.n_qubits = n;
    p.lambdas.resize(lambda_count(n));
    for (std::uint64_t j = 0; j <= lambda_count(n); ++j) {
        GhzBranches br = ghz_branches(n, j);
        double pair_sum = rho(br.zero_branch, br.zero_branch).real() + rho(br.one_branch, br.one_branch).real();
        if (j == 0) {
            double coh = rho(br.zero_branch, br.one_branch).real();
            p.lambda0_plus = pair_sum / 2.0 + coh;
            p.lambda0_minus = pair_sum / 2.0 - coh;
        } else {
            p.lambdas[j - 1] = pair_sum / 2.0;
        }
    }
    p.validate();
    return p;
}

RhoNParams params_from_state(const DensityMatrix &rho) {
    return normalize_delta(extract_params(rho));
}

RhoNParams normalize_delta(const RhoNParams &p) {
    RhoNParams out = p;
    if (out.lambda0_minus > out.lambda0_plus) {
        std::swap(out.lambda0_plus, out.lambda0_minus);
    }
    return out;
}

RhoNParams permute_params(const RhoNParams &p, std::span<const int> perm) {
    p.validate();
    int n = p.n_qubits;
    check_permutation(n, perm);
    RhoNParams out = p;
    std::uint64_t full = (std::uint64_t{1} << n) - 1;
    for (std::uint64_t k = 1; k <= lambda_count(n); ++k) {
        std::uint64_t side = lambda_index_block_mask(k);
        std::uint64_t moved = 0;
        for (int m = 1; m <= n; ++m) {
            if (side & party_bit(n, m)) {
                moved |= party_bit(n, perm[static_cast<std::size_t>(m - 1)]);
            }
        }
        if (moved & party_bit(n, n)) {
            moved = full & ~moved;
        }
        out.lambdas[(moved >> 1) - 1] = p.lambda(k);
    }
    return out;
}

std::vector<int> inverse_permutation(std::span<const int> perm) {
    int n = static_cast<int>(perm.size());
    check_permutation(n, perm);
    std::vector<int> inv(perm.size());
    for (int m = 1; m <= n; ++m) {
        inv[static_cast<std::size_t>(perm[static_cast<std::size_t>(m - 1)] - 1)] = m;
    }
    return inv;
}

}  // namespace entclass
