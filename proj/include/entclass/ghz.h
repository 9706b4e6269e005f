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

#ifndef ENTCLASS_GHZ_H
#define ENTCLASS_GHZ_H

#include <cstdint>
#include <span>
#include <vector>

#include "entclass/qstate.h"
#include "entclass/splits.h"

namespace entclass {

enum class Sign { kPlus, kMinus };

/// Label (j, sigma) of |Psi_j^sigma> = (|j>|0> +- |2^{n-1}-1-j>|1>)/sqrt(2),
/// where j is an (n-1)-bit word over A_1..A_{n-1} and A_n is the last qubit.
struct GhzIndex {
    std::uint64_t j;
    Sign sigma;
};

StateVector ghz_basis_state(int n_qubits, GhzIndex idx);

/// Computational basis indices of the two branches of |Psi_j^sigma>: the
/// A_n = 0 branch |j 0> and the A_n = 1 branch |(2^{n-1}-1-j) 1>.
struct GhzBranches {
    std::uint64_t zero_branch;
    std::uint64_t one_branch;
};
GhzBranches ghz_branches(int n_qubits, std::uint64_t j);

/// Parameters of the GHZ-diagonal family
///   rho = sum_sigma lambda0^sigma |Psi_0^sigma><Psi_0^sigma|
///       + sum_{j>=1} lambda_j (|Psi_j^+><Psi_j^+| + |Psi_j^-><Psi_j^-|).
///
/// lambdas[j-1] holds lambda_j, the common weight of both members of pair j,
/// so the trace is lambda0_plus + lambda0_minus + 2 * sum_j lambda_j.
struct RhoNParams {
    static constexpr double kTol = 1e-12;

    int n_qubits = 0;
    double lambda0_plus = 0.0;
    double lambda0_minus = 0.0;
    std::vector<double> lambdas;

    /// Validated construction (nonnegativity, size, unit trace within kTol).
    static RhoNParams make(int n_qubits, double lambda0_plus, double lambda0_minus, std::vector<double> lambdas);
    /// Like make(), but first rescales the weights to unit trace.
    static RhoNParams rescaled(int n_qubits, double lambda0_plus, double lambda0_minus, std::vector<double> lambdas);

    /// lambda0_plus - lambda0_minus (nonnegative after normalize_delta).
    double delta() const {
        return lambda0_plus - lambda0_minus;
    }
    /// lambda_k for k in [1, 2^{n-1}-1].
    double lambda(std::uint64_t k) const {
        return lambdas.at(static_cast<std::size_t>(k - 1));
    }
    std::uint64_t num_lambdas() const {
        return lambdas.size();
    }
    double trace() const;
    /// Throws InvariantError when an invariant is broken.
    void validate(double tol = kTol) const;
};

/// Number of lambda_j with j >= 1 for n qubits.
inline std::uint64_t lambda_count(int n_qubits) {
    return (std::uint64_t{1} << (n_qubits - 1)) - 1;
}

DensityMatrix rho_from_params(const RhoNParams &p);

/// Raw twirl invariants of an arbitrary state: lambda0^+- are the overlaps
/// with Psi_0^+-, lambda_j is half the pair sum. No relabeling is applied.
RhoNParams extract_params(const DensityMatrix &rho);

/// extract_params followed by normalize_delta.
RhoNParams params_from_state(const DensityMatrix &rho);

/// Swaps lambda0^+ and lambda0^- when lambda0^- is larger. This is the
/// action of sigma_z on A_n, which exchanges Psi_j^+ and Psi_j^- for every j.
RhoNParams normalize_delta(const RhoNParams &p);

/// Weights of a permuted state: perm[m-1] is the new position of A_m. Each
/// lambda index is pushed through its defining block and re-encoded.
RhoNParams permute_params(const RhoNParams &p, std::span<const int> perm);

/// Inverse permutation in the same image-list convention.
std::vector<int> inverse_permutation(std::span<const int> perm);

}  // namespace entclass

#endif
