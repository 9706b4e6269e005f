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

#ifndef ENTCLASS_PURIFY_H
#define ENTCLASS_PURIFY_H

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "entclass/classify.h"
#include "entclass/ghz.h"
#include "entclass/qstate.h"

namespace entclass {

/// Unnormalized GHZ-diagonal weights (same layout as RhoNParams).
struct PurifiedCoefficients {
    double lambda0_plus = 0.0;
    double lambda0_minus = 0.0;
    std::vector<double> lambdas;

    double trace() const;
};

struct PurifyOptions {
    /// Fall back to log-domain weights when the outcome probability drops
    /// below 1e-100. Without it an outcome below 1e-300 is an error.
    bool log_domain_fallback = true;
};

/// Outcome of applying P = |0..0><0..0| + |10..0><1..1| at every site of M
/// copies and keeping the first copy.
struct PurificationStep {
    int copies = 0;
    RhoNParams input;
    /// lambda~_k = lambda_k^M and lambda~0^+- = ((l0+ + l0-)/2)^M +- (Delta/2)^M,
    /// hence Delta~/2 = (Delta/2)^M. May underflow in the log-domain regime.
    PurifiedCoefficients output;
    double success_probability = 0.0;
    double log_success_probability = 0.0;
    bool log_domain = false;
    RhoNParams normalized_output;
};

PurificationStep purification_step(const RhoNParams &p, int copies, const PurifyOptions &options = {});

struct MulticopyResult {
    /// First-copy operator of P^{(x)N} rho^{(x)M} P^{dagger (x)N}, unnormalized.
    DensityMatrix first_copy;
    /// Output weight found with the other copies not in |0...0>; zero for P.
    double weight_outside = 0.0;
    /// Largest deviation from the product-basis selection rule: P^{(x)N}
    /// annihilates |Psi_k0> (x) ... (x) |Psi_kM> unless all k agree, and
    /// otherwise yields 2^{(1-M)/2} |Psi_k^sigma>|0...0> with sigma the sign
    /// parity.
    double selection_rule_residual = 0.0;
};

/// Brute-force multi-copy evaluation on N*M qubits (copy-major ordering).
MulticopyResult multicopy_oracle(const RhoNParams &p, int copies, int max_qubits = default_max_qubits());

/// Entry (x, y) of rho^{(x)M} with copy-major qubit ordering.
Complex tensor_power_entry(const DensityMatrix &rho, int copies, std::uint64_t x, std::uint64_t y);

/// Smallest M >= 1 with delta_half^M > sum_j competing_j^M, or nullopt when
/// none exists up to max_copies.
std::optional<int> min_copies_for(double delta_half, std::span<const double> competing, int max_copies);

struct DistillPlan {
    bool distillable = false;
    /// Valid when distillable.
    int copies = 0;
    /// When not distillable: a separating split that is not strictly NPT.
    std::optional<std::uint64_t> violated_index;
    /// The permutation moving (i, j) onto (A_{n-1}, A_n).
    std::vector<int> permutation;
};

inline constexpr int kDefaultMaxCopies = 1 << 20;

/// Copies needed before projecting the other parties yields F > 1/2 for the
/// pair (i, j). Throws SizeCapError if more than max_copies would be needed.
DistillPlan min_copies_to_distill(
    const RhoNParams &p, int i, int j, int max_copies = kDefaultMaxCopies, double tol = kDefaultVerdictTol);

/// Projects every party except A_i, A_j onto |+>, normalizes, and returns the
/// overlap with (|00> + |11>)/sqrt(2).
double pair_fidelity_after_projection(const RhoNParams &p, int i, int j);

/// Closed form of the same quantity: lambda0^+ plus every lambda_k whose
/// split keeps A_i and A_j together.
double pair_fidelity_closed_form(const RhoNParams &p, int i, int j);

/// Permutation sending A_i -> A_{n-1}, A_j -> A_n, others keeping their order.
std::vector<int> pair_to_end_permutation(int n_qubits, int i, int j);

}  // namespace entclass

#endif
