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

#ifndef ENTCLASS_DEPOLARIZE_H
#define ENTCLASS_DEPOLARIZE_H

#include <cstdint>
#include <random>
#include <vector>

#include "entclass/ghz.h"
#include "entclass/qstate.h"

namespace entclass {

enum class MixingKind { kSpinFlipAll, kSigmaZPair, kPhaseTwirl };

/// One local operation of the depolarization sequence.
struct MixingRound {
    MixingKind kind = MixingKind::kSpinFlipAll;
    /// kSigmaZPair: sigma_z acts on A_party and A_n, party in 1..n-1.
    int party = 0;
    /// kPhaseTwirl: |0>_m -> exp(i phases[m-1]) |0>_m, summing to 2*pi.
    std::vector<double> phases;

    static MixingRound spin_flip_all() {
        return MixingRound{MixingKind::kSpinFlipAll, 0, {}};
    }
    static MixingRound sigma_z_pair(int party) {
        return MixingRound{MixingKind::kSigmaZPair, party, {}};
    }
    static MixingRound phase_twirl(std::vector<double> phases) {
        return MixingRound{MixingKind::kPhaseTwirl, 0, std::move(phases)};
    }

    void validate(int n_qubits) const;
};

/// Exact projection onto the GHZ-diagonal family with equalized pairs. Keeps
/// lambda0^+- and every pair sum; idempotent.
DensityMatrix depolarize_channel(const DensityMatrix &rho);

/// U rho U^dagger for the round's local unitary.
DensityMatrix apply_round_unitary(const DensityMatrix &rho, const MixingRound &round);

/// rho/2 + U rho U^dagger / 2.
DensityMatrix mixing_round(const DensityMatrix &rho, const MixingRound &round);

/// The n coin-flip rounds (global spin flip, then sigma_z on A_k A_n for
/// k = 1..n-1), each expanded exactly. Output is diagonal in the GHZ basis.
DensityMatrix coin_flip_rounds(const DensityMatrix &rho);

/// n-1 independent uniform phases on [0, 2pi); the last fixes the sum to 2pi.
std::vector<double> sample_twirl_phases(int n_qubits, std::mt19937_64 &rng);

/// Sampled LOCC protocol: exact coin-flip rounds followed by an average over
/// n_samples random phase twirls. Sample i draws its phases from a generator
/// seeded by (seed, i), so the result does not depend on how the samples are
/// split into `batches` (evaluated on separate threads) beyond summation order.
DensityMatrix locc_depolarize_sample(
    const DensityMatrix &rho, std::uint64_t seed, std::size_t n_samples, int batches = 1);

/// Largest |<Psi_a|rho|Psi_b>| over distinct GHZ basis labels a != b.
double ghz_offdiagonal_residual(const DensityMatrix &rho);

}  // namespace entclass

#endif
