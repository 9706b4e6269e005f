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

#ifndef ENTCLASS_CLASSIFY_H
#define ENTCLASS_CLASSIFY_H

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "entclass/ghz.h"
#include "entclass/qstate.h"
#include "entclass/splits.h"

namespace entclass {

/// Absolute tolerance on the margin 2*lambda_k - Delta. Matches the
/// normalization tolerance of RhoNParams.
inline constexpr double kDefaultVerdictTol = 1e-12;

/// Analytic PPT verdict of one bipartite split of a GHZ-diagonal state.
struct SplitPpt {
    bool ppt;
    /// |margin| <= tol: the sharp iff sits inside floating-point noise.
    bool boundary;
    /// 2 * lambda_k - Delta.
    double margin;
};

/// PPT iff Delta <= 2 lambda_k + tol. The complement (Delta > 2 lambda_k + tol)
/// is the strict NPT used by the distillability predicates. Delta is taken
/// after normalize_delta.
SplitPpt split_ppt_by_index(const RhoNParams &p, std::uint64_t lambda_index, double tol = kDefaultVerdictTol);
SplitPpt is_split_ppt(const RhoNParams &p, const Split &split, double tol = kDefaultVerdictTol);

/// k-separable iff every bipartite split containing `split` is PPT.
bool is_k_separable(const RhoNParams &p, const Split &split, double tol = kDefaultVerdictTol);

/// Lambda indices of the bipartite splits that put A_i and A_j on different sides.
std::vector<std::uint64_t> pair_separating_indices(int n_qubits, int i, int j);
/// Lambda indices of the bipartite splits that do not keep `parties` on one side.
std::vector<std::uint64_t> ghz_relevant_indices(const QubitSubset &parties);

/// A maximally entangled pair between A_i and A_j is distillable iff every
/// bipartite split separating them is (strictly) NPT.
bool pair_distillable(const RhoNParams &p, int i, int j, double tol = kDefaultVerdictTol);
/// A GHZ state among `parties` is distillable iff every bipartite split not
/// keeping them together is (strictly) NPT.
bool ghz_distillable(const RhoNParams &p, const QubitSubset &parties, double tol = kDefaultVerdictTol);

enum class ThreeQubitClass { k1, k2_1, k2_2, k2_3, k3_1, k3_2, k3_3, k4, k5 };

std::string_view class_label(ThreeQubitClass c);

struct ThreeQubitVerdict {
    ThreeQubitClass cls;
    /// PPT flags of A-(BC), B-(AC), C-(AB).
    bool ppt_a, ppt_b, ppt_c;
    /// Two PPT splits and one NPT split: a maximally entangled pair between
    /// the two PPT parties unlocks a GHZ state.
    bool activatable;
    std::optional<std::pair<int, int>> activation_pair;
    /// Distillability column of the summary table.
    std::string distillability;
};

/// Class of a three-qubit GHZ-diagonal state from its three PPT verdicts.
/// Class 4 is never produced: all-PPT implies full separability here.
ThreeQubitVerdict three_qubit_class(const RhoNParams &p, double tol = kDefaultVerdictTol);

enum class Provenance { kExactForRhoN, kSufficientOnlyForArbitrary };

std::string_view provenance_name(Provenance p);

struct ReportOptions {
    double tol = kDefaultVerdictTol;
    /// Highest k swept for k-split verdicts; 0 means n. 2 selects the
    /// bipartite-only mode, which has no enumeration cap.
    int max_level = 0;
    /// Largest n for which k-splits (Bell-number many) are enumerated.
    int enumeration_cap = 10;
    /// Worker threads for the k-split sweep.
    int jobs = 1;
};

struct BipartiteVerdict {
    Split split;
    std::uint64_t lambda_index;
    bool ppt;
    bool boundary;
    double margin;
};

struct SplitVerdict {
    Split split;
    bool separable;
};

struct LevelVerdicts {
    int k;
    std::vector<SplitVerdict> splits;
};

struct PairVerdict {
    int i;
    int j;
    bool distillable;
};

struct GhzVerdict {
    QubitSubset parties;
    bool distillable;
};

struct ClassificationReport {
    int n_qubits = 0;
    double tolerance = kDefaultVerdictTol;
    Provenance provenance = Provenance::kExactForRhoN;
    /// Parameters the verdicts were computed from (Delta >= 0 labeling).
    RhoNParams params;
    /// One entry per bipartite split, ordered by lambda index.
    std::vector<BipartiteVerdict> bipartite;
    /// k-split verdicts for k = n down to 3 (those enabled by max_level).
    std::vector<LevelVerdicts> levels;
    bool fully_separable = false;
    std::vector<PairVerdict> pair_distillable;
    /// Every party subset of size >= 2 when n is within the enumeration cap,
    /// otherwise only the full party set.
    std::vector<GhzVerdict> ghz_distillable;
    std::optional<ThreeQubitVerdict> three_qubit;

    const BipartiteVerdict &bipartite_verdict(const Split &split) const;
    /// Separability verdict of any split held by the report.
    std::optional<bool> separable(const Split &split) const;
    bool pair(int i, int j) const;
    std::optional<bool> ghz(const QubitSubset &parties) const;
};

ClassificationReport classification_report(const RhoNParams &p, const ReportOptions &options = {});

/// Report on the depolarized image of an arbitrary state. NPT and
/// distillability verdicts carry over to rho; PPT and separability verdicts
/// only hold for the depolarized state. States already in the family are
/// reported with exact provenance.
ClassificationReport sufficient_report(const DensityMatrix &rho, const ReportOptions &options = {});

struct ProductTerm {
    double weight;
    /// One normalized pure state per block of the split (block order), each on
    /// the block's parties in increasing order.
    std::vector<StateVector> factors;
};

struct ProductEnsemble {
    Split split;
    std::vector<ProductTerm> terms;

    double total_weight() const;
    /// The n-qubit product vector of term i.
    StateVector term_vector(std::size_t i) const;
    /// sum_i weight_i |term_i><term_i|.
    DensityMatrix assemble() const;
};

/// Product vector from one factor per block.
StateVector embed_product(const Split &split, const std::vector<StateVector> &factors);

struct WitnessDecomposition {
    ProductEnsemble ensemble;
    /// The assembled separable state; depolarizes exactly to the target.
    DensityMatrix witness;
    /// max |depolarize_channel(witness) - rho_from_params(p)|.
    double channel_residual;
};

/// Separable preimage of rho_N under the exact channel for a k-separable split.
/// Throws PreconditionError for inseparable splits and NumericalError if the
/// assembled witness fails its checks (weights, product factors, channel image
/// within 1e-10).
WitnessDecomposition witness_decomposition(const RhoNParams &p, const Split &split, double tol = kDefaultVerdictTol);

}  // namespace entclass

#endif
