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

#include "entclass/classify.h"

#include <algorithm>
#include <bit>
#include <cmath>
#include <string>
#include <thread>

#include "entclass/depolarize.h"
#include "entclass/error.h"

namespace entclass {

namespace {

// Delta after relabeling so that lambda0^+ >= lambda0^-.
double abs_delta(const RhoNParams &p) {
    return std::abs(p.delta());
}

bool strictly_npt(const RhoNParams &p, std::uint64_t idx, double tol) {
    return !split_ppt_by_index(p, idx, tol).ppt;
}

std::uint64_t local_index(std::uint64_t x, std::uint64_t block, int n) {
    std::uint64_t out = 0;
    for (int m = 1; m <= n; ++m) {
        std::uint64_t bit = party_bit(n, m);
        if (block & bit) {
            out = (out << 1) | ((x & bit) ? 1 : 0);
        }
    }
    return out;
}

// Product factors of the computational basis state |x> across `split`.
std::vector<StateVector> basis_factors(const Split &split, std::uint64_t x) {
    int n = split.n_qubits();
    std::vector<StateVector> factors;
    factors.reserve(split.blocks().size());
    for (std::uint64_t block : split.blocks()) {
        factors.push_back(basis_state(std::popcount(block), local_index(x, block, n)));
    }
    return factors;
}

// (|0...0> + s |1...1>)/sqrt(2) on `size` qubits.
StateVector block_ghz(int size, double s) {
    StateVector v = StateVector::Zero(Eigen::Index{1} << size);
    v(0) = 1.0 / std::sqrt(2.0);
    v(v.size() - 1) = s / std::sqrt(2.0);
    return v;
}

}  // namespace

SplitPpt split_ppt_by_index(const RhoNParams &p, std::uint64_t lambda_index, double tol) {
    double margin = 2.0 * p.lambda(lambda_index) - abs_delta(p);
    return SplitPpt{margin >= -tol, std::abs(margin) <= tol, margin};
}

SplitPpt is_split_ppt(const RhoNParams &p, const Split &split, double tol) {
    if (split.n_qubits() != p.n_qubits) {
        throw PreconditionError("split and parameters refer to different party counts");
    }
    return split_ppt_by_index(p, split_to_lambda_index(split), tol);
}

bool is_k_separable(const RhoNParams &p, const Split &split, double tol) {
    if (split.n_qubits() != p.n_qubits) {
        throw PreconditionError("split and parameters refer to different party counts");
    }
    if (split.k() < 2) {
        throw PreconditionError("k-separability needs a split with at least two blocks");
    }
    for (std::uint64_t idx : containing_lambda_indices(split)) {
        if (!split_ppt_by_index(p, idx, tol).ppt) {
            return false;
        }
    }
    return true;
}

std::vector<std::uint64_t> pair_separating_indices(int n_qubits, int i, int j) {
    if (i == j || i < 1 || j < 1 || i > n_qubits || j > n_qubits) {
        throw PreconditionError("a pair needs two distinct parties in 1..n");
    }
    std::uint64_t bi = party_bit(n_qubits, i);
    std::uint64_t bj = party_bit(n_qubits, j);
    std::vector<std::uint64_t> out;
    for (std::uint64_t k = 1; k <= lambda_count(n_qubits); ++k) {
        std::uint64_t side = lambda_index_block_mask(k);
        if (((side & bi) != 0) != ((side & bj) != 0)) {
            out.push_back(k);
        }
    }
    return out;
}

std::vector<std::uint64_t> ghz_relevant_indices(const QubitSubset &parties) {
    int n = parties.n_qubits();
    if (parties.size() < 2) {
        throw PreconditionError("GHZ distillation needs at least two parties");
    }
    std::uint64_t s = parties.mask();
    std::vector<std::uint64_t> out;
    for (std::uint64_t k = 1; k <= lambda_count(n); ++k) {
        std::uint64_t inside = lambda_index_block_mask(k) & s;
        if (inside != 0 && inside != s) {
            out.push_back(k);
        }
    }
    return out;
}

bool pair_distillable(const RhoNParams &p, int i, int j, double tol) {
    for (std::uint64_t k : pair_separating_indices(p.n_qubits, i, j)) {
        if (!strictly_npt(p, k, tol)) {
            return false;
        }
    }
    return true;
}

bool ghz_distillable(const RhoNParams &p, const QubitSubset &parties, double tol) {
    if (parties.n_qubits() != p.n_qubits) {
        throw PreconditionError("party set and parameters refer to different party counts");
    }
    for (std::uint64_t k : ghz_relevant_indices(parties)) {
        if (!strictly_npt(p, k, tol)) {
            return false;
        }
    }
    return true;
}

std::string_view class_label(ThreeQubitClass c) {
    switch (c) {
        case ThreeQubitClass::k1:
            return "1";
        case ThreeQubitClass::k2_1:
            return "2.1";
        case ThreeQubitClass::k2_2:
            return "2.2";
        case ThreeQubitClass::k2_3:
            return "2.3";
        case ThreeQubitClass::k3_1:
            return "3.1";
        case ThreeQubitClass::k3_2:
            return "3.2";
        case ThreeQubitClass::k3_3:
            return "3.3";
        case ThreeQubitClass::k4:
            return "4";
        case ThreeQubitClass::k5:
            return "5";
    }
    return "?";
}

ThreeQubitVerdict three_qubit_class(const RhoNParams &p, double tol) {
    if (p.n_qubits != 3) {
        throw PreconditionError("three-qubit classes need n = 3");
    }
    // A-(BC) -> lambda_2, B-(AC) -> lambda_1, C-(AB) -> lambda_3.
    bool a = split_ppt_by_index(p, 2, tol).ppt;
    bool b = split_ppt_by_index(p, 1, tol).ppt;
    bool c = split_ppt_by_index(p, 3, tol).ppt;
    ThreeQubitVerdict v{ThreeQubitClass::k1, a, b, c, false, std::nullopt, ""};
    int n_ppt = int(a) + int(b) + int(c);
    static constexpr char kNames[] = {'?', 'A', 'B', 'C'};
    auto pair_name = [](int x, int y) { return std::string{kNames[x], kNames[y]}; };
    if (n_ppt == 0) {
        v.cls = ThreeQubitClass::k1;
        v.distillability = "(GHZ) |Psi_0^+>_ABC";
    } else if (n_ppt == 1) {
        v.cls = a ? ThreeQubitClass::k2_1 : (b ? ThreeQubitClass::k2_2 : ThreeQubitClass::k2_3);
        v.distillability = "(Pair) |Phi^+>_" + (a ? pair_name(2, 3) : (b ? pair_name(1, 3) : pair_name(1, 2)));
    } else if (n_ppt == 2) {
        std::pair<int, int> pr = !c ? std::pair{1, 2} : (!b ? std::pair{1, 3} : std::pair{2, 3});
        v.cls = !c ? ThreeQubitClass::k3_1 : (!b ? ThreeQubitClass::k3_2 : ThreeQubitClass::k3_3);
        v.activatable = true;
        v.activation_pair = pr;
        v.distillability = "Activate with |Phi^+>_" + pair_name(pr.first, pr.second);
    } else {
        v.cls = ThreeQubitClass::k5;
    }
    return v;
}

std::string_view provenance_name(Provenance p) {
    switch (p) {
        case Provenance::kExactForRhoN:
            return "exact-for-rhoN";
        case Provenance::kSufficientOnlyForArbitrary:
            return "sufficient-only-for-arbitrary";
    }
    return "?";
}

const BipartiteVerdict &ClassificationReport::bipartite_verdict(const Split &split) const {
    return bipartite.at(static_cast<std::size_t>(split_to_lambda_index(split) - 1));
}

std::optional<bool> ClassificationReport::separable(const Split &split) const {
    if (split.n_qubits() != n_qubits) {
        return std::nullopt;
    }
    if (split.k() == 1) {
        return true;
    }
    if (split.k() == 2) {
        return bipartite_verdict(split).ppt;
    }
    for (const auto &level : levels) {
        if (level.k != split.k()) {
            continue;
        }
        auto it = std::lower_bound(
            level.splits.begin(), level.splits.end(), split,
            [](const SplitVerdict &v, const Split &s) { return v.split < s; });
        if (it != level.splits.end() && it->split == split) {
            return it->separable;
        }
    }
    return std::nullopt;
}

bool ClassificationReport::pair(int i, int j) const {
    if (i > j) {
        std::swap(i, j);
    }
    for (const auto &v : pair_distillable) {
        if (v.i == i && v.j == j) {
            return v.distillable;
        }
    }
    throw PreconditionError("pair not present in report");
}

std::optional<bool> ClassificationReport::ghz(const QubitSubset &parties) const {
    for (const auto &v : ghz_distillable) {
        if (v.parties == parties) {
            return v.distillable;
        }
    }
    return std::nullopt;
}

ClassificationReport classification_report(const RhoNParams &input, const ReportOptions &options) {
    input.validate();
    RhoNParams p = normalize_delta(input);
    int n = p.n_qubits;
    int max_level = options.max_level == 0 ? n : std::min(options.max_level, n);
    if (max_level < 2) {
        throw PreconditionError("max level must be at least 2");
    }
    bool sweep = max_level >= 3;
    if (sweep && n > options.enumeration_cap) {
        throw SizeCapError(
            "k-split sweep for n=" + std::to_string(n) + " exceeds the enumeration cap of " +
            std::to_string(options.enumeration_cap) + "; use max level 2 for the bipartite-only report");
    }
    double tol = options.tol;

    ClassificationReport r;
    r.n_qubits = n;
    r.tolerance = tol;
    r.provenance = Provenance::kExactForRhoN;
    r.params = p;

    std::uint64_t count = lambda_count(n);
    r.bipartite.reserve(count);
    bool all_ppt = true;
    for (std::uint64_t k = 1; k <= count; ++k) {
        SplitPpt v = split_ppt_by_index(p, k, tol);
        all_ppt = all_ppt && v.ppt;
        r.bipartite.push_back(BipartiteVerdict{lambda_index_to_split(n, k), k, v.ppt, v.boundary, v.margin});
    }
    r.fully_separable = all_ppt;

    for (int level = max_level; level >= 3; --level) {
        LevelVerdicts lv{level, {}};
        std::vector<Split> splits = enumerate_k_splits(n, level);
        std::sort(splits.begin(), splits.end());
        std::vector<char> verdict(splits.size(), 0);
        auto work = [&](std::size_t begin, std::size_t end) {
            for (std::size_t s = begin; s < end; ++s) {
                bool sep = true;
                for (std::uint64_t idx : containing_lambda_indices(splits[s])) {
                    if (!r.bipartite[idx - 1].ppt) {
                        sep = false;
                        break;
                    }
                }
                verdict[s] = sep ? 1 : 0;
            }
        };
        std::size_t jobs = static_cast<std::size_t>(std::max(1, options.jobs));
        if (jobs == 1 || splits.size() < 1024) {
            work(0, splits.size());
        } else {
            std::vector<std::thread> workers;
            for (std::size_t t = 0; t < jobs; ++t) {
                workers.emplace_back(work, splits.size() * t / jobs, splits.size() * (t + 1) / jobs);
            }
            for (auto &w : workers) {
                w.join();
            }
        }
        lv.splits.reserve(splits.size());
        for (std::size_t s = 0; s < splits.size(); ++s) {
            lv.splits.push_back(SplitVerdict{std::move(splits[s]), verdict[s] != 0});
        }
        r.levels.push_back(std::move(lv));
    }

    for (int i = 1; i <= n; ++i) {
        for (int j = i + 1; j <= n; ++j) {
            r.pair_distillable.push_back(PairVerdict{i, j, pair_distillable(p, i, j, tol)});
        }
    }
    std::uint64_t full = (std::uint64_t{1} << n) - 1;
    if (n <= options.enumeration_cap) {
        for (std::uint64_t s = 1; s <= full; ++s) {
            if (std::popcount(s) >= 2) {
                QubitSubset parties(n, s);
                r.ghz_distillable.push_back(GhzVerdict{parties, ghz_distillable(p, parties, tol)});
            }
        }
    } else {
        QubitSubset parties(n, full);
        r.ghz_distillable.push_back(GhzVerdict{parties, ghz_distillable(p, parties, tol)});
    }
    if (n == 3) {
        r.three_qubit = three_qubit_class(p, tol);
    }
    return r;
}

ClassificationReport sufficient_report(const DensityMatrix &rho, const ReportOptions &options) {
    DensityMatrix twirled = depolarize_channel(rho);
    ClassificationReport r = classification_report(extract_params(rho), options);
    r.provenance = max_abs_diff(rho, twirled) <= 1e-12 ? Provenance::kExactForRhoN
                                                        : Provenance::kSufficientOnlyForArbitrary;
    return r;
}

double ProductEnsemble::total_weight() const {
    double w = 0.0;
    for (const auto &t : terms) {
        w += t.weight;
    }
    return w;
}

StateVector embed_product(const Split &split, const std::vector<StateVector> &factors) {
    int n = split.n_qubits();
    if (factors.size() != split.blocks().size()) {
        throw PreconditionError("need exactly one factor per block");
    }
    for (std::size_t b = 0; b < factors.size(); ++b) {
        if (factors[b].size() != (Eigen::Index{1} << std::popcount(split.blocks()[b]))) {
            throw PreconditionError("factor dimension does not match its block");
        }
    }
    auto d = Eigen::Index{1} << n;
    StateVector v(d);
    for (Eigen::Index x = 0; x < d; ++x) {
        Complex amp = 1.0;
        for (std::size_t b = 0; b < factors.size(); ++b) {
            amp *= factors[b](static_cast<Eigen::Index>(local_index(static_cast<std::uint64_t>(x), split.blocks()[b], n)));
        }
        v(x) = amp;
    }
    return v;
}

StateVector ProductEnsemble::term_vector(std::size_t i) const {
    return embed_product(split, terms.at(i).factors);
}

DensityMatrix ProductEnsemble::assemble() const {
    auto d = Eigen::Index{1} << split.n_qubits();
    Matrix m = Matrix::Zero(d, d);
    for (std::size_t i = 0; i < terms.size(); ++i) {
        StateVector v = term_vector(i);
        m += terms[i].weight * (v * v.adjoint());
    }
    m = (m + m.adjoint()) / 2.0;
    return DensityMatrix(split.n_qubits(), std::move(m));
}

WitnessDecomposition witness_decomposition(const RhoNParams &input, const Split &split, double tol) {
    input.validate();
    if (!is_k_separable(input, split, tol)) {
        throw PreconditionError("split " + split.str() + " is not separable for these parameters");
    }
    int n = input.n_qubits;
    RhoNParams p = normalize_delta(input);
    bool flipped = input.lambda0_minus > input.lambda0_plus;
    double delta = p.delta();
    std::vector<std::uint64_t> joined = containing_lambda_indices(split);

    ProductEnsemble ens{split, {}};
    auto add_basis_pair = [&](std::uint64_t j, double w) {
        if (!(w > 0.0)) {
            return;
        }
        GhzBranches br = ghz_branches(n, j);
        ens.terms.push_back(ProductTerm{w, basis_factors(split, br.zero_branch)});
        ens.terms.push_back(ProductTerm{w, basis_factors(split, br.one_branch)});
    };

    // Delta * (Psi_0^+ + sum over joined Psi_i^+) equals Delta times the sum of
    // block-GHZ products with an even number of minus signs.
    if (delta > 0.0) {
        int k = split.k();
        for (std::uint64_t signs = 0; signs < (std::uint64_t{1} << k); ++signs) {
            if (std::popcount(signs) % 2 != 0) {
                continue;
            }
            std::vector<StateVector> factors;
            for (int b = 0; b < k; ++b) {
                double s = (signs >> b) & 1 ? -1.0 : 1.0;
                factors.push_back(block_ghz(std::popcount(split.blocks()[static_cast<std::size_t>(b)]), s));
            }
            ens.terms.push_back(ProductTerm{delta, std::move(factors)});
        }
    }
    std::size_t next = 0;
    for (std::uint64_t j = 1; j <= lambda_count(n); ++j) {
        bool is_joined = next < joined.size() && joined[next] == j;
        if (is_joined) {
            ++next;
        }
        double w = is_joined ? p.lambda(j) - delta / 2.0 : p.lambda(j);
        add_basis_pair(j, std::max(w, 0.0));
    }
    add_basis_pair(0, p.lambda0_minus);

    // Undo the relabeling: sigma_z on A_n, applied inside the block holding it.
    if (flipped) {
        int anchor = split.block_of(n);
        for (auto &t : ens.terms) {
            StateVector &f = t.factors[static_cast<std::size_t>(anchor)];
            for (Eigen::Index x = 1; x < f.size(); x += 2) {
                f(x) = -f(x);
            }
        }
    }

    double total = ens.total_weight();
    for (auto &t : ens.terms) {
        t.weight /= total;
    }
    for (const auto &t : ens.terms) {
        if (!(t.weight >= 0.0)) {
            throw NumericalError("witness has a negative weight");
        }
        for (std::size_t b = 0; b < t.factors.size(); ++b) {
            if (t.factors[b].size() != (Eigen::Index{1} << std::popcount(split.blocks()[b])) ||
                std::abs(t.factors[b].squaredNorm() - 1.0) > 1e-12) {
                throw NumericalError("witness factor is not a normalized state of its block");
            }
        }
    }
    DensityMatrix witness = ens.assemble();
    double residual = max_abs_diff(depolarize_channel(witness), rho_from_params(input));
    if (residual > 1e-10) {
        throw NumericalError("witness does not depolarize to the target state (residual " + std::to_string(residual) + ")");
    }
    return WitnessDecomposition{std::move(ens), std::move(witness), residual};
}

}  // namespace entclass
