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

#include "entclass/depolarize.h"

#include <cmath>
#include <numbers>
#include <string>
#include <thread>

#include "entclass/error.h"

namespace entclass {

namespace {

// Running Kahan sum over complex matrices.
struct CompensatedMatrixSum {
    Matrix sum;
    Matrix carry;

    explicit CompensatedMatrixSum(Eigen::Index d) : sum(Matrix::Zero(d, d)), carry(Matrix::Zero(d, d)) {
    }

    void add(const Matrix &m) {
        Matrix y = m - carry;
        Matrix t = sum + y;
        carry = (t - sum) - y;
        sum = std::move(t);
    }
};

Matrix twirled(const Matrix &sigma, int n, const std::vector<double> &phases) {
    auto d = sigma.rows();
    std::vector<Complex> factor(static_cast<std::size_t>(d));
    for (Eigen::Index x = 0; x < d; ++x) {
        double theta = 0.0;
        for (int m = 1; m <= n; ++m) {
            if ((static_cast<std::uint64_t>(x) & party_bit(n, m)) == 0) {
                theta += phases[static_cast<std::size_t>(m - 1)];
            }
        }
        factor[static_cast<std::size_t>(x)] = std::polar(1.0, theta);
    }
    Matrix out(d, d);
    for (Eigen::Index r = 0; r < d; ++r) {
        for (Eigen::Index c = 0; c < d; ++c) {
            out(r, c) = factor[static_cast<std::size_t>(r)] * sigma(r, c) * std::conj(factor[static_cast<std::size_t>(c)]);
        }
    }
    return out;
}

}  // namespace

void MixingRound::validate(int n_qubits) const {
    switch (kind) {
        case MixingKind::kSpinFlipAll:
            return;
        case MixingKind::kSigmaZPair:
            if (party < 1 || party > n_qubits - 1) {
                throw PreconditionError("sigma_z pair round needs a party in 1..n-1");
            }
            return;
        case MixingKind::kPhaseTwirl: {
            if (static_cast<int>(phases.size()) != n_qubits) {
                throw PreconditionError("phase twirl needs one phase per party");
            }
            double total = 0.0;
            for (double ph : phases) {
                total += ph;
            }
            if (std::abs(total - 2.0 * std::numbers::pi) > 1e-9) {
                throw PreconditionError("phase twirl phases must sum to 2*pi");
            }
            return;
        }
    }
}

DensityMatrix depolarize_channel(const DensityMatrix &rho) {
    return rho_from_params(extract_params(rho));
}

DensityMatrix apply_round_unitary(const DensityMatrix &rho, const MixingRound &round) {
    int n = rho.n_qubits();
    round.validate(n);
    auto d = static_cast<Eigen::Index>(rho.dim());
    const Matrix &in = rho.entries();
    Matrix out(d, d);
    switch (round.kind) {
        case MixingKind::kSpinFlipAll: {
            auto flip = static_cast<Eigen::Index>(d - 1);
            for (Eigen::Index r = 0; r < d; ++r) {
                for (Eigen::Index c = 0; c < d; ++c) {
                    out(r, c) = in(r ^ flip, c ^ flip);
                }
            }
            break;
        }
        case MixingKind::kSigmaZPair: {
            std::uint64_t mask = party_bit(n, round.party) | party_bit(n, n);
            auto sign = [&](Eigen::Index x) {
                return (std::popcount(static_cast<std::uint64_t>(x) & mask) % 2) ? -1.0 : 1.0;
            };
            for (Eigen::Index r = 0; r < d; ++r) {
                for (Eigen::Index c = 0; c < d; ++c) {
                    out(r, c) = sign(r) * sign(c) * in(r, c);
                }
            }
            break;
        }
        case MixingKind::kPhaseTwirl:
            out = twirled(in, n, round.phases);
            break;
    }
    return DensityMatrix(n, std::move(out), rho.normalization());
}

DensityMatrix mixing_round(const DensityMatrix &rho, const MixingRound &round) {
    DensityMatrix moved = apply_round_unitary(rho, round);
    return DensityMatrix(rho.n_qubits(), (rho.entries() + moved.entries()) / 2.0, rho.normalization());
}

DensityMatrix coin_flip_rounds(const DensityMatrix &rho) {
    DensityMatrix out = mixing_round(rho, MixingRound::spin_flip_all());
    for (int k = 1; k < rho.n_qubits(); ++k) {
        out = mixing_round(out, MixingRound::sigma_z_pair(k));
    }
    return out;
}

std::vector<double> sample_twirl_phases(int n_qubits, std::mt19937_64 &rng) {
    std::uniform_real_distribution<double> uniform(0.0, 2.0 * std::numbers::pi);
    std::vector<double> phases(static_cast<std::size_t>(n_qubits));
    double total = 0.0;
    for (int m = 0; m < n_qubits - 1; ++m) {
        phases[static_cast<std::size_t>(m)] = uniform(rng);
        total += phases[static_cast<std::size_t>(m)];
    }
    phases.back() = 2.0 * std::numbers::pi - total;
    return phases;
}

DensityMatrix locc_depolarize_sample(const DensityMatrix &rho, std::uint64_t seed, std::size_t n_samples, int batches) {
    if (n_samples < 1) {
        throw PreconditionError("locc_depolarize_sample needs at least one sample");
    }
    if (batches < 1) {
        throw PreconditionError("batch count must be positive");
    }
    int n = rho.n_qubits();
    DensityMatrix diagonal = coin_flip_rounds(rho);
    auto d = static_cast<Eigen::Index>(rho.dim());
    std::size_t n_batches = std::min<std::size_t>(static_cast<std::size_t>(batches), n_samples);

    std::vector<CompensatedMatrixSum> partial(n_batches, CompensatedMatrixSum(d));
    auto run_batch = [&](std::size_t b) {
        std::size_t begin = n_samples * b / n_batches;
        std::size_t end = n_samples * (b + 1) / n_batches;
        for (std::size_t i = begin; i < end; ++i) {
            std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                              static_cast<std::uint32_t>(i), static_cast<std::uint32_t>(i >> 32)};
            std::mt19937_64 rng(seq);
            partial[b].add(twirled(diagonal.entries(), n, sample_twirl_phases(n, rng)));
        }
    };
    if (n_batches == 1) {
        run_batch(0);
    } else {
        std::vector<std::thread> workers;
        workers.reserve(n_batches);
        for (std::size_t b = 0; b < n_batches; ++b) {
            workers.emplace_back(run_batch, b);
        }
        for (auto &w : workers) {
            w.join();
        }
    }
    CompensatedMatrixSum total(d);
    for (const auto &p : partial) {
        total.add(p.sum);
        total.add(-p.carry);
    }
    Matrix avg = total.sum / static_cast<double>(n_samples);
    avg = (avg + avg.adjoint()) / 2.0;
    return DensityMatrix(n, std::move(avg), rho.normalization());
}

double ghz_offdiagonal_residual(const DensityMatrix &rho) {
    int n = rho.n_qubits();
    std::uint64_t count = std::uint64_t{1} << (n - 1);
    // Each GHZ vector has two nonzero amplitudes, so matrix elements in that
    // basis are four-term sums.
    struct Label {
        std::uint64_t a, b;
        double sign;
    };
    std::vector<Label> labels;
    labels.reserve(2 * count);
    for (std::uint64_t j = 0; j < count; ++j) {
        GhzBranches br = ghz_branches(n, j);
        labels.push_back({br.zero_branch, br.one_branch, 1.0});
        labels.push_back({br.zero_branch, br.one_branch, -1.0});
    }
    double worst = 0.0;
    for (std::size_t u = 0; u < labels.size(); ++u) {
        for (std::size_t v = 0; v < labels.size(); ++v) {
            if (u == v) {
                continue;
            }
            const Label &x = labels[u];
            const Label &y = labels[v];
            Complex e = rho(x.a, y.a) + y.sign * rho(x.a, y.b) + x.sign * rho(x.b, y.a) + x.sign * y.sign * rho(x.b, y.b);
            worst = std::max(worst, std::abs(e) / 2.0);
        }
    }
    return worst;
}

}  // namespace entclass
