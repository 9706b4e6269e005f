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

#include <gtest/gtest.h>
#include <numbers>

#include "entclass/classify.h"
#include "entclass/error.h"
#include "test_util.h"

using namespace entclass;

namespace {

Matrix ghz_change_of_basis(int n) {
    auto d = Eigen::Index{1} << n;
    Matrix basis(d, d);
    Eigen::Index col = 0;
    for (std::uint64_t j = 0; j < (std::uint64_t{1} << (n - 1)); ++j) {
        basis.col(col++) = ghz_basis_state(n, {j, Sign::kPlus});
        basis.col(col++) = ghz_basis_state(n, {j, Sign::kMinus});
    }
    return basis;
}

// Largest off-diagonal element of rho written in the GHZ basis.
double offdiag_oracle(const DensityMatrix &rho) {
    Matrix b = ghz_change_of_basis(rho.n_qubits());
    Matrix g = b.adjoint() * rho.entries() * b;
    g.diagonal().setZero();
    return g.cwiseAbs().maxCoeff();
}

}  // namespace

TEST(depolarize_channel, fixed_points) {
    auto rng = entclass::testing::make_rng(21);
    for (int n = 2; n <= 5; ++n) {
        DensityMatrix rho = rho_from_params(entclass::testing::random_params(n, rng));
        ASSERT_LE(max_abs_diff(depolarize_channel(rho), rho), 1e-13);
    }
    DensityMatrix ghz = DensityMatrix::from_pure(ghz_basis_state(4, {0, Sign::kPlus}));
    ASSERT_LE(max_abs_diff(depolarize_channel(ghz), ghz), 1e-15);
}

TEST(depolarize_channel, preserves_overlaps_and_pair_sums) {
    auto rng = entclass::testing::make_rng(22);
    for (int n = 2; n <= 4; ++n) {
        for (int trial = 0; trial < 10; ++trial) {
            DensityMatrix rho = entclass::testing::random_density_matrix(n, rng);
            DensityMatrix out = depolarize_channel(rho);
            ASSERT_LE(offdiag_oracle(out), 1e-12);
            ASSERT_LE(ghz_offdiagonal_residual(out), 1e-12);
            ASSERT_NEAR(out.trace(), 1.0, 1e-13);
            ASSERT_TRUE(is_positive_semidefinite(out));
            for (std::uint64_t j = 0; j < (std::uint64_t{1} << (n - 1)); ++j) {
                StateVector p = ghz_basis_state(n, {j, Sign::kPlus});
                StateVector m = ghz_basis_state(n, {j, Sign::kMinus});
                if (j == 0) {
                    ASSERT_NEAR(overlap(out, p), overlap(rho, p), 1e-12);
                    ASSERT_NEAR(overlap(out, m), overlap(rho, m), 1e-12);
                } else {
                    ASSERT_NEAR(overlap(out, p) + overlap(out, m), overlap(rho, p) + overlap(rho, m), 1e-12);
                    ASSERT_NEAR(overlap(out, p), overlap(out, m), 1e-12);
                }
            }
            ASSERT_LE(max_abs_diff(depolarize_channel(out), out), 1e-13);
        }
    }
}

TEST(depolarize_channel, commutes_with_sigma_z_on_last_party) {
    auto rng = entclass::testing::make_rng(23);
    DensityMatrix rho = entclass::testing::random_density_matrix(3, rng);
    Matrix z = Matrix::Identity(8, 8);
    for (Eigen::Index x = 1; x < 8; x += 2) {
        z(x, x) = -1.0;
    }
    DensityMatrix a = depolarize_channel(conjugate(rho, z));
    DensityMatrix b = conjugate(depolarize_channel(rho), z);
    ASSERT_LE(max_abs_diff(a, b), 1e-14);
}

TEST(depolarize_channel, product_input_stays_ppt) {
    auto rng = entclass::testing::make_rng(24);
    for (int trial = 0; trial < 20; ++trial) {
        DensityMatrix prod = DensityMatrix::from_pure(entclass::testing::random_ket(1, rng));
        for (int m = 1; m < 3; ++m) {
            prod = tensor_product(prod, DensityMatrix::from_pure(entclass::testing::random_ket(1, rng)));
        }
        RhoNParams p = params_from_state(depolarize_channel(prod));
        for (std::uint64_t k = 1; k <= p.num_lambdas(); ++k) {
            ASSERT_TRUE(split_ppt_by_index(p, k).ppt);
        }
    }
}

TEST(mixing_round, spin_flip_kills_plus_minus_coherence) {
    int n = 3;
    StateVector p = ghz_basis_state(n, {0, Sign::kPlus});
    StateVector m = ghz_basis_state(n, {0, Sign::kMinus});
    Matrix cross = p * m.adjoint();
    Matrix herm = 0.5 * (p * p.adjoint() + m * m.adjoint()) + 0.25 * (cross + cross.adjoint());
    DensityMatrix rho(n, herm);
    DensityMatrix out = mixing_round(rho, MixingRound::spin_flip_all());
    Matrix expected = 0.5 * (p * p.adjoint() + m * m.adjoint());
    ASSERT_LE((out.entries() - expected).cwiseAbs().maxCoeff(), 1e-15);
}

TEST(mixing_round, sigma_z_pair_sign_flip) {
    int n = 4;
    // j = 5 = 101: the pair round on A_1 flips the sign, on A_2 it does not.
    StateVector v = ghz_basis_state(n, {5, Sign::kMinus});
    DensityMatrix rho = DensityMatrix::from_pure(v);
    for (int party = 1; party <= 3; ++party) {
        Matrix u = Matrix::Identity(16, 16);
        for (Eigen::Index x = 0; x < 16; ++x) {
            int parity = ((x >> (n - party)) & 1) + (x & 1);
            u(x, x) = parity % 2 ? -1.0 : 1.0;
        }
        StateVector w = u * v;
        bool j_bit = (5 >> (n - 1 - party)) & 1;
        ASSERT_LE((w - (j_bit ? -1.0 : 1.0) * v).norm(), 1e-15) << party;
        DensityMatrix img = apply_round_unitary(rho, MixingRound::sigma_z_pair(party));
        ASSERT_LE(max_abs_diff(img, rho), 1e-15);
    }
    ASSERT_THROW(MixingRound::sigma_z_pair(4).validate(4), InvariantError);
}

TEST(mixing_round, identity_is_invariant) {
    DensityMatrix id = DensityMatrix::maximally_mixed(3);
    std::vector<double> phases{1.0, 2.0, 2.0 * std::numbers::pi - 3.0};
    for (const auto &r : {MixingRound::spin_flip_all(), MixingRound::sigma_z_pair(2), MixingRound::phase_twirl(phases)}) {
        ASSERT_LE(max_abs_diff(mixing_round(id, r), id), 1e-15);
    }
    ASSERT_THROW(MixingRound::phase_twirl({1.0, 1.0, 1.0}).validate(3), InvariantError);
}

TEST(coin_flip_rounds, output_is_ghz_diagonal) {
    auto rng = entclass::testing::make_rng(25);
    for (int n = 2; n <= 4; ++n) {
        DensityMatrix rho = entclass::testing::random_density_matrix(n, rng);
        ASSERT_LE(offdiag_oracle(coin_flip_rounds(rho)), 1e-12);
    }
}

TEST(sampled_protocol, phases_sum_to_two_pi) {
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 100; ++trial) {
        std::vector<double> ph = sample_twirl_phases(4, rng);
        ASSERT_EQ(ph.size(), 4u);
        double s = 0.0;
        for (int i = 0; i < 3; ++i) {
            ASSERT_GE(ph[static_cast<std::size_t>(i)], 0.0);
            ASSERT_LT(ph[static_cast<std::size_t>(i)], 2.0 * std::numbers::pi);
            s += ph[static_cast<std::size_t>(i)];
        }
        ASSERT_NEAR(s + ph[3], 2.0 * std::numbers::pi, 1e-12);
    }
}

TEST(sampled_protocol, family_input_is_exact) {
    auto rng = entclass::testing::make_rng(26);
    DensityMatrix rho = rho_from_params(entclass::testing::random_params(3, rng));
    for (std::size_t ns : {1u, 7u, 50u}) {
        ASSERT_LE(max_abs_diff(locc_depolarize_sample(rho, 3, ns), rho), 1e-13);
    }
}

TEST(sampled_protocol, converges_to_exact_channel) {
    // Observed distances at 10^4 samples are about 1e-3 (0.1 / sqrt(n)).
    double mean_small = 0.0;
    double mean_large = 0.0;
    for (int seed = 1; seed <= 5; ++seed) {
        auto rng = entclass::testing::make_rng(static_cast<std::uint64_t>(seed));
        DensityMatrix rho = entclass::testing::random_density_matrix(3, rng);
        DensityMatrix exact = depolarize_channel(rho);
        double small = frobenius_distance(locc_depolarize_sample(rho, 100 + seed, 100), exact);
        double large = frobenius_distance(locc_depolarize_sample(rho, 100 + seed, 10000, 4), exact);
        ASSERT_LT(large, 0.02);
        mean_small += small / 5.0;
        mean_large += large / 5.0;
    }
    ASSERT_LT(mean_large, mean_small);
}

TEST(sampled_protocol, deterministic_across_batching) {
    auto rng = entclass::testing::make_rng(27);
    DensityMatrix rho = entclass::testing::random_density_matrix(3, rng);
    DensityMatrix a = locc_depolarize_sample(rho, 9, 400, 1);
    DensityMatrix b = locc_depolarize_sample(rho, 9, 400, 1);
    DensityMatrix c = locc_depolarize_sample(rho, 9, 400, 3);
    ASSERT_EQ(a.entries(), b.entries());
    ASSERT_LE(max_abs_diff(a, c), 1e-14);
}
