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

#include "entclass/qstate.h"

#include <gtest/gtest.h>

#include "entclass/error.h"
#include "test_util.h"

using namespace entclass;
using entclass::testing::kron;

namespace {

Matrix pauli_x() {
    Matrix m = Matrix::Zero(2, 2);
    m(0, 1) = m(1, 0) = 1.0;
    return m;
}

StateVector bell_phi_plus() {
    StateVector v = StateVector::Zero(4);
    v(0) = v(3) = 1.0 / std::sqrt(2.0);
    return v;
}

}  // namespace

TEST(qubit_subset, masks_follow_party_order) {
    QubitSubset s = QubitSubset::of(4, {1, 3});
    ASSERT_EQ(s.mask(), 0b1010u);
    ASSERT_TRUE(s.contains(1));
    ASSERT_FALSE(s.contains(2));
    ASSERT_EQ(s.size(), 2);
    ASSERT_EQ(s.complement(), QubitSubset::of(4, {2, 4}));
    ASSERT_EQ(s.parties(), (std::vector<int>{1, 3}));
    ASSERT_THROW(QubitSubset::of(4, {5}), InvariantError);
    ASSERT_THROW(QubitSubset(2, 0b100), InvariantError);
}

TEST(density_matrix, construction_checks) {
    Matrix m = Matrix::Identity(4, 4) / 4.0;
    ASSERT_NO_THROW(DensityMatrix(2, m));
    ASSERT_THROW(DensityMatrix(3, m), InvariantError);
    Matrix bad = m;
    bad(0, 1) = 0.1;
    ASSERT_THROW(DensityMatrix(2, bad), InvariantError);
    ASSERT_THROW(DensityMatrix(2, m * 2.0), InvariantError);
    ASSERT_NO_THROW(DensityMatrix(2, m * 0.5, Normalization::kUnnormalized));
    ASSERT_THROW(DensityMatrix(2, m * 1.5, Normalization::kUnnormalized), InvariantError);
}

TEST(tensor_product, matches_kron_oracle) {
    auto rng = entclass::testing::make_rng(1);
    DensityMatrix a = entclass::testing::random_density_matrix(1, rng);
    DensityMatrix b = entclass::testing::random_density_matrix(2, rng);
    DensityMatrix ab = tensor_product(a, b);
    ASSERT_EQ(ab.n_qubits(), 3);
    ASSERT_LE((ab.entries() - kron(a.entries(), b.entries())).cwiseAbs().maxCoeff(), 1e-15);
    ASSERT_THROW(tensor_product(ab, ab, 5), SizeCapError);
}

TEST(partial_transpose, leading_party_is_block_transpose) {
    auto rng = entclass::testing::make_rng(2);
    DensityMatrix rho = entclass::testing::random_density_matrix(3, rng);
    DensityMatrix pt = partial_transpose(rho, QubitSubset::of(3, {1}));
    // [[A, B], [C, D]] -> [[A, C], [B, D]] over 4x4 blocks.
    const Matrix &m = rho.entries();
    Matrix expected(8, 8);
    expected << m.block(0, 0, 4, 4), m.block(4, 0, 4, 4), m.block(0, 4, 4, 4), m.block(4, 4, 4, 4);
    ASSERT_LE((pt.entries() - expected).cwiseAbs().maxCoeff(), 1e-15);
}

TEST(partial_transpose, full_transpose_and_complement) {
    auto rng = entclass::testing::make_rng(3);
    DensityMatrix rho = entclass::testing::random_density_matrix(3, rng);
    DensityMatrix all = partial_transpose(rho, QubitSubset(3, 0b111));
    ASSERT_LE((all.entries() - rho.entries().transpose()).cwiseAbs().maxCoeff(), 1e-15);
    // PT on S and on its complement differ by a full transpose: same spectrum.
    QubitSubset s = QubitSubset::of(3, {2});
    Eigen::VectorXd e1 = eigenvalues(partial_transpose(rho, s));
    Eigen::VectorXd e2 = eigenvalues(partial_transpose(rho, s.complement()));
    ASSERT_LE((e1 - e2).cwiseAbs().maxCoeff(), 1e-12);
}

TEST(ppt, bell_state_is_npt_product_is_ppt) {
    DensityMatrix bell = DensityMatrix::from_pure(bell_phi_plus());
    PptCheck c = is_ppt(bell, QubitSubset::of(2, {1}));
    ASSERT_FALSE(c.ppt);
    ASSERT_NEAR(c.min_eigenvalue, -0.5, 1e-14);

    auto rng = entclass::testing::make_rng(4);
    DensityMatrix prod = tensor_product(
        entclass::testing::random_density_matrix(1, rng), entclass::testing::random_density_matrix(2, rng));
    ASSERT_TRUE(is_ppt(prod, QubitSubset::of(3, {1})).ppt);
    ASSERT_TRUE(is_positive_semidefinite(prod));
}

TEST(ppt, two_qubit_werner_boundary) {
    // p |Phi+><Phi+| + (1-p) 1/4: PT minimum eigenvalue (1 - 3p)/4.
    StateVector phi = bell_phi_plus();
    for (double p : {0.0, 0.2, 1.0 / 3.0, 0.5, 0.9}) {
        Matrix m = p * phi * phi.adjoint() + (1.0 - p) * Matrix::Identity(4, 4) / 4.0;
        DensityMatrix rho(2, m);
        ASSERT_NEAR(is_ppt(rho, QubitSubset::of(2, {2})).min_eigenvalue, (1.0 - 3.0 * p) / 4.0, 1e-14);
    }
}

TEST(overlap_and_projection, project_first_party_matches_formula) {
    auto rng = entclass::testing::make_rng(5);
    DensityMatrix rho = entclass::testing::random_density_matrix(3, rng);
    StateVector ket = entclass::testing::random_ket(1, rng);
    DensityMatrix proj = project_local(rho, 1, ket);
    Matrix bra_op = kron(ket.adjoint(), Matrix::Identity(4, 4));
    Matrix expected = bra_op * rho.entries() * bra_op.adjoint();
    ASSERT_LE((proj.entries() - expected).cwiseAbs().maxCoeff(), 1e-14);
    ASSERT_FALSE(proj.normalized());
    ASSERT_NEAR(normalize(proj).trace(), 1.0, 1e-14);

    DensityMatrix zero = DensityMatrix::from_pure(basis_state(2, 0));
    ASSERT_THROW(project_local(zero, 1, basis_state(1, 1)), NumericalError);
}

TEST(overlap_and_projection, overlap_is_expectation) {
    DensityMatrix bell = DensityMatrix::from_pure(bell_phi_plus());
    ASSERT_NEAR(overlap(bell, bell_phi_plus()), 1.0, 1e-15);
    ASSERT_NEAR(overlap(bell, basis_state(2, 0)), 0.5, 1e-15);
    ASSERT_THROW(overlap(bell, basis_state(1, 0)), InvariantError);
}

TEST(partial_trace, recovers_product_factor) {
    auto rng = entclass::testing::make_rng(6);
    DensityMatrix a = entclass::testing::random_density_matrix(1, rng);
    DensityMatrix b = entclass::testing::random_density_matrix(2, rng);
    DensityMatrix ab = tensor_product(a, b);
    ASSERT_LE(max_abs_diff(partial_trace(ab, QubitSubset::of(3, {1})), a), 1e-15);
    ASSERT_LE(max_abs_diff(partial_trace(ab, QubitSubset::of(3, {2, 3})), b), 1e-15);
}

TEST(permute_qubits, moves_tensor_factors) {
    auto rng = entclass::testing::make_rng(7);
    DensityMatrix a = entclass::testing::random_density_matrix(1, rng);
    DensityMatrix b = entclass::testing::random_density_matrix(1, rng);
    DensityMatrix c = entclass::testing::random_density_matrix(1, rng);
    DensityMatrix abc = tensor_product(tensor_product(a, b), c);
    // A_1 -> 3, A_2 -> 1, A_3 -> 2 gives b (x) c (x) a.
    std::vector<int> perm{3, 1, 2};
    DensityMatrix moved = permute_qubits(abc, perm);
    ASSERT_LE(max_abs_diff(moved, tensor_product(tensor_product(b, c), a)), 1e-15);
    std::vector<int> bad{1, 1, 2};
    ASSERT_THROW(permute_qubits(abc, bad), InvariantError);
}

TEST(conjugate, unitary_preserves_spectrum) {
    auto rng = entclass::testing::make_rng(8);
    DensityMatrix rho = entclass::testing::random_density_matrix(2, rng);
    Matrix u = kron(pauli_x(), Matrix::Identity(2, 2));
    DensityMatrix out = conjugate(rho, u);
    ASSERT_LE((eigenvalues(out) - eigenvalues(rho)).cwiseAbs().maxCoeff(), 1e-13);
    ASSERT_EQ(out(0, 0), rho(2, 2));
}
