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

#include <algorithm>
#include <bit>
#include <charconv>
#include <cmath>
#include <cstdlib>
#include <string>
#include <string_view>

#include "entclass/error.h"

namespace entclass {

namespace {

std::size_t dim_of(int n_qubits) {
    return std::size_t{1} << n_qubits;
}

// Inserts bit `b` at bit position `pos` (counted from the least significant).
std::uint64_t insert_bit(std::uint64_t x, int pos, std::uint64_t b) {
    std::uint64_t low = x & ((std::uint64_t{1} << pos) - 1);
    std::uint64_t high = x >> pos;
    return (high << (pos + 1)) | (b << pos) | low;
}

// Gathers the bits of x selected by mask into a dense value, preserving order.
std::uint64_t gather_bits(std::uint64_t x, std::uint64_t mask, int n_bits) {
    std::uint64_t out = 0;
    for (int pos = n_bits - 1; pos >= 0; --pos) {
        std::uint64_t bit = std::uint64_t{1} << pos;
        if (mask & bit) {
            out = (out << 1) | ((x & bit) ? 1 : 0);
        }
    }
    return out;
}

void check_party(int n_qubits, int party) {
    if (party < 1 || party > n_qubits) {
        throw PreconditionError(
            "party index " + std::to_string(party) + " outside 1.." + std::to_string(n_qubits));
    }
}

}  // namespace

int default_max_qubits() {
    static const int value = [] {
        const char *env = std::getenv("ENTCLASS_MAX_QUBITS");
        if (env == nullptr) {
            return kDefaultMaxQubits;
        }
        std::string_view text(env);
        int parsed = 0;
        auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), parsed);
        if (ec != std::errc() || ptr != text.data() + text.size() || parsed < 1 || parsed > 30) {
            return kDefaultMaxQubits;
        }
        return parsed;
    }();
    return value;
}

QubitSubset::QubitSubset(int n_qubits, std::uint64_t mask) : n_qubits_(n_qubits), mask_(mask) {
    if (n_qubits < 1 || n_qubits > 63) {
        throw PreconditionError("qubit count out of range: " + std::to_string(n_qubits));
    }
    if ((mask >> n_qubits) != 0) {
        throw PreconditionError("subset references a party beyond A_" + std::to_string(n_qubits));
    }
}

QubitSubset QubitSubset::of(int n_qubits, std::span<const int> parties) {
    std::uint64_t mask = 0;
    for (int p : parties) {
        check_party(n_qubits, p);
        mask |= party_bit(n_qubits, p);
    }
    return QubitSubset(n_qubits, mask);
}

bool QubitSubset::contains(int party) const {
    return party >= 1 && party <= n_qubits_ && (mask_ & party_bit(n_qubits_, party)) != 0;
}

int QubitSubset::size() const {
    return std::popcount(mask_);
}

std::vector<int> QubitSubset::parties() const {
    std::vector<int> out;
    for (int m = 1; m <= n_qubits_; ++m) {
        if (contains(m)) {
            out.push_back(m);
        }
    }
    return out;
}

QubitSubset QubitSubset::complement() const {
    std::uint64_t full = (n_qubits_ == 64) ? ~std::uint64_t{0} : ((std::uint64_t{1} << n_qubits_) - 1);
    return QubitSubset(n_qubits_, full & ~mask_);
}

DensityMatrix::DensityMatrix(int n_qubits, Matrix entries, Normalization normalization)
    : n_qubits_(n_qubits), entries_(std::move(entries)), normalization_(normalization) {
    if (n_qubits < 1 || n_qubits > 30) {
        throw InvariantError("qubit count out of range: " + std::to_string(n_qubits));
    }
    auto d = static_cast<Eigen::Index>(dim_of(n_qubits));
    if (entries_.rows() != d || entries_.cols() != d) {
        throw InvariantError(
            "density matrix on " + std::to_string(n_qubits) + " qubits must be " + std::to_string(d) + "x" +
            std::to_string(d));
    }
    double herm = (entries_ - entries_.adjoint()).cwiseAbs().maxCoeff();
    if (!(herm <= kHermitianTol)) {
        throw InvariantError("operator is not Hermitian (max deviation " + std::to_string(herm) + ")");
    }
    double tr = entries_.trace().real();
    if (normalization_ == Normalization::kNormalized) {
        if (!(std::abs(tr - 1.0) <= kTraceTol)) {
            throw InvariantError("trace is " + std::to_string(tr) + ", expected 1");
        }
    } else if (!(tr > 0.0 && tr <= 1.0 + kTraceTol)) {
        throw InvariantError("unnormalized trace " + std::to_string(tr) + " outside (0, 1]");
    }
}

DensityMatrix DensityMatrix::maximally_mixed(int n_qubits) {
    auto d = static_cast<Eigen::Index>(dim_of(n_qubits));
    return DensityMatrix(n_qubits, Matrix::Identity(d, d) / static_cast<double>(d));
}

DensityMatrix DensityMatrix::from_pure(const StateVector &psi) {
    auto d = static_cast<std::uint64_t>(psi.size());
    if (d < 2 || (d & (d - 1)) != 0) {
        throw InvariantError("state vector length must be a power of two >= 2");
    }
    if (std::abs(psi.squaredNorm() - 1.0) > 1e-12) {
        throw InvariantError("state vector is not normalized");
    }
    int n = std::countr_zero(d);
    Matrix m = psi * psi.adjoint();
    return DensityMatrix(n, std::move(m));
}

double DensityMatrix::trace() const {
    return entries_.trace().real();
}

StateVector basis_state(int n_qubits, std::uint64_t index) {
    std::size_t d = dim_of(n_qubits);
    if (index >= d) {
        throw PreconditionError("basis index out of range");
    }
    StateVector v = StateVector::Zero(static_cast<Eigen::Index>(d));
    v(static_cast<Eigen::Index>(index)) = 1.0;
    return v;
}

DensityMatrix tensor_product(const DensityMatrix &a, const DensityMatrix &b, int max_qubits) {
    int n = a.n_qubits() + b.n_qubits();
    if (n > max_qubits) {
        throw SizeCapError(
            "tensor product of " + std::to_string(n) + " qubits exceeds the cap of " + std::to_string(max_qubits));
    }
    auto da = static_cast<Eigen::Index>(a.dim());
    auto db = static_cast<Eigen::Index>(b.dim());
    Matrix out(da * db, da * db);
    for (Eigen::Index i = 0; i < da; ++i) {
        for (Eigen::Index k = 0; k < da; ++k) {
            out.block(i * db, k * db, db, db) = a.entries()(i, k) * b.entries();
        }
    }
    Normalization norm = (a.normalized() && b.normalized()) ? Normalization::kNormalized
                                                             : Normalization::kUnnormalized;
    return DensityMatrix(n, std::move(out), norm);
}

DensityMatrix partial_transpose(const DensityMatrix &rho, const QubitSubset &subset) {
    if (subset.n_qubits() != rho.n_qubits()) {
        throw PreconditionError("subset defined for a different number of qubits");
    }
    std::uint64_t m = subset.mask();
    std::uint64_t d = rho.dim();
    Matrix out(rho.entries().rows(), rho.entries().cols());
    for (std::uint64_t r = 0; r < d; ++r) {
        for (std::uint64_t c = 0; c < d; ++c) {
            std::uint64_t r2 = (r & ~m) | (c & m);
            std::uint64_t c2 = (c & ~m) | (r & m);
            out(static_cast<Eigen::Index>(r2), static_cast<Eigen::Index>(c2)) =
                rho.entries()(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c));
        }
    }
    return DensityMatrix(rho.n_qubits(), std::move(out), rho.normalization());
}

Eigen::VectorXd eigenvalues(const DensityMatrix &rho) {
    Eigen::SelfAdjointEigenSolver<Matrix> solver(rho.entries(), Eigen::EigenvaluesOnly);
    if (solver.info() != Eigen::Success) {
        throw NumericalError("Hermitian eigensolver did not converge");
    }
    return solver.eigenvalues();
}

PptCheck is_ppt(const DensityMatrix &rho, const QubitSubset &subset, std::optional<double> tol) {
    Eigen::VectorXd ev = eigenvalues(partial_transpose(rho, subset));
    double lo = ev(0);
    double hi = ev(ev.size() - 1);
    double t = tol.value_or(1e-9 * std::max(std::abs(lo), std::abs(hi)));
    return PptCheck{lo >= -t, lo, t};
}

bool is_positive_semidefinite(const DensityMatrix &rho, double relative_tol) {
    Eigen::VectorXd ev = eigenvalues(rho);
    double scale = std::max(std::abs(ev(0)), std::abs(ev(ev.size() - 1)));
    return ev(0) >= -relative_tol * scale;
}

double overlap(const DensityMatrix &rho, const StateVector &psi) {
    if (static_cast<std::size_t>(psi.size()) != rho.dim()) {
        throw PreconditionError("state vector dimension does not match the operator");
    }
    if (std::abs(psi.squaredNorm() - 1.0) > 1e-12) {
        throw PreconditionError("state vector is not normalized");
    }
    Complex v = psi.dot(rho.entries() * psi);
    return v.real();
}

DensityMatrix project_local(const DensityMatrix &rho, int party, const StateVector &ket) {
    int n = rho.n_qubits();
    check_party(n, party);
    if (n < 2) {
        throw PreconditionError("cannot project the only qubit of a 1-qubit operator");
    }
    if (ket.size() != 2 || std::abs(ket.squaredNorm() - 1.0) > 1e-12) {
        throw PreconditionError("projection ket must be a normalized 1-qubit state");
    }
    int pos = n - party;
    std::uint64_t d_out = dim_of(n - 1);
    Matrix out = Matrix::Zero(static_cast<Eigen::Index>(d_out), static_cast<Eigen::Index>(d_out));
    for (std::uint64_t r = 0; r < d_out; ++r) {
        for (std::uint64_t c = 0; c < d_out; ++c) {
            Complex acc = 0.0;
            for (std::uint64_t b = 0; b < 2; ++b) {
                for (std::uint64_t b2 = 0; b2 < 2; ++b2) {
                    acc += std::conj(ket(static_cast<Eigen::Index>(b))) * ket(static_cast<Eigen::Index>(b2)) *
                           rho.entries()(
                               static_cast<Eigen::Index>(insert_bit(r, pos, b)),
                               static_cast<Eigen::Index>(insert_bit(c, pos, b2)));
                }
            }
            out(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) = acc;
        }
    }
    double p = out.trace().real();
    if (!(p >= 1e-14)) {
        throw NumericalError("projection has zero probability (trace " + std::to_string(p) + ")");
    }
    return DensityMatrix(n - 1, std::move(out), Normalization::kUnnormalized);
}

DensityMatrix normalize(const DensityMatrix &rho) {
    double tr = rho.trace();
    if (!(tr > 0.0)) {
        throw NumericalError("cannot normalize an operator with non-positive trace");
    }
    return DensityMatrix(rho.n_qubits(), rho.entries() / tr, Normalization::kNormalized);
}

DensityMatrix partial_trace(const DensityMatrix &rho, const QubitSubset &keep) {
    int n = rho.n_qubits();
    if (keep.n_qubits() != n || keep.empty()) {
        throw PreconditionError("partial trace needs a nonempty subset of the operator's parties");
    }
    std::uint64_t km = keep.mask();
    int n_keep = keep.size();
    std::uint64_t d = rho.dim();
    auto d_out = static_cast<Eigen::Index>(dim_of(n_keep));
    Matrix out = Matrix::Zero(d_out, d_out);
    for (std::uint64_t r = 0; r < d; ++r) {
        for (std::uint64_t c = 0; c < d; ++c) {
            if ((r & ~km) != (c & ~km)) {
                continue;
            }
            out(static_cast<Eigen::Index>(gather_bits(r, km, n)), static_cast<Eigen::Index>(gather_bits(c, km, n))) +=
                rho.entries()(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c));
        }
    }
    return DensityMatrix(n_keep, std::move(out), rho.normalization());
}

DensityMatrix conjugate(const DensityMatrix &rho, const Matrix &unitary) {
    if (unitary.rows() != rho.entries().rows() || unitary.cols() != rho.entries().cols()) {
        throw PreconditionError("unitary dimension does not match the operator");
    }
    Matrix m = unitary * rho.entries() * unitary.adjoint();
    m = (m + m.adjoint()) / 2.0;
    return DensityMatrix(rho.n_qubits(), std::move(m), rho.normalization());
}

void check_permutation(int n_qubits, std::span<const int> perm) {
    if (static_cast<int>(perm.size()) != n_qubits) {
        throw PreconditionError("permutation must list one image per party");
    }
    std::vector<bool> seen(static_cast<std::size_t>(n_qubits) + 1, false);
    for (int image : perm) {
        if (image < 1 || image > n_qubits || seen[static_cast<std::size_t>(image)]) {
            throw PreconditionError("invalid party permutation");
        }
        seen[static_cast<std::size_t>(image)] = true;
    }
}

DensityMatrix permute_qubits(const DensityMatrix &rho, std::span<const int> perm) {
    int n = rho.n_qubits();
    check_permutation(n, perm);
    std::uint64_t d = rho.dim();
    std::vector<std::uint64_t> relabel(d);
    for (std::uint64_t x = 0; x < d; ++x) {
        std::uint64_t y = 0;
        for (int m = 1; m <= n; ++m) {
            if (x & party_bit(n, m)) {
                y |= party_bit(n, perm[static_cast<std::size_t>(m - 1)]);
            }
        }
        relabel[x] = y;
    }
    Matrix out(rho.entries().rows(), rho.entries().cols());
    for (std::uint64_t r = 0; r < d; ++r) {
        for (std::uint64_t c = 0; c < d; ++c) {
            out(static_cast<Eigen::Index>(relabel[r]), static_cast<Eigen::Index>(relabel[c])) =
                rho.entries()(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c));
        }
    }
    return DensityMatrix(n, std::move(out), rho.normalization());
}

double max_abs_diff(const DensityMatrix &a, const DensityMatrix &b) {
    if (a.dim() != b.dim()) {
        throw PreconditionError("operators have different dimensions");
    }
    return (a.entries() - b.entries()).cwiseAbs().maxCoeff();
}

double frobenius_distance(const DensityMatrix &a, const DensityMatrix &b) {
    if (a.dim() != b.dim()) {
        throw PreconditionError("operators have different dimensions");
    }
    return (a.entries() - b.entries()).norm();
}

}  // namespace entclass
