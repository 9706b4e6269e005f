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

#ifndef ENTCLASS_SPLITS_H
#define ENTCLASS_SPLITS_H

#include <algorithm>
#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <string>
#include <vector>

#include "entclass/error.h"
#include "entclass/qstate.h"

namespace entclass {

/// Exact counts. Small values stay inline; larger ones promote to heap limbs.
using BigCount = boost::multiprecision::cpp_int;

/// A partition of the parties A_1..A_n into k disjoint nonempty blocks.
///
/// Blocks are stored as masks (A_1 = most significant bit) ordered by their
/// least member, so two splits describing the same partition compare equal.
class Split {
   public:
    /// Blocks given as 1-based party lists, in any order.
    static Split from_parties(int n_qubits, const std::vector<std::vector<int>> &blocks);
    static Split from_masks(int n_qubits, std::vector<std::uint64_t> masks);
    /// The bipartite split `side | complement`.
    static Split bipartite(const QubitSubset &side);
    /// Every party in its own block.
    static Split finest(int n_qubits);

    int n_qubits() const {
        return n_qubits_;
    }
    int k() const {
        return static_cast<int>(blocks_.size());
    }
    const std::vector<std::uint64_t> &blocks() const {
        return blocks_;
    }
    QubitSubset block(int i) const {
        return QubitSubset(n_qubits_, blocks_.at(static_cast<std::size_t>(i)));
    }
    /// Index of the block holding `party`.
    int block_of(int party) const;
    bool separates(int party_a, int party_b) const {
        return block_of(party_a) != block_of(party_b);
    }
    /// Sorted lists of sorted 1-based party indices, e.g. [[1,4,5],[2,3,6]].
    std::vector<std::vector<int>> to_parties() const;
    /// Human readable form such as "(A1A4A5)-(A2A3A6)".
    std::string str() const;

    bool operator==(const Split &other) const = default;
    auto operator<=>(const Split &other) const = default;

   private:
    Split(int n_qubits, std::vector<std::uint64_t> blocks) : n_qubits_(n_qubits), blocks_(std::move(blocks)) {
    }
    int n_qubits_;
    std::vector<std::uint64_t> blocks_;
};

/// r_j = number of blocks of size j (index j-1), with sum_j j*r_j = n.
struct PartitionShape {
    std::vector<int> multiplicities;

    int n() const;
    int k() const;
    static PartitionShape of(const Split &split);
    bool operator==(const PartitionShape &other) const = default;
};

/// All 2^{n-1}-1 bipartite splits, ordered by lambda index.
std::vector<Split> enumerate_bipartite_splits(int n_qubits);

/// All set partitions of n parties into exactly k blocks, generated from
/// restricted-growth strings (canonical by construction).
std::vector<Split> enumerate_k_splits(int n_qubits, int k);

/// Visits the same sequence as enumerate_k_splits without materializing it.
template <typename Visitor>
void for_each_k_split(int n_qubits, int k, Visitor &&visit);

/// True iff every block of `coarse` is a union of blocks of `fine`.
bool is_contained(const Split &fine, const Split &coarse);

/// The 2^{k-1}-1 bipartite splits obtained by joining blocks of `split` into
/// two groups, ordered by lambda index.
std::vector<Split> containing_bipartite_splits(const Split &split);
/// Lambda indices of containing_bipartite_splits(split), ascending.
std::vector<std::uint64_t> containing_lambda_indices(const Split &split);

/// Index k of the lambda governing the PPT condition of a bipartite split:
/// the binary word of the block without A_n, A_1 most significant, dropping
/// the always-zero A_n bit. Bijective onto [1, 2^{n-1}-1].
std::uint64_t split_to_lambda_index(const Split &split);
Split lambda_index_to_split(int n_qubits, std::uint64_t index);
/// Block mask (A_n excluded) of the bipartite split with this lambda index.
inline std::uint64_t lambda_index_block_mask(std::uint64_t index) {
    return index << 1;
}

/// n! / (prod_j r_j! * prod_j (j!)^{r_j}).
BigCount count_shape_configurations(const PartitionShape &shape);

/// All shapes (integer partitions of n), optionally restricted to k blocks.
std::vector<PartitionShape> enumerate_shapes(int n, int k = 0);

/// Number of integer partitions of n via Euler's pentagonal recurrence.
BigCount partition_function(int n);

/// Stirling number of the second kind S(n, k) from its triangular recurrence.
BigCount stirling2(int n, int k);

inline constexpr int kMaxEnumerationQubits = 16;

template <typename Visitor>
void for_each_k_split(int n_qubits, int k, Visitor &&visit) {
    if (n_qubits < 1 || n_qubits > kMaxEnumerationQubits) {
        throw SizeCapError("split enumeration supports 1.." + std::to_string(kMaxEnumerationQubits) + " parties");
    }
    if (k < 1 || k > n_qubits) {
        throw PreconditionError("k must lie in 1..n");
    }
    // growth[i] = block label of party A_{i+1}; labels appear in increasing
    // order of first occurrence, which is the canonical block order.
    std::vector<int> growth(static_cast<std::size_t>(n_qubits), 0);
    std::vector<int> prefix_max(static_cast<std::size_t>(n_qubits), 0);
    std::vector<std::uint64_t> masks(static_cast<std::size_t>(k));
    auto emit = [&]() {
        std::fill(masks.begin(), masks.end(), 0);
        for (int i = 0; i < n_qubits; ++i) {
            masks[static_cast<std::size_t>(growth[static_cast<std::size_t>(i)])] |= party_bit(n_qubits, i + 1);
        }
        visit(Split::from_masks(n_qubits, masks));
    };
    auto recurse = [&](auto &&self, int i) -> void {
        int used = prefix_max[static_cast<std::size_t>(i - 1)] + 1;
        int remaining = n_qubits - i;
        if (i == n_qubits) {
            if (used == k) {
                emit();
            }
            return;
        }
        int top = std::min(used, k - 1);
        for (int label = 0; label <= top; ++label) {
            int next_used = std::max(used, label + 1);
            if (next_used + (remaining - 1) < k) {
                continue;
            }
            growth[static_cast<std::size_t>(i)] = label;
            prefix_max[static_cast<std::size_t>(i)] = next_used - 1;
            self(self, i + 1);
        }
    };
    growth[0] = 0;
    prefix_max[0] = 0;
    recurse(recurse, 1);
}

}  // namespace entclass

#endif
