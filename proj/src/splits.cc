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

#include "entclass/splits.h"

#include <algorithm>
#include <bit>
#include <functional>

#include "entclass/error.h"

namespace entclass {

namespace {

inline constexpr int kMaxBipartiteQubits = 24;

std::uint64_t full_mask(int n) {
    return (std::uint64_t{1} << n) - 1;
}

// Highest set bit = least party index, so descending mask order is
// ascending least-member order for disjoint blocks.
void canonicalize(std::vector<std::uint64_t> &blocks) {
    std::sort(blocks.begin(), blocks.end(), std::greater<>());
}

}  // namespace

Split Split::from_masks(int n_qubits, std::vector<std::uint64_t> masks) {
    if (n_qubits < 1 || n_qubits > 63) {
        throw PreconditionError("qubit count out of range: " + std::to_string(n_qubits));
    }
    std::uint64_t seen = 0;
    for (std::uint64_t m : masks) {
        if (m == 0) {
            throw PreconditionError("split blocks must be nonempty");
        }
        if ((m >> n_qubits) != 0) {
            throw PreconditionError("split block references a party beyond A_" + std::to_string(n_qubits));
        }
        if (seen & m) {
            throw PreconditionError("split blocks must be disjoint");
        }
        seen |= m;
    }
    if (seen != full_mask(n_qubits)) {
        throw PreconditionError("split blocks must cover every party");
    }
    canonicalize(masks);
    return Split(n_qubits, std::move(masks));
}

Split Split::from_parties(int n_qubits, const std::vector<std::vector<int>> &blocks) {
    std::vector<std::uint64_t> masks;
    masks.reserve(blocks.size());
    for (const auto &block : blocks) {
        std::uint64_t m = 0;
        for (int p : block) {
            if (p < 1 || p > n_qubits) {
                throw PreconditionError("party index " + std::to_string(p) + " outside 1.." + std::to_string(n_qubits));
            }
            if (m & party_bit(n_qubits, p)) {
                throw PreconditionError("party listed twice in a block");
            }
            m |= party_bit(n_qubits, p);
        }
        masks.push_back(m);
    }
    return from_masks(n_qubits, std::move(masks));
}

Split Split::bipartite(const QubitSubset &side) {
    return from_masks(side.n_qubits(), {side.mask(), side.complement().mask()});
}

Split Split::finest(int n_qubits) {
    std::vector<std::uint64_t> masks;
    for (int m = 1; m <= n_qubits; ++m) {
        masks.push_back(party_bit(n_qubits, m));
    }
    return from_masks(n_qubits, std::move(masks));
}

int Split::block_of(int party) const {
    if (party < 1 || party > n_qubits_) {
        throw PreconditionError("party index " + std::to_string(party) + " outside 1.." + std::to_string(n_qubits_));
    }
    std::uint64_t bit = party_bit(n_qubits_, party);
    for (std::size_t i = 0; i < blocks_.size(); ++i) {
        if (blocks_[i] & bit) {
            return static_cast<int>(i);
        }
    }
    throw InvariantError("party not covered by split");
}

std::vector<std::vector<int>> Split::to_parties() const {
    std::vector<std::vector<int>> out;
    out.reserve(blocks_.size());
    for (std::uint64_t m : blocks_) {
        out.push_back(QubitSubset(n_qubits_, m).parties());
    }
    return out;
}

std::string Split::str() const {
    std::string out;
    for (std::size_t i = 0; i < blocks_.size(); ++i) {
        if (i > 0) {
            out += "-";
        }
        auto parties = QubitSubset(n_qubits_, blocks_[i]).parties();
        if (parties.size() > 1) {
            out += "(";
        }
        for (int p : parties) {
            out += "A" + std::to_string(p);
        }
        if (parties.size() > 1) {
            out += ")";
        }
    }
    return out;
}

int PartitionShape::n() const {
    int total = 0;
    for (std::size_t j = 0; j < multiplicities.size(); ++j) {
        total += static_cast<int>(j + 1) * multiplicities[j];
    }
    return total;
}

int PartitionShape::k() const {
    int total = 0;
    for (int r : multiplicities) {
        total += r;
    }
    return total;
}

PartitionShape PartitionShape::of(const Split &split) {
    PartitionShape shape;
    shape.multiplicities.assign(static_cast<std::size_t>(split.n_qubits()), 0);
    for (std::uint64_t m : split.blocks()) {
        shape.multiplicities[static_cast<std::size_t>(std::popcount(m) - 1)]++;
    }
    return shape;
}

std::vector<Split> enumerate_bipartite_splits(int n_qubits) {
    if (n_qubits < 2) {
        throw PreconditionError("bipartite splits need at least 2 parties");
    }
    if (n_qubits > kMaxBipartiteQubits) {
        throw SizeCapError("bipartite enumeration supports at most " + std::to_string(kMaxBipartiteQubits) + " parties");
    }
    std::uint64_t count = (std::uint64_t{1} << (n_qubits - 1)) - 1;
    std::vector<Split> out;
    out.reserve(count);
    for (std::uint64_t idx = 1; idx <= count; ++idx) {
        out.push_back(lambda_index_to_split(n_qubits, idx));
    }
    return out;
}

std::vector<Split> enumerate_k_splits(int n_qubits, int k) {
    std::vector<Split> out;
    for_each_k_split(n_qubits, k, [&](Split s) { out.push_back(std::move(s)); });
    return out;
}

bool is_contained(const Split &fine, const Split &coarse) {
    if (fine.n_qubits() != coarse.n_qubits()) {
        throw PreconditionError("splits refer to different party counts");
    }
    for (std::uint64_t f : fine.blocks()) {
        bool inside = false;
        for (std::uint64_t c : coarse.blocks()) {
            if ((f & c) == f) {
                inside = true;
                break;
            }
        }
        if (!inside) {
            return false;
        }
    }
    return true;
}

std::vector<std::uint64_t> containing_lambda_indices(const Split &split) {
    int n = split.n_qubits();
    int k = split.k();
    if (k < 2) {
        return {};
    }
    // Groups of blocks that avoid the block holding A_n.
    int anchor = split.block_of(n);
    std::vector<std::uint64_t> others;
    for (int i = 0; i < k; ++i) {
        if (i != anchor) {
            others.push_back(split.blocks()[static_cast<std::size_t>(i)]);
        }
    }
    std::vector<std::uint64_t> indices;
    std::uint64_t n_groups = std::uint64_t{1} << others.size();
    indices.reserve(n_groups - 1);
    for (std::uint64_t g = 1; g < n_groups; ++g) {
        std::uint64_t side = 0;
        for (std::size_t b = 0; b < others.size(); ++b) {
            if (g & (std::uint64_t{1} << b)) {
                side |= others[b];
            }
        }
        indices.push_back(side >> 1);
    }
    std::sort(indices.begin(), indices.end());
    return indices;
}

std::vector<Split> containing_bipartite_splits(const Split &split) {
    std::vector<Split> out;
    for (std::uint64_t idx : containing_lambda_indices(split)) {
        out.push_back(lambda_index_to_split(split.n_qubits(), idx));
    }
    return out;
}

std::uint64_t split_to_lambda_index(const Split &split) {
    if (split.k() != 2) {
        throw PreconditionError("lambda index is defined for bipartite splits only, got k=" + std::to_string(split.k()));
    }
    int n = split.n_qubits();
    std::uint64_t side = split.blocks()[0];
    if (side & party_bit(n, n)) {
        side = split.blocks()[1];
    }
    // Party A_m contributes 2^{n-1-m}; with A_m stored at bit n-m that is the
    // block mask shifted down by the (zero) A_n bit.
    return side >> 1;
}

Split lambda_index_to_split(int n_qubits, std::uint64_t index) {
    if (n_qubits < 2 || n_qubits > 63) {
        throw PreconditionError("lambda indices need 2..63 parties");
    }
    std::uint64_t top = (std::uint64_t{1} << (n_qubits - 1)) - 1;
    if (index < 1 || index > top) {
        throw PreconditionError("lambda index " + std::to_string(index) + " outside 1.." + std::to_string(top));
    }
    return Split::bipartite(QubitSubset(n_qubits, lambda_index_block_mask(index)));
}

BigCount count_shape_configurations(const PartitionShape &shape) {
    for (int r : shape.multiplicities) {
        if (r < 0) {
            throw PreconditionError("partition shape multiplicities must be nonnegative");
        }
    }
    int n = shape.n();
    auto factorial = [](int m) {
        BigCount f = 1;
        for (int i = 2; i <= m; ++i) {
            f *= i;
        }
        return f;
    };
    BigCount denom = 1;
    for (std::size_t j = 0; j < shape.multiplicities.size(); ++j) {
        int r = shape.multiplicities[j];
        denom *= factorial(r);
        BigCount jf = factorial(static_cast<int>(j + 1));
        for (int i = 0; i < r; ++i) {
            denom *= jf;
        }
    }
    return factorial(n) / denom;
}

std::vector<PartitionShape> enumerate_shapes(int n, int k) {
    if (n < 1) {
        throw PreconditionError("shapes need n >= 1");
    }
    std::vector<PartitionShape> out;
    std::vector<int> parts;
    auto recurse = [&](auto &&self, int remaining, int max_part) -> void {
        if (remaining == 0) {
            if (k == 0 || static_cast<int>(parts.size()) == k) {
                PartitionShape s;
                s.multiplicities.assign(static_cast<std::size_t>(n), 0);
                for (int p : parts) {
                    s.multiplicities[static_cast<std::size_t>(p - 1)]++;
                }
                out.push_back(std::move(s));
            }
            return;
        }
        for (int p = std::min(remaining, max_part); p >= 1; --p) {
            parts.push_back(p);
            self(self, remaining - p, p);
            parts.pop_back();
        }
    };
    recurse(recurse, n, n);
    return out;
}

BigCount partition_function(int n) {
    if (n < 0) {
        throw PreconditionError("partition function needs n >= 0");
    }
    std::vector<BigCount> p(static_cast<std::size_t>(n) + 1);
    p[0] = 1;
    for (int m = 1; m <= n; ++m) {
        BigCount total = 0;
        for (int j = 1;; ++j) {
            int g1 = j * (3 * j - 1) / 2;
            if (g1 > m) {
                break;
            }
            int g2 = j * (3 * j + 1) / 2;
            BigCount term = p[static_cast<std::size_t>(m - g1)];
            if (g2 <= m) {
                term += p[static_cast<std::size_t>(m - g2)];
            }
            if (j % 2 == 1) {
                total += term;
            } else {
                total -= term;
            }
        }
        p[static_cast<std::size_t>(m)] = total;
    }
    return p[static_cast<std::size_t>(n)];
}

BigCount stirling2(int n, int k) {
    if (n < 0 || k < 0) {
        throw PreconditionError("stirling2 needs nonnegative arguments");
    }
    std::vector<BigCount> row(static_cast<std::size_t>(k) + 1, 0);
    row[0] = 1;
    for (int i = 1; i <= n; ++i) {
        for (int j = std::min(i, k); j >= 1; --j) {
            row[static_cast<std::size_t>(j)] =
                BigCount(j) * row[static_cast<std::size_t>(j)] + row[static_cast<std::size_t>(j - 1)];
        }
        row[0] = 0;
    }
    return row[static_cast<std::size_t>(k)];
}

}  // namespace entclass
