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

#include "entclass/purify.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <string>

#include "entclass/error.h"

namespace entclass {

namespace {

constexpr double kNegInf = -std::numeric_limits<double>::infinity();

double log_or_neg_inf(double v) {
    return v > 0.0 ? std::log(v) : kNegInf;
}

double log_sum_exp(const std::vector<double> &logs) {
    double top = kNegInf;
    for (double l : logs) {
        top = std::max(top, l);
    }
    if (top == kNegInf) {
        return kNegInf;
    }
    double acc = 0.0;
    for (double l : logs) {
        acc += std::exp(l - top);
    }
    return top + std::log(acc);
}

// Index bit of qubit (copy c, site s) in the copy-major N*M register.
std::uint64_t register_bit(int n_sites, int copies, int copy, int site) {
    return std::uint64_t{1} << (n_sites * copies - 1 - (copy * n_sites + site));
}

// P at each site: all-zero column -> |0..0>, all-one column -> |10..0>,
// anything else -> 0.
std::optional<std::uint64_t> apply_p_all_sites(std::uint64_t x, int n_sites, int copies) {
    std::uint64_t y = 0;
    for (int s = 0; s < n_sites; ++s) {
        int ones = 0;
        for (int c = 0; c < copies; ++c) {
            if (x & register_bit(n_sites, copies, c, s)) {
                ++ones;
            }
        }
        if (ones == copies) {
            y |= register_bit(n_sites, copies, 0, s);
        } else if (ones != 0) {
            return std::nullopt;
        }
    }
    return y;
}

double selection_rule_residual(int n, int copies) {
    std::uint64_t labels = std::uint64_t{1} << n;  // (k, sigma) pairs
    std::uint64_t tuples = std::uint64_t{1} << (n * copies);
    int rest_bits = n * (copies - 1);
    double inv_sqrt2 = 1.0 / std::sqrt(2.0);
    double worst = 0.0;
    for (std::uint64_t t = 0; t < tuples; ++t) {
        std::vector<std::uint64_t> k(static_cast<std::size_t>(copies));
        std::vector<double> sigma(static_cast<std::size_t>(copies));
        int minus = 0;
        for (int c = 0; c < copies; ++c) {
            std::uint64_t label = (t >> (n * c)) & (labels - 1);
            k[static_cast<std::size_t>(c)] = label >> 1;
            sigma[static_cast<std::size_t>(c)] = (label & 1) ? -1.0 : 1.0;
            minus += (label & 1) ? 1 : 0;
        }
        std::map<std::uint64_t, double> image;
        for (std::uint64_t branches = 0; branches < (std::uint64_t{1} << copies); ++branches) {
            std::uint64_t x = 0;
            double amp = 1.0;
            for (int c = 0; c < copies; ++c) {
                GhzBranches br = ghz_branches(n, k[static_cast<std::size_t>(c)]);
                bool one = (branches >> c) & 1;
                x = (x << n) | (one ? br.one_branch : br.zero_branch);
                amp *= inv_sqrt2 * (one ? sigma[static_cast<std::size_t>(c)] : 1.0);
            }
            if (auto y = apply_p_all_sites(x, n, copies)) {
                image[*y] += amp;
            }
        }
        std::map<std::uint64_t, double> expected;
        if (std::all_of(k.begin(), k.end(), [&](std::uint64_t v) { return v == k[0]; })) {
            double scale = std::pow(2.0, (1.0 - copies) / 2.0) * inv_sqrt2;
            GhzBranches br = ghz_branches(n, k[0]);
            expected[br.zero_branch << rest_bits] += scale;
            expected[br.one_branch << rest_bits] += (minus % 2 == 0 ? 1.0 : -1.0) * scale;
        }
        for (const auto &[y, a] : image) {
            auto it = expected.find(y);
            worst = std::max(worst, std::abs(a - (it == expected.end() ? 0.0 : it->second)));
        }
        for (const auto &[y, a] : expected) {
            if (!image.contains(y)) {
                worst = std::max(worst, std::abs(a));
            }
        }
    }
    return worst;
}

}  // namespace

double PurifiedCoefficients::trace() const {
    double s = 0.0;
    for (double l : lambdas) {
        s += l;
    }
    return lambda0_plus + lambda0_minus + 2.0 * s;
}

PurificationStep purification_step(const RhoNParams &p, int copies, const PurifyOptions &options) {
    p.validate();
    if (copies < 2) {
        throw PreconditionError("purification needs at least two copies");
    }
    PurificationStep step;
    step.copies = copies;
    step.input = p;

    double sum = p.lambda0_plus + p.lambda0_minus;
    double half_delta = p.delta() / 2.0;
    step.output.lambda0_plus = std::pow(sum / 2.0, copies) + std::pow(half_delta, copies);
    step.output.lambda0_minus = std::max(0.0, std::pow(sum / 2.0, copies) - std::pow(half_delta, copies));
    step.output.lambdas.resize(p.lambdas.size());
    for (std::size_t i = 0; i < p.lambdas.size(); ++i) {
        step.output.lambdas[i] = std::pow(p.lambdas[i], copies);
    }

    // Log-domain weights: lambda~0^+- = (s/2)^M (1 +- (Delta/s)^M).
    std::vector<double> logs;
    logs.reserve(p.lambdas.size() + 2);
    double log_plus = kNegInf;
    double log_minus = kNegInf;
    if (sum > 0.0) {
        double ratio_pow = std::pow(p.delta() / sum, copies);
        log_plus = copies * std::log(sum / 2.0) + std::log1p(ratio_pow);
        log_minus = ratio_pow >= 1.0 ? kNegInf : copies * std::log(sum / 2.0) + std::log1p(-ratio_pow);
    }
    std::vector<double> log_lambdas(p.lambdas.size());
    for (std::size_t i = 0; i < p.lambdas.size(); ++i) {
        log_lambdas[i] = copies * log_or_neg_inf(p.lambdas[i]);
    }
    logs.push_back(log_plus);
    logs.push_back(log_minus);
    for (double l : log_lambdas) {
        logs.push_back(l == kNegInf ? kNegInf : l + std::log(2.0));
    }
    double log_trace = log_sum_exp(logs);
    if (log_trace == kNegInf) {
        throw NumericalError("purification outcome has zero probability");
    }
    step.log_success_probability = log_trace;
    step.success_probability = std::exp(log_trace);
    step.log_domain = step.success_probability < 1e-100;
    if (step.success_probability < 1e-300 && !options.log_domain_fallback) {
        throw NumericalError("purification outcome probability underflows (log " + std::to_string(log_trace) + ")");
    }

    RhoNParams out;
    out.n_qubits = p.n_qubits;
    out.lambdas.resize(p.lambdas.size());
    if (step.log_domain) {
        out.lambda0_plus = std::exp(log_plus - log_trace);
        out.lambda0_minus = std::exp(log_minus - log_trace);
        for (std::size_t i = 0; i < p.lambdas.size(); ++i) {
            out.lambdas[i] = std::exp(log_lambdas[i] - log_trace);
        }
    } else {
        double tr = step.output.trace();
        out.lambda0_plus = step.output.lambda0_plus / tr;
        out.lambda0_minus = step.output.lambda0_minus / tr;
        for (std::size_t i = 0; i < p.lambdas.size(); ++i) {
            out.lambdas[i] = step.output.lambdas[i] / tr;
        }
    }
    out.validate(1e-10);
    step.normalized_output = std::move(out);
    return step;
}

Complex tensor_power_entry(const DensityMatrix &rho, int copies, std::uint64_t x, std::uint64_t y) {
    int n = rho.n_qubits();
    std::uint64_t mask = (std::uint64_t{1} << n) - 1;
    Complex v = 1.0;
    for (int c = 0; c < copies; ++c) {
        int shift = n * (copies - 1 - c);
        v *= rho((x >> shift) & mask, (y >> shift) & mask);
    }
    return v;
}

MulticopyResult multicopy_oracle(const RhoNParams &p, int copies, int max_qubits) {
    p.validate();
    if (copies < 1) {
        throw PreconditionError("oracle needs at least one copy");
    }
    int n = p.n_qubits;
    int total = n * copies;
    if (total > max_qubits) {
        throw SizeCapError(
            "multi-copy oracle needs " + std::to_string(total) + " qubits, cap is " + std::to_string(max_qubits));
    }
    DensityMatrix rho = rho_from_params(p);

    struct Survivor {
        std::uint64_t in;
        std::uint64_t out;
    };
    std::vector<Survivor> survivors;
    std::uint64_t dim_total = std::uint64_t{1} << total;
    for (std::uint64_t x = 0; x < dim_total; ++x) {
        if (auto y = apply_p_all_sites(x, n, copies)) {
            survivors.push_back({x, *y});
        }
    }

    int rest_bits = n * (copies - 1);
    std::uint64_t rest_mask = (std::uint64_t{1} << rest_bits) - 1;
    auto d = Eigen::Index{1} << n;
    Matrix first = Matrix::Zero(d, d);
    double outside = 0.0;
    for (const auto &a : survivors) {
        for (const auto &b : survivors) {
            Complex e = tensor_power_entry(rho, copies, a.in, b.in);
            if ((a.out & rest_mask) == 0 && (b.out & rest_mask) == 0) {
                first(static_cast<Eigen::Index>(a.out >> rest_bits), static_cast<Eigen::Index>(b.out >> rest_bits)) += e;
            } else if (a.out == b.out) {
                outside += e.real();
            }
        }
    }
    MulticopyResult r{
        DensityMatrix(n, std::move(first), Normalization::kUnnormalized), outside, selection_rule_residual(n, copies)};
    return r;
}

std::optional<int> min_copies_for(double delta_half, std::span<const double> competing, int max_copies) {
    if (!(delta_half > 0.0)) {
        return std::nullopt;
    }
    double log_target = std::log(delta_half);
    std::vector<double> gaps;
    for (double l : competing) {
        if (l > 0.0) {
            if (l >= delta_half) {
                return std::nullopt;
            }
            gaps.push_back(std::log(l) - log_target);
        }
    }
    for (int m = 1; m <= max_copies; ++m) {
        // sum_j (lambda_j / (Delta/2))^m < 1
        double s = 0.0;
        for (double g : gaps) {
            s += std::exp(m * g);
        }
        if (s < 1.0) {
            return m;
        }
    }
    return std::nullopt;
}

std::vector<int> pair_to_end_permutation(int n_qubits, int i, int j) {
    if (i == j || i < 1 || j < 1 || i > n_qubits || j > n_qubits) {
        throw PreconditionError("a pair needs two distinct parties in 1..n");
    }
    std::vector<int> perm(static_cast<std::size_t>(n_qubits));
    int next = 1;
    for (int m = 1; m <= n_qubits; ++m) {
        if (m == i) {
            perm[static_cast<std::size_t>(m - 1)] = n_qubits - 1;
        } else if (m == j) {
            perm[static_cast<std::size_t>(m - 1)] = n_qubits;
        } else {
            perm[static_cast<std::size_t>(m - 1)] = next++;
        }
    }
    return perm;
}

DistillPlan min_copies_to_distill(const RhoNParams &p, int i, int j, int max_copies, double tol) {
    p.validate();
    DistillPlan plan;
    plan.permutation = pair_to_end_permutation(p.n_qubits, i, j);
    for (std::uint64_t k : pair_separating_indices(p.n_qubits, i, j)) {
        if (split_ppt_by_index(p, k, tol).ppt) {
            plan.violated_index = k;
            return plan;
        }
    }
    RhoNParams moved = normalize_delta(permute_params(p, plan.permutation));
    // With the pair on A_{n-1} A_n, the separating splits are the odd indices.
    std::vector<double> odd;
    for (std::uint64_t k = 1; k <= moved.num_lambdas(); k += 2) {
        odd.push_back(moved.lambda(k));
    }
    auto m = min_copies_for(moved.delta() / 2.0, odd, max_copies);
    if (!m) {
        throw SizeCapError("pair needs more than " + std::to_string(max_copies) + " copies");
    }
    plan.distillable = true;
    plan.copies = *m;
    return plan;
}

double pair_fidelity_after_projection(const RhoNParams &p, int i, int j) {
    int n = p.n_qubits;
    if (i == j || i < 1 || j < 1 || i > n || j > n) {
        throw PreconditionError("a pair needs two distinct parties in 1..n");
    }
    if (n > default_max_qubits()) {
        throw SizeCapError("projection needs a dense " + std::to_string(n) + "-qubit operator");
    }
    DensityMatrix rho = rho_from_params(p);
    StateVector plus(2);
    plus << 1.0 / std::sqrt(2.0), 1.0 / std::sqrt(2.0);
    // Remove from the highest party down so lower labels stay valid.
    for (int m = n; m >= 1; --m) {
        if (m != i && m != j) {
            rho = project_local(rho, m, plus);
        }
    }
    rho = normalize(rho);
    StateVector phi_plus = StateVector::Zero(4);
    phi_plus(0) = 1.0 / std::sqrt(2.0);
    phi_plus(3) = 1.0 / std::sqrt(2.0);
    return overlap(rho, phi_plus);
}

double pair_fidelity_closed_form(const RhoNParams &p, int i, int j) {
    std::vector<std::uint64_t> sep = pair_separating_indices(p.n_qubits, i, j);
    double f = p.lambda0_plus;
    std::size_t next = 0;
    for (std::uint64_t k = 1; k <= p.num_lambdas(); ++k) {
        if (next < sep.size() && sep[next] == k) {
            ++next;
            continue;
        }
        f += p.lambda(k);
    }
    return f / p.trace();
}

}  // namespace entclass
