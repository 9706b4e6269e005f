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

#ifndef ENTCLASS_MIXTURE_H
#define ENTCLASS_MIXTURE_H

#include <cstdint>

#include "entclass/ghz.h"
#include "entclass/qstate.h"

namespace entclass {

/// x |Psi_0^+><Psi_0^+| + (1 - x) / 2^N * 1.
RhoNParams ghz_mixture_params(int n_qubits, double x);
DensityMatrix ghz_mixture_state(int n_qubits, double x);

struct Rational {
    std::uint64_t num = 0;
    std::uint64_t den = 1;

    double value() const {
        return static_cast<double>(num) / static_cast<double>(den);
    }
};

struct Threshold {
    Rational exact;
    double value = 0.0;
};

/// x* = 1 / (1 + 2^{N-1}). Fully separable at or below, all splits NPT above.
Threshold separability_threshold(int n_qubits);

/// Exact comparison of a rational weight against the threshold.
/// Returns true when p/q <= x*.
bool mixture_fully_separable(int n_qubits, Rational x);

}  // namespace entclass

#endif
