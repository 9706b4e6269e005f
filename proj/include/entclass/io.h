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

#ifndef ENTCLASS_IO_H
#define ENTCLASS_IO_H

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>

#include "json.hpp"

#include "entclass/classify.h"
#include "entclass/ghz.h"
#include "entclass/qstate.h"
#include "entclass/splits.h"

namespace entclass {

inline constexpr std::string_view kToolName = "entclass";
inline constexpr std::string_view kToolVersion = "0.1.0";

struct LoadOptions {
    /// Tolerance for normalization, hermiticity and positivity on load.
    double tol = 1e-9;
    /// Divide parameter files by their trace instead of rejecting them.
    bool renormalize = false;
};

/// A parsed state document. Exactly one of params / matrix is set.
struct StateFile {
    int n_qubits = 0;
    std::optional<RhoNParams> params;
    std::optional<DensityMatrix> matrix;
};

StateFile parse_state(std::string_view text, const LoadOptions &options = {});
StateFile load_state_file(const std::filesystem::path &path, const LoadOptions &options = {});
std::string read_text_file(const std::filesystem::path &path);

nlohmann::json params_to_json(const RhoNParams &p);
nlohmann::json matrix_to_json(const DensityMatrix &rho);
/// Splits as lists of 1-based party labels, e.g. [[1,4,5],[2,3,6]].
nlohmann::json split_to_json(const Split &split);

struct ReportMeta {
    std::string input_hash;
    /// Set for density-matrix inputs: verdicts restated for the input itself.
    bool restate_for_input = false;
};

nlohmann::json report_to_json(const ClassificationReport &report, const ReportMeta &meta);

/// Pretty-printed with a trailing newline; stable for identical values.
std::string dump_json(const nlohmann::json &j);

std::uint64_t fnv1a64(std::string_view bytes);
std::string hex64(std::uint64_t v);

}  // namespace entclass

#endif
