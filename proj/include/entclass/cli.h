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

#ifndef ENTCLASS_CLI_H
#define ENTCLASS_CLI_H

#include <optional>
#include <string>

#include "entclass/classify.h"
#include "entclass/purify.h"

namespace entclass {

/// Process exit codes shared by every subcommand.
enum ExitCode : int {
    kExitOk = 0,
    kExitUsage = 1,
    kExitSchema = 2,
    kExitInvariant = 3,
    kExitSizeCap = 4,
    kExitNotDistillable = 5,
};

struct CliResult {
    int exit_code = kExitOk;
    std::string out;
    std::string err;
};

struct ClassifyArgs {
    std::string input;
    double load_tol = 1e-9;
    double verdict_tol = kDefaultVerdictTol;
    int max_level = 0;
    bool table = false;
    int jobs = 1;
    bool renormalize = false;
};

struct DepolarizeArgs {
    std::string input;
    double load_tol = 1e-9;
    bool verify = false;
};

struct PurifyArgs {
    std::string input;
    double load_tol = 1e-9;
    double verdict_tol = kDefaultVerdictTol;
    bool renormalize = false;
    int i = 0;
    int j = 0;
    int max_copies = kDefaultMaxCopies;
};

struct PartitionsArgs {
    int n = 0;
    std::optional<int> k;
    bool count_only = false;
    bool pn = false;
};

struct MixtureArgs {
    int n = 0;
    double x = 0.0;
    bool matrix = false;
};

CliResult run_classify(const ClassifyArgs &args);
CliResult run_depolarize(const DepolarizeArgs &args);
CliResult run_purify(const PurifyArgs &args);
CliResult run_partitions(const PartitionsArgs &args);
CliResult run_threshold(int n);
CliResult run_mixture(const MixtureArgs &args);

/// The N=3 summary table: positive operators, class, distillability.
std::string render_three_qubit_table(const ClassificationReport &report);

}  // namespace entclass

#endif
