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

#include <iostream>
#include <iterator>
#include <string>

#include "CLI11.hpp"

#include "entclass/cli.h"
#include "entclass/io.h"

namespace {

std::string read_input(const std::string &path) {
    if (path == "-") {
        return std::string(std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>());
    }
    return entclass::read_text_file(path);
}

int emit(const entclass::CliResult &r) {
    std::cout << r.out;
    std::cerr << r.err;
    return r.exit_code;
}

}  // namespace

int main(int argc, char **argv) {
    using namespace entclass;

    CLI::App app{"Separability and distillability classification of multi-qubit GHZ-diagonal states"};
    app.set_version_flag("--version", std::string(kToolVersion));
    app.require_subcommand(1);

    std::string input = "-";
    ClassifyArgs classify;
    bool json_mode = false;
    auto *c = app.add_subcommand("classify", "Classify a state file");
    c->add_option("input", input, "State file, or - for stdin")->capture_default_str();
    c->add_option("--tol", classify.load_tol, "Load tolerance for normalization and positivity")
        ->capture_default_str();
    c->add_option("--verdict-tol", classify.verdict_tol, "Tolerance band of the PPT conditions")
        ->capture_default_str();
    c->add_option("--max-level", classify.max_level, "Highest k for k-split verdicts (0 = n)")->capture_default_str();
    auto *tbl = c->add_flag("--table", classify.table, "Render the three-qubit summary table");
    c->add_flag("--json", json_mode, "Emit the JSON report (default)")->excludes(tbl);
    c->add_option("--jobs", classify.jobs, "Worker threads for the split sweep")->check(CLI::Range(1, 256));
    c->add_flag("--renormalize", classify.renormalize, "Rescale parameter files by their trace");

    DepolarizeArgs depol;
    auto *d = app.add_subcommand("depolarize", "Project a state onto the GHZ-diagonal family");
    d->add_option("input", input, "State file, or - for stdin")->capture_default_str();
    d->add_option("--tol", depol.load_tol, "Load tolerance")->capture_default_str();
    d->add_flag("--verify", depol.verify, "Also run the exact channel and report residuals");

    PurifyArgs purify;
    std::vector<int> pair;
    auto *p = app.add_subcommand("purify", "Minimal copies and one recurrence step for a pair");
    p->add_option("input", input, "Parameter file, or - for stdin")->capture_default_str();
    p->add_option("--pair", pair, "Two party labels i j")->expected(2)->required();
    p->add_option("--max-M", purify.max_copies, "Largest number of copies tried")->capture_default_str();
    p->add_option("--tol", purify.load_tol, "Load tolerance")->capture_default_str();
    p->add_option("--verdict-tol", purify.verdict_tol, "Tolerance band of the PPT conditions")
        ->capture_default_str();
    p->add_flag("--renormalize", purify.renormalize, "Rescale parameter files by their trace");

    PartitionsArgs parts;
    int k = 0;
    auto *s = app.add_subcommand("partitions", "List k-partite splits or count them");
    s->add_option("--n", parts.n, "Number of parties")->required();
    auto *k_opt = s->add_option("--k", k, "Number of blocks");
    s->add_flag("--count-only", parts.count_only, "Print the number of splits only");
    s->add_flag("--pn", parts.pn, "Print the number of partition shapes p(n)");

    int threshold_n = 0;
    auto *t = app.add_subcommand("threshold", "Separability threshold of the GHZ-identity mixture");
    t->add_option("--n", threshold_n, "Number of qubits")->required();

    MixtureArgs mix;
    auto *m = app.add_subcommand("mixture", "Emit the GHZ-identity mixture as a state file");
    m->add_option("--n", mix.n, "Number of qubits")->required();
    m->add_option("--x", mix.x, "Weight of the GHZ state")->required();
    m->add_flag("--matrix", mix.matrix, "Emit the dense density matrix instead of parameters");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        int code = app.exit(e);
        return code == 0 ? 0 : kExitUsage;
    }

    try {
        if (*c) {
            classify.input = read_input(input);
            return emit(run_classify(classify));
        }
        if (*d) {
            depol.input = read_input(input);
            return emit(run_depolarize(depol));
        }
        if (*p) {
            purify.input = read_input(input);
            purify.i = pair[0];
            purify.j = pair[1];
            return emit(run_purify(purify));
        }
        if (*s) {
            if (*k_opt) {
                parts.k = k;
            }
            return emit(run_partitions(parts));
        }
        if (*t) {
            return emit(run_threshold(threshold_n));
        }
        if (*m) {
            return emit(run_mixture(mix));
        }
    } catch (const std::exception &e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
