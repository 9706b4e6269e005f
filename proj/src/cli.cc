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

#include "entclass/cli.h"

#include <functional>
#include <sstream>

#include "entclass/depolarize.h"
#include "entclass/error.h"
#include "entclass/io.h"
#include "entclass/mixture.h"
#include "entclass/splits.h"

namespace entclass {

using nlohmann::json;

namespace {

CliResult guarded(const std::function<CliResult()> &body) {
    try {
        return body();
    } catch (const SchemaError &e) {
        return {kExitSchema, "", std::string("schema error: ") + e.what() + "\n"};
    } catch (const InvariantError &e) {
        return {kExitInvariant, "", std::string("invariant violation: ") + e.what() + "\n"};
    } catch (const SizeCapError &e) {
        return {kExitSizeCap, "", std::string("size cap exceeded: ") + e.what() + "\n"};
    } catch (const std::exception &e) {
        return {kExitUsage, "", std::string("error: ") + e.what() + "\n"};
    }
}

std::string positive_operators(const ThreeQubitVerdict &v) {
    std::vector<std::string> names;
    if (v.ppt_a) names.push_back("rho^T_A");
    if (v.ppt_b) names.push_back("rho^T_B");
    if (v.ppt_c) names.push_back("rho^T_C");
    if (names.empty()) return "None";
    if (names.size() == 3) return "All";
    std::string s = names[0];
    for (std::size_t i = 1; i < names.size(); ++i) {
        s += ", " + names[i];
    }
    return s;
}

std::string pad(const std::string &s, std::size_t width) {
    return s.size() >= width ? s : s + std::string(width - s.size(), ' ');
}

}  // namespace

std::string render_three_qubit_table(const ClassificationReport &report) {
    if (!report.three_qubit) {
        throw PreconditionError("the summary table is defined for three qubits only");
    }
    const auto &v = *report.three_qubit;
    std::ostringstream out;
    out << pad("Positive operators", 20) << " | " << pad("Class", 5) << " | Distillability\n";
    out << std::string(20, '-') << "-+-" << std::string(5, '-') << "-+-" << std::string(36, '-') << "\n";
    out << pad(positive_operators(v), 20) << " | " << pad(std::string(class_label(v.cls)), 5) << " | "
        << (v.distillability.empty() ? "-" : v.distillability) << "\n";
    out << "\n";
    out << "GHZ distillable: " << (*report.ghz(QubitSubset(3, 0b111)) ? "true" : "false") << "\n";
    for (const auto &pv : report.pair_distillable) {
        out << "pair (" << pv.i << "," << pv.j << ") distillable: " << (pv.distillable ? "true" : "false") << "\n";
    }
    out << (report.fully_separable ? "fully separable" : "not fully separable") << "\n";
    out << "provenance: " << provenance_name(report.provenance) << "\n";
    return out.str();
}

CliResult run_classify(const ClassifyArgs &args) {
    return guarded([&] {
        StateFile f = parse_state(args.input, LoadOptions{args.load_tol, args.renormalize});
        ReportOptions opts;
        opts.tol = args.verdict_tol;
        opts.max_level = args.max_level;
        opts.jobs = args.jobs;
        ClassificationReport report =
            f.params ? classification_report(*f.params, opts) : sufficient_report(*f.matrix, opts);
        CliResult r;
        if (args.table && report.three_qubit) {
            r.out = render_three_qubit_table(report);
            return r;
        }
        if (args.table) {
            r.err = "note: table output is defined for three qubits only; emitting JSON\n";
        }
        ReportMeta meta{hex64(fnv1a64(args.input)), report.provenance == Provenance::kSufficientOnlyForArbitrary};
        r.out = dump_json(report_to_json(report, meta));
        return r;
    });
}

CliResult run_depolarize(const DepolarizeArgs &args) {
    return guarded([&] {
        StateFile f = parse_state(args.input, LoadOptions{args.load_tol, false});
        DensityMatrix rho = f.matrix ? *f.matrix : rho_from_params(*f.params);
        RhoNParams p = extract_params(rho);
        json j = params_to_json(p);
        if (args.verify) {
            DensityMatrix image = depolarize_channel(rho);
            j["verify"] = json{
                {"input_offdiagonal_residual", ghz_offdiagonal_residual(rho)},
                {"channel_offdiagonal_residual", ghz_offdiagonal_residual(image)},
                {"channel_vs_params", max_abs_diff(image, rho_from_params(p))},
            };
        }
        return CliResult{kExitOk, dump_json(j), ""};
    });
}

CliResult run_purify(const PurifyArgs &args) {
    return guarded([&] {
        StateFile f = parse_state(args.input, LoadOptions{args.load_tol, args.renormalize});
        if (!f.params) {
            throw SchemaError("purify expects a rho_n_params document");
        }
        // A local sigma_z flips the sign of Delta; work with Delta >= 0.
        RhoNParams p = normalize_delta(*f.params);
        DistillPlan plan = min_copies_to_distill(p, args.i, args.j, args.max_copies, args.verdict_tol);
        if (!plan.distillable) {
            Split s = lambda_index_to_split(p.n_qubits, *plan.violated_index);
            return CliResult{
                kExitNotDistillable, "",
                "not distillable: pair (" + std::to_string(args.i) + "," + std::to_string(args.j) +
                    ") is separated by PPT split " + s.str() + " (lambda index " +
                    std::to_string(*plan.violated_index) + ")\n"};
        }
        auto fidelity = [&](const RhoNParams &q) {
            return q.n_qubits <= default_max_qubits() ? pair_fidelity_after_projection(q, args.i, args.j)
                                                      : pair_fidelity_closed_form(q, args.i, args.j);
        };
        json j;
        j["pair"] = {args.i, args.j};
        j["min_copies"] = plan.copies;
        j["input_fidelity"] = fidelity(p);
        json steps = json::array();
        double final_fidelity = j["input_fidelity"].get<double>();
        if (plan.copies >= 2) {
            PurificationStep step = purification_step(p, plan.copies);
            steps.push_back(json{
                {"copies", step.copies},
                {"lambda0_plus", step.output.lambda0_plus},
                {"lambda0_minus", step.output.lambda0_minus},
                {"lambdas", step.output.lambdas},
                {"success_probability", step.success_probability},
                {"log_success_probability", step.log_success_probability},
                {"log_domain", step.log_domain},
                {"normalized", params_to_json(step.normalized_output)},
            });
            final_fidelity = fidelity(step.normalized_output);
        }
        j["steps"] = std::move(steps);
        j["fidelity"] = final_fidelity;
        return CliResult{kExitOk, dump_json(j), ""};
    });
}

CliResult run_partitions(const PartitionsArgs &args) {
    return guarded([&] {
        CliResult r;
        if (args.pn) {
            r.out = partition_function(args.n).str() + "\n";
            return r;
        }
        if (args.n < 1) {
            throw PreconditionError("--n must be positive");
        }
        if (args.k && (*args.k < 1 || *args.k > args.n)) {
            throw PreconditionError("--k must lie in 1..n");
        }
        if (args.count_only) {
            BigCount total = 0;
            for (int k = 1; k <= args.n; ++k) {
                if (!args.k || *args.k == k) {
                    total += stirling2(args.n, k);
                }
            }
            r.out = total.str() + "\n";
            return r;
        }
        if (!args.k) {
            throw PreconditionError("listing splits needs --k (or use --count-only / --pn)");
        }
        std::ostringstream out;
        for_each_k_split(args.n, *args.k, [&](const Split &s) { out << s.str() << "\n"; });
        r.out = out.str();
        return r;
    });
}

CliResult run_threshold(int n) {
    return guarded([&] {
        Threshold t = separability_threshold(n);
        json j{{"n", n}, {"numerator", t.exact.num}, {"denominator", t.exact.den}, {"value", t.value}};
        return CliResult{kExitOk, dump_json(j), ""};
    });
}

CliResult run_mixture(const MixtureArgs &args) {
    return guarded([&] {
        json j = args.matrix ? matrix_to_json(ghz_mixture_state(args.n, args.x))
                             : params_to_json(ghz_mixture_params(args.n, args.x));
        return CliResult{kExitOk, dump_json(j), ""};
    });
}

}  // namespace entclass
