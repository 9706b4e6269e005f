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

#include <gtest/gtest.h>

#include "entclass/depolarize.h"
#include "entclass/io.h"
#include "entclass/mixture.h"
#include "test_util.h"

using namespace entclass;
using nlohmann::json;

namespace {

std::string params_doc(const RhoNParams &p) {
    return dump_json(params_to_json(p));
}

std::string matrix_doc(const DensityMatrix &rho) {
    return dump_json(matrix_to_json(rho));
}

}  // namespace

TEST(io, state_documents_round_trip) {
    auto rng = entclass::testing::make_rng(61);
    RhoNParams p = entclass::testing::random_params(4, rng);
    StateFile f = parse_state(params_doc(p));
    ASSERT_TRUE(f.params.has_value());
    ASSERT_EQ(f.params->lambdas.size(), 7u);
    ASSERT_NEAR(f.params->lambda0_plus, p.lambda0_plus, 1e-16);

    DensityMatrix rho = entclass::testing::random_density_matrix(2, rng);
    StateFile g = parse_state(matrix_doc(rho));
    ASSERT_TRUE(g.matrix.has_value());
    ASSERT_LE(max_abs_diff(*g.matrix, rho), 1e-15);
}

TEST(io, schema_and_invariant_errors) {
    ASSERT_THROW(parse_state("{"), SchemaError);
    ASSERT_THROW(parse_state("[]"), SchemaError);
    ASSERT_THROW(parse_state(R"({"type":"bogus","n":2})"), SchemaError);
    ASSERT_THROW(parse_state(R"({"type":"rho_n_params","n":3,"lambda0_plus":1,"lambda0_minus":0,"lambdas":[0,0]})"),
                 SchemaError);
    ASSERT_THROW(parse_state(R"({"type":"rho_n_params","n":2,"lambda0_plus":"1","lambda0_minus":0,"lambdas":[0]})"),
                 SchemaError);
    ASSERT_THROW(parse_state(R"({"type":"density_matrix","n":1,"matrix":[[[1,0],[0,0]],[[0,0]]]})"), SchemaError);
    ASSERT_THROW(parse_state(R"({"type":"rho_n_params","n":2,"lambda0_plus":0.9,"lambda0_minus":0,"lambdas":[0]})"),
                 InvariantError);
    ASSERT_THROW(
        parse_state(R"({"type":"density_matrix","n":1,"matrix":[[[1.5,0],[0,0]],[[0,0],[-0.5,0]]]})"), InvariantError);
    ASSERT_THROW(
        parse_state(R"({"type":"density_matrix","n":1,"matrix":[[[0.5,0],[0.1,0]],[[0,0],[0.5,0]]]})"), InvariantError);

    // Within the load tolerance the document is snapped to unit trace.
    StateFile near = parse_state(R"({"type":"rho_n_params","n":2,"lambda0_plus":1.0000000001,"lambda0_minus":0,"lambdas":[0]})");
    ASSERT_EQ(near.params->trace(), 1.0);
    StateFile scaled = parse_state(
        R"({"type":"rho_n_params","n":3,"lambda0_plus":0.6666666666666666,"lambda0_minus":0,"lambdas":[0,0.3333333333333333,0]})",
        LoadOptions{1e-9, true});
    ASSERT_NEAR(scaled.params->lambda(2), 0.25, 1e-15);
}

TEST(io, hash_is_fnv1a) {
    ASSERT_EQ(fnv1a64(""), 0xcbf29ce484222325ULL);
    ASSERT_EQ(fnv1a64("a"), 0xaf63dc4c8601ec8cULL);
    ASSERT_EQ(hex64(0xabcULL), "0000000000000abc");
}

TEST(cli_classify, ghz_mixture_table) {
    CliResult r = run_classify(ClassifyArgs{params_doc(ghz_mixture_params(3, 0.3)), 1e-9, 1e-12, 0, true, 1, false});
    ASSERT_EQ(r.exit_code, 0) << r.err;
    ASSERT_NE(r.out.find("| 1     |"), std::string::npos) << r.out;
    ASSERT_NE(r.out.find("GHZ distillable: true"), std::string::npos);
}

TEST(cli_classify, summary_table_row) {
    ClassifyArgs args;
    args.input = R"({"type":"rho_n_params","n":3,"lambda0_plus":0.6666666666666666,"lambda0_minus":0,"lambdas":[0,0.3333333333333333,0]})";
    args.table = true;
    CliResult raw = run_classify(args);
    ASSERT_EQ(raw.exit_code, kExitInvariant);
    args.renormalize = true;
    CliResult r = run_classify(args);
    ASSERT_EQ(r.exit_code, 0) << r.err;
    ASSERT_NE(r.out.find("rho^T_A"), std::string::npos) << r.out;
    ASSERT_NE(r.out.find("2.1"), std::string::npos);
    ASSERT_NE(r.out.find("(Pair) |Phi^+>_BC"), std::string::npos);
    ASSERT_NE(r.out.find("pair (2,3) distillable: true"), std::string::npos);
}

TEST(cli_classify, identity_is_fully_separable) {
    for (int n : {2, 3, 4}) {
        ClassifyArgs args;
        args.input = matrix_doc(DensityMatrix::maximally_mixed(n));
        CliResult r = run_classify(args);
        ASSERT_EQ(r.exit_code, 0) << r.err;
        json j = json::parse(r.out);
        ASSERT_TRUE(j["fully_separable"].get<bool>());
        ASSERT_EQ(j["provenance"], "exact-for-rhoN");
        args.table = true;
        if (n == 3) {
            ASSERT_NE(run_classify(args).out.find("\nfully separable"), std::string::npos);
        }
    }
}

TEST(cli_classify, report_fields_and_determinism) {
    auto rng = entclass::testing::make_rng(62);
    ClassifyArgs args;
    args.input = matrix_doc(entclass::testing::random_density_matrix(3, rng));
    CliResult a = run_classify(args);
    CliResult b = run_classify(args);
    ASSERT_EQ(a.exit_code, 0) << a.err;
    ASSERT_EQ(a.out, b.out);
    json j = json::parse(a.out);
    for (const char *key : {"tool", "version", "input_hash", "tolerance", "provenance", "params", "bipartite",
                            "levels", "fully_separable", "pair_distillable", "ghz_distillable", "three_qubit_class"}) {
        ASSERT_TRUE(j.contains(key)) << key;
    }
    ASSERT_EQ(j["provenance"], "sufficient-only-for-arbitrary");
    ASSERT_EQ(j["input_hash"], hex64(fnv1a64(args.input)));
    ASSERT_TRUE(j["bipartite"][0].contains("input_verdict"));
    ASSERT_EQ(j["bipartite"][0]["split"], json::parse("[[1,3],[2]]"));
}

TEST(cli_classify, exit_codes) {
    ClassifyArgs args;
    args.input = "not json";
    ASSERT_EQ(run_classify(args).exit_code, kExitSchema);
    args.input = dump_json(params_to_json(ghz_mixture_params(12, 0.1)));
    ASSERT_EQ(run_classify(args).exit_code, kExitSizeCap);
    args.max_level = 2;
    ASSERT_EQ(run_classify(args).exit_code, 0);
}

TEST(cli_depolarize, examples) {
    DepolarizeArgs args;
    args.input = matrix_doc(DensityMatrix::from_pure(ghz_basis_state(3, {0, Sign::kPlus})));
    CliResult r = run_depolarize(args);
    ASSERT_EQ(r.exit_code, 0) << r.err;
    ASSERT_NEAR(json::parse(r.out)["lambda0_plus"].get<double>(), 1.0, 1e-15);

    args.input = matrix_doc(ghz_mixture_state(3, 0.5));
    args.verify = true;
    json j = json::parse(run_depolarize(args).out);
    ASSERT_NEAR(j["lambda0_plus"].get<double>(), 0.5625, 1e-15);
    ASSERT_NEAR(j["lambdas"][1].get<double>(), 0.0625, 1e-15);
    ASSERT_LE(j["verify"]["channel_offdiagonal_residual"].get<double>(), 1e-12);

    auto rng = entclass::testing::make_rng(63);
    RhoNParams p = entclass::testing::random_params(4, rng);
    args.input = params_doc(p);
    args.verify = false;
    ASSERT_EQ(json::parse(run_depolarize(args).out), json::parse(params_doc(p)));
}

TEST(cli_depolarize, round_trip_with_classify) {
    auto rng = entclass::testing::make_rng(64);
    for (int trial = 0; trial < 5; ++trial) {
        DensityMatrix rho = entclass::testing::random_density_matrix(3, rng);
        ClassifyArgs direct;
        direct.input = matrix_doc(rho);
        json a = json::parse(run_classify(direct).out);

        CliResult dep = run_depolarize(DepolarizeArgs{matrix_doc(rho), 1e-9, false});
        ClassifyArgs chained;
        chained.input = dep.out;
        json b = json::parse(run_classify(chained).out);
        for (const char *key : {"bipartite", "levels", "fully_separable", "pair_distillable", "ghz_distillable",
                                "three_qubit_class"}) {
            json x = a[key];
            json y = b[key];
            if (x.is_array()) {
                for (auto &e : x) {
                    e.erase("input_verdict");
                }
                for (auto &lv : x) {
                    if (lv.contains("splits")) {
                        for (auto &s : lv["splits"]) {
                            s.erase("input_verdict");
                        }
                    }
                }
            }
            ASSERT_EQ(x.dump(), y.dump()) << key;
        }
    }
}

TEST(cli_purify, outcomes) {
    PurifyArgs args;
    args.input = params_doc(RhoNParams::make(3, 1.0, 0.0, {0.0, 0.0, 0.0}));
    args.i = 1;
    args.j = 2;
    CliResult r = run_purify(args);
    ASSERT_EQ(r.exit_code, 0) << r.err;
    json j = json::parse(r.out);
    ASSERT_EQ(j["min_copies"], 1);
    ASSERT_NEAR(j["fidelity"].get<double>(), 1.0, 1e-14);

    args.input = params_doc(RhoNParams::make(3, 0.5, 0.05, {0.15, 0.0, 0.075}));
    args.i = 2;
    args.j = 3;
    j = json::parse(run_purify(args).out);
    ASSERT_GE(j["min_copies"].get<int>(), 2);
    ASSERT_LE(j["input_fidelity"].get<double>(), 0.5 + 1e-12);
    ASSERT_GT(j["fidelity"].get<double>(), 0.5);
    ASSERT_EQ(j["steps"].size(), 1u);

    args.input = params_doc(RhoNParams::rescaled(3, 2.0 / 3.0, 0.0, {0.0, 1.0 / 3.0, 0.0}));
    args.i = 1;
    args.j = 2;
    CliResult bad = run_purify(args);
    ASSERT_EQ(bad.exit_code, kExitNotDistillable);
    ASSERT_NE(bad.err.find("A1-(A2A3)"), std::string::npos) << bad.err;
}

TEST(cli_partitions, counts_and_listings) {
    ASSERT_EQ(run_partitions(PartitionsArgs{10, std::nullopt, false, true}).out, "42\n");
    ASSERT_EQ(run_partitions(PartitionsArgs{50, std::nullopt, false, true}).out, "204226\n");
    std::string three = run_partitions(PartitionsArgs{4, 3, false, false}).out;
    ASSERT_EQ(std::count(three.begin(), three.end(), '\n'), 6);
    std::string two = run_partitions(PartitionsArgs{3, 2, false, false}).out;
    ASSERT_EQ(two, "(A1A2)-A3\n(A1A3)-A2\nA1-(A2A3)\n");
    ASSERT_EQ(run_partitions(PartitionsArgs{10, 3, true, false}).out, "9330\n");
    ASSERT_EQ(run_partitions(PartitionsArgs{10, std::nullopt, true, false}).out, "115975\n");
    ASSERT_EQ(run_partitions(PartitionsArgs{20, 3, false, false}).exit_code, kExitSizeCap);
}

TEST(cli_threshold_and_mixture, outputs) {
    json t = json::parse(run_threshold(3).out);
    ASSERT_EQ(t["numerator"], 1);
    ASSERT_EQ(t["denominator"], 5);
    CliResult m = run_mixture(MixtureArgs{3, 0.5, false});
    ASSERT_NEAR(json::parse(m.out)["lambda0_plus"].get<double>(), 0.5625, 1e-15);
    CliResult dm = run_mixture(MixtureArgs{2, 0.25, true});
    ASSERT_EQ(json::parse(dm.out)["type"], "density_matrix");
    ASSERT_EQ(run_mixture(MixtureArgs{3, 2.0, false}).exit_code, kExitInvariant);
}
