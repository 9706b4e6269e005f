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

#include "entclass/io.h"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "entclass/error.h"

namespace entclass {

using nlohmann::json;

namespace {

const json &require(const json &doc, const char *key) {
    auto it = doc.find(key);
    if (it == doc.end()) {
        throw SchemaError(std::string("missing field \"") + key + "\"");
    }
    return *it;
}

double as_real(const json &v, const std::string &where) {
    if (!v.is_number()) {
        throw SchemaError(where + " must be a number");
    }
    double d = v.get<double>();
    if (!std::isfinite(d)) {
        throw SchemaError(where + " must be finite");
    }
    return d;
}

int as_qubits(const json &doc) {
    const json &n = require(doc, "n");
    if (!n.is_number_integer()) {
        throw SchemaError("\"n\" must be an integer");
    }
    auto v = n.get<std::int64_t>();
    if (v < 1 || v > 62) {
        throw SchemaError("\"n\" out of range: " + std::to_string(v));
    }
    return static_cast<int>(v);
}

StateFile parse_params(const json &doc, const LoadOptions &options) {
    StateFile f;
    f.n_qubits = as_qubits(doc);
    if (f.n_qubits < 2) {
        throw SchemaError("rho_n_params needs n >= 2");
    }
    RhoNParams p;
    p.n_qubits = f.n_qubits;
    p.lambda0_plus = as_real(require(doc, "lambda0_plus"), "lambda0_plus");
    p.lambda0_minus = as_real(require(doc, "lambda0_minus"), "lambda0_minus");
    const json &ls = require(doc, "lambdas");
    if (!ls.is_array()) {
        throw SchemaError("\"lambdas\" must be an array");
    }
    if (ls.size() != lambda_count(f.n_qubits)) {
        throw SchemaError(
            "\"lambdas\" needs " + std::to_string(lambda_count(f.n_qubits)) + " entries for n=" +
            std::to_string(f.n_qubits) + ", got " + std::to_string(ls.size()));
    }
    for (std::size_t i = 0; i < ls.size(); ++i) {
        p.lambdas.push_back(as_real(ls[i], "lambdas[" + std::to_string(i) + "]"));
    }
    if (options.renormalize) {
        f.params = RhoNParams::rescaled(p.n_qubits, p.lambda0_plus, p.lambda0_minus, p.lambdas);
        return f;
    }
    p.validate(options.tol);
    // Within tolerance: clip tiny negatives, and rescale only when the trace is
    // off by more than rounding so exact documents load bit-for-bit.
    auto clip = [](double v) { return v < 0.0 ? 0.0 : v; };
    for (double &l : p.lambdas) {
        l = clip(l);
    }
    p.lambda0_plus = clip(p.lambda0_plus);
    p.lambda0_minus = clip(p.lambda0_minus);
    if (std::abs(p.trace() - 1.0) > RhoNParams::kTol) {
        p = RhoNParams::rescaled(p.n_qubits, p.lambda0_plus, p.lambda0_minus, p.lambdas);
    }
    f.params = std::move(p);
    return f;
}

StateFile parse_matrix(const json &doc, const LoadOptions &options) {
    StateFile f;
    f.n_qubits = as_qubits(doc);
    if (f.n_qubits > default_max_qubits()) {
        throw SizeCapError(
            "density matrix of " + std::to_string(f.n_qubits) + " qubits exceeds the cap of " +
            std::to_string(default_max_qubits()));
    }
    auto d = static_cast<std::size_t>(1) << f.n_qubits;
    const json &rows = require(doc, "matrix");
    if (!rows.is_array() || rows.size() != d) {
        throw SchemaError("\"matrix\" must have " + std::to_string(d) + " rows");
    }
    Matrix m(static_cast<Eigen::Index>(d), static_cast<Eigen::Index>(d));
    for (std::size_t r = 0; r < d; ++r) {
        if (!rows[r].is_array() || rows[r].size() != d) {
            throw SchemaError("matrix row " + std::to_string(r) + " must have " + std::to_string(d) + " entries");
        }
        for (std::size_t c = 0; c < d; ++c) {
            const json &e = rows[r][c];
            std::string where = "matrix[" + std::to_string(r) + "][" + std::to_string(c) + "]";
            if (!e.is_array() || e.size() != 2) {
                throw SchemaError(where + " must be a [re, im] pair");
            }
            m(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) =
                Complex(as_real(e[0], where), as_real(e[1], where));
        }
    }
    double herm = (m - m.adjoint()).cwiseAbs().maxCoeff();
    if (herm > options.tol) {
        throw InvariantError("matrix is not Hermitian (deviation " + std::to_string(herm) + ")");
    }
    m = (m + m.adjoint()) / 2.0;
    double tr = m.trace().real();
    if (!(std::abs(tr - 1.0) <= options.tol)) {
        throw InvariantError("matrix trace is " + std::to_string(tr) + ", expected 1");
    }
    m /= tr;
    DensityMatrix rho(f.n_qubits, std::move(m));
    double min_eig = eigenvalues(rho).minCoeff();
    if (min_eig < -options.tol) {
        throw InvariantError("matrix is not positive semidefinite (eigenvalue " + std::to_string(min_eig) + ")");
    }
    f.matrix = std::move(rho);
    return f;
}

json bipartite_to_json(const BipartiteVerdict &v) {
    return json{
        {"split", split_to_json(v.split)},
        {"label", v.split.str()},
        {"lambda_index", v.lambda_index},
        {"ppt", v.ppt},
        {"boundary", v.boundary},
        {"margin", v.margin},
    };
}

}  // namespace

StateFile parse_state(std::string_view text, const LoadOptions &options) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error &e) {
        throw SchemaError(std::string("invalid JSON: ") + e.what());
    }
    if (!doc.is_object()) {
        throw SchemaError("state document must be a JSON object");
    }
    const json &type = require(doc, "type");
    if (!type.is_string()) {
        throw SchemaError("\"type\" must be a string");
    }
    auto t = type.get<std::string>();
    if (t == "rho_n_params") {
        return parse_params(doc, options);
    }
    if (t == "density_matrix") {
        return parse_matrix(doc, options);
    }
    throw SchemaError("unknown state type \"" + t + "\"");
}

std::string read_text_file(const std::filesystem::path &path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw std::runtime_error("cannot open " + path.string());
    }
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

StateFile load_state_file(const std::filesystem::path &path, const LoadOptions &options) {
    return parse_state(read_text_file(path), options);
}

json params_to_json(const RhoNParams &p) {
    return json{
        {"type", "rho_n_params"},
        {"n", p.n_qubits},
        {"lambda0_plus", p.lambda0_plus},
        {"lambda0_minus", p.lambda0_minus},
        {"lambdas", p.lambdas},
    };
}

json matrix_to_json(const DensityMatrix &rho) {
    json rows = json::array();
    for (std::size_t r = 0; r < rho.dim(); ++r) {
        json row = json::array();
        for (std::size_t c = 0; c < rho.dim(); ++c) {
            Complex v = rho(r, c);
            row.push_back(json::array({v.real(), v.imag()}));
        }
        rows.push_back(std::move(row));
    }
    return json{{"type", "density_matrix"}, {"n", rho.n_qubits()}, {"matrix", std::move(rows)}};
}

json split_to_json(const Split &split) {
    return split.to_parties();
}

json report_to_json(const ClassificationReport &report, const ReportMeta &meta) {
    json j;
    j["tool"] = kToolName;
    j["version"] = kToolVersion;
    j["input_hash"] = meta.input_hash;
    j["tolerance"] = report.tolerance;
    j["provenance"] = provenance_name(report.provenance);
    j["n"] = report.n_qubits;
    j["params"] = params_to_json(report.params);

    json bip = json::array();
    for (const auto &v : report.bipartite) {
        json e = bipartite_to_json(v);
        if (meta.restate_for_input) {
            e["input_verdict"] = v.ppt ? "unknown" : "npt";
        }
        bip.push_back(std::move(e));
    }
    j["bipartite"] = std::move(bip);

    json levels = json::array();
    for (const auto &lv : report.levels) {
        json splits = json::array();
        for (const auto &s : lv.splits) {
            json e{{"split", split_to_json(s.split)}, {"separable", s.separable}};
            if (meta.restate_for_input) {
                e["input_verdict"] = s.separable ? "unknown" : "inseparable";
            }
            splits.push_back(std::move(e));
        }
        levels.push_back(json{{"k", lv.k}, {"splits", std::move(splits)}});
    }
    j["levels"] = std::move(levels);
    j["fully_separable"] = report.fully_separable;

    json pairs = json::array();
    for (const auto &pv : report.pair_distillable) {
        pairs.push_back(json{{"pair", {pv.i, pv.j}}, {"distillable", pv.distillable}});
    }
    j["pair_distillable"] = std::move(pairs);

    json ghz = json::array();
    for (const auto &gv : report.ghz_distillable) {
        ghz.push_back(json{{"parties", gv.parties.parties()}, {"distillable", gv.distillable}});
    }
    j["ghz_distillable"] = std::move(ghz);

    if (report.three_qubit) {
        const auto &t = *report.three_qubit;
        json tq{
            {"class", class_label(t.cls)},
            {"ppt", {{"A", t.ppt_a}, {"B", t.ppt_b}, {"C", t.ppt_c}}},
            {"activatable", t.activatable},
            {"distillability", t.distillability},
        };
        if (t.activation_pair) {
            tq["activation_pair"] = {t.activation_pair->first, t.activation_pair->second};
        }
        j["three_qubit_class"] = std::move(tq);
    } else {
        j["three_qubit_class"] = nullptr;
    }
    return j;
}

std::string dump_json(const json &j) {
    return j.dump(2) + "\n";
}

std::uint64_t fnv1a64(std::string_view bytes) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    return h;
}

std::string hex64(std::uint64_t v) {
    char buf[17];
    std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(v));
    return buf;
}

}  // namespace entclass
