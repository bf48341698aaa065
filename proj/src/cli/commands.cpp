// Copyright 2026 The bpfree Authors
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


#include "bpfree/cli/commands.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <iostream>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>

#include "CLI11.hpp"

#include "bpfree/cli/csv.hpp"
#include "bpfree/cli/selftest.hpp"
#include "bpfree/grad/scan.hpp"
#include "bpfree/hea/circuit_json.hpp"
#include "bpfree/init/random.hpp"
#include "bpfree/mbl/diagnostics.hpp"
#include "bpfree/qcore/format.hpp"
#include "bpfree/qcore/parallel.hpp"
#include "bpfree/qml/classifier.hpp"
#include "bpfree/transform/bounds.hpp"
#include "bpfree/vqe/vqe.hpp"

namespace bpfree::cli {

using nlohmann::json;

namespace {

std::string flag_of(const std::string& key) {
    std::string f = "--" + key;
    for (char& c : f) {
        if (c == '_') {
            c = '-';
        }
    }
    return f;
}

std::string trim(std::string s) {
    const auto b = s.find_first_not_of(" \t");
    const auto e = s.find_last_not_of(" \t");
    return b == std::string::npos ? "" : s.substr(b, e - b + 1);
}

std::vector<std::string> split_list(const std::string& s) {
    std::vector<std::string> out;
    std::size_t start = 0;
    while (true) {
        const auto comma = s.find(',', start);
        out.push_back(trim(s.substr(start, comma == std::string::npos ? comma : comma - start)));
        if (comma == std::string::npos) {
            break;
        }
        start = comma + 1;
    }
    return out;
}

std::string fmt(const char* spec, double x) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), spec, x);
    return buf;
}

/// Typed, consumption-tracked view of a raw config object.
class Raw {
  public:
    Raw(const json& doc, std::string command) : doc_(doc), command_(std::move(command)) {
        if (!doc_.is_object()) {
            throw std::invalid_argument(command_ + ": config must be a JSON object");
        }
    }

    bool has(const std::string& key) const { return doc_.contains(key) && !doc_[key].is_null(); }

    std::string str(const std::string& key, std::optional<std::string> def = std::nullopt) {
        const json* v = get(key, def.has_value());
        if (!v) {
            return *def;
        }
        if (!v->is_string()) {
            throw bad(key, "expected a string");
        }
        return v->get<std::string>();
    }

    std::uint64_t u64(const std::string& key, std::optional<std::uint64_t> def = std::nullopt) {
        const json* v = get(key, def.has_value());
        return v ? to_u64(key, *v) : *def;
    }

    std::size_t size(const std::string& key, std::optional<std::size_t> def = std::nullopt) {
        return static_cast<std::size_t>(u64(key, def));
    }

    double real(const std::string& key, std::optional<double> def = std::nullopt) {
        const json* v = get(key, def.has_value());
        return v ? to_real(key, *v) : *def;
    }

    std::optional<double> opt_real(const std::string& key) {
        return has(key) ? std::optional<double>(real(key)) : std::nullopt;
    }

    bool flag(const std::string& key, bool def = false) {
        const json* v = get(key, true);
        if (!v) {
            return def;
        }
        if (v->is_boolean()) {
            return v->get<bool>();
        }
        if (v->is_string()) {
            const auto s = v->get<std::string>();
            if (s == "true" || s == "1") {
                return true;
            }
            if (s == "false" || s == "0") {
                return false;
            }
        }
        throw bad(key, "expected true or false");
    }

    std::vector<std::size_t> sizes(const std::string& key) {
        std::vector<std::size_t> out;
        for (const auto& item : items(key)) {
            out.push_back(static_cast<std::size_t>(to_u64(key, item)));
        }
        return out;
    }

    std::vector<double> reals(const std::string& key) {
        std::vector<double> out;
        for (const auto& item : items(key)) {
            out.push_back(to_real(key, item));
        }
        return out;
    }

    /// Throws on any key that was never read.
    void finish() const {
        for (const auto& [k, v] : doc_.items()) {
            if (!used_.count(k) && !v.is_null()) {
                throw std::invalid_argument(command_ + ": option " + flag_of(k) +
                                            " is unknown or unused in this configuration");
            }
        }
    }

  private:
    const json* get(const std::string& key, bool optional) {
        used_.insert(key);
        if (!has(key)) {
            if (optional) {
                return nullptr;
            }
            throw std::invalid_argument(command_ + ": missing required option " + flag_of(key));
        }
        return &doc_[key];
    }

    std::vector<json> items(const std::string& key) {
        const json* v = get(key, false);
        std::vector<json> out;
        if (v->is_array()) {
            out.assign(v->begin(), v->end());
        } else if (v->is_string()) {
            for (const auto& s : split_list(v->get<std::string>())) {
                out.emplace_back(s);
            }
        } else {
            out.push_back(*v);
        }
        if (out.empty()) {
            throw bad(key, "empty list");
        }
        return out;
    }

    std::uint64_t to_u64(const std::string& key, const json& v) const {
        if (v.is_number_unsigned()) {
            return v.get<std::uint64_t>();
        }
        if (v.is_number_integer()) {
            if (v.get<std::int64_t>() >= 0) {
                return static_cast<std::uint64_t>(v.get<std::int64_t>());
            }
            throw bad(key, "must be non-negative");
        }
        if (v.is_string()) {
            const std::string s = trim(v.get<std::string>());
            const bool hex = s.size() > 2 && s[0] == '0' && (s[1] == 'x' || s[1] == 'X');
            std::size_t pos = 0;
            try {
                if (!s.empty() && s[0] != '-' && s[0] != '+') {
                    const auto x = std::stoull(s, &pos, hex ? 16 : 10);
                    if (pos == s.size()) {
                        return x;
                    }
                }
            } catch (const std::exception&) {
            }
            throw bad(key, "cannot parse '" + s + "' as a non-negative integer");
        }
        throw bad(key, "expected a non-negative integer");
    }

    double to_real(const std::string& key, const json& v) const {
        double x = 0.0;
        if (v.is_number()) {
            x = v.get<double>();
        } else if (v.is_string()) {
            if (!parse_double(trim(v.get<std::string>()), x)) {
                throw bad(key, "cannot parse '" + v.get<std::string>() + "' as a number");
            }
        } else {
            throw bad(key, "expected a number");
        }
        if (!std::isfinite(x)) {
            throw bad(key, "must be finite");
        }
        return x;
    }

    std::invalid_argument bad(const std::string& key, const std::string& what) const {
        return std::invalid_argument(command_ + ": " + flag_of(key) + ": " + what);
    }

    const json& doc_;
    std::string command_;
    std::set<std::string> used_;
};

json parse_json_file(const std::string& path) {
    const std::string text = read_file(path);
    try {
        return json::parse(text);
    } catch (const json::exception& e) {
        throw std::invalid_argument("'" + path + "' is not valid JSON: " + e.what());
    }
}

FileDigest input_digest(const std::string& role, const std::string& path,
                        const std::string& content) {
    return {role, path, sha256_hex(content), content.size()};
}

// ---------------------------------------------------------------- shared keys

void resolve_scheme(Raw& r, json& out, const std::string& def) {
    const std::string tag = r.str("init", def);
    const auto t = parse_scheme_tag(tag);
    out["init"] = tag;
    if (t == InitScheme::Tag::Mbl) {
        if (r.has("mbl_theta")) {
            out["mbl_theta"] = r.real("mbl_theta");
        } else {
            out["mbl_theta_max"] = r.real("mbl_theta_max", 0.1);
        }
    } else if (t == InitScheme::Tag::Gaussian) {
        if (!r.has("gaussian_weight")) {
            throw std::invalid_argument("--init gaussian requires --gaussian-weight S");
        }
        out["gaussian_weight"] = r.u64("gaussian_weight");
    }
}

InitScheme scheme_of(const json& cfg) {
    switch (parse_scheme_tag(cfg.at("init").get<std::string>())) {
    case InitScheme::Tag::Small:
        return InitScheme::small();
    case InitScheme::Tag::Random:
        return InitScheme::random();
    case InitScheme::Tag::Mbl:
        return cfg.contains("mbl_theta") ? InitScheme::mbl_fixed(cfg["mbl_theta"].get<double>())
                                         : InitScheme::mbl(cfg.at("mbl_theta_max").get<double>());
    case InitScheme::Tag::Gaussian:
        return InitScheme::gaussian(cfg.at("gaussian_weight").get<long long>());
    }
    throw std::logic_error("unreachable");
}

/// "chain", "periodic_chain", "grid" or "grid:RxC" (also "grid RxC", "gridRxC").
LatticeFamily parse_family(const std::string& text, std::size_t* cols = nullptr) {
    LatticeFamily f;
    if (text == "chain") {
        return f;
    }
    if (text == "periodic" || text == "periodic_chain") {
        f.kind = LatticeFamily::Kind::PeriodicChain;
        return f;
    }
    if (text.rfind("grid", 0) == 0) {
        f.kind = LatticeFamily::Kind::Grid;
        std::string dims = trim(text.substr(4));
        if (!dims.empty() && dims[0] == ':') {
            dims = trim(dims.substr(1));
        }
        if (dims.empty()) {
            return f;
        }
        const auto x = dims.find('x');
        try {
            std::size_t pos = 0;
            const std::string rs = dims.substr(0, x);
            const std::string cs = x == std::string::npos ? "" : dims.substr(x + 1);
            f.rows = std::stoul(rs, &pos);
            if (pos != rs.size() || cs.empty()) {
                throw std::invalid_argument("");
            }
            const std::size_t c = std::stoul(cs, &pos);
            if (pos != cs.size() || f.rows == 0 || c == 0) {
                throw std::invalid_argument("");
            }
            if (cols) {
                *cols = c;
            }
            return f;
        } catch (const std::exception&) {
        }
    }
    throw std::invalid_argument("unknown lattice '" + text +
                                "' (expected chain, periodic_chain, grid or grid:RxC)");
}

std::string canonical_family(const std::string& text, std::size_t* rows_out = nullptr,
                             std::size_t* cols_out = nullptr) {
    std::size_t cols = 0;
    const auto f = parse_family(text, &cols);
    if (rows_out) {
        *rows_out = f.rows;
    }
    if (cols_out) {
        *cols_out = cols;
    }
    if (f.kind == LatticeFamily::Kind::Grid && f.rows > 0) {
        return "grid:" + std::to_string(f.rows) + "x" + std::to_string(cols);
    }
    switch (f.kind) {
    case LatticeFamily::Kind::Chain:
        return "chain";
    case LatticeFamily::Kind::PeriodicChain:
        return "periodic_chain";
    case LatticeFamily::Kind::Grid:
        return "grid";
    }
    throw std::logic_error("unreachable");
}

void check_grid_sizes(const std::string& lattice, const std::vector<std::size_t>& ns) {
    std::size_t rows = 0;
    std::size_t cols = 0;
    canonical_family(lattice, &rows, &cols);
    for (std::size_t n : ns) {
        if (rows > 0 && rows * cols != n) {
            throw std::invalid_argument("lattice " + lattice + " has " +
                                        std::to_string(rows * cols) + " sites but N = " +
                                        std::to_string(n));
        }
        parse_family(lattice).make(n);
    }
}

/// Circuit given by file or by n/p/lattice/initial_state keys.
void resolve_circuit(Raw& r, json& out) {
    if (r.has("circuit")) {
        out["circuit"] = r.str("circuit");
        return;
    }
    out["n"] = r.size("n");
    out["p"] = r.size("p");
    out["lattice"] = canonical_family(r.str("lattice", "chain"));
    out["initial_state"] = std::string(to_string(parse_initial_state(r.str("initial_state", "zero"))));
    check_grid_sizes(out["lattice"], {out["n"].get<std::size_t>()});
}

HeaCircuit circuit_of(const json& cfg, std::vector<FileDigest>& inputs) {
    if (cfg.contains("circuit")) {
        const std::string path = cfg["circuit"].get<std::string>();
        const std::string text = read_file(path);
        inputs.push_back(input_digest("circuit", path, text));
        json doc;
        try {
            doc = json::parse(text);
        } catch (const json::exception& e) {
            throw std::invalid_argument("'" + path + "' is not valid JSON: " + e.what());
        }
        return circuit_from_json(doc).circuit;
    }
    const std::size_t n = cfg.at("n").get<std::size_t>();
    return HeaCircuit(parse_family(cfg.at("lattice").get<std::string>()).make(n),
                      cfg.at("p").get<std::size_t>(),
                      parse_initial_state(cfg.at("initial_state").get<std::string>()));
}

/// Parameters from a JSON file, all zeros, or sampled from an init scheme.
void resolve_params(Raw& r, json& out) {
    const bool zero = r.flag("zero_params");
    out["zero_params"] = zero;
    if (zero) {
        return;
    }
    if (r.has("params")) {
        out["params"] = r.str("params");
        return;
    }
    resolve_scheme(r, out, "small");
    out["seed"] = r.u64("seed", 0);
}

ParamMatrix params_of(const json& cfg, const HeaCircuit& circuit,
                      std::vector<FileDigest>& inputs) {
    if (cfg.at("zero_params").get<bool>()) {
        return circuit.zero_params();
    }
    if (cfg.contains("params")) {
        const std::string path = cfg["params"].get<std::string>();
        const std::string text = read_file(path);
        inputs.push_back(input_digest("params", path, text));
        json doc;
        try {
            doc = json::parse(text);
            if (doc.is_object()) {
                doc = doc.at("params");
            }
            std::vector<double> values;
            const std::size_t rows = doc.size();
            const std::size_t cols = rows ? doc.at(0).size() : 0;
            for (const auto& row : doc) {
                if (row.size() != cols) {
                    throw std::invalid_argument("ragged parameter rows");
                }
                for (const auto& v : row) {
                    values.push_back(v.get<double>());
                }
            }
            ParamMatrix pm(rows, cols, std::move(values));
            circuit.check_params(pm);
            return pm;
        } catch (const json::exception& e) {
            throw std::invalid_argument("'" + path + "': expected a p x 2N array: " + e.what());
        }
    }
    return sample(scheme_of(cfg), circuit, cfg.at("seed").get<std::uint64_t>());
}

json params_json(const ParamMatrix& pm) {
    json rows = json::array();
    for (std::size_t i = 0; i < pm.rows(); ++i) {
        const auto r = pm.row(i);
        rows.push_back(std::vector<double>(r.begin(), r.end()));
    }
    return rows;
}

std::size_t threads_of(const json& cfg) { return cfg.at("threads").get<std::size_t>(); }

// ---------------------------------------------------------------- grad-scan

json resolve_grad_scan(Raw& r) {
    json out;
    out["lattice"] = canonical_family(r.str("lattice", "chain"));
    out["n"] = r.sizes("n");
    out["p"] = r.sizes("p");
    resolve_scheme(r, out, "small");
    out["obs"] = std::string(to_string(parse_observable_kind(r.str("obs", "local_y1"))));
    out["samples"] = r.size("samples", 256);
    out["seed"] = r.u64("seed", 0);
    out["target"] = std::string(to_string(parse_scan_target(r.str("target", "rx0-layer-mean"))));
    out["initial_state"] = std::string(to_string(parse_initial_state(r.str("initial_state", "zero"))));
    out["out"] = r.str("out");
    if (out["samples"].get<std::size_t>() == 0) {
        throw std::invalid_argument("grad-scan: --samples must be positive");
    }
    for (std::size_t p : out["p"].get<std::vector<std::size_t>>()) {
        if (p == 0) {
            throw std::invalid_argument("grad-scan: every p must be positive");
        }
    }
    check_grid_sizes(out["lattice"], out["n"].get<std::vector<std::size_t>>());
    return out;
}

CommandResult exec_grad_scan(const json& cfg) {
    ScanConfig sc;
    sc.scheme = scheme_of(cfg);
    sc.lattice = parse_family(cfg.at("lattice").get<std::string>());
    sc.n_list = cfg.at("n").get<std::vector<std::size_t>>();
    sc.p_list = cfg.at("p").get<std::vector<std::size_t>>();
    sc.observable = parse_observable_kind(cfg.at("obs").get<std::string>());
    sc.samples = cfg.at("samples").get<std::size_t>();
    sc.master_seed = cfg.at("seed").get<std::uint64_t>();
    sc.target = parse_scan_target(cfg.at("target").get<std::string>());
    sc.initial = parse_initial_state(cfg.at("initial_state").get<std::string>());
    sc.threads = threads_of(cfg);
    CsvTable t({"scheme", "N", "p", "observable", "samples", "mean_sq_grad", "stderr", "seed"});
    CommandResult res;
    for (const auto& rec : scan(sc)) {
        t.add_row({cell(rec.scheme), cell(rec.n), cell(rec.p), cell(rec.observable),
                   cell(rec.samples), cell(rec.mean_sq_grad), cell(rec.std_error),
                   cell(rec.seed)});
        res.messages.push_back("N=" + std::to_string(rec.n) + " p=" + std::to_string(rec.p) +
                               " mean_sq_grad=" + fmt("%.6e", rec.mean_sq_grad));
    }
    res.outputs.push_back({"scan", cfg.at("out").get<std::string>(), t.str()});
    return res;
}

// ---------------------------------------------------------------- rz-scan

json resolve_rz_scan(Raw& r) {
    json out;
    out["lattice"] = canonical_family(r.str("lattice", "chain"));
    out["n"] = r.size("n");
    out["p"] = r.sizes("p");
    resolve_scheme(r, out, "mbl");
    out["obs"] = std::string(to_string(parse_observable_kind(r.str("obs", "local_y1"))));
    out["samples"] = r.size("samples", 256);
    out["seed"] = r.u64("seed", 0);
    const auto target = parse_scan_target(r.str("target", "rz0-last"));
    if (target == ScanTarget::RxQubit0LayerMean) {
        throw std::invalid_argument("rz-scan: --target must be rz0-last or rx0-last");
    }
    out["target"] = std::string(to_string(target));
    out["out"] = r.str("out");
    if (out["samples"].get<std::size_t>() < 2) {
        throw std::invalid_argument("rz-scan: --samples must be at least 2");
    }
    check_grid_sizes(out["lattice"], {out["n"].get<std::size_t>()});
    return out;
}

CommandResult exec_rz_scan(const json& cfg) {
    LongTimeConfig lc;
    lc.lattice = parse_family(cfg.at("lattice").get<std::string>());
    lc.n = cfg.at("n").get<std::size_t>();
    lc.p_list = cfg.at("p").get<std::vector<std::size_t>>();
    lc.samples = cfg.at("samples").get<std::size_t>();
    lc.master_seed = cfg.at("seed").get<std::uint64_t>();
    lc.observable = parse_observable_kind(cfg.at("obs").get<std::string>());
    lc.scheme = scheme_of(cfg);
    lc.target = parse_scan_target(cfg.at("target").get<std::string>());
    lc.threads = threads_of(cfg);
    CsvTable t({"N", "p", "samples", "mean", "variance", "mean_sq", "mean_sq_stderr"});
    CommandResult res;
    for (const auto& s : long_time_rz_scan(lc)) {
        t.add_row({cell(s.n), cell(s.p), cell(s.samples), cell(s.mean), cell(s.variance),
                   cell(s.mean_sq), cell(s.mean_sq_stderr)});
    }
    res.outputs.push_back({"scan", cfg.at("out").get<std::string>(), t.str()});
    return res;
}

// ---------------------------------------------------------------- vqe

json resolve_vqe(Raw& r) {
    json out;
    const auto model = parse_model(r.str("model"));
    out["model"] = std::string(to_string(model));
    out["n"] = r.size("n");
    out["p"] = r.size("p");
    out["field"] = r.real("field", 1.0);
    out["periodic"] = r.flag("periodic");
    resolve_scheme(r, out, "small");
    out["seed"] = r.u64("seed", 0);
    out["steps"] = r.size("steps");
    VqeConfig probe;
    probe.model = model;
    out["lr"] = r.real("lr", probe.learning_rate());
    out["initial_state"] = std::string(to_string(parse_initial_state(r.str("initial_state", "y_plus"))));
    const std::string gm = r.str("gs_method", "auto");
    parse_ground_method(gm);
    out["gs_method"] = gm;
    if (const auto e = r.opt_real("e_gs")) {
        out["e_gs"] = *e;
    }
    out["out"] = r.str("out");
    if (r.has("params_out")) {
        out["params_out"] = r.str("params_out");
    }
    if (!(out["lr"].get<double>() > 0.0)) {
        throw std::invalid_argument("vqe: --lr must be positive");
    }
    return out;
}

CommandResult exec_vqe(const json& cfg) {
    VqeConfig vc;
    vc.model = parse_model(cfg.at("model").get<std::string>());
    vc.n = cfg.at("n").get<std::size_t>();
    vc.p = cfg.at("p").get<std::size_t>();
    vc.field = cfg.at("field").get<double>();
    vc.periodic = cfg.at("periodic").get<bool>();
    vc.scheme = scheme_of(cfg);
    vc.seed = cfg.at("seed").get<std::uint64_t>();
    vc.steps = cfg.at("steps").get<std::size_t>();
    vc.lr = cfg.at("lr").get<double>();
    vc.initial = parse_initial_state(cfg.at("initial_state").get<std::string>());
    vc.gs_method = parse_ground_method(cfg.at("gs_method").get<std::string>());
    if (cfg.contains("e_gs")) {
        vc.e_gs = cfg["e_gs"].get<double>();
    }
    const VqeRun run = run_vqe(vc);
    CsvTable t({"step", "energy", "normalized_energy"});
    for (const auto& tp : run.trace) {
        t.add_row({cell(tp.step), cell(tp.energy), cell(tp.normalized_energy)});
    }
    CommandResult res;
    res.outputs.push_back({"trace", cfg.at("out").get<std::string>(), t.str()});
    if (cfg.contains("params_out")) {
        res.outputs.push_back({"params", cfg["params_out"].get<std::string>(),
                               params_json(run.final_params).dump(1) + "\n"});
    }
    res.messages.push_back("E_GS = " + format_double(run.e_gs));
    res.messages.push_back("final energy = " + format_double(run.trace.back().energy));
    res.messages.push_back("final normalized energy = " +
                           fmt("%.6e", run.trace.back().normalized_energy));
    return res;
}

// ---------------------------------------------------------------- mbl-scan

json resolve_mbl_scan(Raw& r) {
    json out;
    out["n"] = r.sizes("n");
    out["theta"] = r.reals("theta");
    out["realizations"] = r.size("realizations");
    out["seed"] = r.u64("seed", 0);
    out["periodic"] = r.flag("periodic");
    out["wrap_gap"] = r.flag("wrap_gap");
    out["degeneracy_tol"] = r.real("degeneracy_tol", 1e-8);
    out["out"] = r.str("out");
    if (out["realizations"].get<std::size_t>() < 2) {
        throw std::invalid_argument("mbl-scan: --realizations must be at least 2");
    }
    for (std::size_t n : out["n"].get<std::vector<std::size_t>>()) {
        if (n < 2 || n > 14 || n % 2 != 0) {
            throw std::invalid_argument("mbl-scan: every N must be even and in [2, 14]");
        }
    }
    return out;
}

CommandResult exec_mbl_scan(const json& cfg) {
    PhaseScanConfig pc;
    pc.n_list = cfg.at("n").get<std::vector<std::size_t>>();
    pc.theta_over_pi = cfg.at("theta").get<std::vector<double>>();
    pc.realizations = cfg.at("realizations").get<std::size_t>();
    pc.master_seed = cfg.at("seed").get<std::uint64_t>();
    pc.periodic = cfg.at("periodic").get<bool>();
    pc.wrap_gap = cfg.at("wrap_gap").get<bool>();
    pc.degeneracy_tol = cfg.at("degeneracy_tol").get<double>();
    pc.threads = threads_of(cfg);
    CsvTable t({"N", "theta_over_pi", "realizations", "mean_entropy", "entropy_stderr",
                "entropy_variance", "variance_stderr", "gap_ratio", "gap_ratio_stderr"});
    CommandResult res;
    for (const auto& m : phase_scan(pc)) {
        t.add_row({cell(m.n), cell(m.theta_over_pi), cell(m.realizations), cell(m.mean_entropy),
                   cell(m.entropy_stderr), cell(m.entropy_variance), cell(m.variance_stderr),
                   cell(m.gap_ratio), cell(m.gap_ratio_stderr)});
        res.messages.push_back("N=" + std::to_string(m.n) +
                               " theta/pi=" + fmt("%.4g", m.theta_over_pi) +
                               " <r>=" + fmt("%.4f", m.gap_ratio) +
                               " S=" + fmt("%.4f", m.mean_entropy));
    }
    res.outputs.push_back({"scan", cfg.at("out").get<std::string>(), t.str()});
    return res;
}

// ---------------------------------------------------------------- qml

std::string default_accuracy_path(const std::string& out) {
    const std::string ext = ".csv";
    if (out.size() > ext.size() && out.compare(out.size() - ext.size(), ext.size(), ext) == 0) {
        return out.substr(0, out.size() - ext.size()) + "_accuracy.csv";
    }
    return out + "_accuracy.csv";
}

json resolve_qml(Raw& r) {
    json out;
    out["n"] = r.size("n");
    out["p"] = r.size("p", 16);
    out["batch"] = r.size("batch", 25);
    out["epochs"] = r.size("epochs", 10);
    out["lr"] = r.real("lr", 0.01);
    resolve_scheme(r, out, "small");
    out["seed"] = r.u64("seed", 0);
    const auto sign = r.str("readout_sign", "+1");
    if (sign != "+1" && sign != "1" && sign != "-1") {
        throw std::invalid_argument("qml: --readout-sign must be +1 or -1");
    }
    out["readout_sign"] = sign == "-1" ? "-1" : "+1";
    out["periodic"] = r.flag("periodic");
    if (r.has("train") || r.has("test")) {
        out["train"] = r.str("train");
        out["test"] = r.str("test");
    } else {
        out["synth_d"] = r.size("synth_d", 10);
        out["synth_per_class"] = r.size("synth_per_class", 250);
        out["synth_separation"] = r.real("synth_separation", 6.0);
        out["synth_seed"] = r.u64("synth_seed", out["seed"].get<std::uint64_t>());
        const std::size_t total = 2 * out["synth_per_class"].get<std::size_t>();
        out["n_train"] = r.size("n_train", total / 2);
    }
    out["out"] = r.str("out");
    out["accuracy_out"] = r.str("accuracy_out", default_accuracy_path(out["out"]));
    TrainConfig tc;
    tc.n_qubits = out["n"].get<std::size_t>();
    tc.depth = out["p"].get<std::size_t>();
    tc.batch = out["batch"].get<std::size_t>();
    tc.lr = out["lr"].get<double>();
    tc.validate();
    return out;
}

CommandResult exec_qml(const json& cfg) {
    CommandResult res;
    std::optional<Dataset> train_set;
    std::optional<Dataset> test_set;
    if (cfg.contains("train")) {
        const std::string tp = cfg["train"].get<std::string>();
        const std::string sp = cfg["test"].get<std::string>();
        const std::string ttext = read_file(tp);
        const std::string stext = read_file(sp);
        res.inputs.push_back(input_digest("train", tp, ttext));
        res.inputs.push_back(input_digest("test", sp, stext));
        train_set = parse_csv(ttext, tp);
        test_set = parse_csv(stext, sp);
    } else {
        const auto all = synth_gaussian(cfg.at("synth_d").get<std::size_t>(),
                                        cfg.at("synth_per_class").get<std::size_t>(),
                                        cfg.at("synth_separation").get<double>(),
                                        cfg.at("synth_seed").get<std::uint64_t>());
        auto parts = split(all, cfg.at("n_train").get<std::size_t>());
        train_set = std::move(parts.first);
        test_set = std::move(parts.second);
    }
    TrainConfig tc;
    tc.n_qubits = cfg.at("n").get<std::size_t>();
    tc.depth = cfg.at("p").get<std::size_t>();
    tc.periodic = cfg.at("periodic").get<bool>();
    tc.batch = cfg.at("batch").get<std::size_t>();
    tc.epochs = cfg.at("epochs").get<std::size_t>();
    tc.lr = cfg.at("lr").get<double>();
    const std::uint64_t seed = cfg.at("seed").get<std::uint64_t>();
    tc.init_seed = sub_seed(seed, 0);
    tc.shuffle_seed = sub_seed(seed, 1);
    tc.readout_sign = cfg.at("readout_sign").get<std::string>() == "-1" ? -1 : 1;
    tc.threads = threads_of(cfg);
    const auto rec = train(*train_set, *test_set, tc, scheme_of(cfg));

    CsvTable steps({"epoch", "step", "loss"});
    for (const auto& s : rec.steps) {
        steps.add_row({cell(s.epoch), cell(s.step), cell(s.loss)});
    }
    CsvTable acc({"epoch", "test_accuracy"});
    for (const auto& e : rec.epochs) {
        acc.add_row({cell(e.epoch), cell(e.test_accuracy)});
    }
    res.outputs.push_back({"loss", cfg.at("out").get<std::string>(), steps.str()});
    res.outputs.push_back({"accuracy", cfg.at("accuracy_out").get<std::string>(), acc.str()});
    res.messages.push_back("train " + std::to_string(train_set->size()) + " points, test " +
                           std::to_string(test_set->size()) + " points, d=" +
                           std::to_string(train_set->dim()));
    res.messages.push_back("final test accuracy = " + fmt("%.4f", rec.epochs.back().test_accuracy));
    return res;
}

// ---------------------------------------------------------------- transform

json resolve_transform(Raw& r) {
    json out;
    resolve_circuit(r, out);
    resolve_params(r, out);
    out["verify"] = r.flag("verify");
    out["out"] = r.str("out");
    return out;
}

CommandResult exec_transform(const json& cfg) {
    CommandResult res;
    const HeaCircuit circuit = circuit_of(cfg, res.inputs);
    const GeneratorCircuit gc = remove_cz(circuit);
    res.outputs.push_back({"generator_circuit", cfg.at("out").get<std::string>(),
                           to_json(gc).dump(2) + "\n"});
    res.messages.push_back("depth " + std::to_string(circuit.depth()) + ", " +
                           std::to_string(gc.layers().size()) + " generator layers, residual CZ " +
                           (gc.residual_prefix_cz() ? "yes" : "no"));
    if (cfg.at("verify").get<bool>()) {
        const ParamMatrix params = params_of(cfg, circuit, res.inputs);
        const double resid = equivalence_residual(circuit, params);
        if (!(resid < 1e-10)) {
            throw NumericalError("NOT equivalent (phase-aligned residual " + fmt("%.1e", resid) +
                                 ")");
        }
        res.messages.push_back("equivalent (phase-aligned residual " + fmt("%.1e", resid) + ")");
    }
    return res;
}

// ---------------------------------------------------------------- bounds

json resolve_bounds(Raw& r) {
    json out;
    resolve_circuit(r, out);
    resolve_params(r, out);
    out["split_block"] = r.size("split_block", 0);
    const auto slot = r.sizes("slot");
    if (slot.size() != 2) {
        throw std::invalid_argument("bounds: --slot takes BLOCK,COLUMN");
    }
    out["slot"] = slot;
    out["obs"] = std::string(to_string(parse_observable_kind(r.str("obs", "local_y1"))));
    out["out"] = r.str("out");
    return out;
}

CommandResult exec_bounds(const json& cfg) {
    CommandResult res;
    const HeaCircuit circuit = circuit_of(cfg, res.inputs);
    const ParamMatrix params = params_of(cfg, circuit, res.inputs);
    const auto slot_v = cfg.at("slot").get<std::vector<std::size_t>>();
    const Slot slot{slot_v[0], slot_v[1]};
    const auto obs =
        make_observable(parse_observable_kind(cfg.at("obs").get<std::string>()), circuit.n_qubits());
    const auto rep =
        norms_for_bound(circuit, params, cfg.at("split_block").get<std::size_t>(), obs, slot);
    res.outputs.push_back({"bounds", cfg.at("out").get<std::string>(), to_json(rep).dump(2) + "\n"});
    res.messages.push_back("t_A = " + format_double(rep.t_A) + ", t_B = " + format_double(rep.t_B));
    res.messages.push_back("t_c = " + format_double(rep.t_c) + ", fm_error = " +
                           format_double(rep.fm_error));
    return res;
}

// ---------------------------------------------------------------- registry

struct Command {
    json (*resolve)(Raw&);
    CommandResult (*run)(const json&);
    std::string about;
};

const std::map<std::string, Command>& registry() {
    static const std::map<std::string, Command> table = {
        {"grad-scan", {resolve_grad_scan, exec_grad_scan, "Averaged squared gradients over (N, p)"}},
        {"rz-scan", {resolve_rz_scan, exec_rz_scan, "Long-time statistics of a final-block gradient entry"}},
        {"vqe", {resolve_vqe, exec_vqe, "VQE with Adam on the H1 or H2 model"}},
        {"mbl-scan", {resolve_mbl_scan, exec_mbl_scan, "Floquet entanglement and level statistics"}},
        {"qml", {resolve_qml, exec_qml, "Train the binary classifier"}},
        {"transform", {resolve_transform, exec_transform, "Rewrite an HEA without CZ gates"}},
        {"bounds", {resolve_bounds, exec_bounds, "Critical-time and truncation-error report"}},
    };
    return table;
}

const Command& lookup(const std::string& name) {
    const auto it = registry().find(name);
    if (it == registry().end()) {
        throw std::invalid_argument("unknown command '" + name + "'");
    }
    return it->second;
}

} // namespace

const std::vector<std::string>& command_names() {
    static const std::vector<std::string> names = [] {
        std::vector<std::string> v;
        for (const auto& [k, _] : registry()) {
            v.push_back(k);
        }
        return v;
    }();
    return names;
}

json resolve_config(const std::string& command, const json& raw) {
    const Command& cmd = lookup(command);
    Raw r(raw, command);
    json out = cmd.resolve(r);
    const std::size_t threads = r.size("threads", default_thread_count());
    if (threads == 0) {
        throw std::invalid_argument(command + ": --threads must be positive");
    }
    out["threads"] = threads;
    r.finish();
    return out;
}

CommandResult execute(const std::string& command, const json& config) {
    return lookup(command).run(config);
}

// ---------------------------------------------------------------- front end

namespace {

struct OptSpec {
    const char* key;
    bool is_flag;
    const char* help;
};

const std::map<std::string, std::vector<OptSpec>>& option_table() {
    static const OptSpec kInit = {"init", false, "small | mbl | random | gaussian"};
    static const OptSpec kThetaMax = {"mbl_theta_max", false, "MBL: RX angle drawn from U[0, x] (default 0.1)"};
    static const OptSpec kTheta = {"mbl_theta", false, "MBL: fixed RX angle"};
    static const OptSpec kWeight = {"gaussian_weight", false, "Gaussian: observable weight S"};
    static const OptSpec kSeed = {"seed", false, "master seed (default 0)"};
    static const OptSpec kOut = {"out", false, "output path"};
    static const std::map<std::string, std::vector<OptSpec>> table = {
        {"grad-scan",
         {{"lattice", false, "chain | periodic_chain | grid | grid:RxC"},
          {"n", false, "qubit counts, comma separated"},
          {"p", false, "depths, comma separated"},
          kInit, kThetaMax, kTheta, kWeight,
          {"obs", false, "local_y1 | global_y1z"},
          {"samples", false, "parameter draws per (N, p) (default 256)"},
          kSeed,
          {"target", false, "rx0-layer-mean | rx0-last | rz0-last"},
          {"initial_state", false, "zero | y_plus"},
          kOut}},
        {"rz-scan",
         {{"lattice", false, "chain | periodic_chain | grid | grid:RxC"},
          {"n", false, "qubit count"},
          {"p", false, "depths, comma separated"},
          kInit, kThetaMax, kTheta, kWeight,
          {"obs", false, "local_y1 | global_y1z"},
          {"samples", false, "parameter draws per p (default 256)"},
          kSeed,
          {"target", false, "rz0-last | rx0-last"},
          kOut}},
        {"vqe",
         {{"model", false, "h1 | h2"},
          {"n", false, "qubit count"},
          {"p", false, "depth"},
          {"field", false, "field strength h (default 1)"},
          {"periodic", true, "periodic chain"},
          kInit, kThetaMax, kTheta, kWeight, kSeed,
          {"steps", false, "Adam steps"},
          {"lr", false, "learning rate (default 0.005 for h1, 0.001 for h2)"},
          {"initial_state", false, "y_plus | zero"},
          {"gs_method", false, "auto | lanczos | dense"},
          {"e_gs", false, "known ground energy"},
          kOut,
          {"params_out", false, "write final parameters as JSON"}}},
        {"mbl-scan",
         {{"n", false, "even qubit counts, comma separated"},
          {"theta", false, "theta/pi values, comma separated"},
          {"realizations", false, "disorder realizations"},
          kSeed,
          {"periodic", true, "periodic chain"},
          {"wrap_gap", true, "include the gap across the zone boundary"},
          {"degeneracy_tol", false, "cluster tolerance of the eigensolver"},
          kOut}},
        {"qml",
         {{"n", false, "qubit count (required)"},
          {"p", false, "depth (default 16)"},
          {"batch", false, "minibatch size (default 25)"},
          {"epochs", false, "epochs (default 10)"},
          {"lr", false, "learning rate (default 0.01)"},
          kInit, kThetaMax, kTheta, kWeight, kSeed,
          {"readout_sign", false, "+1 or -1"},
          {"periodic", true, "periodic chain"},
          {"train", false, "training CSV"},
          {"test", false, "test CSV"},
          {"synth_d", false, "synthetic data dimension (default 10)"},
          {"synth_per_class", false, "synthetic points per label (default 250)"},
          {"synth_separation", false, "synthetic cluster separation (default 6)"},
          {"synth_seed", false, "synthetic data seed (default --seed)"},
          {"n_train", false, "synthetic points used for training (default half)"},
          {"out", false, "loss CSV path"},
          {"accuracy_out", false, "accuracy CSV path"}}},
        {"transform",
         {{"circuit", false, "circuit JSON file"},
          {"n", false, "qubit count"},
          {"p", false, "depth"},
          {"lattice", false, "chain | periodic_chain | grid | grid:RxC"},
          {"initial_state", false, "zero | y_plus"},
          {"params", false, "parameter JSON file (p x 2N)"},
          {"zero_params", true, "all angles zero"},
          kInit, kThetaMax, kTheta, kWeight, kSeed,
          {"verify", true, "check unitary equivalence densely"},
          kOut}},
        {"bounds",
         {{"circuit", false, "circuit JSON file"},
          {"n", false, "qubit count"},
          {"p", false, "depth"},
          {"lattice", false, "chain | periodic_chain | grid | grid:RxC"},
          {"initial_state", false, "zero | y_plus"},
          {"params", false, "parameter JSON file (p x 2N)"},
          {"zero_params", true, "all angles zero"},
          kInit, kThetaMax, kTheta, kWeight, kSeed,
          {"split_block", false, "first block of U_A (default 0)"},
          {"slot", false, "BLOCK,COLUMN of the differentiated angle"},
          {"obs", false, "local_y1 | global_y1z"},
          kOut}},
    };
    return table;
}

struct CommandCli {
    CLI::App* app = nullptr;
    std::map<std::string, std::string> values;
    std::map<std::string, CLI::Option*> options;
    std::string config_path;
    std::string manifest_path;
    std::size_t threads = 0;
    CLI::Option* threads_opt = nullptr;
};

void print_result(const CommandResult& res, const std::vector<FileDigest>& written) {
    for (const auto& m : res.messages) {
        std::cout << m << "\n";
    }
    for (const auto& d : written) {
        std::cout << "wrote " << d.path << " (sha256 " << d.sha256 << ")\n";
    }
}

int run_command(const std::string& name, CommandCli& c) {
    json raw = json::object();
    if (!c.config_path.empty()) {
        raw = parse_json_file(c.config_path);
        if (!raw.is_object()) {
            throw std::invalid_argument("config file must hold a JSON object");
        }
    }
    for (const auto& spec : option_table().at(name)) {
        CLI::Option* opt = c.options.at(spec.key);
        if (opt->count() == 0) {
            continue;
        }
        if (spec.is_flag) {
            raw[spec.key] = true;
        } else {
            raw[spec.key] = c.values.at(spec.key);
        }
    }
    if (c.threads_opt->count() > 0) {
        raw["threads"] = c.threads;
    }
    const json cfg = resolve_config(name, raw);

    RunManifest m;
    m.command = name;
    m.config = cfg;
    m.master_seed = cfg.contains("seed") ? cfg["seed"].get<std::uint64_t>() : 0;
    m.threads = cfg.at("threads").get<std::size_t>();
    m.started_at = utc_timestamp();
    const auto t0 = std::chrono::steady_clock::now();
    CommandResult res = execute(name, cfg);
    m.wall_time_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    m.finished_at = utc_timestamp();
    m.inputs = res.inputs;
    for (const auto& f : res.outputs) {
        m.outputs.push_back(digest_of(f));
    }
    const std::string manifest_path =
        c.manifest_path.empty() ? cfg.at("out").get<std::string>() + ".manifest.json"
                                : c.manifest_path;
    std::vector<OutputFile> files = res.outputs;
    files.push_back({"manifest", manifest_path, to_json(m).dump(2) + "\n"});
    write_outputs(files);
    print_result(res, m.outputs);
    std::cout << "manifest " << manifest_path << "\n";
    return 0;
}

int run_replay(const std::string& manifest_path) {
    const RunManifest m = manifest_from_json(parse_json_file(manifest_path));
    if (m.tool_version != kToolVersion) {
        std::cerr << "warning: manifest written by version " << m.tool_version << ", running "
                  << kToolVersion << "\n";
    }
    const json cfg = resolve_config(m.command, m.config);
    const CommandResult res = execute(m.command, cfg);
    bool ok = true;
    for (const auto& recorded : m.inputs) {
        const auto it = std::find_if(res.inputs.begin(), res.inputs.end(),
                                     [&](const FileDigest& d) { return d.role == recorded.role; });
        if (it == res.inputs.end() || it->sha256 != recorded.sha256) {
            std::cout << "input " << recorded.role << " (" << recorded.path << "): changed\n";
            ok = false;
        }
    }
    if (res.outputs.size() != m.outputs.size()) {
        std::cout << "output count differs: " << res.outputs.size() << " vs recorded "
                  << m.outputs.size() << "\n";
        ok = false;
    }
    for (std::size_t i = 0; i < std::min(res.outputs.size(), m.outputs.size()); ++i) {
        const auto d = digest_of(res.outputs[i]);
        const bool same = d.role == m.outputs[i].role && d.sha256 == m.outputs[i].sha256;
        std::cout << m.outputs[i].role << ": " << (same ? "identical" : "DIFFERENT") << " "
                  << d.sha256 << "\n";
        ok = ok && same;
    }
    std::cout << "replay " << (ok ? "identical" : "MISMATCH") << "\n";
    return ok ? 0 : 1;
}

} // namespace

int cli_main(int argc, char** argv) {
    CLI::App app{"bpfree: barren-plateau-free initialization experiments"};
    app.require_subcommand(1);
    app.set_version_flag("--version", std::string(kToolVersion));

    std::map<std::string, CommandCli> cmds;
    for (const auto& [name, cmd] : registry()) {
        CommandCli& c = cmds[name];
        c.app = app.add_subcommand(name, cmd.about);
        for (const auto& spec : option_table().at(name)) {
            const std::string flag = flag_of(spec.key);
            if (spec.is_flag) {
                c.options[spec.key] = c.app->add_flag(flag, spec.help);
            } else {
                c.options[spec.key] = c.app->add_option(flag, c.values[spec.key], spec.help);
            }
        }
        c.app->add_option("--config", c.config_path, "JSON config; flags override its keys");
        c.threads_opt = c.app->add_option("--threads", c.threads,
                                          "worker threads (default BPFREE_THREADS or 1)");
        c.app->add_option("--manifest", c.manifest_path, "manifest path (default OUT.manifest.json)");
    }

    std::string replay_manifest;
    auto* replay = app.add_subcommand("replay", "Rerun a manifest and compare output digests");
    replay->add_option("manifest", replay_manifest, "manifest JSON")->required();

    std::string fault = "none";
    auto* selftest = app.add_subcommand("selftest", "Fast invariant battery");
    selftest->add_option("--inject-fault", fault, "test fixture: param-shift-sign")
        ->group("");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (*replay) {
            return run_replay(replay_manifest);
        }
        if (*selftest) {
            const auto results = run_selftest(parse_fault(fault));
            std::cout << format_report(results);
            for (const auto& r : results) {
                if (!r.passed) {
                    return 1;
                }
            }
            return 0;
        }
        for (auto& [name, c] : cmds) {
            if (*c.app) {
                return run_command(name, c);
            }
        }
    } catch (const NumericalError& e) {
        std::cerr << "numerical error: " << e.what() << "\n";
        return 3;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::out_of_range& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const nlohmann::json::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "failure: " << e.what() << "\n";
        return 1;
    }
    return 2;
}

} // namespace bpfree::cli
