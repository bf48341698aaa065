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


// Acceptance battery. Prints one "[PASS]" or "[FAIL]" line per criterion;
// indented lines carry the measured values behind each verdict.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <numbers>
#include <numeric>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "bpfree/cli/commands.hpp"
#include "bpfree/cli/manifest.hpp"
#include "bpfree/grad/commutator.hpp"
#include "bpfree/grad/gradient.hpp"
#include "bpfree/grad/scan.hpp"
#include "bpfree/init/init.hpp"
#include "bpfree/init/random.hpp"
#include "bpfree/mbl/diagnostics.hpp"
#include "bpfree/qcore/parallel.hpp"
#include "bpfree/qml/classifier.hpp"
#include "bpfree/qml/dataset.hpp"
#include "bpfree/transform/generator_circuit.hpp"
#include "bpfree/vqe/ground_energy.hpp"
#include "bpfree/vqe/vqe.hpp"
#include "dense_oracle.hpp"

using namespace bpfree;

namespace {

// Criterion 1.
constexpr double kAnchorTol = 1e-10;
// Criterion 2.
constexpr int kEngineInstances = 100;
constexpr double kShiftTol = 1e-10;
constexpr double kFdTol = 1e-6;
constexpr double kFdStep = 1e-5;
// Criterion 3.
constexpr int kTransformDraws = 50;
constexpr double kTransformTol = 1e-10;
// Criterion 4.
constexpr int kCommutatorInstances = 50;
constexpr double kCommutatorTol = 1e-10;
// Criterion 5.
constexpr std::size_t kScanSamples = 256;
constexpr std::size_t kScanDepth = 32;
constexpr double kSmallRatioMax = 2.0;
constexpr double kMblLocalRatioMax = 3.0;
constexpr double kMblGlobalSlopeMax = -0.1;
constexpr double kRandomSlopeMax = -0.2;
constexpr std::uint64_t kScanSeed = 2026;
// Criterion 6.
constexpr std::size_t kMblN = 10;
constexpr std::size_t kMblRealizations = 200;
constexpr double kLocalizedTheta = 0.05;
constexpr double kChaoticTheta = 0.35;
constexpr double kPoissonLo = 0.36;
constexpr double kPoissonHi = 0.42;
constexpr double kGoeLo = 0.50;
constexpr double kGoeHi = 0.56;
constexpr double kPageFraction = 0.85;
constexpr double kPeakLo = 0.08;
constexpr double kPeakHi = 0.20;
constexpr std::uint64_t kMblSeed = 7;
// Criterion 7.
constexpr std::size_t kVqeN = 12;
constexpr std::size_t kVqeP = 64;
constexpr std::size_t kVqeSteps = 2000;
constexpr double kVqeTarget = 1e-3;
constexpr std::size_t kVqeTargetSeeds = 3;
constexpr double kGroundAgreeTol = 1e-9;
// Criterion 8.
constexpr std::size_t kQmlN = 12;
constexpr std::size_t kQmlP = 16;
constexpr std::size_t kQmlD = 10;
constexpr std::size_t kQmlPerClass = 250;
constexpr double kQmlSeparation = 6.0;
constexpr std::size_t kQmlBatch = 25;
constexpr double kQmlLr = 0.01;
constexpr std::size_t kQmlEpochs = 10;
constexpr double kQmlAccuracy = 0.95;
constexpr std::size_t kQmlLossEpoch = 3;
constexpr std::size_t kQmlLossSeeds = 3;

const std::vector<std::uint64_t> kSeeds{1, 2, 3, 4};

struct Verdict {
    bool pass = false;
    std::string summary;
    std::vector<std::string> details;
};

std::string fmt(const char* spec, double x) {
    char buf[64];
    std::snprintf(buf, sizeof buf, spec, x);
    return buf;
}

double max_abs_diff(const GradResult& a, const GradResult& b) {
    double m = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        m = std::max(m, std::abs(a.values()[i] - b.values()[i]));
    }
    return m;
}

ParamMatrix uniform_params(Rng& rng, std::size_t p, std::size_t n) {
    ParamMatrix pm(p, 2 * n);
    for (double& x : pm.values()) {
        x = rng.uniform(0.0, 2.0 * std::numbers::pi);
    }
    return pm;
}

std::vector<std::vector<double>> rows_of(const ParamMatrix& pm) {
    std::vector<std::vector<double>> out;
    for (std::size_t i = 0; i < pm.rows(); ++i) {
        out.emplace_back(pm.row(i).begin(), pm.row(i).end());
    }
    return out;
}

// Least-squares slope of y against x.
double slope(const std::vector<double>& x, const std::vector<double>& y) {
    const double n = static_cast<double>(x.size());
    const double mx = std::accumulate(x.begin(), x.end(), 0.0) / n;
    const double my = std::accumulate(y.begin(), y.end(), 0.0) / n;
    double sxy = 0.0;
    double sxx = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        sxy += (x[i] - mx) * (y[i] - my);
        sxx += (x[i] - mx) * (x[i] - mx);
    }
    return sxy / sxx;
}

Verdict criterion_1() {
    Verdict v;
    double worst = 0.0;
    std::size_t checked = 0;
    for (std::size_t n : {4, 8, 12}) {
        for (std::size_t p : {2, 33}) {
            const HeaCircuit c(chain_1d(n), p);
            for (auto kind : {ObservableKind::LocalY1, ObservableKind::GlobalY1Z}) {
                const auto obs = make_observable(kind, n);
                const auto ga = grad_adjoint(c, c.zero_params(), c.initial(), obs);
                const auto gp = grad_param_shift(c, c.zero_params(), c.initial(), obs);
                for (std::size_t i = 0; i < p; ++i) {
                    worst = std::max({worst, std::abs(ga.at(i, 0) + 1.0),
                                      std::abs(gp.at(i, 0) + 1.0)});
                    checked += 2;
                }
            }
        }
    }
    v.pass = worst <= kAnchorTol;
    v.summary = "zero-parameter anchor: " + std::to_string(checked) +
                " entries, max |dC + 1| = " + fmt("%.2e", worst) + " (tol " +
                fmt("%.0e", kAnchorTol) + ")";
    return v;
}

Verdict criterion_2() {
    Verdict v;
    Rng rng(sub_seed(0xACCE5502, 0));
    double worst_ps = 0.0;
    double worst_fd = 0.0;
    for (int t = 0; t < kEngineInstances; ++t) {
        const std::size_t n = 2 + rng.below(7);
        const std::size_t p = 1 + rng.below(4);
        const auto init = rng.below(2) == 0 ? InitialState::Zero : InitialState::YPlus;
        const HeaCircuit c(rng.below(3) == 0 && n >= 3 ? chain_1d(n, true) : chain_1d(n), p, init);
        const auto pm = uniform_params(rng, p, n);
        const auto obs = make_observable(
            t % 2 == 0 ? ObservableKind::LocalY1 : ObservableKind::GlobalY1Z, n);
        const auto ga = grad_adjoint(c, pm, c.initial(), obs);
        worst_ps = std::max(worst_ps, max_abs_diff(ga, grad_param_shift(c, pm, c.initial(), obs)));
        worst_fd = std::max(worst_fd, max_abs_diff(ga, grad_fd(c, pm, c.initial(), obs, kFdStep)));
    }
    v.pass = worst_ps <= kShiftTol && worst_fd <= kFdTol;
    v.summary = "gradient engines: " + std::to_string(kEngineInstances) +
                " instances, adjoint vs shift " + fmt("%.2e", worst_ps) + " (tol " +
                fmt("%.0e", kShiftTol) + "), adjoint vs fd " + fmt("%.2e", worst_fd) + " (tol " +
                fmt("%.0e", kFdTol) + ")";
    return v;
}

Verdict criterion_3() {
    Verdict v;
    double worst_lib = 0.0;
    double worst_oracle = 0.0;
    int draws = 0;
    for (std::size_t n = 2; n <= 5; ++n) {
        for (std::size_t p = 1; p <= 4; ++p) {
            const HeaCircuit c(chain_1d(n), p);
            const auto gc = remove_cz(c);
            Rng rng(sub_seed(0xACCE5503, n * 16 + p));
            for (int d = 0; d < kTransformDraws; ++d) {
                const auto pm = uniform_params(rng, p, n);
                worst_lib = std::max(worst_lib, equivalence_residual(c, pm));
                const oracle::Mat src = oracle::hea(rows_of(pm), oracle::chain(n), n);
                worst_oracle =
                    std::max(worst_oracle, phase_aligned_distance(src, dense_unitary(gc, pm)));
                ++draws;
            }
        }
    }
    v.pass = worst_lib < kTransformTol && worst_oracle < kTransformTol;
    v.summary = "transform equivalence: " + std::to_string(draws) +
                " draws (N 2..5, p 1..4), residual " + fmt("%.2e", worst_lib) +
                ", against Kronecker oracle " + fmt("%.2e", worst_oracle) + " (tol " +
                fmt("%.0e", kTransformTol) + ")";
    return v;
}

Verdict criterion_4() {
    Verdict v;
    Rng rng(sub_seed(0xACCE5504, 0));
    const auto lat = chain_1d(4);
    double worst_matrix = 0.0;
    double worst_grad = 0.0;
    for (int t = 0; t < kCommutatorInstances; ++t) {
        for (auto kind : {ObservableKind::LocalY1, ObservableKind::GlobalY1Z}) {
            const double theta = rng.uniform(-std::numbers::pi, std::numbers::pi);
            std::vector<double> row(8, theta);
            for (std::size_t q = 4; q < 8; ++q) {
                row[q] = rng.uniform(-std::numbers::pi, std::numbers::pi);
            }
            const oracle::Mat vb = oracle::block(row, oracle::chain(4), 4);
            const oracle::Mat o =
                oracle::pauli(kind == ObservableKind::LocalY1 ? "YIII" : "YZZZ");
            const oracle::Mat m = vb.adjoint() * o * vb;
            const oracle::Mat x0 = oracle::pauli("XIII");
            const oracle::Mat want = oracle::cplx(0, 0.5) * (x0 * m - m * x0);
            const auto sym = commutator_oracle(lat, row, kind);
            worst_matrix = std::max(worst_matrix, (dense_matrix(sym) - want).cwiseAbs().maxCoeff());

            // Same insertion read off as a gradient entry of a two-block circuit.
            const HeaCircuit c(lat, 2);
            ParamMatrix pm(2, 8);
            for (std::size_t j = 0; j < 8; ++j) {
                pm.at(0, j) = rng.uniform(-std::numbers::pi, std::numbers::pi);
                pm.at(1, j) = row[j];
            }
            const auto g = grad_adjoint(c, pm, c.initial(), make_observable(kind, 4));
            const auto psi = apply_block(c.initial(), c, 0, pm);
            worst_grad = std::max(worst_grad, std::abs(expectation(psi, sym) - g.at(1, 0)));
        }
    }
    v.pass = worst_matrix <= kCommutatorTol && worst_grad <= kCommutatorTol;
    v.summary = "commutator oracle: " + std::to_string(2 * kCommutatorInstances) +
                " instances (N=4, both observables), dense conjugation " +
                fmt("%.2e", worst_matrix) + ", gradient entry " + fmt("%.2e", worst_grad) +
                " (tol " + fmt("%.0e", kCommutatorTol) + ")";
    return v;
}

std::vector<ScanRecord> run_scan(const InitScheme& scheme, ObservableKind kind,
                                 std::vector<std::size_t> ns) {
    ScanConfig cfg;
    cfg.scheme = scheme;
    cfg.n_list = std::move(ns);
    cfg.p_list = {kScanDepth};
    cfg.observable = kind;
    cfg.samples = kScanSamples;
    cfg.master_seed = kScanSeed;
    cfg.threads = default_thread_count();
    return scan(cfg);
}

Verdict criterion_5() {
    Verdict v;
    const std::vector<std::size_t> ns{6, 8, 10, 12};
    auto describe = [&](const std::string& label, const std::vector<ScanRecord>& recs) {
        std::string s = label + ":";
        for (const auto& r : recs) {
            s += " N=" + std::to_string(r.n) + " " + fmt("%.4e", r.mean_sq_grad) + "+-" +
                 fmt("%.1e", r.std_error);
        }
        v.details.push_back(s);
    };
    auto ratio = [](const std::vector<ScanRecord>& recs) {
        double lo = INFINITY;
        double hi = 0.0;
        for (const auto& r : recs) {
            lo = std::min(lo, r.mean_sq_grad);
            hi = std::max(hi, r.mean_sq_grad);
        }
        return hi / lo;
    };
    auto log_slope = [](const std::vector<ScanRecord>& recs) {
        std::vector<double> x;
        std::vector<double> y;
        for (const auto& r : recs) {
            x.push_back(static_cast<double>(r.n));
            y.push_back(std::log(r.mean_sq_grad));
        }
        return slope(x, y);
    };

    const auto small_local = run_scan(InitScheme::small(), ObservableKind::LocalY1, ns);
    const auto small_global = run_scan(InitScheme::small(), ObservableKind::GlobalY1Z, ns);
    const auto mbl_local = run_scan(InitScheme::mbl(), ObservableKind::LocalY1, ns);
    const auto mbl_global = run_scan(InitScheme::mbl(), ObservableKind::GlobalY1Z, ns);
    const auto random_local = run_scan(InitScheme::random(), ObservableKind::LocalY1, {6, 8, 10});
    describe("small local_y1", small_local);
    describe("small global_y1z", small_global);
    describe("mbl local_y1", mbl_local);
    describe("mbl global_y1z", mbl_global);
    describe("random local_y1", random_local);

    const double r_sl = ratio(small_local);
    const double r_sg = ratio(small_global);
    const double r_ml = ratio(mbl_local);
    const double s_mg = log_slope(mbl_global);
    const double s_rl = log_slope(random_local);
    const bool ok_sl = r_sl <= kSmallRatioMax;
    const bool ok_sg = r_sg <= kSmallRatioMax;
    const bool ok_ml = r_ml <= kMblLocalRatioMax;
    const bool ok_mg = s_mg <= kMblGlobalSlopeMax;
    const bool ok_rl = s_rl <= kRandomSlopeMax;
    v.pass = ok_sl && ok_sg && ok_ml && ok_mg && ok_rl;
    v.summary = "gradient scaling (p=32, 256 samples): small max/min local " + fmt("%.3f", r_sl) +
                " global " + fmt("%.3f", r_sg) + " (<= 2), mbl local max/min " +
                fmt("%.3f", r_ml) + " (<= 3), mbl global slope " + fmt("%.3f", s_mg) +
                " (<= -0.1), random local slope " + fmt("%.3f", s_rl) + " (<= -0.2)";
    return v;
}

Verdict criterion_6() {
    Verdict v;
    std::vector<double> grid;
    for (int k = 1; k <= 15; ++k) {
        grid.push_back(0.02 * k);
    }
    std::vector<double> thetas = grid;
    thetas.push_back(kLocalizedTheta);
    thetas.push_back(kChaoticTheta);
    std::sort(thetas.begin(), thetas.end());
    thetas.erase(std::unique(thetas.begin(), thetas.end(),
                             [](double a, double b) { return std::abs(a - b) < 1e-12; }),
                 thetas.end());

    PhaseScanConfig cfg;
    cfg.n_list = {kMblN};
    cfg.theta_over_pi = thetas;
    cfg.realizations = kMblRealizations;
    cfg.master_seed = kMblSeed;
    cfg.threads = default_thread_count();
    const auto pts = phase_scan(cfg);

    auto at = [&](double t) -> const MblPoint& {
        return *std::find_if(pts.begin(), pts.end(),
                             [&](const MblPoint& p) { return std::abs(p.theta_over_pi - t) < 1e-12; });
    };
    for (const auto& p : pts) {
        v.details.push_back("theta/pi=" + fmt("%.2f", p.theta_over_pi) + " S=" +
                            fmt("%.4f", p.mean_entropy) + "+-" + fmt("%.4f", p.entropy_stderr) +
                            " Var=" + fmt("%.4f", p.entropy_variance) + " r=" +
                            fmt("%.4f", p.gap_ratio) + "+-" + fmt("%.4f", p.gap_ratio_stderr));
    }
    double peak_theta = 0.0;
    double peak_var = -1.0;
    for (double t : grid) {
        const auto& p = at(t);
        if (p.entropy_variance > peak_var) {
            peak_var = p.entropy_variance;
            peak_theta = t;
        }
    }
    const double r_loc = at(kLocalizedTheta).gap_ratio;
    const double r_chaos = at(kChaoticTheta).gap_ratio;
    const double s_chaos = at(kChaoticTheta).mean_entropy;
    const double page = page_entropy(kMblN);
    const bool ok_loc = r_loc >= kPoissonLo && r_loc <= kPoissonHi;
    const bool ok_chaos = r_chaos >= kGoeLo && r_chaos <= kGoeHi;
    const bool ok_s = s_chaos >= kPageFraction * page;
    const bool ok_peak = peak_theta >= kPeakLo - 1e-12 && peak_theta <= kPeakHi + 1e-12;
    v.pass = ok_loc && ok_chaos && ok_s && ok_peak;
    v.summary = "MBL diagnostics (N=10, 200 realizations): <r>(0.05) = " + fmt("%.4f", r_loc) +
                " in [0.36, 0.42], <r>(0.35) = " + fmt("%.4f", r_chaos) +
                " in [0.50, 0.56], S(0.35) = " + fmt("%.4f", s_chaos) + " >= " +
                fmt("%.4f", kPageFraction * page) + ", variance peak at " +
                fmt("%.2f", peak_theta) + " in [0.08, 0.20]";
    return v;
}

Verdict criterion_7() {
    Verdict v;
    struct Scheme {
        std::string name;
        InitScheme scheme;
    };
    const std::vector<Scheme> schemes{{"small", InitScheme::small()},
                                      {"mbl", InitScheme::mbl()},
                                      {"random", InitScheme::random()}};
    bool ok = true;
    std::string summary = "VQE (N=12, p=64, 2000 steps, 4 seeds):";
    for (Model model : {Model::H1, Model::H2}) {
        VqeConfig cfg;
        cfg.model = model;
        cfg.n = kVqeN;
        cfg.p = kVqeP;
        cfg.steps = kVqeSteps;
        const auto h = build_model(model, kVqeN, cfg.field);
        const double e_lanczos = ground_energy_lanczos(h);
        const double e_dense = ground_energy_dense(h);
        v.details.push_back(std::string(to_string(model)) + " E_GS lanczos " +
                            fmt("%.12f", e_lanczos) + " dense " + fmt("%.12f", e_dense));
        ok = ok && std::abs(e_lanczos - e_dense) <= kGroundAgreeTol;
        cfg.e_gs = e_dense;
        std::map<std::string, double> mean;
        for (const auto& s : schemes) {
            cfg.scheme = s.scheme;
            const auto runs = run_vqe_ensemble(cfg, kSeeds, default_thread_count());
            double sum = 0.0;
            std::size_t hits = 0;
            std::string line = std::string(to_string(model)) + " " + s.name + " final E~:";
            for (const auto& r : runs) {
                const double e = r.trace.back().normalized_energy;
                sum += e;
                hits += e <= kVqeTarget;
                line += " " + fmt("%.3e", e);
            }
            mean[s.name] = sum / static_cast<double>(runs.size());
            line += " mean " + fmt("%.3e", mean[s.name]);
            v.details.push_back(line);
            if (model == Model::H2 && s.name == "small") {
                ok = ok && hits >= kVqeTargetSeeds;
                summary += " H2 small seeds with E~ <= 1e-3: " + std::to_string(hits) + "/4;";
            }
        }
        const bool order = mean["small"] < mean["random"] && mean["mbl"] < mean["random"];
        ok = ok && order;
        summary += std::string(" ") + std::string(to_string(model)) + " mean small " +
                   fmt("%.2e", mean["small"]) + ", mbl " + fmt("%.2e", mean["mbl"]) +
                   ", random " + fmt("%.2e", mean["random"]) + (order ? " (ordered);" : " (NOT ordered);");
    }
    summary.pop_back();
    v.pass = ok;
    v.summary = summary;
    return v;
}

Verdict criterion_8() {
    Verdict v;
    std::size_t small_ok = 0;
    std::size_t loss_wins = 0;
    double worst_acc = 1.0;
    for (std::uint64_t seed : kSeeds) {
        const auto [train_set, test_set] =
            split(synth_gaussian(kQmlD, kQmlPerClass, kQmlSeparation, seed), kQmlPerClass);
        TrainConfig cfg;
        cfg.n_qubits = kQmlN;
        cfg.depth = kQmlP;
        cfg.batch = kQmlBatch;
        cfg.epochs = kQmlEpochs;
        cfg.lr = kQmlLr;
        cfg.init_seed = sub_seed(seed, 0);
        cfg.shuffle_seed = sub_seed(seed, 1);
        cfg.threads = default_thread_count();
        const auto small = train(train_set, test_set, cfg, InitScheme::small());
        const auto random = train(train_set, test_set, cfg, InitScheme::random());
        const double acc = small.epochs.back().test_accuracy;
        worst_acc = std::min(worst_acc, acc);
        small_ok += acc >= kQmlAccuracy;
        const double ls = small.epochs[kQmlLossEpoch].mean_train_loss;
        const double lr = random.epochs[kQmlLossEpoch].mean_train_loss;
        loss_wins += ls < lr;
        std::string acc_small;
        std::string acc_random;
        for (std::size_t e = 0; e < small.epochs.size(); ++e) {
            acc_small += fmt(" %.3f", small.epochs[e].test_accuracy);
            acc_random += fmt(" %.3f", random.epochs[e].test_accuracy);
        }
        v.details.push_back("seed " + std::to_string(seed) + " epoch-3 loss small " +
                            fmt("%.4f", ls) + " random " + fmt("%.4f", lr));
        v.details.push_back("seed " + std::to_string(seed) + " accuracy small:" + acc_small);
        v.details.push_back("seed " + std::to_string(seed) + " accuracy random:" + acc_random);
    }
    const bool ok_acc = small_ok == kSeeds.size();
    const bool ok_loss = loss_wins >= kQmlLossSeeds;
    v.pass = ok_acc && ok_loss;
    v.summary = "QML (N=12, p=16, d=10, 10 epochs): small final accuracy >= 0.95 on " +
                std::to_string(small_ok) + "/4 seeds (min " + fmt("%.3f", worst_acc) +
                "), epoch-3 loss small < random on " + std::to_string(loss_wins) +
                "/4 seeds (need >= 3)";
    return v;
}

nlohmann::json repro_config(const std::string& cmd, const std::string& out) {
    using nlohmann::json;
    if (cmd == "grad-scan") {
        return {{"n", "4,6"}, {"p", "3,5"}, {"init", "mbl"}, {"samples", 16}, {"seed", 3},
                {"out", out}};
    }
    if (cmd == "rz-scan") {
        return {{"n", 5}, {"p", "2,6"}, {"samples", 12}, {"seed", 4}, {"out", out}};
    }
    if (cmd == "vqe") {
        return {{"model", "h2"}, {"n", 6}, {"p", 4}, {"steps", 40}, {"seed", 5},
                {"params_out", out + ".params.json"}, {"out", out}};
    }
    if (cmd == "mbl-scan") {
        return {{"n", "4,6"}, {"theta", "0.05,0.35"}, {"realizations", 6}, {"seed", 6},
                {"out", out}};
    }
    if (cmd == "qml") {
        return {{"n", 6}, {"p", 3}, {"epochs", 2}, {"batch", 10}, {"synth_d", 4},
                {"synth_per_class", 30}, {"seed", 7}, {"out", out}};
    }
    if (cmd == "transform") {
        return {{"n", 4}, {"p", 3}, {"init", "random"}, {"seed", 8}, {"verify", true},
                {"out", out}};
    }
    return {{"n", 4}, {"p", 3}, {"slot", "2,0"}, {"split_block", 1}, {"init", "small"},
            {"seed", 9}, {"out", out}};
}

int run_cli(std::vector<std::string> args) {
    args.insert(args.begin(), "bpfree");
    std::vector<char*> argv;
    for (auto& a : args) {
        argv.push_back(a.data());
    }
    std::ostringstream sink;
    auto* old = std::cout.rdbuf(sink.rdbuf());
    const int rc = cli::cli_main(static_cast<int>(argv.size()), argv.data());
    std::cout.rdbuf(old);
    return rc;
}

Verdict criterion_9() {
    namespace fs = std::filesystem;
    Verdict v;
    const fs::path dir = fs::temp_directory_path() / "bpfree_acceptance_repro";
    fs::remove_all(dir);
    fs::create_directories(dir);
    std::size_t ok = 0;
    std::size_t total = 0;
    for (const auto& cmd : cli::command_names()) {
        std::vector<std::vector<std::string>> per_thread;
        for (std::size_t threads : {1, 2}) {
            ++total;
            const std::string out = (dir / (cmd + "_t" + std::to_string(threads) + ".out")).string();
            auto raw = repro_config(cmd, out);
            raw["threads"] = threads;
            const fs::path cfg_path = out + ".config.json";
            {
                std::ofstream(cfg_path) << raw.dump();
            }
            const int rc_run = run_cli({cmd, "--config", cfg_path.string()});
            const std::string manifest = out + ".manifest.json";
            // Route one: the replay subcommand.
            const int rc_replay = rc_run == 0 ? run_cli({"replay", manifest}) : -1;
            // Route two: digests of the files on disk and of a fresh in-memory run.
            bool same = rc_run == 0;
            std::vector<std::string> digests;
            if (same) {
                const auto m = cli::manifest_from_json(
                    nlohmann::json::parse(cli::read_file(manifest)));
                const auto res = cli::execute(m.command, cli::resolve_config(m.command, m.config));
                same = res.outputs.size() == m.outputs.size();
                for (std::size_t i = 0; same && i < m.outputs.size(); ++i) {
                    same = cli::sha256_hex(cli::read_file(m.outputs[i].path)) == m.outputs[i].sha256 &&
                           cli::digest_of(res.outputs[i]).sha256 == m.outputs[i].sha256;
                    digests.push_back(m.outputs[i].sha256);
                }
            }
            per_thread.push_back(digests);
            const bool pass = rc_run == 0 && rc_replay == 0 && same;
            ok += pass;
            v.details.push_back(cmd + " threads=" + std::to_string(threads) + ": run " +
                                std::to_string(rc_run) + ", replay " + std::to_string(rc_replay) +
                                ", digests " + (same ? "identical" : "DIFFERENT"));
        }
        ++total;
        const bool invariant = per_thread[0] == per_thread[1] && !per_thread[0].empty();
        ok += invariant;
        v.details.push_back(cmd + " threads 1 vs 2: outputs " +
                            (invariant ? "identical" : "DIFFERENT"));
    }
    v.pass = ok == total;
    v.summary = "reproducibility: " + std::to_string(ok) + "/" + std::to_string(total) +
                " checks passed (replay, on-disk and re-executed digests, thread-count invariance)";
    return v;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"bpfree acceptance battery"};
    std::vector<int> only;
    app.add_option("--only", only, "criteria to run (default all)")->check(CLI::Range(1, 9));
    CLI11_PARSE(app, argc, argv);
    if (only.empty()) {
        only = {1, 2, 3, 4, 5, 6, 7, 8, 9};
    }
    const std::vector<std::function<Verdict()>> table{criterion_1, criterion_2, criterion_3,
                                                      criterion_4, criterion_5, criterion_6,
                                                      criterion_7, criterion_8, criterion_9};
    int failures = 0;
    for (int k : only) {
        const auto t0 = std::chrono::steady_clock::now();
        Verdict v;
        try {
            v = table[static_cast<std::size_t>(k - 1)]();
        } catch (const std::exception& e) {
            v.pass = false;
            v.summary = std::string("exception: ") + e.what();
        }
        const double secs =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        for (const auto& d : v.details) {
            std::cout << "    " << d << "\n";
        }
        std::cout << (v.pass ? "[PASS] " : "[FAIL] ") << "criterion " << k << " " << v.summary
                  << " [" << fmt("%.1f", secs) << " s]" << std::endl;
        failures += v.pass ? 0 : 1;
    }
    return failures == 0 ? 0 : 1;
}
