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


#include <cmath>
#include <filesystem>
#include <fstream>
#include <numbers>

#include <gtest/gtest.h>

#include "bpfree/grad/gradient.hpp"
#include "bpfree/init/init.hpp"
#include "bpfree/qml/classifier.hpp"
#include "bpfree/qml/dataset.hpp"
#include "helpers.hpp"

using namespace bpfree;
using testing_support::random_params;

namespace {

std::filesystem::path temp_file(const std::string& name, const std::string& text) {
    const auto path = std::filesystem::temp_directory_path() / ("bpfree_qml_" + name);
    std::ofstream(path, std::ios::binary) << text;
    return path;
}

// Full-batch gradient descent on the logistic loss.
double logistic_accuracy(const Dataset& train, const Dataset& test) {
    const std::size_t d = train.dim();
    std::vector<double> w(d + 1, 0.0);
    for (int it = 0; it < 500; ++it) {
        std::vector<double> g(d + 1, 0.0);
        for (const auto& pt : train.points()) {
            double z = w[d];
            for (std::size_t k = 0; k < d; ++k) {
                z += w[k] * pt.x[k];
            }
            const double s = -pt.label / (1.0 + std::exp(pt.label * z));
            for (std::size_t k = 0; k < d; ++k) {
                g[k] += s * pt.x[k];
            }
            g[d] += s;
        }
        for (std::size_t k = 0; k <= d; ++k) {
            w[k] -= 0.1 * g[k] / static_cast<double>(train.size());
        }
    }
    std::size_t hits = 0;
    for (const auto& pt : test.points()) {
        double z = w[d];
        for (std::size_t k = 0; k < d; ++k) {
            z += w[k] * pt.x[k];
        }
        hits += (z >= 0 ? 1 : -1) == pt.label;
    }
    return static_cast<double>(hits) / static_cast<double>(test.size());
}

} // namespace

TEST(Dataset, LoadTwoRows) {
    const auto path = temp_file("two.csv", "0.1,0.2,+1\n0.3,0.4,-1\n");
    const auto ds = load_csv(path.string());
    EXPECT_EQ(ds.dim(), 2u);
    ASSERT_EQ(ds.size(), 2u);
    EXPECT_EQ(ds[0].label, 1);
    EXPECT_EQ(ds[1].label, -1);
    EXPECT_DOUBLE_EQ(ds[1].x[0], 0.3);
}

TEST(Dataset, ZeroRowNamesLine) {
    const auto path = temp_file("zero.csv", "# header\n0.1,0.2,1\n0,0,-1\n");
    try {
        load_csv(path.string());
        FAIL() << "expected an error";
    } catch (const std::invalid_argument& e) {
        EXPECT_NE(std::string(e.what()).find(":3"), std::string::npos) << e.what();
    }
}

TEST(Dataset, MalformedRows) {
    EXPECT_THROW(parse_csv("0.1,0.2,2\n"), std::invalid_argument);
    EXPECT_THROW(parse_csv("0.1,0.2,1\n0.1,1\n"), std::invalid_argument);
    EXPECT_THROW(parse_csv("0.1,abc,1\n"), std::invalid_argument);
    EXPECT_THROW(parse_csv("0.1,nan,1\n"), std::invalid_argument);
    EXPECT_THROW(parse_csv("# only a comment\n"), std::invalid_argument);
}

TEST(Dataset, RoundTripIsByteIdentical) {
    const auto ds = synth_gaussian(3, 5, 2.0, 8);
    const std::string text = to_csv(ds);
    const auto path = temp_file("rt.csv", text);
    const auto back = load_csv(path.string());
    EXPECT_EQ(to_csv(back), text);
    for (std::size_t i = 0; i < ds.size(); ++i) {
        EXPECT_EQ(back[i].x, ds[i].x);
        EXPECT_EQ(back[i].label, ds[i].label);
    }
}

TEST(Synth, DeterministicAndBalanced) {
    const auto a = synth_gaussian(4, 10, 6.0, 3);
    EXPECT_EQ(to_csv(a), to_csv(synth_gaussian(4, 10, 6.0, 3)));
    EXPECT_NE(to_csv(a), to_csv(synth_gaussian(4, 10, 6.0, 4)));
    ASSERT_EQ(a.size(), 20u);
    for (std::size_t i = 0; i < a.size(); ++i) {
        EXPECT_EQ(a[i].label, i % 2 == 0 ? 1 : -1);
    }
}

TEST(Synth, SeparatedClassesAreLinearlySeparable) {
    const auto [tr, te] = split(synth_gaussian(20, 250, 6.0, 1), 250);
    EXPECT_GE(logistic_accuracy(tr, te), 0.95);
    const auto [tr0, te0] = split(synth_gaussian(20, 250, 0.0, 1), 250);
    EXPECT_LE(logistic_accuracy(tr0, te0), 0.6);
}

TEST(Predict, ZeroParamsMatchOracle) {
    const HeaCircuit c(chain_1d(4), 2);
    const std::vector<double> x{0.6, -0.8};
    const oracle::Mat enc = oracle::cz_layer(oracle::chain(4), 4) *
                            oracle::embed(oracle::rx2(-0.8), 3, 4) *
                            oracle::embed(oracle::rx2(0.6), 2, 4);
    const oracle::Mat u = oracle::hea({std::vector<double>(8, 0.0), std::vector<double>(8, 0.0)},
                                      oracle::chain(4), 4);
    const oracle::Vec psi = u * enc * oracle::basis(4, 0);
    const double y = psi.dot(oracle::pauli("YIII") * psi).real();
    EXPECT_NEAR(predict_prob(c, c.zero_params(), x), (1 + y) / 2, 1e-14);
    const auto pm = random_params(2, 4, 3);
    const oracle::Vec psi2 =
        oracle::hea(testing_support::rows_of(pm), oracle::chain(4), 4) * enc * oracle::basis(4, 0);
    const double y2 = psi2.dot(oracle::pauli("YIII") * psi2).real();
    EXPECT_NEAR(predict_prob(c, pm, x), (1 + y2) / 2, 1e-13);
    EXPECT_NEAR(readout_y0(c, pm, x), y2, 1e-13);
}

TEST(Predict, ProbabilitiesAreComplementaryAndBounded) {
    const HeaCircuit c(chain_1d(5), 3);
    const std::vector<double> x{1.0, 2.0, -0.5};
    for (std::uint64_t s = 0; s < 20; ++s) {
        const auto pm = random_params(3, 5, s);
        const double pp = predict_prob(c, pm, x, 1);
        const double pm1 = predict_prob(c, pm, x, -1);
        EXPECT_GE(pp, 0.0);
        EXPECT_LE(pp, 1.0);
        EXPECT_NEAR(pp + pm1, 1.0, 1e-12);
        EXPECT_EQ(predict_label(c, pm, x), pp >= 0.5 ? 1 : -1);
    }
    EXPECT_THROW(predict_prob(c, c.zero_params(), std::vector<double>{0.0, 0.0}),
                 std::invalid_argument);
}

TEST(Predict, ZeroParamRxGradientIsMinusHalf) {
    const HeaCircuit c(chain_1d(5), 4);
    for (const auto& x : {std::vector<double>{0.3, 0.9}, std::vector<double>{-2.0, 0.1, 1.0}}) {
        const double h = 1e-5;
        for (std::size_t i = 0; i < 4; ++i) {
            auto up = c.zero_params();
            auto dn = c.zero_params();
            up.at(i, 0) = h;
            dn.at(i, 0) = -h;
            const double g = (predict_prob(c, up, x) - predict_prob(c, dn, x)) / (2 * h);
            EXPECT_NEAR(g, -0.5, 1e-8);
        }
    }
}

TEST(Bce, LnTwoAtHalfAndZeroWhenCertain) {
    const HeaCircuit c(chain_1d(4), 1);
    const std::vector<DataPoint> batch{{{1.0, 0.5}, 1}, {{-0.2, 0.7}, -1}, {{0.3, 0.3}, 1}};
    const auto [l0, g0] = bce_loss(batch, c, c.zero_params());
    EXPECT_NEAR(l0, std::log(2.0), 1e-14);
    auto pm = c.zero_params();
    pm.at(0, 0) = -std::numbers::pi / 2;
    const std::vector<DataPoint> pos{{{1.0, 0.5}, 1}, {{0.3, 0.3}, 1}};
    const auto [l1, g1] = bce_loss(pos, c, pm);
    EXPECT_NEAR(l1, 0.0, 1e-12);
    EXPECT_GE(l1, 0.0);
    EXPECT_THROW(bce_loss(std::span<const DataPoint>(), c, pm), std::invalid_argument);
}

TEST(Bce, GradientMatchesFiniteDifferences) {
    const HeaCircuit c(chain_1d(4), 2);
    const auto pm = random_params(2, 4, 12, -1.0, 1.0);
    const std::vector<DataPoint> batch{{{1.0, 0.5}, 1}, {{-0.2, 0.7}, -1}, {{0.3, -0.3}, 1}};
    for (int sign : {1, -1}) {
        const auto [loss, g] = bce_loss(batch, c, pm, sign);
        EXPECT_GT(loss, 0.0);
        const double h = 1e-5;
        for (std::size_t i = 0; i < pm.rows(); ++i) {
            for (std::size_t j = 0; j < pm.cols(); ++j) {
                auto up = pm;
                auto dn = pm;
                up.at(i, j) += h;
                dn.at(i, j) -= h;
                const double fd = (bce_loss(batch, c, up, sign).first -
                                   bce_loss(batch, c, dn, sign).first) /
                                  (2 * h);
                EXPECT_NEAR(g.at(i, j), fd, 1e-6);
            }
        }
    }
}

TEST(Bce, ThreadCountDoesNotChangeResult) {
    const HeaCircuit c(chain_1d(4), 2);
    const auto pm = random_params(2, 4, 2);
    const auto ds = synth_gaussian(2, 8, 1.0, 3);
    const auto a = bce_loss(ds.points(), c, pm, 1, 1);
    const auto b = bce_loss(ds.points(), c, pm, 1, 3);
    EXPECT_EQ(a.first, b.first);
    EXPECT_EQ(a.second, b.second);
}

TEST(Train, ZeroEpochsAndShape) {
    const auto [tr, te] = split(synth_gaussian(3, 10, 4.0, 1), 10);
    TrainConfig cfg;
    cfg.n_qubits = 4;
    cfg.depth = 2;
    cfg.batch = 5;
    cfg.epochs = 0;
    const auto rec = train(tr, te, cfg, InitScheme::small());
    ASSERT_EQ(rec.epochs.size(), 1u);
    EXPECT_TRUE(rec.steps.empty());
    EXPECT_TRUE(std::isnan(rec.epochs[0].mean_train_loss));
    cfg.epochs = 2;
    const auto rec2 = train(tr, te, cfg, InitScheme::small());
    EXPECT_EQ(rec2.steps.size(), 4u);
    EXPECT_EQ(rec2.epochs.size(), 3u);
    EXPECT_EQ(rec2.epochs[0].test_accuracy, rec.epochs[0].test_accuracy);
}

TEST(Train, ShuffleDeterminism) {
    const auto o = epoch_order(50, 7, 1);
    EXPECT_EQ(o, epoch_order(50, 7, 1));
    EXPECT_NE(o, epoch_order(50, 7, 2));
    auto sorted = o;
    std::sort(sorted.begin(), sorted.end());
    for (std::size_t i = 0; i < 50; ++i) {
        EXPECT_EQ(sorted[i], i);
    }
    const auto [tr, te] = split(synth_gaussian(3, 12, 4.0, 2), 12);
    TrainConfig cfg;
    cfg.n_qubits = 4;
    cfg.depth = 2;
    cfg.batch = 4;
    cfg.epochs = 2;
    cfg.shuffle_seed = 5;
    const auto a = train(tr, te, cfg, InitScheme::random());
    const auto b = train(tr, te, cfg, InitScheme::random());
    ASSERT_EQ(a.steps.size(), b.steps.size());
    for (std::size_t i = 0; i < a.steps.size(); ++i) {
        EXPECT_EQ(a.steps[i].loss, b.steps[i].loss);
    }
    EXPECT_EQ(a.final_params, b.final_params);
}

TEST(Train, LabelFlipSymmetry) {
    const auto ds = synth_gaussian(3, 12, 3.0, 4);
    std::vector<DataPoint> flipped = ds.points();
    for (auto& p : flipped) {
        p.label = -p.label;
    }
    const Dataset fds("flipped", 3, flipped);
    const auto [tr, te] = split(ds, 12);
    const auto [ftr, fte] = split(fds, 12);
    TrainConfig cfg;
    cfg.n_qubits = 4;
    cfg.depth = 2;
    cfg.batch = 4;
    cfg.epochs = 2;
    const auto a = train(tr, te, cfg, InitScheme::random());
    cfg.readout_sign = -1;
    const auto b = train(ftr, fte, cfg, InitScheme::random());
    ASSERT_EQ(a.steps.size(), b.steps.size());
    for (std::size_t i = 0; i < a.steps.size(); ++i) {
        EXPECT_EQ(a.steps[i].loss, b.steps[i].loss);
    }
    for (std::size_t e = 0; e < a.epochs.size(); ++e) {
        EXPECT_EQ(a.epochs[e].test_accuracy, b.epochs[e].test_accuracy);
    }
}

TEST(Train, IndistinguishableClassesStayNearChance) {
    const auto [tr, te] = split(synth_gaussian(4, 250, 0.0, 6), 250);
    TrainConfig cfg;
    cfg.n_qubits = 6;
    cfg.depth = 4;
    cfg.batch = 25;
    cfg.epochs = 3;
    cfg.threads = 2;
    const auto rec = train(tr, te, cfg, InitScheme::small());
    EXPECT_LE(rec.epochs.back().test_accuracy, 0.6);
}

TEST(Train, ConfigValidation) {
    TrainConfig cfg;
    cfg.n_qubits = 4;
    cfg.batch = 0;
    EXPECT_THROW(cfg.validate(), std::invalid_argument);
    cfg.batch = 5;
    cfg.lr = 0.0;
    EXPECT_THROW(cfg.validate(), std::invalid_argument);
    cfg.lr = 0.1;
    cfg.readout_sign = 2;
    EXPECT_THROW(cfg.validate(), std::invalid_argument);
    const auto [tr, te] = split(synth_gaussian(5, 10, 4.0, 1), 10);
    TrainConfig small_n;
    small_n.n_qubits = 4;
    small_n.depth = 1;
    small_n.batch = 5;
    EXPECT_THROW(train(tr, te, small_n, InitScheme::small()), std::invalid_argument);
    small_n.n_qubits = 6;
    small_n.batch = 11;
    EXPECT_THROW(train(tr, te, small_n, InitScheme::small()), std::invalid_argument);
}
