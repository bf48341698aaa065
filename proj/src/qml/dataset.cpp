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


#include "bpfree/qml/dataset.hpp"

#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "bpfree/init/random.hpp"
#include "bpfree/qcore/format.hpp"

namespace bpfree {

Dataset::Dataset(std::string name, std::size_t dim, std::vector<DataPoint> points)
    : name_(std::move(name)), dim_(dim), points_(std::move(points)) {
    if (dim_ == 0) {
        throw std::invalid_argument("Dataset: dimension must be positive");
    }
    for (std::size_t i = 0; i < points_.size(); ++i) {
        const auto& p = points_[i];
        if (p.x.size() != dim_) {
            throw std::invalid_argument("Dataset: point " + std::to_string(i) +
                                        " has the wrong dimension");
        }
        if (p.label != 1 && p.label != -1) {
            throw std::invalid_argument("Dataset: point " + std::to_string(i) +
                                        " has a label other than +1/-1");
        }
        double ss = 0.0;
        for (double v : p.x) {
            if (!std::isfinite(v)) {
                throw std::invalid_argument("Dataset: point " + std::to_string(i) +
                                            " has a non-finite entry");
            }
            ss += v * v;
        }
        if (ss == 0.0) {
            throw std::invalid_argument("Dataset: point " + std::to_string(i) + " has zero norm");
        }
    }
}

Dataset parse_csv(const std::string& text, const std::string& name) {
    std::istringstream in(text);
    std::string line;
    std::size_t line_no = 0;
    std::size_t dim = 0;
    std::vector<DataPoint> points;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') {
            line.pop_back();
        }
        if (line.empty() || line.front() == '#') {
            continue;
        }
        std::vector<std::string> fields;
        std::size_t start = 0;
        while (true) {
            const std::size_t comma = line.find(',', start);
            std::string f = line.substr(start, comma == std::string::npos ? comma : comma - start);
            const auto b = f.find_first_not_of(" \t");
            const auto e = f.find_last_not_of(" \t");
            fields.push_back(b == std::string::npos ? "" : f.substr(b, e - b + 1));
            if (comma == std::string::npos) {
                break;
            }
            start = comma + 1;
        }
        const std::string where = name + ":" + std::to_string(line_no);
        if (fields.size() < 2) {
            throw std::invalid_argument(where + ": need at least one value and a label");
        }
        DataPoint p;
        for (std::size_t k = 0; k + 1 < fields.size(); ++k) {
            double v = 0.0;
            if (!parse_double(fields[k], v) || !std::isfinite(v)) {
                throw std::invalid_argument(where + ": cannot parse '" + fields[k] + "'");
            }
            p.x.push_back(v);
        }
        const std::string& lab = fields.back();
        if (lab == "1" || lab == "+1") {
            p.label = 1;
        } else if (lab == "-1") {
            p.label = -1;
        } else {
            throw std::invalid_argument(where + ": label must be +1 or -1, got '" + lab + "'");
        }
        if (dim == 0) {
            dim = p.x.size();
        } else if (p.x.size() != dim) {
            throw std::invalid_argument(where + ": expected " + std::to_string(dim) +
                                        " values, got " + std::to_string(p.x.size()));
        }
        double ss = 0.0;
        for (double v : p.x) {
            ss += v * v;
        }
        if (ss == 0.0) {
            throw std::invalid_argument(where + ": zero-norm data vector");
        }
        points.push_back(std::move(p));
    }
    if (points.empty()) {
        throw std::invalid_argument(name + ": no data rows");
    }
    return Dataset(name, dim, std::move(points));
}

Dataset load_csv(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw std::invalid_argument("cannot open dataset '" + path + "'");
    }
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_csv(ss.str(), path);
}

std::string to_csv(const Dataset& data) {
    std::string out;
    for (const auto& p : data.points()) {
        for (double v : p.x) {
            out += format_double(v);
            out += ',';
        }
        out += p.label > 0 ? "+1\n" : "-1\n";
    }
    return out;
}

void save_csv(const std::string& path, const Dataset& data) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw std::invalid_argument("cannot write dataset '" + path + "'");
    }
    out << to_csv(data);
    if (!out) {
        throw std::runtime_error("write failed for '" + path + "'");
    }
}

Dataset synth_gaussian(std::size_t d, std::size_t per_class, double separation,
                       std::uint64_t seed) {
    if (d == 0) {
        throw std::invalid_argument("synth_gaussian: d must be positive");
    }
    if (!std::isfinite(separation)) {
        throw std::invalid_argument("synth_gaussian: separation must be finite");
    }
    Rng rng(seed);
    std::vector<DataPoint> points;
    points.reserve(2 * per_class);
    for (std::size_t i = 0; i < 2 * per_class; ++i) {
        DataPoint p;
        p.label = (i % 2 == 0) ? 1 : -1;
        p.x.resize(d);
        for (double& v : p.x) {
            v = rng.normal();
        }
        p.x[0] += 0.5 * separation * p.label;
        points.push_back(std::move(p));
    }
    return Dataset("synth_gaussian", d, std::move(points));
}

} // namespace bpfree
