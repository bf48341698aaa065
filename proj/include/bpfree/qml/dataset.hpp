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


#ifndef BPFREE_QML_DATASET_HPP
#define BPFREE_QML_DATASET_HPP

#include <cstdint>
#include <string>
#include <vector>

namespace bpfree {

struct DataPoint {
    std::vector<double> x;
    int label; ///< +1 or -1
};

/// Labelled points of a common dimension, none with zero norm.
class Dataset {
  public:
    Dataset(std::string name, std::size_t dim, std::vector<DataPoint> points);

    const std::string& name() const { return name_; }
    std::size_t dim() const { return dim_; }
    std::size_t size() const { return points_.size(); }
    const std::vector<DataPoint>& points() const { return points_; }
    const DataPoint& operator[](std::size_t i) const { return points_.at(i); }

  private:
    std::string name_;
    std::size_t dim_;
    std::vector<DataPoint> points_;
};

/// Rows of d comma-separated reals followed by a +1/-1 label. Blank lines and
/// lines starting with '#' are skipped. Errors name the offending line.
Dataset load_csv(const std::string& path);
Dataset parse_csv(const std::string& text, const std::string& name = "inline");

/// Same row format with 17 significant digits and LF endings.
std::string to_csv(const Dataset& data);
void save_csv(const std::string& path, const Dataset& data);

/// per_class points of each label; label +1 centred at +(separation/2) e_1,
/// label -1 at -(separation/2) e_1, unit variance in every coordinate. Points
/// alternate +1, -1.
Dataset synth_gaussian(std::size_t d, std::size_t per_class, double separation,
                       std::uint64_t seed);

} // namespace bpfree

#endif // BPFREE_QML_DATASET_HPP
