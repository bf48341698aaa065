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


#ifndef BPFREE_CLI_CSV_HPP
#define BPFREE_CLI_CSV_HPP

#include <concepts>
#include <string>
#include <vector>

namespace bpfree::cli {

/// Header row plus data rows; cells are pre-formatted text.
class CsvTable {
  public:
    explicit CsvTable(std::vector<std::string> header);

    /// Throws std::invalid_argument when the cell count differs from the header.
    void add_row(std::vector<std::string> cells);
    std::size_t rows() const { return rows_.size(); }
    /// Comma-separated, LF line endings, header first.
    std::string str() const;

  private:
    std::vector<std::string> header_;
    std::vector<std::vector<std::string>> rows_;
};

/// 17 significant digits, '.' decimal point.
std::string cell(double x);
template <std::integral T>
std::string cell(T x) {
    return std::to_string(x);
}
/// Quotes fields holding a comma, quote or newline.
std::string cell(const std::string& s);

} // namespace bpfree::cli

#endif // BPFREE_CLI_CSV_HPP
