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


#ifndef BPFREE_QCORE_FORMAT_HPP
#define BPFREE_QCORE_FORMAT_HPP

#include <charconv>
#include <string>
#include <string_view>

namespace bpfree {

/// Locale-independent shortest-round-trip-safe text for a double: 17
/// significant digits, "nan"/"inf"/"-inf" for non-finite values.
inline std::string format_double(double x) {
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof(buf), x, std::chars_format::general, 17);
    return std::string(buf, res.ptr);
}

/// Parses the whole of `text` as a double; false on any trailing garbage.
inline bool parse_double(std::string_view text, double& out) {
    if (!text.empty() && text.front() == '+') {
        text.remove_prefix(1);
    }
    const auto res = std::from_chars(text.data(), text.data() + text.size(), out);
    return res.ec == std::errc() && res.ptr == text.data() + text.size() && !text.empty();
}

} // namespace bpfree

#endif // BPFREE_QCORE_FORMAT_HPP
