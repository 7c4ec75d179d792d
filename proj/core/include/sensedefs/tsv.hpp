// Copyright 2026 The sensedefs authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef SENSEDEFS_TSV_HPP
#define SENSEDEFS_TSV_HPP

#include <cstddef>
#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

namespace sensedefs {

struct TsvRecord {
  std::vector<std::string> fields;
  std::size_t line;  // 1-based line number in the source file
};

// Reads a UTF-8, LF-terminated, tab-separated file. Blank lines and
// lines starting with '#' are skipped. A record with fewer than
// `min_fields` fields raises ParseError naming the file and line.
std::vector<TsvRecord> read_tsv(const std::filesystem::path& path,
                                std::size_t min_fields);

std::vector<std::string> split(std::string_view s, char sep);

}  // namespace sensedefs

#endif  // SENSEDEFS_TSV_HPP
