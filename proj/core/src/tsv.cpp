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

#include "sensedefs/tsv.hpp"

#include <fstream>

#include "sensedefs/error.hpp"

namespace sensedefs {

std::vector<std::string> split(std::string_view s, char sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (true) {
    const std::size_t pos = s.find(sep, start);
    if (pos == std::string_view::npos) {
      out.emplace_back(s.substr(start));
      return out;
    }
    out.emplace_back(s.substr(start, pos - start));
    start = pos + 1;
  }
}

std::vector<TsvRecord> read_tsv(const std::filesystem::path& path,
                                std::size_t min_fields) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open file: " + path.string());

  std::vector<TsvRecord> records;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line.front() == '#') continue;
    TsvRecord rec{split(line, '\t'), line_no};
    if (rec.fields.size() < min_fields) {
      throw ParseError(path.string() + ":" + std::to_string(line_no) +
                       ": expected at least " + std::to_string(min_fields) +
                       " tab-separated fields, got " +
                       std::to_string(rec.fields.size()));
    }
    records.push_back(std::move(rec));
  }
  return records;
}

}  // namespace sensedefs
