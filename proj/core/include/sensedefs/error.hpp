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

#ifndef SENSEDEFS_ERROR_HPP
#define SENSEDEFS_ERROR_HPP

#include <stdexcept>
#include <string>

namespace sensedefs {

class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Malformed input file. The message carries the file path and the
// line or record where parsing stopped.
class ParseError : public Error {
 public:
  explicit ParseError(const std::string& what) : Error(what) {}
};

// Structurally valid input that violates a cross-reference or
// consistency rule (dangling synset id, duplicate key, version rule).
class IntegrityError : public Error {
 public:
  explicit IntegrityError(const std::string& what) : Error(what) {}
};

}  // namespace sensedefs

#endif  // SENSEDEFS_ERROR_HPP
