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

#ifndef SENSEDEFS_UNICODE_HPP
#define SENSEDEFS_UNICODE_HPP

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

// Thin Unicode layer. All offsets in the pipeline are code point
// offsets, so the tokenizer works on decoded text and the rest of the
// code never touches UTF-8 byte positions. Backed by ICU; this header
// keeps ICU out of every other translation unit.

namespace sensedefs::uni {

// Decodes UTF-8; invalid sequences become U+FFFD (one per bad byte run).
std::vector<char32_t> decode_utf8(std::string_view text);

std::string encode_utf8(std::span<const char32_t> codepoints);

// Number of code points.
std::size_t length(std::string_view text);

// Code point slice [begin, end) re-encoded as UTF-8.
std::string substr(std::string_view text, std::size_t begin, std::size_t end);

// NFC normalization followed by locale-independent (simple) lowercasing.
// This is the canonical form for lemma keys and token lemmas.
std::string fold(std::string_view text);

bool is_space(char32_t cp);
// Punctuation and symbol characters the tokenizer may split off.
bool is_separable(char32_t cp);
bool is_digit(char32_t cp);

}  // namespace sensedefs::uni

#endif  // SENSEDEFS_UNICODE_HPP
