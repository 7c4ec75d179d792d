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

#include "sensedefs/unicode.hpp"

#include <unicode/uchar.h>
#include <unicode/unorm2.h>
#include <unicode/ustring.h>
#include <unicode/utf16.h>
#include <unicode/utf8.h>

#include "sensedefs/error.hpp"

namespace sensedefs::uni {

namespace {

std::u16string to_utf16(std::string_view text) {
  std::u16string out(text.size() + 1, u'\0');
  UErrorCode ec = U_ZERO_ERROR;
  int32_t len = 0;
  u_strFromUTF8Lenient(out.data(), static_cast<int32_t>(out.size()), &len,
                       text.data(), static_cast<int32_t>(text.size()), &ec);
  if (U_FAILURE(ec)) throw Error("utf-8 to utf-16 conversion failed");
  out.resize(static_cast<std::size_t>(len));
  return out;
}

std::string to_utf8(const std::u16string& text) {
  std::string out(text.size() * 4 + 1, '\0');
  UErrorCode ec = U_ZERO_ERROR;
  int32_t len = 0;
  u_strToUTF8(out.data(), static_cast<int32_t>(out.size()), &len, text.data(),
              static_cast<int32_t>(text.size()), &ec);
  if (U_FAILURE(ec)) throw Error("utf-16 to utf-8 conversion failed");
  out.resize(static_cast<std::size_t>(len));
  return out;
}

}  // namespace

std::vector<char32_t> decode_utf8(std::string_view text) {
  std::vector<char32_t> out;
  out.reserve(text.size());
  const auto* s = reinterpret_cast<const uint8_t*>(text.data());
  int32_t i = 0;
  const auto n = static_cast<int32_t>(text.size());
  while (i < n) {
    UChar32 cp;
    U8_NEXT(s, i, n, cp);
    out.push_back(cp < 0 ? char32_t{0xFFFD} : static_cast<char32_t>(cp));
  }
  return out;
}

std::string encode_utf8(std::span<const char32_t> codepoints) {
  std::string out;
  out.reserve(codepoints.size() * 2);
  for (char32_t cp : codepoints) {
    uint8_t buf[U8_MAX_LENGTH];
    int32_t len = 0;
    UBool err = false;
    U8_APPEND(buf, len, U8_MAX_LENGTH, static_cast<UChar32>(cp), err);
    if (err) {
      out += "\xEF\xBF\xBD";  // U+FFFD
    } else {
      out.append(reinterpret_cast<const char*>(buf),
                 static_cast<std::size_t>(len));
    }
  }
  return out;
}

std::size_t length(std::string_view text) {
  const auto* s = reinterpret_cast<const uint8_t*>(text.data());
  int32_t i = 0;
  const auto n = static_cast<int32_t>(text.size());
  std::size_t count = 0;
  while (i < n) {
    UChar32 cp;
    U8_NEXT(s, i, n, cp);
    (void)cp;
    ++count;
  }
  return count;
}

std::string substr(std::string_view text, std::size_t begin, std::size_t end) {
  const std::vector<char32_t> cps = decode_utf8(text);
  if (begin > end || end > cps.size())
    throw Error("code point slice out of range");
  return encode_utf8(std::span(cps).subspan(begin, end - begin));
}

std::string fold(std::string_view text) {
  UErrorCode ec = U_ZERO_ERROR;
  const UNormalizer2* nfc = unorm2_getNFCInstance(&ec);
  if (U_FAILURE(ec)) throw Error("ICU NFC normalizer unavailable");

  const std::u16string u16 = to_utf16(text);
  std::u16string normalized(u16.size() * 3 + 8, u'\0');
  int32_t len =
      unorm2_normalize(nfc, u16.data(), static_cast<int32_t>(u16.size()),
                       normalized.data(),
                       static_cast<int32_t>(normalized.size()), &ec);
  if (U_FAILURE(ec)) throw Error("NFC normalization failed");
  normalized.resize(static_cast<std::size_t>(len));

  std::u16string lowered;
  lowered.reserve(normalized.size());
  int32_t i = 0;
  const auto n = static_cast<int32_t>(normalized.size());
  while (i < n) {
    UChar32 cp;
    U16_NEXT(normalized.data(), i, n, cp);
    cp = u_tolower(cp);  // simple case mapping, no locale
    char16_t buf[U16_MAX_LENGTH];
    int32_t blen = 0;
    UBool err = false;
    U16_APPEND(buf, blen, U16_MAX_LENGTH, cp, err);
    if (!err) lowered.append(buf, static_cast<std::size_t>(blen));
  }
  return to_utf8(lowered);
}

bool is_space(char32_t cp) {
  return u_isUWhiteSpace(static_cast<UChar32>(cp));
}

bool is_separable(char32_t cp) {
  const auto type = static_cast<UCharCategory>(
      u_charType(static_cast<UChar32>(cp)));
  switch (type) {
    case U_DASH_PUNCTUATION:
    case U_START_PUNCTUATION:
    case U_END_PUNCTUATION:
    case U_CONNECTOR_PUNCTUATION:
    case U_OTHER_PUNCTUATION:
    case U_INITIAL_PUNCTUATION:
    case U_FINAL_PUNCTUATION:
    case U_MATH_SYMBOL:
    case U_CURRENCY_SYMBOL:
    case U_MODIFIER_SYMBOL:
      return true;
    default:
      return false;
  }
}

bool is_digit(char32_t cp) { return u_isdigit(static_cast<UChar32>(cp)); }

}  // namespace sensedefs::uni
