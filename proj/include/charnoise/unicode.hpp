// Copyright 2026 The charnoise Authors
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

#ifndef CHARNOISE_UNICODE_HPP_
#define CHARNOISE_UNICODE_HPP_

// Thin helpers over ICU for the handful of Unicode facts this library
// needs: UTF-8 transcoding, the Alphabetic property, simple case folding and
// canonical decomposition.

#include <unicode/uchar.h>
#include <unicode/normalizer2.h>
#include <unicode/unistr.h>
#include <unicode/utf8.h>

#include <cstdint>
#include <string>
#include <string_view>

#include "charnoise/error.hpp"

namespace charnoise::unicode {

inline constexpr char32_t kReplacementChar = 0xFFFD;

// Decodes one code point starting at byte offset `pos`, advancing `pos`.
// Ill-formed sequences consume one byte and yield a negative value.
inline std::int32_t NextCodePoint(std::string_view s, std::size_t& pos) {
  const auto* p = reinterpret_cast<const std::uint8_t*>(s.data());
  const auto c0 = p[pos];
  if (c0 < 0x80) {
    ++pos;
    return c0;
  }
  std::int32_t i = static_cast<std::int32_t>(pos);
  const auto length = static_cast<std::int32_t>(s.size());
  UChar32 c;
  U8_NEXT(p, i, length, c);
  if (c < 0) {
    pos += 1;
    return -1;
  }
  pos = static_cast<std::size_t>(i);
  return c;
}

inline bool IsValidUtf8(std::string_view s) {
  std::size_t pos = 0;
  while (pos < s.size()) {
    if (NextCodePoint(s, pos) < 0) return false;
  }
  return true;
}

inline void AppendUtf8(std::string& out, char32_t c) {
  if (c < 0x80) {
    out.push_back(static_cast<char>(c));
  } else if (c < 0x800) {
    out.push_back(static_cast<char>(0xC0 | (c >> 6)));
    out.push_back(static_cast<char>(0x80 | (c & 0x3F)));
  } else if (c < 0x10000) {
    out.push_back(static_cast<char>(0xE0 | (c >> 12)));
    out.push_back(static_cast<char>(0x80 | ((c >> 6) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | (c & 0x3F)));
  } else {
    out.push_back(static_cast<char>(0xF0 | (c >> 18)));
    out.push_back(static_cast<char>(0x80 | ((c >> 12) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | ((c >> 6) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | (c & 0x3F)));
  }
}

inline std::string ToUtf8(std::u32string_view s) {
  std::string out;
  out.reserve(s.size());
  for (char32_t c : s) AppendUtf8(out, c);
  return out;
}

inline std::string ToUtf8(char32_t c) {
  std::string out;
  AppendUtf8(out, c);
  return out;
}

// Throws DataError on ill-formed input.
inline std::u32string ToUtf32(std::string_view s) {
  std::u32string out;
  out.reserve(s.size());
  std::size_t pos = 0;
  while (pos < s.size()) {
    const auto c = NextCodePoint(s, pos);
    if (c < 0) throw DataError("invalid UTF-8 sequence");
    out.push_back(static_cast<char32_t>(c));
  }
  return out;
}

inline std::size_t CodePointCount(std::string_view s) {
  std::size_t n = 0;
  std::size_t pos = 0;
  while (pos < s.size()) {
    NextCodePoint(s, pos);
    ++n;
  }
  return n;
}

// Unicode Alphabetic property. ASCII is answered without calling into ICU.
inline bool IsAlphabetic(char32_t c) {
  if (c < 0x80) return (c | 0x20) >= 'a' && (c | 0x20) <= 'z';
  return u_hasBinaryProperty(static_cast<UChar32>(c), UCHAR_ALPHABETIC);
}

inline bool IsWhitespace(char32_t c) {
  return u_isUWhiteSpace(static_cast<UChar32>(c));
}

inline char32_t FoldCase(char32_t c) {
  if (c < 0x80) return (c >= 'A' && c <= 'Z') ? c + 0x20 : c;
  return static_cast<char32_t>(
      u_foldCase(static_cast<UChar32>(c), U_FOLD_CASE_DEFAULT));
}

inline bool IsUpper(char32_t c) { return u_isupper(static_cast<UChar32>(c)); }

inline char32_t ToUpper(char32_t c) {
  return static_cast<char32_t>(u_toupper(static_cast<UChar32>(c)));
}

inline bool IsNonspacingMark(char32_t c) {
  return u_charType(static_cast<UChar32>(c)) == U_NON_SPACING_MARK;
}

// Canonical decomposition (NFD).
inline std::u32string Decompose(std::u32string_view s) {
  UErrorCode status = U_ZERO_ERROR;
  const icu::Normalizer2* nfd = icu::Normalizer2::getNFDInstance(status);
  if (U_FAILURE(status)) throw std::runtime_error("ICU NFD unavailable");
  const auto utf8 = ToUtf8(s);
  icu::UnicodeString src = icu::UnicodeString::fromUTF8(utf8);
  icu::UnicodeString dst = nfd->normalize(src, status);
  if (U_FAILURE(status)) throw std::runtime_error("ICU NFD failed");
  std::u32string out;
  out.reserve(static_cast<std::size_t>(dst.length()));
  for (std::int32_t i = 0; i < dst.length();) {
    const UChar32 c = dst.char32At(i);
    out.push_back(static_cast<char32_t>(c));
    i += U16_LENGTH(c);
  }
  return out;
}

}  // namespace charnoise::unicode

#endif  // CHARNOISE_UNICODE_HPP_
