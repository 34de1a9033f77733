// Copyright 2026 The Veilbreak Authors
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

#include "veilbreak/utf8.h"

namespace veilbreak::utf8 {
namespace {

constexpr char32_t kReplacement = 0xFFFD;

bool IsContinuation(unsigned char c) { return (c & 0xC0) == 0x80; }

// Returns the decoded scalar and its byte length, or kReplacement with
// length 1 on malformed input.
std::pair<char32_t, std::size_t> DecodeOne(std::string_view s,
                                           std::size_t pos) {
  const auto c0 = static_cast<unsigned char>(s[pos]);
  if (c0 < 0x80) return {c0, 1};
  std::size_t len = 0;
  char32_t cp = 0;
  char32_t min = 0;
  if ((c0 & 0xE0) == 0xC0) {
    len = 2;
    cp = c0 & 0x1F;
    min = 0x80;
  } else if ((c0 & 0xF0) == 0xE0) {
    len = 3;
    cp = c0 & 0x0F;
    min = 0x800;
  } else if ((c0 & 0xF8) == 0xF0) {
    len = 4;
    cp = c0 & 0x07;
    min = 0x10000;
  } else {
    return {kReplacement, 1};
  }
  if (pos + len > s.size()) return {kReplacement, 1};
  for (std::size_t i = 1; i < len; ++i) {
    const auto c = static_cast<unsigned char>(s[pos + i]);
    if (!IsContinuation(c)) return {kReplacement, 1};
    cp = (cp << 6) | (c & 0x3F);
  }
  if (cp < min || cp > 0x10FFFF || (cp >= 0xD800 && cp <= 0xDFFF)) {
    return {kReplacement, 1};
  }
  return {cp, len};
}

}  // namespace

std::u32string Decode(std::string_view text) {
  std::u32string out;
  out.reserve(text.size());
  std::size_t pos = 0;
  while (pos < text.size()) {
    auto [cp, len] = DecodeOne(text, pos);
    out.push_back(cp);
    pos += len;
  }
  return out;
}

void AppendCodePoint(char32_t cp, std::string& out) {
  if (cp < 0x80) {
    out.push_back(static_cast<char>(cp));
  } else if (cp < 0x800) {
    out.push_back(static_cast<char>(0xC0 | (cp >> 6)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  } else if (cp < 0x10000) {
    out.push_back(static_cast<char>(0xE0 | (cp >> 12)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  } else {
    out.push_back(static_cast<char>(0xF0 | (cp >> 18)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 12) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  }
}

std::string Encode(std::u32string_view text) {
  std::string out;
  out.reserve(text.size());
  for (char32_t cp : text) AppendCodePoint(cp, out);
  return out;
}

std::size_t SequenceLength(std::string_view text, std::size_t pos) {
  return DecodeOne(text, pos).second;
}

char32_t DecodeAt(std::string_view text, std::size_t pos) {
  return DecodeOne(text, pos).first;
}

// Coarse script-block classification. Good enough for tweets and mail; we
// do not carry full Unicode property tables.
bool IsLetter(char32_t cp) {
  if (cp < 0x80) {
    return (cp >= 'a' && cp <= 'z') || (cp >= 'A' && cp <= 'Z');
  }
  if (cp == 0xAA || cp == 0xB5 || cp == 0xBA) return true;
  if (cp >= 0xC0 && cp <= 0x24F) return cp != 0xD7 && cp != 0xF7;
  if (cp >= 0x250 && cp <= 0x2AF) return true;     // IPA
  if (cp >= 0x370 && cp <= 0x3FF) return cp != 0x37E && cp != 0x387;
  if (cp >= 0x400 && cp <= 0x52F) return true;     // Cyrillic
  if (cp >= 0x531 && cp <= 0x587) return true;     // Armenian
  if (cp >= 0x5D0 && cp <= 0x5EA) return true;     // Hebrew
  if (cp >= 0x620 && cp <= 0x64A) return true;     // Arabic
  if (cp >= 0x900 && cp <= 0xDFF) return true;     // Indic
  if (cp >= 0xE00 && cp <= 0xE7F) return true;     // Thai
  if (cp >= 0x1E00 && cp <= 0x1FFF) return true;   // Latin/Greek extended
  if (cp >= 0x3040 && cp <= 0x30FF) return true;   // Kana
  if (cp >= 0x3400 && cp <= 0x9FFF) return true;   // CJK
  if (cp >= 0xAC00 && cp <= 0xD7AF) return true;   // Hangul
  return false;
}

bool IsDigit(char32_t cp) { return cp >= '0' && cp <= '9'; }

bool IsSpace(char32_t cp) {
  return cp == ' ' || cp == '\t' || cp == '\n' || cp == '\r' || cp == '\v' ||
         cp == '\f' || cp == 0xA0 || cp == 0x2028 || cp == 0x2029 ||
         cp == 0x3000 || (cp >= 0x2000 && cp <= 0x200A);
}

char32_t ToLower(char32_t cp) {
  if (cp >= 'A' && cp <= 'Z') return cp + 32;
  if ((cp >= 0xC0 && cp <= 0xDE) && cp != 0xD7) return cp + 32;
  if (cp >= 0x391 && cp <= 0x3AB && cp != 0x3A2) return cp + 32;
  if (cp >= 0x410 && cp <= 0x42F) return cp + 32;
  if (cp >= 0x400 && cp <= 0x40F) return cp + 80;
  return cp;
}

char32_t ToUpper(char32_t cp) {
  if (cp >= 'a' && cp <= 'z') return cp - 32;
  if ((cp >= 0xE0 && cp <= 0xFE) && cp != 0xF7) return cp - 32;
  if (cp >= 0x3B1 && cp <= 0x3CB && cp != 0x3C2) return cp - 32;
  if (cp >= 0x430 && cp <= 0x44F) return cp - 32;
  if (cp >= 0x450 && cp <= 0x45F) return cp - 80;
  return cp;
}

bool IsUpper(char32_t cp) { return ToLower(cp) != cp; }

std::string ToLower(std::string_view text) {
  std::string out;
  out.reserve(text.size());
  std::size_t pos = 0;
  while (pos < text.size()) {
    auto [cp, len] = DecodeOne(text, pos);
    if (cp == kReplacement && len == 1 &&
        static_cast<unsigned char>(text[pos]) >= 0x80) {
      // Keep undecodable bytes verbatim.
      out.push_back(text[pos]);
    } else {
      AppendCodePoint(ToLower(cp), out);
    }
    pos += len;
  }
  return out;
}

std::string CapitalizeFirst(std::string_view text) {
  if (text.empty()) return std::string();
  auto [cp, len] = DecodeOne(text, 0);
  std::string out;
  AppendCodePoint(ToUpper(cp), out);
  out.append(text.substr(len));
  return out;
}

bool HasLetter(std::string_view text) {
  std::size_t pos = 0;
  while (pos < text.size()) {
    auto [cp, len] = DecodeOne(text, pos);
    if (IsLetter(cp)) return true;
    pos += len;
  }
  return false;
}

bool HasWhitespace(std::string_view text) {
  std::size_t pos = 0;
  while (pos < text.size()) {
    auto [cp, len] = DecodeOne(text, pos);
    if (IsSpace(cp)) return true;
    pos += len;
  }
  return false;
}

}  // namespace veilbreak::utf8
