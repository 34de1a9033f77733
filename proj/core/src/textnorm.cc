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

#include "veilbreak/textnorm.h"

#include <algorithm>

#include "veilbreak/utf8.h"

namespace veilbreak {
namespace {

bool IsWordChar(char32_t cp) {
  return utf8::IsLetter(cp) || utf8::IsDigit(cp);
}

// Characters that may appear inside a word when followed by more word
// characters.
bool IsConnector(char32_t cp) {
  return cp == '\'' || cp == 0x2019 || cp == '*' || cp == '.';
}

bool IsSentenceEnd(std::string_view surface) {
  return surface == "." || surface == "!" || surface == "?";
}

std::optional<std::string_view> PlaceholderAt(std::string_view text,
                                              std::size_t pos) {
  if (text[pos] != '$') return std::nullopt;
  for (std::string_view p : kPlaceholders) {
    if (text.substr(pos, p.size()) == p) return p;
  }
  return std::nullopt;
}

// Returns the byte end of a word starting at `pos` (which holds a word char).
std::size_t ScanWord(std::string_view text, std::size_t pos) {
  const std::size_t n = text.size();
  while (pos < n) {
    const char32_t cp = utf8::DecodeAt(text, pos);
    if (IsWordChar(cp)) {
      pos += utf8::SequenceLength(text, pos);
      continue;
    }
    if (!IsConnector(cp)) break;
    // Look past a run of connectors for another word character.
    std::size_t probe = pos;
    while (probe < n && IsConnector(utf8::DecodeAt(text, probe))) {
      probe += utf8::SequenceLength(text, probe);
    }
    if (probe < n && IsWordChar(utf8::DecodeAt(text, probe))) {
      pos = probe;
    } else {
      break;
    }
  }
  return pos;
}

Token MakeToken(std::string_view text, std::size_t begin, std::size_t end,
                TokenKind kind, std::string space) {
  Token t;
  t.surface = std::string(text.substr(begin, end - begin));
  t.lower = utf8::ToLower(t.surface);
  t.kind = kind;
  t.span = {begin, end};
  t.space_before = std::move(space);
  return t;
}

bool IsAsciiWordChar(char c) {
  return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') ||
         (c >= '0' && c <= '9') || c == '_';
}

bool IsTagChar(std::string_view text, std::size_t pos) {
  if (text[pos] == '_') return true;
  return IsWordChar(utf8::DecodeAt(text, pos));
}

std::size_t ScanTag(std::string_view text, std::size_t pos) {
  while (pos < text.size() && IsTagChar(text, pos)) {
    pos += utf8::SequenceLength(text, pos);
  }
  return pos;
}

bool StartsWithUrl(std::string_view rest, std::size_t& prefix_len) {
  for (std::string_view p : {std::string_view("https://"),
                             std::string_view("http://"),
                             std::string_view("www."),
                             std::string_view("t.co/")}) {
    if (rest.size() >= p.size()) {
      bool match = true;
      for (std::size_t i = 0; i < p.size(); ++i) {
        char c = rest[i];
        if (c >= 'A' && c <= 'Z') c = static_cast<char>(c + 32);
        if (c != p[i]) {
          match = false;
          break;
        }
      }
      if (match) {
        prefix_len = p.size();
        return true;
      }
    }
  }
  return false;
}

bool IsUrlTrailer(char c) {
  return c == '.' || c == ',' || c == ';' || c == ':' || c == '!' ||
         c == '?' || c == ')';
}

// For the reserved-word boundary test '$' counts as a word character, so a
// freshly emitted placeholder never exposes a new boundary.
bool IsReservedNeighbor(char c) { return IsAsciiWordChar(c) || c == '$'; }

}  // namespace

std::string_view ToString(TokenKind kind) {
  switch (kind) {
    case TokenKind::kWord:
      return "word";
    case TokenKind::kNumber:
      return "number";
    case TokenKind::kPunctuation:
      return "punctuation";
    case TokenKind::kPlaceholder:
      return "placeholder";
  }
  return "unknown";
}

bool IsPlaceholder(std::string_view token) {
  return std::find(kPlaceholders.begin(), kPlaceholders.end(), token) !=
         kPlaceholders.end();
}

std::vector<Sentence> Tokenize(std::string_view text) {
  std::vector<Sentence> sentences;
  Sentence current;
  std::string space;
  std::size_t pos = 0;
  const std::size_t n = text.size();

  auto close = [&] {
    sentences.push_back(std::move(current));
    current = Sentence();
  };

  while (pos < n) {
    const char32_t cp = utf8::DecodeAt(text, pos);
    const std::size_t len = utf8::SequenceLength(text, pos);
    if (utf8::IsSpace(cp)) {
      space.append(text.substr(pos, len));
      pos += len;
      continue;
    }
    if (auto p = PlaceholderAt(text, pos)) {
      current.tokens.push_back(MakeToken(text, pos, pos + p->size(),
                                         TokenKind::kPlaceholder,
                                         std::move(space)));
      space.clear();
      pos += p->size();
      continue;
    }
    if (IsWordChar(cp)) {
      const std::size_t end = ScanWord(text, pos);
      const auto piece = text.substr(pos, end - pos);
      const TokenKind kind =
          utf8::HasLetter(piece) ? TokenKind::kWord : TokenKind::kNumber;
      current.tokens.push_back(
          MakeToken(text, pos, end, kind, std::move(space)));
      space.clear();
      pos = end;
      continue;
    }
    current.tokens.push_back(MakeToken(text, pos, pos + len,
                                       TokenKind::kPunctuation,
                                       std::move(space)));
    space.clear();
    pos += len;
    if (IsSentenceEnd(current.tokens.back().surface) &&
        (pos == n || utf8::IsSpace(utf8::DecodeAt(text, pos)))) {
      close();
    }
  }
  if (!current.tokens.empty() || (sentences.empty() && !space.empty())) {
    current.trailing_space = std::move(space);
    close();
  } else if (!space.empty()) {
    sentences.back().trailing_space = std::move(space);
  }
  return sentences;
}

std::vector<Token> TokenizeFlat(std::string_view text) {
  std::vector<Token> out;
  for (Sentence& s : Tokenize(text)) {
    for (Token& t : s.tokens) out.push_back(std::move(t));
  }
  return out;
}

std::string Detokenize(const Sentence& sentence) {
  std::string out;
  for (const Token& t : sentence.tokens) {
    out += t.space_before;
    if (!t.replacement) {
      out += t.surface;
    } else if (!t.surface.empty() &&
               utf8::IsUpper(utf8::DecodeAt(t.surface, 0))) {
      out += utf8::CapitalizeFirst(*t.replacement);
    } else {
      out += *t.replacement;
    }
  }
  out += sentence.trailing_space;
  return out;
}

std::string Detokenize(std::span<const Sentence> sentences) {
  std::string out;
  for (const Sentence& s : sentences) out += Detokenize(s);
  return out;
}

std::string NormalizeTweet(std::string_view text) {
  std::string out;
  out.reserve(text.size());
  const std::size_t n = text.size();
  std::size_t pos = 0;
  while (pos < n) {
    std::size_t prefix_len = 0;
    if (StartsWithUrl(text.substr(pos), prefix_len)) {
      std::size_t end = pos + prefix_len;
      while (end < n && !utf8::IsSpace(utf8::DecodeAt(text, end))) {
        end += utf8::SequenceLength(text, end);
      }
      while (end > pos + prefix_len && IsUrlTrailer(text[end - 1])) --end;
      out += "$URL$";
      pos = end;
      continue;
    }
    const char c = text[pos];
    if ((c == '#' || c == '@') && pos + 1 < n && IsTagChar(text, pos + 1)) {
      out += c == '#' ? "$HASHTAG$" : "$MENTION$";
      pos = ScanTag(text, pos + 1);
      continue;
    }
    if (c == 'R' || c == 'F') {
      const std::string_view word = c == 'R' ? "RT" : "FAV";
      if (text.substr(pos, word.size()) == word &&
          (pos == 0 || !IsReservedNeighbor(text[pos - 1])) &&
          (pos + word.size() == n ||
           !IsReservedNeighbor(text[pos + word.size()]))) {
        out += "$RESERVED$";
        pos += word.size();
        continue;
      }
    }
    out.push_back(c);
    ++pos;
  }
  return out;
}

}  // namespace veilbreak
