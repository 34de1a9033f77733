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

#ifndef VEILBREAK_TEXTNORM_H_
#define VEILBREAK_TEXTNORM_H_

#include <array>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace veilbreak {

enum class TokenKind { kWord, kNumber, kPunctuation, kPlaceholder };

std::string_view ToString(TokenKind kind);

// Byte offsets into the tokenized source, half-open.
struct Span {
  std::size_t begin = 0;
  std::size_t end = 0;
};

struct Token {
  std::string surface;
  std::string lower;
  TokenKind kind = TokenKind::kWord;
  Span span;
  // Whitespace between the previous token (or start of text) and this one.
  std::string space_before;
  // When set, detokenization emits this instead of `surface`.
  std::optional<std::string> replacement;

  bool is_word() const { return kind == TokenKind::kWord; }
};

struct Sentence {
  std::vector<Token> tokens;
  // Whitespace after the last token; only non-empty at end of text.
  std::string trailing_space;
};

inline constexpr std::array<std::string_view, 4> kPlaceholders = {
    "$HASHTAG$", "$URL$", "$MENTION$", "$RESERVED$"};

bool IsPlaceholder(std::string_view token);

// Splits on whitespace and punctuation. Word-internal apostrophes, '*' and
// '.' stay inside the word ("you're", "stu*pid", "idio.t"). A sentence ends
// after '.', '!' or '?' when followed by whitespace or end of text.
// Concatenating Detokenize() over the result reproduces `text` exactly.
std::vector<Sentence> Tokenize(std::string_view text);

// Re-emits the sentence with original whitespace. Tokens carrying a
// replacement get it substituted; a capitalized original capitalizes the
// replacement's first letter.
std::string Detokenize(const Sentence& sentence);
std::string Detokenize(std::span<const Sentence> sentences);

// Replaces hashtags, URLs, @-mentions and the reserved words RT/FAV with
// $HASHTAG$, $URL$, $MENTION$ and $RESERVED$. Idempotent.
std::string NormalizeTweet(std::string_view text);

// Tokenizes and flattens all sentences, for callers that only need tokens.
std::vector<Token> TokenizeFlat(std::string_view text);

}  // namespace veilbreak

#endif  // VEILBREAK_TEXTNORM_H_
