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

#ifndef VEILBREAK_UTF8_H_
#define VEILBREAK_UTF8_H_

#include <string>
#include <string_view>

namespace veilbreak::utf8 {

// Decodes UTF-8 into scalar values. Invalid sequences decode each offending
// byte as U+FFFD so distances stay defined on arbitrary input.
std::u32string Decode(std::string_view text);

std::string Encode(std::u32string_view text);
void AppendCodePoint(char32_t cp, std::string& out);

// Length in bytes of the sequence starting at `text[pos]` (1 for invalid).
std::size_t SequenceLength(std::string_view text, std::size_t pos);
char32_t DecodeAt(std::string_view text, std::size_t pos);

bool IsLetter(char32_t cp);
bool IsDigit(char32_t cp);
bool IsSpace(char32_t cp);
bool IsUpper(char32_t cp);

char32_t ToLower(char32_t cp);
char32_t ToUpper(char32_t cp);

std::string ToLower(std::string_view text);

// Uppercases the first scalar value, leaving the rest untouched.
std::string CapitalizeFirst(std::string_view text);

bool HasLetter(std::string_view text);
bool HasWhitespace(std::string_view text);

}  // namespace veilbreak::utf8

#endif  // VEILBREAK_UTF8_H_
