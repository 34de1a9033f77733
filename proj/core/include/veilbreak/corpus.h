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

#ifndef VEILBREAK_CORPUS_H_
#define VEILBREAK_CORPUS_H_

#include <cstddef>
#include <filesystem>
#include <functional>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

namespace veilbreak {

// One line of a `label<TAB>text` corpus file. Documents are identified by
// their 0-based position in the file.
struct Document {
  std::string label;
  std::string text;
};

using Corpus = std::vector<Document>;

Corpus ParseCorpus(std::istream& in);
Corpus LoadCorpus(const std::filesystem::path& path);
void WriteCorpus(std::span<const Document> corpus, std::ostream& out);
void SaveCorpus(std::span<const Document> corpus,
                const std::filesystem::path& path);

// One perturbed occurrence. `token_index` counts tokens of the whole
// document (all sentences, punctuation included).
struct AttackLogEntry {
  std::size_t doc_id = 0;
  std::size_t token_index = 0;
  std::string original;
  std::string misspelled;

  bool operator==(const AttackLogEntry&) const = default;
};

std::vector<AttackLogEntry> ParseAttackLog(std::istream& in);
std::vector<AttackLogEntry> LoadAttackLog(const std::filesystem::path& path);
void WriteAttackLog(std::span<const AttackLogEntry> log, std::ostream& out);
void SaveAttackLog(std::span<const AttackLogEntry> log,
                   const std::filesystem::path& path);

// Writes to a temporary sibling, then renames over `path`.
void WriteFileAtomically(const std::filesystem::path& path,
                         const std::function<void(std::ostream&)>& writer);

}  // namespace veilbreak

#endif  // VEILBREAK_CORPUS_H_
