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

#include "veilbreak/corpus.h"

#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <string_view>

#include "veilbreak/error.h"

namespace veilbreak {
namespace {

std::vector<std::string_view> SplitTabs(std::string_view line) {
  std::vector<std::string_view> fields;
  std::size_t start = 0;
  while (true) {
    const auto tab = line.find('\t', start);
    if (tab == std::string_view::npos) {
      fields.push_back(line.substr(start));
      return fields;
    }
    fields.push_back(line.substr(start, tab - start));
    start = tab + 1;
  }
}

std::size_t ParseIndex(std::string_view field, std::size_t lineno,
                       const char* what) {
  std::size_t value = 0;
  auto [ptr, ec] =
      std::from_chars(field.data(), field.data() + field.size(), value);
  if (field.empty() || ec != std::errc() ||
      ptr != field.data() + field.size()) {
    throw ParseError(std::string(what) + " is not a non-negative integer",
                     lineno);
  }
  return value;
}

std::ifstream OpenForRead(const std::filesystem::path& path,
                          const char* what) {
  std::ifstream in(path);
  if (!in) {
    throw IoError(std::string("cannot open ") + what + ": " + path.string());
  }
  return in;
}

}  // namespace

Corpus ParseCorpus(std::istream& in) {
  Corpus corpus;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    const auto tab = line.find('\t');
    if (tab == std::string::npos) {
      throw ParseError("expected label<TAB>text", lineno);
    }
    corpus.push_back({line.substr(0, tab), line.substr(tab + 1)});
  }
  if (in.bad()) throw IoError("read failure while loading corpus");
  return corpus;
}

Corpus LoadCorpus(const std::filesystem::path& path) {
  auto in = OpenForRead(path, "corpus file");
  return ParseCorpus(in);
}

void WriteCorpus(std::span<const Document> corpus, std::ostream& out) {
  for (const Document& d : corpus) out << d.label << '\t' << d.text << '\n';
}

void SaveCorpus(std::span<const Document> corpus,
                const std::filesystem::path& path) {
  WriteFileAtomically(path, [&](std::ostream& out) { WriteCorpus(corpus, out); });
}

std::vector<AttackLogEntry> ParseAttackLog(std::istream& in) {
  std::vector<AttackLogEntry> log;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    const auto fields = SplitTabs(line);
    if (fields.size() != 4) {
      throw ParseError(
          "expected doc_id<TAB>token_index<TAB>original<TAB>misspelled",
          lineno);
    }
    log.push_back({ParseIndex(fields[0], lineno, "doc_id"),
                   ParseIndex(fields[1], lineno, "token_index"),
                   std::string(fields[2]), std::string(fields[3])});
  }
  if (in.bad()) throw IoError("read failure while loading attack log");
  return log;
}

std::vector<AttackLogEntry> LoadAttackLog(const std::filesystem::path& path) {
  auto in = OpenForRead(path, "attack log");
  return ParseAttackLog(in);
}

void WriteAttackLog(std::span<const AttackLogEntry> log, std::ostream& out) {
  for (const AttackLogEntry& e : log) {
    out << e.doc_id << '\t' << e.token_index << '\t' << e.original << '\t'
        << e.misspelled << '\n';
  }
}

void SaveAttackLog(std::span<const AttackLogEntry> log,
                   const std::filesystem::path& path) {
  WriteFileAtomically(path,
                      [&](std::ostream& out) { WriteAttackLog(log, out); });
}

void WriteFileAtomically(const std::filesystem::path& path,
                         const std::function<void(std::ostream&)>& writer) {
  auto tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw IoError("cannot open for writing: " + tmp.string());
    writer(out);
    out.flush();
    if (!out) throw IoError("write failure: " + tmp.string());
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  if (ec) {
    std::filesystem::remove(tmp, ec);
    throw IoError("cannot rename into place: " + path.string());
  }
}

}  // namespace veilbreak
