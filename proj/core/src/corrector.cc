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

#include "veilbreak/corrector.h"

#include "veilbreak/error.h"
#include "veilbreak/utf8.h"

namespace veilbreak {

Corrector::Corrector(const Vocabulary& vocab, const CandidateIndex& index,
                     const EmbeddingTable& embeddings, CorrectorConfig config)
    : vocab_(vocab), index_(index), embeddings_(embeddings), config_(config) {
  if (config_.max_radius < 1) throw ContractViolation("max_radius must be >= 1");
  if (config_.window < 1) throw ContractViolation("window must be >= 1");
}

CorrectionResult Corrector::CorrectSentence(const Sentence& sentence) const {
  CorrectionResult result;
  if (sentence.tokens.empty()) return result;

  // Context-eligible tokens, with their sentence positions.
  std::vector<std::string> context;
  std::vector<std::size_t> context_pos;
  std::vector<bool> flagged(sentence.tokens.size(), false);
  for (std::size_t i = 0; i < sentence.tokens.size(); ++i) {
    const Token& t = sentence.tokens[i];
    if (t.kind == TokenKind::kWord && !IsValid(vocab_, t.surface)) {
      flagged[i] = true;
      continue;
    }
    if (t.kind == TokenKind::kWord || t.kind == TokenKind::kNumber) {
      context.push_back(t.lower);
      context_pos.push_back(i);
    }
  }

  Sentence out = sentence;
  for (std::size_t i = 0; i < sentence.tokens.size(); ++i) {
    TokenCorrection rec;
    rec.token_index = i;
    rec.original = sentence.tokens[i].surface;
    rec.flagged = flagged[i];
    if (flagged[i]) {
      ++result.counters.flagged;
      rec.candidates = index_.Enumerate(sentence.tokens[i].lower,
                                        config_.max_radius);
      if (!rec.candidates) {
        ++result.counters.unchanged_oov;
      } else if (config_.mode == SelectionMode::kFrequency) {
        rec.correction = MostFrequentCandidate(*rec.candidates).word;
        rec.frequency_fallback = true;
      } else {
        ContextWindow window;
        window.center = sentence.tokens[i].lower;
        window.max_window = config_.window;
        const std::size_t p = static_cast<std::size_t>(config_.window);
        // context_pos is ascending; split it around position i.
        std::size_t split = 0;
        while (split < context_pos.size() && context_pos[split] < i) ++split;
        const std::size_t left_begin = split > p ? split - p : 0;
        window.left.assign(context.begin() + left_begin,
                           context.begin() + split);
        const std::size_t right_end = std::min(context.size(), split + p);
        window.right.assign(context.begin() + split,
                            context.begin() + right_end);
        Selection sel = SelectCorrection(embeddings_, *rec.candidates, window);
        rec.correction = std::move(sel.word);
        rec.scores = std::move(sel.scores);
        rec.frequency_fallback = sel.frequency_fallback;
      }
      if (rec.correction) {
        ++result.counters.corrected;
        out.tokens[i].replacement = *rec.correction;
      }
    }
    result.tokens.push_back(std::move(rec));
  }
  result.corrected_text = Detokenize(out);
  return result;
}

CorrectionResult Corrector::CorrectDocument(std::string_view text) const {
  CorrectionResult doc;
  for (const Sentence& s : Tokenize(text)) {
    CorrectionResult r = CorrectSentence(s);
    const std::size_t base = doc.tokens.size();
    if (r.tokens.empty()) {
      // Tokenless sentences still carry whitespace.
      doc.corrected_text += Detokenize(s);
      continue;
    }
    for (TokenCorrection& t : r.tokens) {
      t.token_index += base;
      doc.tokens.push_back(std::move(t));
    }
    doc.corrected_text += r.corrected_text;
    doc.counters += r.counters;
  }
  return doc;
}

CorpusCorrection Corrector::CorrectCorpus(
    std::span<const Document> corpus) const {
  CorpusCorrection out;
  out.corrected.reserve(corpus.size());
  out.documents.reserve(corpus.size());
  for (const Document& d : corpus) {
    CorrectionResult r = CorrectDocument(d.text);
    out.corrected.push_back({d.label, r.corrected_text});
    out.totals += r.counters;
    out.documents.push_back(std::move(r));
  }
  return out;
}

double CorrectionAccuracy(std::span<const AttackLogEntry> log,
                          const CorpusCorrection& result) {
  if (log.empty()) throw DataError("attack log is empty");
  std::size_t hits = 0;
  for (const AttackLogEntry& e : log) {
    if (e.doc_id >= result.documents.size()) {
      throw ContractViolation("attack log doc " + std::to_string(e.doc_id) +
                              " is not in the corrected corpus");
    }
    const auto& tokens = result.documents[e.doc_id].tokens;
    if (e.token_index >= tokens.size() ||
        tokens[e.token_index].original != e.misspelled) {
      throw ContractViolation("attack log entry (doc " +
                              std::to_string(e.doc_id) + ", token " +
                              std::to_string(e.token_index) +
                              ") does not match the corrected corpus");
    }
    const TokenCorrection& t = tokens[e.token_index];
    if (t.correction &&
        utf8::ToLower(*t.correction) == utf8::ToLower(e.original)) {
      ++hits;
    }
  }
  return static_cast<double>(hits) / static_cast<double>(log.size());
}

std::vector<AttackLogEntry> SubstitutionRecords(
    const CorpusCorrection& result) {
  std::vector<AttackLogEntry> out;
  for (std::size_t d = 0; d < result.documents.size(); ++d) {
    for (const TokenCorrection& t : result.documents[d].tokens) {
      if (t.correction) {
        out.push_back({d, t.token_index, t.original, *t.correction});
      }
    }
  }
  return out;
}

}  // namespace veilbreak
