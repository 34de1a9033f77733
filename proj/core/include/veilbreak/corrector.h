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

#ifndef VEILBREAK_CORRECTOR_H_
#define VEILBREAK_CORRECTOR_H_

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "veilbreak/corpus.h"
#include "veilbreak/editdist.h"
#include "veilbreak/embedding.h"
#include "veilbreak/lexicon.h"
#include "veilbreak/textnorm.h"

namespace veilbreak {

enum class SelectionMode {
  kContext,    // embedding candidate-context distance
  kFrequency,  // highest vocabulary frequency (baseline)
};

struct CorrectorConfig {
  int max_radius = kDefaultMaxRadius;
  int window = kDefaultWindow;
  SelectionMode mode = SelectionMode::kContext;
};

struct TokenCorrection {
  std::size_t token_index = 0;
  std::string original;
  bool flagged = false;
  std::optional<CandidateSet> candidates;
  std::optional<std::string> correction;
  std::vector<ScoredCandidate> scores;
  bool frequency_fallback = false;
};

struct CorrectionCounters {
  std::size_t flagged = 0;
  std::size_t corrected = 0;
  std::size_t unchanged_oov = 0;

  CorrectionCounters& operator+=(const CorrectionCounters& o) {
    flagged += o.flagged;
    corrected += o.corrected;
    unchanged_oov += o.unchanged_oov;
    return *this;
  }
};

struct CorrectionResult {
  // One record per token; token_index is relative to the unit corrected
  // (sentence or whole document).
  std::vector<TokenCorrection> tokens;
  std::string corrected_text;
  CorrectionCounters counters;
};

struct CorpusCorrection {
  Corpus corrected;
  // Parallel to the input corpus.
  std::vector<CorrectionResult> documents;
  CorrectionCounters totals;
};

// Non-word error correction: flag word tokens that fail IsValid, enumerate
// minimal-distance candidates, and pick one by context. Context is built
// from the vocabulary-valid word and number tokens of the same sentence as
// they appear in the input, so earlier corrections never feed later ones.
class Corrector {
 public:
  // The referenced objects must outlive the corrector.
  Corrector(const Vocabulary& vocab, const CandidateIndex& index,
            const EmbeddingTable& embeddings, CorrectorConfig config = {});

  CorrectionResult CorrectSentence(const Sentence& sentence) const;
  CorrectionResult CorrectDocument(std::string_view text) const;
  CorpusCorrection CorrectCorpus(std::span<const Document> corpus) const;

  const CorrectorConfig& config() const { return config_; }

 private:
  const Vocabulary& vocab_;
  const CandidateIndex& index_;
  const EmbeddingTable& embeddings_;
  CorrectorConfig config_;
};

// Share of logged attack positions whose chosen correction equals the
// logged original (case-insensitive). Throws ContractViolation when the log
// does not line up with the corrected corpus, DataError on an empty log.
double CorrectionAccuracy(std::span<const AttackLogEntry> log,
                          const CorpusCorrection& result);

// `doc_id<TAB>token_index<TAB>original<TAB>correction` for every
// substitution, the same layout as the attack log.
std::vector<AttackLogEntry> SubstitutionRecords(const CorpusCorrection& result);

}  // namespace veilbreak

#endif  // VEILBREAK_CORRECTOR_H_
