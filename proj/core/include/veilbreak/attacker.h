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

#ifndef VEILBREAK_ATTACKER_H_
#define VEILBREAK_ATTACKER_H_

#include <cstdint>
#include <filesystem>
#include <functional>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <unordered_set>
#include <variant>
#include <vector>

#include "veilbreak/corpus.h"
#include "veilbreak/lexicon.h"
#include "veilbreak/spam_nb.h"
#include "veilbreak/textnorm.h"

namespace veilbreak {

enum class PerturbKind { kInsertion, kPermutation, kReplacement, kRemoval };

std::string_view ToString(PerturbKind kind);
std::optional<PerturbKind> ParsePerturbKind(std::string_view name);

// One character-level edit. `position` counts scalar values. For a
// permutation the character at `position` swaps with the next one.
struct PerturbOp {
  PerturbKind kind = PerturbKind::kRemoval;
  std::size_t position = 0;
  char32_t ch = 0;  // insertion / replacement only
};

// Applies exactly one edit. Throws ContractViolation when the word is
// shorter than three characters or the op is out of range.
std::string Perturb(std::string_view word, const PerturbOp& op);

inline constexpr int kMaxAttackEdits = 2;
inline constexpr int kMisspellingAttempts = 50;

struct AttackSpec {
  int max_edits = kMaxAttackEdits;  // 1 or 2
  std::vector<PerturbKind> ops_allowed = {
      PerturbKind::kInsertion, PerturbKind::kPermutation,
      PerturbKind::kReplacement, PerturbKind::kRemoval};
  std::uint64_t rng_seed = 0;
  bool require_oov = true;

  // Throws ContractViolation if the spec is unusable.
  void Validate() const;
};

struct Misspelling {
  std::string text;       // equals the input word when perturbed is false
  bool perturbed = false;
};

// Applies 1..max_edits random allowed edits and resamples (up to 50 tries)
// until the result differs from `word`, stays one word token, lies within
// max_edits of it and, with require_oov, is not a valid word. Selecting
// eligible words is the caller's job.
Misspelling GenerateMisspelling(const Vocabulary& vocab, std::string_view word,
                                const AttackSpec& spec, std::mt19937_64& rng);
Misspelling GenerateMisspelling(const Vocabulary& vocab, std::string_view word,
                                const AttackSpec& spec);

// Features by log P(w|positive) - log P(w|negative), descending; ties by
// word. Returns at most top_k words.
std::vector<std::string> RankSensitiveWordsNb(
    const NaiveBayesModel& model, std::size_t top_k,
    std::string_view positive = kSpamLabel,
    std::string_view negative = kHamLabel);

// Any text -> real score (toxicity, spamminess, ...).
class KeywordScorer {
 public:
  virtual ~KeywordScorer() = default;
  virtual double Score(std::string_view text) const = 0;
};

// Sums per-word weights over the lowercased word tokens of the text.
class LexiconScorer : public KeywordScorer {
 public:
  LexiconScorer() = default;
  explicit LexiconScorer(std::unordered_map<std::string, double> weights);

  // `word<TAB>weight` lines.
  static LexiconScorer Load(const std::filesystem::path& path);

  double Score(std::string_view text) const override;

 private:
  std::unordered_map<std::string, double> weights_;
};

struct SensitiveFilter {
  const Vocabulary* vocab = nullptr;
  const FunctionWordList* function_words = nullptr;
  Frequency min_count = 1;

  bool operator()(std::string_view word) const;
};

struct ScorerTarget {
  std::size_t token_index;  // within the sentence
  std::string word;         // lowercased
};

// The eligible word whose deletion lowers the score the most. Words whose
// deletion does not lower the score are never targets; ties go to the
// earliest position.
std::optional<ScorerTarget> RankSensitiveWordScorer(
    const KeywordScorer& scorer, const Sentence& sentence,
    const SensitiveFilter& eligible);

// Attack every occurrence of these (lowercased) words.
struct WordListTargets {
  std::unordered_set<std::string> words;
};

// Attack at most one word per sentence, chosen by deletion ranking.
struct ScorerTargets {
  const KeywordScorer* scorer = nullptr;
  SensitiveFilter eligible;
};

using TargetStrategy = std::variant<WordListTargets, ScorerTargets>;

struct FailedAttack {
  std::size_t doc_id;
  std::size_t token_index;
  std::string word;
};

struct AttackOutcome {
  Corpus revised;
  std::vector<AttackLogEntry> log;
  std::vector<FailedAttack> failures;
};

// Rewrites the selected documents (all when `select` is empty). Each
// document draws from its own generator derived from spec.rng_seed and its
// id, so results do not depend on processing order.
AttackOutcome AttackCorpus(
    std::span<const Document> corpus, const TargetStrategy& targets,
    const AttackSpec& spec, const Vocabulary& vocab,
    const std::function<bool(const Document&)>& select = {});

// Puts the logged originals back. Throws ContractViolation when a log entry
// does not match the revised text.
Corpus InvertAttack(std::span<const Document> revised,
                    std::span<const AttackLogEntry> log);

// Per-document seed used by AttackCorpus.
std::uint64_t DocumentSeed(std::uint64_t seed, std::size_t doc_id);

}  // namespace veilbreak

#endif  // VEILBREAK_ATTACKER_H_
