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

#include "veilbreak/attacker.h"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <map>

#include "veilbreak/editdist.h"
#include "veilbreak/error.h"
#include "veilbreak/logging.h"
#include "veilbreak/utf8.h"

namespace veilbreak {
namespace {

constexpr std::u32string_view kLetters = U"abcdefghijklmnopqrstuvwxyz";
constexpr std::u32string_view kObfuscators = U".*";

// Uniform integer in [0, n). Rejection sampling keeps the stream identical
// across standard libraries, unlike std::uniform_int_distribution.
std::size_t UniformIndex(std::mt19937_64& rng, std::size_t n) {
  const std::uint64_t bound = static_cast<std::uint64_t>(n);
  const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
  std::uint64_t x;
  do {
    x = rng();
  } while (x >= limit);
  return static_cast<std::size_t>(x % bound);
}

bool IsObfuscator(char32_t c) {
  return kObfuscators.find(c) != std::u32string_view::npos;
}

char32_t SampleChar(std::mt19937_64& rng, bool allow_obfuscator) {
  const std::size_t n =
      kLetters.size() + (allow_obfuscator ? kObfuscators.size() : 0);
  const std::size_t i = UniformIndex(rng, n);
  return i < kLetters.size() ? kLetters[i] : kObfuscators[i - kLetters.size()];
}

// Random op that is in range for a word of `len` scalars. Obfuscation
// characters only go to interior positions so the word stays one token.
std::optional<PerturbOp> SampleOp(std::mt19937_64& rng, PerturbKind kind,
                                  const std::u32string& word) {
  const std::size_t len = word.size();
  PerturbOp op;
  op.kind = kind;
  switch (kind) {
    case PerturbKind::kInsertion: {
      op.position = UniformIndex(rng, len + 1);
      const bool interior = op.position > 0 && op.position < len;
      op.ch = SampleChar(rng, interior);
      return op;
    }
    case PerturbKind::kPermutation:
      if (len < 2) return std::nullopt;
      op.position = UniformIndex(rng, len - 1);
      return op;
    case PerturbKind::kReplacement: {
      if (len == 0) return std::nullopt;
      op.position = UniformIndex(rng, len);
      const bool interior = op.position > 0 && op.position + 1 < len;
      do {
        op.ch = SampleChar(rng, interior);
      } while (op.ch == word[op.position]);
      return op;
    }
    case PerturbKind::kRemoval:
      if (len < 2) return std::nullopt;
      op.position = UniformIndex(rng, len);
      return op;
  }
  return std::nullopt;
}

void ApplyOp(std::u32string& w, const PerturbOp& op) {
  switch (op.kind) {
    case PerturbKind::kInsertion:
      w.insert(w.begin() + static_cast<std::ptrdiff_t>(op.position), op.ch);
      break;
    case PerturbKind::kPermutation:
      std::swap(w[op.position], w[op.position + 1]);
      break;
    case PerturbKind::kReplacement:
      w[op.position] = op.ch;
      break;
    case PerturbKind::kRemoval:
      w.erase(op.position, 1);
      break;
  }
}

bool IsSingleWordToken(const std::string& text) {
  const auto tokens = TokenizeFlat(text);
  return tokens.size() == 1 && tokens[0].kind == TokenKind::kWord &&
         tokens[0].surface == text;
}

std::string EmittedSurface(const Token& original, const std::string& lower) {
  if (!original.surface.empty() &&
      utf8::IsUpper(utf8::DecodeAt(original.surface, 0))) {
    return utf8::CapitalizeFirst(lower);
  }
  return lower;
}

std::uint64_t SplitMix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

// Text of the sentence with token `skip` and its leading whitespace removed.
std::string WithoutToken(const Sentence& sentence, std::size_t skip) {
  std::string out;
  for (std::size_t i = 0; i < sentence.tokens.size(); ++i) {
    if (i == skip) continue;
    out += sentence.tokens[i].space_before;
    out += sentence.tokens[i].surface;
  }
  return out;
}

}  // namespace

std::string_view ToString(PerturbKind kind) {
  switch (kind) {
    case PerturbKind::kInsertion:
      return "insertion";
    case PerturbKind::kPermutation:
      return "permutation";
    case PerturbKind::kReplacement:
      return "replacement";
    case PerturbKind::kRemoval:
      return "removal";
  }
  return "unknown";
}

std::optional<PerturbKind> ParsePerturbKind(std::string_view name) {
  for (PerturbKind k :
       {PerturbKind::kInsertion, PerturbKind::kPermutation,
        PerturbKind::kReplacement, PerturbKind::kRemoval}) {
    if (ToString(k) == name) return k;
  }
  return std::nullopt;
}

std::string Perturb(std::string_view word, const PerturbOp& op) {
  std::u32string w = utf8::Decode(word);
  if (w.size() < 3) {
    throw ContractViolation("perturb: word must have at least 3 characters");
  }
  const std::size_t len = w.size();
  bool in_range = false;
  switch (op.kind) {
    case PerturbKind::kInsertion:
      in_range = op.position <= len;
      break;
    case PerturbKind::kPermutation:
      in_range = op.position + 1 < len;
      break;
    case PerturbKind::kReplacement:
    case PerturbKind::kRemoval:
      in_range = op.position < len;
      break;
  }
  if (!in_range) {
    throw ContractViolation("perturb: position " + std::to_string(op.position) +
                            " out of range for " + std::string(ToString(op.kind)));
  }
  if ((op.kind == PerturbKind::kInsertion ||
       op.kind == PerturbKind::kReplacement) &&
      !(kLetters.find(op.ch) != std::u32string_view::npos ||
        IsObfuscator(op.ch))) {
    throw ContractViolation(
        "perturb: character must be a lowercase letter, '.' or '*'");
  }
  ApplyOp(w, op);
  return utf8::Encode(w);
}

void AttackSpec::Validate() const {
  if (max_edits < 1 || max_edits > kMaxAttackEdits) {
    throw ContractViolation("max_edits must be 1 or 2");
  }
  if (ops_allowed.empty()) {
    throw ContractViolation("at least one perturbation kind is required");
  }
}

Misspelling GenerateMisspelling(const Vocabulary& vocab, std::string_view word,
                                const AttackSpec& spec, std::mt19937_64& rng) {
  spec.Validate();
  const std::string lower = utf8::ToLower(word);
  const std::u32string original = utf8::Decode(lower);
  if (original.size() < 3) {
    throw ContractViolation("cannot misspell words shorter than 3 characters");
  }
  for (int attempt = 0; attempt < kMisspellingAttempts; ++attempt) {
    std::u32string w = original;
    const int edits = 1 + static_cast<int>(UniformIndex(
                              rng, static_cast<std::size_t>(spec.max_edits)));
    bool ok = true;
    for (int e = 0; e < edits && ok; ++e) {
      const PerturbKind kind =
          spec.ops_allowed[UniformIndex(rng, spec.ops_allowed.size())];
      auto op = SampleOp(rng, kind, w);
      if (!op) {
        ok = false;
        break;
      }
      ApplyOp(w, *op);
    }
    if (!ok || w == original) continue;
    std::string candidate = utf8::Encode(w);
    if (!IsSingleWordToken(candidate)) continue;
    if (DlDistance(original, w) > spec.max_edits) continue;
    if (spec.require_oov && IsValid(vocab, candidate)) continue;
    return {std::move(candidate), true};
  }
  return {lower, false};
}

Misspelling GenerateMisspelling(const Vocabulary& vocab, std::string_view word,
                                const AttackSpec& spec) {
  std::mt19937_64 rng(spec.rng_seed);
  return GenerateMisspelling(vocab, word, spec, rng);
}

std::vector<std::string> RankSensitiveWordsNb(const NaiveBayesModel& model,
                                              std::size_t top_k,
                                              std::string_view positive,
                                              std::string_view negative) {
  const std::size_t pos = model.ClassIndex(positive);
  const std::size_t neg = model.ClassIndex(negative);
  if (pos == NaiveBayesModel::npos || neg == NaiveBayesModel::npos) {
    throw DataError("model lacks class '" + std::string(positive) + "' or '" +
                    std::string(negative) + "'");
  }
  const auto features = model.features();
  std::vector<std::pair<double, std::size_t>> scored;
  scored.reserve(features.size());
  for (std::size_t k = 0; k < features.size(); ++k) {
    scored.emplace_back(
        model.log_likelihood(pos, k) - model.log_likelihood(neg, k), k);
  }
  std::sort(scored.begin(), scored.end(), [&](const auto& a, const auto& b) {
    if (a.first != b.first) return a.first > b.first;
    return features[a.second] < features[b.second];
  });
  std::vector<std::string> out;
  for (std::size_t i = 0; i < std::min(top_k, scored.size()); ++i) {
    out.push_back(features[scored[i].second]);
  }
  return out;
}

LexiconScorer::LexiconScorer(std::unordered_map<std::string, double> weights) {
  for (auto& [w, v] : weights) weights_[utf8::ToLower(w)] += v;
}

LexiconScorer LexiconScorer::Load(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open scorer lexicon: " + path.string());
  std::unordered_map<std::string, double> weights;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    const auto tab = line.find('\t');
    if (tab == std::string::npos) {
      throw ParseError("expected word<TAB>weight", lineno);
    }
    double value = 0.0;
    const char* begin = line.data() + tab + 1;
    const char* end = line.data() + line.size();
    auto [ptr, ec] = std::from_chars(begin, end, value);
    if (begin == end || ec != std::errc() || ptr != end) {
      throw ParseError("weight is not a number", lineno);
    }
    weights[line.substr(0, tab)] += value;
  }
  return LexiconScorer(std::move(weights));
}

double LexiconScorer::Score(std::string_view text) const {
  double total = 0.0;
  for (const Token& t : TokenizeFlat(text)) {
    auto it = weights_.find(t.lower);
    if (it != weights_.end()) total += it->second;
  }
  return total;
}

bool SensitiveFilter::operator()(std::string_view word) const {
  if (vocab == nullptr || function_words == nullptr) {
    throw ContractViolation("SensitiveFilter needs a vocabulary and a list");
  }
  return IsSensitiveEligible(*vocab, *function_words, word, min_count);
}

std::optional<ScorerTarget> RankSensitiveWordScorer(
    const KeywordScorer& scorer, const Sentence& sentence,
    const SensitiveFilter& eligible) {
  const double full = scorer.Score(Detokenize(sentence));
  std::optional<ScorerTarget> best;
  double best_score = full;
  for (std::size_t i = 0; i < sentence.tokens.size(); ++i) {
    const Token& t = sentence.tokens[i];
    if (t.kind != TokenKind::kWord || !eligible(t.lower)) continue;
    const double without = scorer.Score(WithoutToken(sentence, i));
    if (without < best_score) {
      best_score = without;
      best = ScorerTarget{i, t.lower};
    }
  }
  return best;
}

std::uint64_t DocumentSeed(std::uint64_t seed, std::size_t doc_id) {
  return SplitMix64(seed ^ SplitMix64(static_cast<std::uint64_t>(doc_id)));
}

AttackOutcome AttackCorpus(std::span<const Document> corpus,
                           const TargetStrategy& targets,
                           const AttackSpec& spec, const Vocabulary& vocab,
                           const std::function<bool(const Document&)>& select) {
  spec.Validate();
  AttackOutcome out;
  out.revised.assign(corpus.begin(), corpus.end());
  for (std::size_t doc_id = 0; doc_id < corpus.size(); ++doc_id) {
    const Document& doc = corpus[doc_id];
    if (select && !select(doc)) continue;
    std::mt19937_64 rng(DocumentSeed(spec.rng_seed, doc_id));
    std::vector<Sentence> sentences = Tokenize(doc.text);
    std::size_t base = 0;
    bool changed = false;
    for (Sentence& sentence : sentences) {
      std::vector<std::size_t> picks;
      if (const auto* list = std::get_if<WordListTargets>(&targets)) {
        for (std::size_t i = 0; i < sentence.tokens.size(); ++i) {
          const Token& t = sentence.tokens[i];
          if (t.kind == TokenKind::kWord && list->words.contains(t.lower)) {
            picks.push_back(i);
          }
        }
      } else {
        const auto& scored = std::get<ScorerTargets>(targets);
        if (scored.scorer == nullptr) {
          throw ContractViolation("scorer strategy without a scorer");
        }
        if (auto t = RankSensitiveWordScorer(*scored.scorer, sentence,
                                             scored.eligible)) {
          picks.push_back(t->token_index);
        }
      }
      for (std::size_t i : picks) {
        Token& t = sentence.tokens[i];
        if (utf8::Decode(t.lower).size() < 3) {
          out.failures.push_back({doc_id, base + i, t.lower});
          continue;
        }
        Misspelling m = GenerateMisspelling(vocab, t.lower, spec, rng);
        if (!m.perturbed) {
          log::Info("attack failed for '" + t.lower + "' in doc " +
                    std::to_string(doc_id));
          out.failures.push_back({doc_id, base + i, t.lower});
          continue;
        }
        std::string surface = EmittedSurface(t, m.text);
        out.log.push_back({doc_id, base + i, t.surface, surface});
        t.replacement = std::move(m.text);
        changed = true;
      }
      base += sentence.tokens.size();
    }
    if (changed) out.revised[doc_id].text = Detokenize(sentences);
  }
  return out;
}

Corpus InvertAttack(std::span<const Document> revised,
                    std::span<const AttackLogEntry> log) {
  std::map<std::size_t, std::vector<const AttackLogEntry*>> by_doc;
  for (const AttackLogEntry& e : log) {
    if (e.doc_id >= revised.size()) {
      throw ContractViolation("attack log refers to doc " +
                              std::to_string(e.doc_id) + " beyond the corpus");
    }
    by_doc[e.doc_id].push_back(&e);
  }
  Corpus restored(revised.begin(), revised.end());
  for (auto& [doc_id, entries] : by_doc) {
    std::vector<Sentence> sentences = Tokenize(revised[doc_id].text);
    std::vector<Token*> flat;
    for (Sentence& s : sentences) {
      for (Token& t : s.tokens) flat.push_back(&t);
    }
    for (const AttackLogEntry* e : entries) {
      if (e->token_index >= flat.size() ||
          flat[e->token_index]->surface != e->misspelled) {
        throw ContractViolation("attack log entry (doc " +
                                std::to_string(doc_id) + ", token " +
                                std::to_string(e->token_index) +
                                ") does not match the revised text");
      }
      flat[e->token_index]->replacement = e->original;
    }
    restored[doc_id].text = Detokenize(sentences);
  }
  return restored;
}

}  // namespace veilbreak
