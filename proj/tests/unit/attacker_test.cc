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

#include <gtest/gtest.h>

#include <algorithm>
#include <cctype>
#include <cmath>
#include <set>

#include "test_util.h"
#include "veilbreak/attacker.h"
#include "veilbreak/editdist.h"
#include "veilbreak/error.h"
#include "veilbreak/spam_nb.h"
#include "veilbreak/utf8.h"

namespace veilbreak {
namespace {

using testing::MakeVocab;

Vocabulary SmallVocab() {
  return MakeVocab({{"money", 900}, {"cost", 500}, {"stupid", 150},
                    {"fuck", 40}, {"easy", 300}, {"make", 800},
                    {"with", 2000}, {"little", 700}, {"people", 600},
                    {"should", 5000}, {"stop", 400}, {"being", 900}});
}

TEST(PerturbTest, TableExamples) {
  EXPECT_EQ(Perturb("idiot", {PerturbKind::kInsertion, 4, U'.'}), "idio.t");
  EXPECT_EQ(Perturb("money", {PerturbKind::kPermutation, 2}), "moeny");
  EXPECT_EQ(Perturb("stupid", {PerturbKind::kRemoval, 4}), "stupd");
  EXPECT_EQ(Perturb("stupid", {PerturbKind::kInsertion, 3, U'*'}), "stu*pid");
  EXPECT_EQ(Perturb("hate", {PerturbKind::kPermutation, 0}), "ahte");
  EXPECT_EQ(Perturb("cost", {PerturbKind::kReplacement, 3, U'g'}), "cosg");
}

TEST(PerturbTest, Preconditions) {
  EXPECT_THROW(Perturb("aa", {PerturbKind::kRemoval, 0}), ContractViolation);
  EXPECT_THROW(Perturb("abc", {PerturbKind::kPermutation, 2}),
               ContractViolation);
  EXPECT_THROW(Perturb("abc", {PerturbKind::kRemoval, 3}), ContractViolation);
  EXPECT_THROW(Perturb("abc", {PerturbKind::kInsertion, 4, U'x'}),
               ContractViolation);
  EXPECT_THROW(Perturb("abc", {PerturbKind::kReplacement, 0, U'X'}),
               ContractViolation);
}

TEST(PerturbKindTest, NamesRoundTrip) {
  for (PerturbKind k : {PerturbKind::kInsertion, PerturbKind::kPermutation,
                        PerturbKind::kReplacement, PerturbKind::kRemoval}) {
    EXPECT_EQ(ParsePerturbKind(ToString(k)), k);
  }
  EXPECT_FALSE(ParsePerturbKind("swap"));
}

TEST(AttackSpecTest, Validate) {
  AttackSpec spec;
  EXPECT_NO_THROW(spec.Validate());
  spec.max_edits = 3;
  EXPECT_THROW(spec.Validate(), ContractViolation);
  spec.max_edits = 1;
  spec.ops_allowed.clear();
  EXPECT_THROW(spec.Validate(), ContractViolation);
}

TEST(GenerateMisspellingTest, SingleEditBudget) {
  const Vocabulary vocab = SmallVocab();
  AttackSpec spec;
  spec.max_edits = 1;
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    spec.rng_seed = seed;
    Misspelling m = GenerateMisspelling(vocab, "stupid", spec);
    ASSERT_TRUE(m.perturbed);
    EXPECT_EQ(DlDistance("stupid", m.text), 1);
    EXPECT_FALSE(IsValid(vocab, m.text));
    EXPECT_EQ(TokenizeFlat(m.text).size(), 1u) << m.text;
  }
}

TEST(GenerateMisspellingTest, PermutationOnlyReachesMoeny) {
  const Vocabulary vocab = SmallVocab();
  AttackSpec spec;
  spec.max_edits = 1;
  spec.ops_allowed = {PerturbKind::kPermutation};
  std::set<std::string> seen;
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    spec.rng_seed = seed;
    Misspelling m = GenerateMisspelling(vocab, "money", spec);
    ASSERT_TRUE(m.perturbed);
    EXPECT_EQ(m.text.size(), 5u);
    seen.insert(m.text);
  }
  EXPECT_EQ(seen, (std::set<std::string>{"omney", "mnoey", "moeny", "monye"}));
}

TEST(GenerateMisspellingTest, TwoEditBudgetIsOovAndWithinRadius) {
  const Vocabulary vocab = SmallVocab();
  AttackSpec spec;
  for (std::uint64_t seed = 0; seed < 300; ++seed) {
    spec.rng_seed = seed;
    Misspelling m = GenerateMisspelling(vocab, "fuck", spec);
    ASSERT_TRUE(m.perturbed);
    const int d = DlDistance("fuck", m.text);
    EXPECT_GE(d, 1);
    EXPECT_LE(d, 2);
    EXPECT_FALSE(IsValid(vocab, m.text));
  }
}

TEST(GenerateMisspellingTest, DeterministicForSeed) {
  const Vocabulary vocab = SmallVocab();
  AttackSpec spec;
  spec.rng_seed = 42;
  EXPECT_EQ(GenerateMisspelling(vocab, "money", spec).text,
            GenerateMisspelling(vocab, "money", spec).text);
}

TEST(GenerateMisspellingTest, GivesUpWhenEveryVariantIsValid) {
  // Every single permutation of "aab" is in the vocabulary.
  Vocabulary vocab = MakeVocab({{"aab", 1}, {"aba", 1}});
  AttackSpec spec;
  spec.max_edits = 1;
  spec.ops_allowed = {PerturbKind::kPermutation};
  Misspelling m = GenerateMisspelling(vocab, "aab", spec);
  EXPECT_FALSE(m.perturbed);
  EXPECT_EQ(m.text, "aab");
  spec.require_oov = false;
  EXPECT_TRUE(GenerateMisspelling(vocab, "aab", spec).perturbed);
  EXPECT_THROW(GenerateMisspelling(vocab, "ab", spec), ContractViolation);
}

NaiveBayesModel ToyModel() {
  // log P(w|c) chosen by hand; ranking is by spam-minus-ham log ratio.
  return NaiveBayesModel(
      {"spam", "ham"}, {std::log(0.5), std::log(0.5)},
      {"money", "cost", "hello", "meeting", "free"},
      {{std::log(0.4), std::log(0.2), std::log(0.1), std::log(0.05),
        std::log(0.25)},
       {std::log(0.05), std::log(0.2), std::log(0.3), std::log(0.4),
        std::log(0.05)}});
}

TEST(RankNbTest, HandComputedOrder) {
  // Ratios: money ln 8, free ln 5, cost 0, hello ln(1/3), meeting ln(1/8).
  EXPECT_EQ(RankSensitiveWordsNb(ToyModel(), 5),
            (std::vector<std::string>{"money", "free", "cost", "hello",
                                      "meeting"}));
  EXPECT_EQ(RankSensitiveWordsNb(ToyModel(), 2),
            (std::vector<std::string>{"money", "free"}));
  EXPECT_EQ(RankSensitiveWordsNb(ToyModel(), 1, "ham", "spam"),
            (std::vector<std::string>{"meeting"}));
  EXPECT_THROW(RankSensitiveWordsNb(ToyModel(), 1, "toxic", "ham"), DataError);
}

TEST(RankNbTest, SpamOnlyWordRanksFirst) {
  Corpus corpus = {{"spam", "money now money"},
                   {"spam", "money offer now"},
                   {"ham", "meeting now"},
                   {"ham", "offer meeting lunch"}};
  NaiveBayesModel model = TrainNaiveBayes(corpus, 100);
  auto ranked = RankSensitiveWordsNb(model, 10);
  ASSERT_FALSE(ranked.empty());
  EXPECT_EQ(ranked.front(), "money");
  // "now" and "offer" are balanced, so they trail every skewed spam word.
  auto pos = [&](const std::string& w) {
    return std::find(ranked.begin(), ranked.end(), w) - ranked.begin();
  };
  EXPECT_LT(pos("money"), pos("now"));
}

TEST(RankScorerTest, PicksStupid) {
  const Vocabulary vocab = SmallVocab();
  const FunctionWordList& fwl = FunctionWordList::Default();
  LexiconScorer scorer({{"stupid", 0.8}});
  auto sentence = Tokenize("people should stop being stupid");
  auto t = RankSensitiveWordScorer(scorer, sentence[0], {&vocab, &fwl, 1});
  ASSERT_TRUE(t);
  EXPECT_EQ(t->word, "stupid");
  EXPECT_EQ(t->token_index, 4u);
}

TEST(RankScorerTest, NoScoredWords) {
  const Vocabulary vocab = SmallVocab();
  const FunctionWordList& fwl = FunctionWordList::Default();
  LexiconScorer scorer({{"stupid", 0.8}});
  auto sentence = Tokenize("people should stop");
  EXPECT_FALSE(RankSensitiveWordScorer(scorer, sentence[0], {&vocab, &fwl, 1}));
}

TEST(RankScorerTest, HeavierWordWins) {
  const Vocabulary vocab = SmallVocab();
  const FunctionWordList& fwl = FunctionWordList::Default();
  LexiconScorer scorer({{"stupid", 0.3}, {"fuck", 0.9}});
  auto sentence = Tokenize("stupid fuck");
  auto t = RankSensitiveWordScorer(scorer, sentence[0], {&vocab, &fwl, 1});
  ASSERT_TRUE(t);
  EXPECT_EQ(t->word, "fuck");
  // Ineligible words (function words) are never targets.
  LexiconScorer fw({{"should", 5.0}});
  auto s2 = Tokenize("people should stop");
  EXPECT_FALSE(RankSensitiveWordScorer(fw, s2[0], {&vocab, &fwl, 1}));
}

TEST(LexiconScorerTest, LoadAndScore) {
  testing::TempDir dir;
  testing::WriteText(dir / "lex.tsv", "stupid\t0.5\nidiot\t1.25\n");
  LexiconScorer s = LexiconScorer::Load(dir / "lex.tsv");
  EXPECT_DOUBLE_EQ(s.Score("Stupid idiot, stupid"), 2.25);
  testing::WriteText(dir / "bad.tsv", "stupid 0.5\n");
  EXPECT_THROW(LexiconScorer::Load(dir / "bad.tsv"), ParseError);
}

TEST(AttackCorpusTest, BothTargetsPerturbed) {
  const Vocabulary vocab = SmallVocab();
  Corpus corpus = {{"spam", "make easy money with little cost"},
                   {"ham", "nothing to see"}};
  AttackSpec spec;
  spec.rng_seed = 9;
  AttackOutcome out =
      AttackCorpus(corpus, WordListTargets{{"money", "cost"}}, spec, vocab);
  ASSERT_EQ(out.log.size(), 2u);
  EXPECT_EQ(out.log[0].original, "money");
  EXPECT_EQ(out.log[0].token_index, 2u);
  EXPECT_EQ(out.log[1].original, "cost");
  EXPECT_EQ(out.log[1].token_index, 5u);
  EXPECT_NE(out.revised[0].text, corpus[0].text);
  EXPECT_EQ(out.revised[1].text, corpus[1].text);
  EXPECT_TRUE(out.failures.empty());
}

TEST(AttackCorpusTest, SeededRunsAreIdentical) {
  const Vocabulary vocab = SmallVocab();
  Corpus corpus = {{"spam", "Money money. Cost, money!"},
                   {"spam", "easy money"}};
  AttackSpec spec;
  spec.rng_seed = 5;
  WordListTargets targets{{"money", "cost"}};
  AttackOutcome a = AttackCorpus(corpus, targets, spec, vocab);
  AttackOutcome b = AttackCorpus(corpus, targets, spec, vocab);
  EXPECT_EQ(a.log, b.log);
  EXPECT_EQ(a.revised[0].text, b.revised[0].text);
  // Capitalization of the original survives the attack.
  EXPECT_TRUE(std::isupper(static_cast<unsigned char>(a.revised[0].text[0])));
}

TEST(AttackCorpusTest, SelectorRestrictsDocuments) {
  const Vocabulary vocab = SmallVocab();
  Corpus corpus = {{"ham", "easy money"}, {"spam", "easy money"}};
  AttackOutcome out = AttackCorpus(
      corpus, WordListTargets{{"money"}}, AttackSpec{}, vocab,
      [](const Document& d) { return d.label == "spam"; });
  ASSERT_EQ(out.log.size(), 1u);
  EXPECT_EQ(out.log[0].doc_id, 1u);
}

TEST(AttackCorpusTest, ScorerStrategy) {
  const Vocabulary vocab = SmallVocab();
  const FunctionWordList& fwl = FunctionWordList::Default();
  LexiconScorer scorer({{"stupid", 0.8}});
  Corpus corpus = {{"toxic", "people should stop being stupid. stop it."}};
  AttackOutcome out = AttackCorpus(
      corpus, ScorerTargets{&scorer, {&vocab, &fwl, 1}}, AttackSpec{}, vocab);
  ASSERT_EQ(out.log.size(), 1u);
  EXPECT_EQ(out.log[0].original, "stupid");
  EXPECT_EQ(out.log[0].token_index, 4u);
}

TEST(AttackCorpusTest, ShortTargetsAreReportedAsFailures) {
  const Vocabulary vocab = MakeVocab({{"ox", 5}});
  Corpus corpus = {{"spam", "an ox"}};
  AttackOutcome out =
      AttackCorpus(corpus, WordListTargets{{"ox"}}, AttackSpec{}, vocab);
  EXPECT_TRUE(out.log.empty());
  ASSERT_EQ(out.failures.size(), 1u);
  EXPECT_EQ(out.failures[0].word, "ox");
}

TEST(InvertAttackTest, RestoresRandomCorpora) {
  const Vocabulary vocab = SmallVocab();
  std::mt19937_64 rng(8);
  const std::vector<std::string> words = {"money", "Money", "cost", "easy",
                                          "with", "little", "stupid", ",",
                                          ".", "!", "make", "you're", "42"};
  std::uniform_int_distribution<std::size_t> pick(0, words.size() - 1);
  for (int trial = 0; trial < 100; ++trial) {
    Corpus corpus;
    for (int d = 0; d < 5; ++d) {
      std::string text;
      for (int i = 0; i < 15; ++i) text += (i ? " " : "") + words[pick(rng)];
      corpus.push_back({"spam", text});
    }
    AttackSpec spec;
    spec.rng_seed = static_cast<std::uint64_t>(trial);
    AttackOutcome out = AttackCorpus(
        corpus, WordListTargets{{"money", "cost", "stupid", "easy"}}, spec,
        vocab);
    for (const AttackLogEntry& e : out.log) {
      EXPECT_LE(DlDistance(utf8::ToLower(e.original), utf8::ToLower(e.misspelled)),
                spec.max_edits);
      EXPECT_FALSE(IsValid(vocab, e.misspelled));
    }
    Corpus restored = InvertAttack(out.revised, out.log);
    for (std::size_t i = 0; i < corpus.size(); ++i) {
      ASSERT_EQ(restored[i].text, corpus[i].text);
      ASSERT_EQ(restored[i].label, corpus[i].label);
    }
  }
}

TEST(InvertAttackTest, RejectsMismatchedLog) {
  Corpus revised = {{"spam", "easy moeny"}};
  std::vector<AttackLogEntry> wrong = {{0, 1, "money", "mnoey"}};
  EXPECT_THROW(InvertAttack(revised, wrong), ContractViolation);
  std::vector<AttackLogEntry> beyond = {{3, 0, "money", "moeny"}};
  EXPECT_THROW(InvertAttack(revised, beyond), ContractViolation);
}

TEST(DocumentSeedTest, DistinctPerDocument) {
  std::set<std::uint64_t> seeds;
  for (std::size_t d = 0; d < 1000; ++d) seeds.insert(DocumentSeed(1, d));
  EXPECT_EQ(seeds.size(), 1000u);
  EXPECT_NE(DocumentSeed(1, 0), DocumentSeed(2, 0));
}

}  // namespace
}  // namespace veilbreak
