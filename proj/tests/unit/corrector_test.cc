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

#include <fstream>

#include "test_util.h"
#include "veilbreak/corrector.h"
#include "veilbreak/error.h"

namespace veilbreak {
namespace {

using testing::DataPath;
using testing::MakeVocab;

std::vector<std::string> Lines(const std::filesystem::path& path) {
  std::ifstream in(path);
  std::vector<std::string> out;
  for (std::string line; std::getline(in, line);) out.push_back(line);
  return out;
}

class FixtureTest : public ::testing::Test {
 protected:
  FixtureTest()
      : vocab_(LoadVocabulary(DataPath("fixtures/insult_vocab.tsv"), 1)),
        table_(LoadEmbeddings(DataPath("fixtures/insult_embeddings.txt"))),
        index_(vocab_) {}

  Vocabulary vocab_;
  EmbeddingTable table_;
  CandidateIndex index_;
};

TEST_F(FixtureTest, ObfuscatedInsults) {
  Corrector corrector(vocab_, index_, table_);
  const auto revised = Lines(DataPath("fixtures/insult_revised.txt"));
  const auto expected = Lines(DataPath("fixtures/insult_corrected.txt"));
  ASSERT_EQ(revised.size(), 3u);
  for (std::size_t i = 0; i < revised.size(); ++i) {
    CorrectionResult r = corrector.CorrectDocument(revised[i]);
    EXPECT_EQ(r.corrected_text, expected[i]);
    EXPECT_EQ(r.counters.flagged, 1u);
    EXPECT_EQ(r.counters.corrected, 1u);
  }
}

TEST_F(FixtureTest, AhteHasThreeCandidates) {
  Corrector corrector(vocab_, index_, table_);
  CorrectionResult r = corrector.CorrectDocument("anti American ahte groups");
  const TokenCorrection& t = r.tokens[2];
  ASSERT_TRUE(t.flagged);
  ASSERT_TRUE(t.candidates);
  EXPECT_EQ(t.candidates->candidates.size(), 3u);
  EXPECT_EQ(t.correction, "hate");
  EXPECT_EQ(t.scores.size(), 3u);
  EXPECT_FALSE(t.frequency_fallback);
}

TEST_F(FixtureTest, FrequencyBaselinePicksDistractor) {
  Corrector baseline(vocab_, index_, table_,
                     {kDefaultMaxRadius, kDefaultWindow,
                      SelectionMode::kFrequency});
  EXPECT_EQ(baseline.CorrectDocument("anti American ahte groups").corrected_text,
            "anti American ate groups");
}

TEST_F(FixtureTest, SpamSentences) {
  Corrector corrector(vocab_, index_, table_);
  const auto revised = Lines(DataPath("fixtures/spam_revised.txt"));
  const auto expected = Lines(DataPath("fixtures/spam_corrected.txt"));
  ASSERT_EQ(revised.size(), 2u);
  Corpus corpus;
  for (const auto& line : revised) corpus.push_back({"spam", line});
  CorpusCorrection out = corrector.CorrectCorpus(corpus);
  EXPECT_EQ(out.corrected[0].text, expected[0]);
  EXPECT_EQ(out.corrected[1].text, expected[1]);
  EXPECT_EQ(out.totals.flagged, 6u);
  EXPECT_EQ(out.totals.corrected, 6u);
}

TEST_F(FixtureTest, CleanTextIsUntouchedAndIdempotent) {
  Corrector corrector(vocab_, index_, table_);
  const std::string clean = "the stupid and stubborn administrators";
  CorrectionResult r = corrector.CorrectDocument(clean);
  EXPECT_EQ(r.corrected_text, clean);
  EXPECT_EQ(r.counters.flagged, 0u);
  for (const auto& line : Lines(DataPath("fixtures/insult_revised.txt"))) {
    const std::string once = corrector.CorrectDocument(line).corrected_text;
    EXPECT_EQ(corrector.CorrectDocument(once).corrected_text, once);
  }
}

TEST_F(FixtureTest, NoCandidateLeavesTokenUnchanged) {
  Corrector corrector(vocab_, index_, table_);
  CorrectionResult r = corrector.CorrectDocument("the zzzzqqqq groups, 42 $URL$");
  EXPECT_EQ(r.corrected_text, "the zzzzqqqq groups, 42 $URL$");
  EXPECT_EQ(r.counters.flagged, 1u);
  EXPECT_EQ(r.counters.unchanged_oov, 1u);
  EXPECT_EQ(r.counters.corrected, 0u);
  EXPECT_FALSE(r.tokens[1].correction);
}

TEST_F(FixtureTest, CapitalizationRestored) {
  Corrector corrector(vocab_, index_, table_);
  EXPECT_EQ(corrector.CorrectDocument("Ahte groups.").corrected_text,
            "Hate groups.");
}

TEST(CorrectorTest, StupdResolvedByContext) {
  Vocabulary vocab = MakeVocab({{"the", 100}, {"and", 100}, {"stubborn", 5},
                                {"administrators", 5}, {"stud", 900},
                                {"stupid", 10}});
  EmbeddingTable table(3);
  std::vector<double> stubborn = {1, 0, 0}, admins = {0, 1, 0},
                      stupid = {1, 1, 0}, stud = {0, 0, 1};
  table.Add("stubborn", stubborn);
  table.Add("administrators", admins);
  table.Add("stupid", stupid);
  table.Add("stud", stud);
  CandidateIndex index(vocab);
  Corrector corrector(vocab, index, table);
  CorrectionResult r =
      corrector.CorrectDocument("the stupd and stubborn administrators");
  EXPECT_EQ(r.corrected_text, "the stupid and stubborn administrators");
  const TokenCorrection& t = r.tokens[1];
  ASSERT_EQ(t.scores.size(), 2u);
  // "the" and "and" have no embeddings, so windows 1 and 2 see at most
  // "stubborn"; by window 3 stupid lies in the span and stud never does.
  const ScoredCandidate& stud_score = t.scores[0];
  const ScoredCandidate& stupid_score = t.scores[1];
  ASSERT_EQ(stupid_score.word, "stupid");
  EXPECT_NEAR(stupid_score.per_window[2].second, 0.0, 1e-12);
  EXPECT_NEAR(stud_score.per_window[2].second, 1.0, 1e-12);
  EXPECT_LT(stupid_score.weighted_distance, stud_score.weighted_distance);
}

TEST(CorrectorTest, OtherOovTokensAreNotContext) {
  Vocabulary vocab = MakeVocab({{"stubborn", 5}, {"stud", 900},
                                {"stupid", 10}, {"horse", 5}});
  EmbeddingTable table(3);
  std::vector<double> stubborn = {1, 0, 0}, horse = {0, 0, 1},
                      stupid = {1, 0, 0}, stud = {0, 0, 1};
  table.Add("stubborn", stubborn);
  table.Add("horse", horse);
  table.Add("stupid", stupid);
  table.Add("stud", stud);
  CandidateIndex index(vocab);
  Corrector corrector(vocab, index, table);
  // "horsx" is itself OOV and must not pull "stupd" toward "stud", nor may
  // its correction ("horse") be used as context.
  CorrectionResult r = corrector.CorrectDocument("horsx stupd stubborn");
  EXPECT_EQ(r.corrected_text, "horse stupid stubborn");
  EXPECT_EQ(r.counters.corrected, 2u);
}

TEST(CorrectionAccuracyTest, AllNoneAndMismatch) {
  Vocabulary vocab = MakeVocab({{"money", 10}, {"cost", 10}});
  EmbeddingTable table(2);
  std::vector<double> a = {1, 0}, b = {0, 1};
  table.Add("money", a);
  table.Add("cost", b);
  CandidateIndex index(vocab);
  Corrector corrector(vocab, index, table);
  Corpus revised = {{"spam", "moeny cosgt"}};
  CorpusCorrection out = corrector.CorrectCorpus(revised);

  std::vector<AttackLogEntry> right = {{0, 0, "money", "moeny"},
                                       {0, 1, "cost", "cosgt"}};
  EXPECT_DOUBLE_EQ(CorrectionAccuracy(right, out), 1.0);
  std::vector<AttackLogEntry> wrong = {{0, 0, "mooney", "moeny"},
                                       {0, 1, "cast", "cosgt"}};
  EXPECT_DOUBLE_EQ(CorrectionAccuracy(wrong, out), 0.0);
  std::vector<AttackLogEntry> half = {{0, 0, "Money", "moeny"},
                                      {0, 1, "cast", "cosgt"}};
  EXPECT_DOUBLE_EQ(CorrectionAccuracy(half, out), 0.5);

  std::vector<AttackLogEntry> other_doc = {{1, 0, "money", "moeny"}};
  EXPECT_THROW(CorrectionAccuracy(other_doc, out), ContractViolation);
  std::vector<AttackLogEntry> other_token = {{0, 0, "cost", "cosgt"}};
  EXPECT_THROW(CorrectionAccuracy(other_token, out), ContractViolation);
  EXPECT_THROW(CorrectionAccuracy({}, out), DataError);

  auto records = SubstitutionRecords(out);
  ASSERT_EQ(records.size(), 2u);
  EXPECT_EQ(records[1], (AttackLogEntry{0, 1, "cosgt", "cost"}));
}

TEST(CorrectorTest, EmptyInputs) {
  Vocabulary vocab = MakeVocab({{"money", 10}});
  EmbeddingTable table(2);
  CandidateIndex index(vocab);
  Corrector corrector(vocab, index, table);
  EXPECT_TRUE(corrector.CorrectCorpus(Corpus{}).corrected.empty());
  CorrectionResult r = corrector.CorrectDocument("");
  EXPECT_TRUE(r.tokens.empty());
  EXPECT_EQ(r.corrected_text, "");
  // No embeddings at all: frequency fallback still corrects.
  EXPECT_EQ(corrector.CorrectDocument("moeny").corrected_text, "money");
}

}  // namespace
}  // namespace veilbreak
