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

#include <sstream>

#include "test_util.h"
#include "veilbreak/error.h"
#include "veilbreak/lexicon.h"

namespace veilbreak {
namespace {

using testing::MakeVocab;
using testing::TempDir;
using testing::WriteText;

Vocabulary Parse(std::string_view text, Frequency min_frequency) {
  std::istringstream in{std::string(text)};
  return ParseVocabulary(in, min_frequency);
}

TEST(VocabularyTest, ThresholdFilter) {
  TempDir dir;
  WriteText(dir / "v.tsv", "money\t500\npya\t1\n");
  Vocabulary v = LoadVocabulary(dir / "v.tsv", 100);
  ASSERT_EQ(v.size(), 1u);
  EXPECT_EQ(v.FrequencyOf("money"), 500u);
  EXPECT_FALSE(v.Contains("pya"));
  EXPECT_EQ(v.min_frequency(), 100u);
}

TEST(VocabularyTest, CaseMergeThenThreshold) {
  Vocabulary v = Parse("Money\t60\nmoney\t60\n", 100);
  ASSERT_EQ(v.size(), 1u);
  EXPECT_EQ(v.FrequencyOf("money"), 60u + 60u);
  EXPECT_EQ(v.FrequencyOf("MONEY"), 120u);
}

TEST(VocabularyTest, EmptyFile) {
  TempDir dir;
  WriteText(dir / "v.tsv", "");
  EXPECT_TRUE(LoadVocabulary(dir / "v.tsv", 1).empty());
}

TEST(VocabularyTest, MissingFileIsIoError) {
  TempDir dir;
  EXPECT_THROW(LoadVocabulary(dir / "nope.tsv", 1), IoError);
}

TEST(VocabularyTest, MalformedLineNamesLine) {
  try {
    Parse("money\t5\nbroken line\n", 1);
    FAIL() << "expected ParseError";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 2u);
  }
  EXPECT_THROW(Parse("money\t-3\n", 1), ParseError);
  EXPECT_THROW(Parse("money\tabc\n", 1), ParseError);
  EXPECT_THROW(Parse("two words\t3\n", 1), ParseError);
}

TEST(VocabularyTest, CrlfAndBlankLines) {
  Vocabulary v = Parse("money\t5\r\n\ncost\t7\r\n", 1);
  EXPECT_EQ(v.size(), 2u);
  EXPECT_EQ(v.FrequencyOf("cost"), 7u);
}

TEST(VocabularyTest, SerializationIsSortedAndIdempotent) {
  Vocabulary v = Parse("zeta\t3\nAlpha\t9\nmid\t4\n", 1);
  std::ostringstream first;
  WriteVocabulary(v, first);
  EXPECT_EQ(first.str(), "alpha\t9\nmid\t4\nzeta\t3\n");
  std::ostringstream second;
  WriteVocabulary(Parse(first.str(), 1), second);
  EXPECT_EQ(first.str(), second.str());

  TempDir dir;
  SaveVocabulary(v, dir / "out.tsv");
  EXPECT_EQ(testing::ReadText(dir / "out.tsv"), first.str());
}

TEST(VocabularyTest, EveryMemberIsValid) {
  Vocabulary v = Parse("money\t5\ncost\t1\nyou're\t3\n", 1);
  for (const VocabEntry& e : v.entries()) EXPECT_TRUE(IsValid(v, e.word));
}

TEST(AugmentTest, AddsFrequentSlang) {
  Vocabulary v = MakeVocab({{"money", 500}}, 100);
  std::vector<std::string> corpus = {"lol lol lol", "LOL lol", "lol money"};
  Vocabulary out = AugmentFromCorpus(v, corpus, 5);
  EXPECT_TRUE(out.Contains("lol"));
  EXPECT_EQ(out.FrequencyOf("lol"), 6u);
  EXPECT_EQ(out.FrequencyOf("money"), 500u);
}

TEST(AugmentTest, BelowThresholdAbsent) {
  Vocabulary v = MakeVocab({{"money", 500}});
  std::vector<std::string> corpus = {"tmr tmr tmr tmr"};
  EXPECT_FALSE(AugmentFromCorpus(v, corpus, 5).Contains("tmr"));
}

TEST(AugmentTest, EmptyCorpusIsIdentity) {
  Vocabulary v = MakeVocab({{"money", 500}, {"cost", 20}});
  Vocabulary out = AugmentFromCorpus(v, {}, 5);
  ASSERT_EQ(out.size(), v.size());
  for (const VocabEntry& e : v.entries()) {
    EXPECT_EQ(out.FrequencyOf(e.word), e.frequency);
  }
}

TEST(AugmentTest, ExistingEntriesKeepMaximum) {
  Vocabulary v = MakeVocab({{"money", 2}});
  std::vector<std::string> corpus = {"money money money money money money"};
  EXPECT_EQ(AugmentFromCorpus(v, corpus, 5).FrequencyOf("money"), 6u);
  EXPECT_THROW(AugmentFromCorpus(v, corpus, 0), ContractViolation);
}

TEST(IsValidTest, Rules) {
  Vocabulary v = MakeVocab({{"money", 500}, {"stupid", 300}, {"stud", 200}});
  EXPECT_TRUE(IsValid(v, "money"));
  EXPECT_TRUE(IsValid(v, "Money"));
  EXPECT_FALSE(IsValid(v, "stupd"));
  EXPECT_TRUE(IsValid(v, "1234"));
  EXPECT_TRUE(IsValid(v, ","));
  EXPECT_TRUE(IsValid(v, "$URL$"));
  EXPECT_FALSE(IsValid(v, "4ever"));
}

TEST(SensitiveTest, Examples) {
  const FunctionWordList& fwl = FunctionWordList::Default();
  Vocabulary v = MakeVocab({{"stupid", 150}, {"ox", 1000}, {"should", 10000}});
  EXPECT_TRUE(IsSensitiveEligible(v, fwl, "stupid", 100));
  EXPECT_FALSE(IsSensitiveEligible(v, fwl, "stupid", 151));
  EXPECT_FALSE(IsSensitiveEligible(v, fwl, "ox", 1));
  EXPECT_FALSE(IsSensitiveEligible(v, fwl, "should", 1));
  EXPECT_FALSE(IsSensitiveEligible(v, fwl, "absent", 0));
}

TEST(SensitiveTest, EligibilityImpliesValidity) {
  const FunctionWordList& fwl = FunctionWordList::Default();
  Vocabulary v = MakeVocab({{"stupid", 150}, {"money", 80}, {"the", 900}});
  for (std::string_view w : {"stupid", "money", "the", "nothere", "xyzzy"}) {
    if (IsSensitiveEligible(v, fwl, w, v.min_frequency())) {
      EXPECT_TRUE(IsValid(v, w)) << w;
    }
  }
}

TEST(FunctionWordsTest, BundledListCoversModals) {
  const FunctionWordList& fwl = FunctionWordList::Default();
  for (std::string_view w : {"must", "ought", "shall", "should", "the"}) {
    EXPECT_TRUE(fwl.Contains(w)) << w;
  }
  EXPECT_TRUE(fwl.Contains("Should"));
  EXPECT_FALSE(fwl.Contains("stupid"));
}

TEST(FunctionWordsTest, FileMatchesBundledList) {
  FunctionWordList from_file =
      FunctionWordList::Load(testing::DataPath("function_words.txt"));
  EXPECT_EQ(from_file.size(), FunctionWordList::Default().size());
}

TEST(FunctionWordsTest, EmptyListRejected) {
  EXPECT_THROW(FunctionWordList::FromWords({}), DataError);
  TempDir dir;
  WriteText(dir / "fw.txt", "# only a comment\n");
  EXPECT_THROW(FunctionWordList::Load(dir / "fw.txt"), DataError);
}

}  // namespace
}  // namespace veilbreak
