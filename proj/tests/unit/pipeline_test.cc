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

#include <map>

#include "veilbreak/editdist.h"
#include "veilbreak/pipeline.h"
#include "veilbreak/synthetic.h"

namespace veilbreak {
namespace {

SyntheticConfig Small(std::uint64_t seed) {
  SyntheticConfig c;
  c.seed = seed;
  c.documents = 60;
  return c;
}

TEST(SyntheticTest, DeterministicAndWellFormed) {
  SyntheticData a = GenerateSynthetic(Small(4));
  SyntheticData b = GenerateSynthetic(Small(4));
  ASSERT_EQ(a.corpus.size(), 60u);
  for (std::size_t i = 0; i < a.corpus.size(); ++i) {
    EXPECT_EQ(a.corpus[i].text, b.corpus[i].text);
    EXPECT_EQ(a.corpus[i].label, b.corpus[i].label);
  }
  std::map<std::string, int> labels;
  for (const Document& d : a.corpus) ++labels[d.label];
  EXPECT_EQ(labels["spam"], 30);
  EXPECT_EQ(labels["ham"], 30);
  EXPECT_EQ(a.planted.size(), 10u);
  // Up to four per planted word; collisions are dropped.
  EXPECT_LE(a.distractors.size(), 40u);
  EXPECT_GE(a.distractors.size(), 30u);
  EXPECT_EQ(a.embeddings.dimension(), 50);
  for (const std::string& w : a.planted) {
    EXPECT_TRUE(a.vocab.Contains(w));
    EXPECT_TRUE(a.embeddings.Contains(w));
  }
  for (const std::string& w : a.distractors) {
    int nearest = 99;
    for (const std::string& p : a.planted) nearest = std::min(nearest, DlDistance(w, p));
    EXPECT_EQ(nearest, 1) << w;
  }
}

TEST(SyntheticTest, StratifiedSplit) {
  SyntheticData d = GenerateSynthetic(Small(5));
  auto [train, test] = SplitCorpus(d.corpus, 1.0 / 3.0, 5);
  EXPECT_EQ(train.size() + test.size(), d.corpus.size());
  std::map<std::string, int> test_labels;
  for (const Document& doc : test) ++test_labels[doc.label];
  EXPECT_EQ(test_labels["spam"], 10);
  EXPECT_EQ(test_labels["ham"], 10);
}

TEST(PipelineTest, AttackHurtsAndCorrectionRecovers) {
  SpamExperimentConfig config;
  config.data = Small(6);
  config.data.documents = 120;
  config.attack.rng_seed = 6;
  SpamExperiment x = RunSpamExperiment(config);
  EXPECT_EQ(x.targets.size(), 10u);
  EXPECT_FALSE(x.attack.log.empty());
  for (const AttackLogEntry& e : x.attack.log) {
    EXPECT_EQ(x.test[e.doc_id].label, "spam");
  }
  EXPECT_LT(x.revised_accuracy, x.clean_accuracy);
  EXPECT_GE(x.corrected_accuracy, x.revised_accuracy);
  EXPECT_GE(x.correction_accuracy, x.baseline_correction_accuracy);
  EXPECT_GE(x.ambiguous_fraction, 0.0);
  EXPECT_LE(x.ambiguous_fraction, 1.0);
}

}  // namespace
}  // namespace veilbreak
