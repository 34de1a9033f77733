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

#ifndef VEILBREAK_PIPELINE_H_
#define VEILBREAK_PIPELINE_H_

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "veilbreak/attacker.h"
#include "veilbreak/corpus.h"
#include "veilbreak/corrector.h"
#include "veilbreak/spam_nb.h"
#include "veilbreak/synthetic.h"

namespace veilbreak {

struct SpamExperimentConfig {
  SyntheticConfig data;
  double test_fraction = 1.0 / 3.0;
  std::size_t max_features = kDefaultFeatureCount;
  std::size_t attacked_words = 10;
  AttackSpec attack;
  CorrectorConfig corrector;
};

// Everything produced by one attack -> detect -> correct run.
struct SpamExperiment {
  SyntheticData data;
  Corpus train;
  Corpus test;
  NaiveBayesModel model;
  std::vector<std::string> targets;
  AttackOutcome attack;
  CorpusCorrection corrected;           // context-sensitive corrector
  CorpusCorrection baseline_corrected;  // frequency-only baseline

  double clean_accuracy = 0.0;
  double revised_accuracy = 0.0;
  double corrected_accuracy = 0.0;
  double baseline_accuracy = 0.0;
  double correction_accuracy = 0.0;
  double baseline_correction_accuracy = 0.0;
  // Share of attacked tokens with >= 2 candidates at the minimal distance.
  double ambiguous_fraction = 0.0;
};

// Trains on the train split, attacks the top-ranked spam words in the test
// split's spam documents, then corrects the revised test split with the
// oracle vocabulary and embeddings.
SpamExperiment RunSpamExperiment(const SpamExperimentConfig& config);

}  // namespace veilbreak

#endif  // VEILBREAK_PIPELINE_H_
