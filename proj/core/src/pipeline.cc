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

#include "veilbreak/pipeline.h"

#include <unordered_set>

namespace veilbreak {

SpamExperiment RunSpamExperiment(const SpamExperimentConfig& config) {
  SpamExperiment x;
  x.data = GenerateSynthetic(config.data);
  std::tie(x.train, x.test) =
      SplitCorpus(x.data.corpus, config.test_fraction, config.data.seed + 1);
  x.model = TrainNaiveBayes(x.train, config.max_features);
  x.targets = RankSensitiveWordsNb(x.model, config.attacked_words);

  WordListTargets targets;
  targets.words.insert(x.targets.begin(), x.targets.end());
  x.attack = AttackCorpus(
      x.test, targets, config.attack, x.data.vocab,
      [](const Document& d) { return d.label == kSpamLabel; });

  const CandidateIndex index(x.data.vocab, config.corrector.max_radius);
  const Corrector corrector(x.data.vocab, index, x.data.embeddings,
                            config.corrector);
  CorrectorConfig baseline_config = config.corrector;
  baseline_config.mode = SelectionMode::kFrequency;
  const Corrector baseline(x.data.vocab, index, x.data.embeddings,
                           baseline_config);
  x.corrected = corrector.CorrectCorpus(x.attack.revised);
  x.baseline_corrected = baseline.CorrectCorpus(x.attack.revised);

  x.clean_accuracy = Evaluate(x.model, x.test).accuracy;
  x.revised_accuracy = Evaluate(x.model, x.attack.revised).accuracy;
  x.corrected_accuracy = Evaluate(x.model, x.corrected.corrected).accuracy;
  x.baseline_accuracy =
      Evaluate(x.model, x.baseline_corrected.corrected).accuracy;
  if (!x.attack.log.empty()) {
    x.correction_accuracy = CorrectionAccuracy(x.attack.log, x.corrected);
    x.baseline_correction_accuracy =
        CorrectionAccuracy(x.attack.log, x.baseline_corrected);
    std::size_t ambiguous = 0;
    for (const AttackLogEntry& e : x.attack.log) {
      const auto& rec = x.corrected.documents[e.doc_id].tokens[e.token_index];
      if (rec.candidates && rec.candidates->candidates.size() >= 2) ++ambiguous;
    }
    x.ambiguous_fraction =
        static_cast<double>(ambiguous) / static_cast<double>(x.attack.log.size());
  }
  return x;
}

}  // namespace veilbreak
