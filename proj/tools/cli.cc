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

#include "cli.h"

#include <filesystem>
#include <fstream>
#include <iomanip>
#include <istream>
#include <memory>
#include <optional>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "veilbreak/attacker.h"
#include "veilbreak/corpus.h"
#include "veilbreak/corrector.h"
#include "veilbreak/editdist.h"
#include "veilbreak/embedding.h"
#include "veilbreak/error.h"
#include "veilbreak/lexicon.h"
#include "veilbreak/pipeline.h"
#include "veilbreak/spam_nb.h"

namespace veilbreak::cli {
namespace {

namespace fs = std::filesystem;
using nlohmann::json;

// Thrown for configuration mistakes CLI11 cannot catch (exit code 1).
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string word_a, word_b;
  std::string vocab, embeddings, corpus, model, out_dir, attack_log;
  std::string scorer_lexicon, function_words, target_label = "spam";
  std::string selector = "context";
  std::vector<std::string> corpora;
  std::vector<std::string> ops;
  std::uint64_t seed = 0;
  int max_edits = kMaxAttackEdits;
  int max_radius = kDefaultMaxRadius;
  int window = kDefaultWindow;
  std::uint64_t min_frequency = 1;
  std::uint64_t min_count = 1;
  std::size_t top_k = 10;
  std::size_t features = kDefaultFeatureCount;
  std::size_t documents = 40;
  bool allow_iv = false;
  bool all_docs = false;
};

std::string Fixed(double v, int digits = 4) {
  std::ostringstream s;
  s << std::fixed << std::setprecision(digits) << v;
  return s.str();
}

fs::path PrepareOutDir(const std::string& dir) {
  if (dir.empty()) throw UsageError("--out-dir is required");
  fs::create_directories(dir);
  return fs::path(dir);
}

void WriteRunRecord(const fs::path& dir, json record) {
  WriteFileAtomically(dir / "run.json", [&](std::ostream& out) {
    out << record.dump(2) << '\n';
  });
}

AttackSpec MakeAttackSpec(const Options& o) {
  AttackSpec spec;
  spec.max_edits = o.max_edits;
  spec.rng_seed = o.seed;
  spec.require_oov = !o.allow_iv;
  if (!o.ops.empty()) {
    spec.ops_allowed.clear();
    for (const std::string& name : o.ops) {
      auto kind = ParsePerturbKind(name);
      if (!kind) throw UsageError("unknown perturbation kind: " + name);
      spec.ops_allowed.push_back(*kind);
    }
  }
  spec.Validate();
  return spec;
}

CorrectorConfig MakeCorrectorConfig(const Options& o) {
  CorrectorConfig c;
  c.max_radius = o.max_radius;
  c.window = o.window;
  if (o.selector == "context") {
    c.mode = SelectionMode::kContext;
  } else if (o.selector == "frequency") {
    c.mode = SelectionMode::kFrequency;
  } else {
    throw UsageError("--selector must be 'context' or 'frequency'");
  }
  return c;
}

int CmdDistance(const Options& o, std::ostream& out) {
  out << DlDistance(o.word_a, o.word_b) << '\n';
  return kOk;
}

int CmdAttack(const Options& o, std::ostream& out) {
  if (o.model.empty() && o.scorer_lexicon.empty()) {
    throw UsageError("attack needs --model (Naive Bayes ranking) or "
                     "--scorer-lexicon (deletion ranking)");
  }
  if (o.vocab.empty()) throw UsageError("attack needs --vocab");
  const fs::path dir = PrepareOutDir(o.out_dir);
  const Corpus corpus = LoadCorpus(o.corpus);
  const Vocabulary vocab = LoadVocabulary(o.vocab, o.min_frequency);
  const AttackSpec spec = MakeAttackSpec(o);

  json record = {{"command", "attack"},       {"seed", o.seed},
                 {"corpus", o.corpus},        {"vocab", o.vocab},
                 {"max_edits", o.max_edits},  {"require_oov", !o.allow_iv}};

  AttackOutcome result;
  if (!o.model.empty()) {
    const NaiveBayesModel model = LoadModel(o.model);
    WordListTargets targets;
    const auto ranked = RankSensitiveWordsNb(model, o.top_k);
    targets.words.insert(ranked.begin(), ranked.end());
    std::function<bool(const Document&)> select;
    if (!o.all_docs) {
      const std::string label = o.target_label;
      select = [label](const Document& d) { return d.label == label; };
    }
    result = AttackCorpus(corpus, targets, spec, vocab, select);
    record["strategy"] = "naive-bayes";
    record["model"] = o.model;
    record["targets"] = ranked;
    record["target_label"] = o.all_docs ? "*" : o.target_label;
  } else {
    const LexiconScorer scorer = LexiconScorer::Load(o.scorer_lexicon);
    const FunctionWordList fwl = o.function_words.empty()
                                     ? FunctionWordList::Default()
                                     : FunctionWordList::Load(o.function_words);
    ScorerTargets targets{&scorer, SensitiveFilter{&vocab, &fwl, o.min_count}};
    result = AttackCorpus(corpus, targets, spec, vocab);
    record["strategy"] = "scorer";
    record["scorer_lexicon"] = o.scorer_lexicon;
  }

  SaveCorpus(result.revised, dir / "revised.tsv");
  SaveAttackLog(result.log, dir / "attack_log.tsv");
  record["attacked"] = result.log.size();
  record["failed"] = result.failures.size();
  WriteRunRecord(dir, record);
  out << "attacked=" << result.log.size()
      << " failed=" << result.failures.size() << " seed=" << o.seed << '\n';
  return kOk;
}

int CmdCorrect(const Options& o, std::istream& in, std::ostream& out,
               std::ostream& err) {
  if (o.vocab.empty() || o.embeddings.empty()) {
    throw UsageError("correct needs --vocab and --embeddings");
  }
  const Vocabulary vocab = LoadVocabulary(o.vocab, o.min_frequency);
  const EmbeddingTable table = LoadEmbeddings(o.embeddings);
  const CandidateIndex index(vocab, std::max(o.max_radius, 1));
  const Corrector corrector(vocab, index, table, MakeCorrectorConfig(o));

  if (o.corpus.empty()) {
    // Plain text on stdin, one document per line.
    std::string line;
    CorrectionCounters totals;
    while (std::getline(in, line)) {
      CorrectionResult r = corrector.CorrectDocument(line);
      totals += r.counters;
      out << r.corrected_text << '\n';
    }
    err << "flagged=" << totals.flagged << " corrected=" << totals.corrected
        << " unchanged_oov=" << totals.unchanged_oov << '\n';
    return kOk;
  }

  const Corpus corpus = LoadCorpus(o.corpus);
  const CorpusCorrection result = corrector.CorrectCorpus(corpus);
  std::ostringstream summary;
  summary << "flagged=" << result.totals.flagged
          << " corrected=" << result.totals.corrected
          << " unchanged_oov=" << result.totals.unchanged_oov;
  json record = {{"command", "correct"},
                 {"seed", o.seed},
                 {"corpus", o.corpus},
                 {"vocab", o.vocab},
                 {"embeddings", o.embeddings},
                 {"max_radius", o.max_radius},
                 {"window_P", o.window},
                 {"selector", o.selector},
                 {"flagged", result.totals.flagged},
                 {"corrected", result.totals.corrected},
                 {"unchanged_oov", result.totals.unchanged_oov}};
  if (!o.attack_log.empty()) {
    const auto log = LoadAttackLog(o.attack_log);
    const double acc = CorrectionAccuracy(log, result);
    summary << " correction_accuracy=" << Fixed(acc);
    record["attack_log"] = o.attack_log;
    record["correction_accuracy"] = acc;
  }
  if (o.out_dir.empty()) {
    WriteCorpus(result.corrected, out);
    err << summary.str() << '\n';
    return kOk;
  }
  const fs::path dir = PrepareOutDir(o.out_dir);
  SaveCorpus(result.corrected, dir / "corrected.tsv");
  SaveAttackLog(SubstitutionRecords(result), dir / "corrections.tsv");
  WriteRunRecord(dir, record);
  out << summary.str() << '\n';
  return kOk;
}

int CmdTrain(const Options& o, std::ostream& out) {
  if (o.model.empty()) throw UsageError("train-nb needs --model (output path)");
  const Corpus corpus = LoadCorpus(o.corpus);
  const NaiveBayesModel model = TrainNaiveBayes(corpus, o.features);
  SaveModel(model, o.model);
  out << "trained documents=" << corpus.size()
      << " features=" << model.feature_count() << " classes=";
  for (std::size_t c = 0; c < model.classes().size(); ++c) {
    out << (c ? "," : "") << model.classes()[c];
  }
  out << '\n';
  return kOk;
}

void PrintReport(const std::string& name, const EvaluationReport& r,
                 std::ostream& out) {
  out << "# " << name << '\n';
  out << "label\tprecision\trecall\tf1\tsupport\n";
  for (const ClassMetrics& m : r.per_class) {
    out << m.label << '\t' << Fixed(m.precision) << '\t' << Fixed(m.recall)
        << '\t' << Fixed(m.f1) << '\t' << m.support << '\n';
  }
  out << "macro\t" << Fixed(r.macro_precision) << '\t'
      << Fixed(r.macro_recall) << '\t' << Fixed(r.macro_f1) << '\t'
      << r.documents << '\n';
}

int CmdEval(const Options& o, std::ostream& out) {
  if (o.model.empty()) throw UsageError("eval needs --model");
  if (o.corpora.empty()) throw UsageError("eval needs at least one --corpus");
  const NaiveBayesModel model = LoadModel(o.model);
  std::vector<std::pair<std::string, EvaluationReport>> reports;
  for (const std::string& path : o.corpora) {
    reports.emplace_back(path, Evaluate(model, LoadCorpus(path)));
  }
  out << "corpus\tdocuments\taccuracy\tmacro_precision\tmacro_recall\tmacro_f1\n";
  for (const auto& [path, r] : reports) {
    out << path << '\t' << r.documents << '\t' << Fixed(r.accuracy) << '\t'
        << Fixed(r.macro_precision) << '\t' << Fixed(r.macro_recall) << '\t'
        << Fixed(r.macro_f1) << '\n';
  }
  for (const auto& [path, r] : reports) {
    out << '\n';
    PrintReport(path, r, out);
  }
  return kOk;
}

int CmdDemo(const Options& o, std::ostream& out) {
  SpamExperimentConfig config;
  config.data.seed = o.seed;
  config.data.documents = o.documents;
  config.attack.rng_seed = o.seed;
  config.attack.max_edits = o.max_edits;
  config.attacked_words = o.top_k;
  config.corrector = MakeCorrectorConfig(o);
  const SpamExperiment x = RunSpamExperiment(config);

  out << "synthetic corpus: " << x.data.corpus.size() << " documents ("
      << x.train.size() << " train / " << x.test.size() << " test), "
      << x.data.vocab.size() << " vocabulary words, "
      << x.data.embeddings.dimension() << "-d embeddings, seed " << o.seed
      << '\n';
  out << "attacked words:";
  for (const auto& w : x.targets) out << ' ' << w;
  out << '\n';
  out << "attacked tokens: " << x.attack.log.size()
      << " (ambiguous candidate sets: " << Fixed(x.ambiguous_fraction, 3)
      << ")\n\n";
  out << "test set\taccuracy\n";
  out << "clean\t" << Fixed(x.clean_accuracy) << '\n';
  out << "revised\t" << Fixed(x.revised_accuracy) << '\n';
  out << "corrected\t" << Fixed(x.corrected_accuracy) << '\n';
  out << "frequency-baseline\t" << Fixed(x.baseline_accuracy) << "\n\n";
  out << "correction accuracy\tcontext " << Fixed(x.correction_accuracy)
      << "\tfrequency " << Fixed(x.baseline_correction_accuracy) << '\n';

  if (!o.out_dir.empty()) {
    const fs::path dir = PrepareOutDir(o.out_dir);
    SaveVocabulary(x.data.vocab, dir / "vocab.tsv");
    WriteFileAtomically(dir / "embeddings.txt", [&](std::ostream& s) {
      WriteEmbeddings(x.data.embeddings, s);
    });
    SaveCorpus(x.train, dir / "train.tsv");
    SaveCorpus(x.test, dir / "test.tsv");
    SaveCorpus(x.attack.revised, dir / "revised.tsv");
    SaveAttackLog(x.attack.log, dir / "attack_log.tsv");
    SaveCorpus(x.corrected.corrected, dir / "corrected.tsv");
    SaveModel(x.model, dir / "model.nb");
    WriteRunRecord(dir, {{"command", "demo"},
                         {"seed", o.seed},
                         {"documents", o.documents},
                         {"clean_accuracy", x.clean_accuracy},
                         {"revised_accuracy", x.revised_accuracy},
                         {"corrected_accuracy", x.corrected_accuracy},
                         {"correction_accuracy", x.correction_accuracy},
                         {"baseline_correction_accuracy",
                          x.baseline_correction_accuracy}});
    out << "\nfixtures written to " << dir.string() << '\n';
  }
  return kOk;
}

}  // namespace

int Run(const std::vector<std::string>& args, std::istream& in,
        std::ostream& out, std::ostream& err) {
  CLI::App app{"veilbreak: adversarial misspelling generation and "
               "context-sensitive spelling correction"};
  app.require_subcommand(1);
  Options o;

  auto* distance = app.add_subcommand("distance",
                                      "Restricted Damerau-Levenshtein distance");
  distance->add_option("word_a", o.word_a)->required();
  distance->add_option("word_b", o.word_b)->required();

  auto* attack = app.add_subcommand("attack", "Misspell sensitive words");
  attack->add_option("--corpus", o.corpus, "label<TAB>text corpus")
      ->required()
      ->check(CLI::ExistingFile);
  attack->add_option("--vocab", o.vocab, "word<TAB>count vocabulary")
      ->check(CLI::ExistingFile);
  attack->add_option("--model", o.model, "Naive Bayes model for ranking")
      ->check(CLI::ExistingFile);
  attack->add_option("--scorer-lexicon", o.scorer_lexicon,
                     "word<TAB>weight keyword scorer")
      ->check(CLI::ExistingFile);
  attack->add_option("--function-words", o.function_words)
      ->check(CLI::ExistingFile);
  attack->add_option("--seed", o.seed);
  attack->add_option("--max-edits", o.max_edits)->check(CLI::Range(1, 2));
  attack->add_option("--top-k", o.top_k, "number of NB-ranked target words");
  attack->add_option("--ops", o.ops,
                     "insertion, permutation, replacement, removal");
  attack->add_option("--target-label", o.target_label,
                     "only attack documents with this label (NB strategy)");
  attack->add_flag("--all-docs", o.all_docs, "attack every document");
  attack->add_option("--min-frequency", o.min_frequency);
  attack->add_option("--min-count", o.min_count,
                     "sensitive-word frequency floor (scorer strategy)");
  attack->add_flag("--allow-iv", o.allow_iv,
                   "accept misspellings that are valid words");
  attack->add_option("--out-dir", o.out_dir)->required();

  auto* correct = app.add_subcommand("correct", "Correct misspellings");
  correct->add_option("--corpus", o.corpus,
                      "label<TAB>text corpus (default: text lines on stdin)")
      ->check(CLI::ExistingFile);
  correct->add_option("--vocab", o.vocab)->required()->check(CLI::ExistingFile);
  correct->add_option("--embeddings", o.embeddings)
      ->required()
      ->check(CLI::ExistingFile);
  correct->add_option("--min-frequency", o.min_frequency);
  correct->add_option("--max-radius", o.max_radius)
      ->check(CLI::PositiveNumber);
  correct->add_option("--window-P", o.window)->check(CLI::PositiveNumber);
  correct->add_option("--selector", o.selector, "context or frequency");
  correct->add_option("--attack-log", o.attack_log,
                      "report correction accuracy against this log")
      ->check(CLI::ExistingFile);
  correct->add_option("--seed", o.seed);
  correct->add_option("--out-dir", o.out_dir);

  auto* train = app.add_subcommand("train-nb", "Train the Naive Bayes filter");
  train->add_option("--corpus", o.corpus)->required()->check(CLI::ExistingFile);
  train->add_option("--top-k", o.features, "feature vocabulary size");
  train->add_option("--model", o.model, "output model path")->required();

  auto* eval = app.add_subcommand("eval", "Evaluate a model on corpora");
  eval->add_option("--model", o.model)->required()->check(CLI::ExistingFile);
  eval->add_option("--corpus", o.corpora, "repeatable")
      ->required()
      ->check(CLI::ExistingFile);

  auto* demo = app.add_subcommand(
      "demo", "Attack -> detect -> correct on a bundled synthetic corpus");
  demo->add_option("--seed", o.seed);
  demo->add_option("--documents", o.documents)->check(CLI::Range(8, 100000));
  demo->add_option("--top-k", o.top_k);
  demo->add_option("--max-edits", o.max_edits)->check(CLI::Range(1, 2));
  demo->add_option("--max-radius", o.max_radius)->check(CLI::PositiveNumber);
  demo->add_option("--window-P", o.window)->check(CLI::PositiveNumber);
  demo->add_option("--selector", o.selector);
  demo->add_option("--out-dir", o.out_dir, "also write the fixtures here");

  std::vector<std::string> rev(args.rbegin(), args.rend());
  if (!rev.empty()) rev.pop_back();  // program name
  try {
    app.parse(rev);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*distance) return CmdDistance(o, out);
    if (*attack) return CmdAttack(o, out);
    if (*correct) return CmdCorrect(o, in, out, err);
    if (*train) return CmdTrain(o, out);
    if (*eval) return CmdEval(o, out);
    if (*demo) return CmdDemo(o, out);
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return kUsage;
  } catch (const DataError& e) {
    err << "data error: " << e.what() << '\n';
    return kDataError;
  } catch (const fs::filesystem_error& e) {
    err << "data error: " << e.what() << '\n';
    return kDataError;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return kInternal;
  }
  return kUsage;
}

}  // namespace veilbreak::cli
