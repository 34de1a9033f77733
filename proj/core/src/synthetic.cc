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

#include "veilbreak/synthetic.h"

#include <algorithm>
#include <cmath>
#include <map>
#include <random>
#include <set>

#include "veilbreak/editdist.h"
#include "veilbreak/error.h"
#include "veilbreak/spam_nb.h"

namespace veilbreak {
namespace {

constexpr std::string_view kConsonants = "bcdfghjklmnprstvz";
constexpr std::string_view kVowels = "aeiou";

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::size_t Index(std::size_t n) {
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
    std::uint64_t x;
    do {
      x = engine_();
    } while (x >= limit);
    return static_cast<std::size_t>(x % n);
  }

  // Uniform in [0, 1).
  double Unit() { return (engine_() >> 11) * 0x1.0p-53; }

  // Box-Muller; avoids std::normal_distribution so streams match across
  // standard libraries.
  double Gaussian() {
    double u1 = Unit();
    while (u1 <= 0.0) u1 = Unit();
    const double u2 = Unit();
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * M_PI * u2);
  }

  template <typename T>
  const T& Pick(const std::vector<T>& v) {
    return v[Index(v.size())];
  }

 private:
  std::mt19937_64 engine_;
};

bool IsVowel(char c) { return kVowels.find(c) != std::string_view::npos; }

std::string MakeWord(Rng& rng) {
  const std::size_t syllables = 2 + rng.Index(2);
  std::string w;
  for (std::size_t s = 0; s < syllables; ++s) {
    w += kConsonants[rng.Index(kConsonants.size())];
    w += kVowels[rng.Index(kVowels.size())];
  }
  if (rng.Index(2) == 0) w += kConsonants[rng.Index(kConsonants.size())];
  return w;
}

// Draws `count` words at distance >= 3 from every word already in `taken`.
std::vector<std::string> DrawWords(Rng& rng, std::size_t count,
                                   std::vector<std::string>& taken) {
  std::vector<std::string> out;
  while (out.size() < count) {
    std::string w = MakeWord(rng);
    bool far = true;
    for (const std::string& t : taken) {
      if (DlDistance(w, t) < 3) {
        far = false;
        break;
      }
    }
    if (!far) continue;
    taken.push_back(w);
    out.push_back(std::move(w));
  }
  return out;
}

Eigen::VectorXd RandomUnit(Rng& rng, int dim) {
  Eigen::VectorXd v(dim);
  for (int i = 0; i < dim; ++i) v[i] = rng.Gaussian();
  return v.normalized();
}

Eigen::VectorXd TopicWord(Rng& rng, const Eigen::VectorXd& topic,
                          double noise) {
  Eigen::VectorXd v = topic + noise * RandomUnit(rng, topic.size());
  return v.normalized();
}

}  // namespace

SyntheticData GenerateSynthetic(const SyntheticConfig& config) {
  if (config.planted_words == 0 || config.context_words < 2 ||
      config.nature_words < 3 || config.general_words == 0 ||
      config.dimension < 3 || config.documents < 2) {
    throw ContractViolation("synthetic config too small");
  }
  Rng rng(config.seed);
  SyntheticData data;

  std::vector<std::string> taken;
  data.planted = DrawWords(rng, config.planted_words, taken);
  data.context_words = DrawWords(rng, config.context_words, taken);
  data.nature_words = DrawWords(rng, config.nature_words, taken);
  data.general_words = DrawWords(rng, config.general_words, taken);

  // Distractors: one substitution away from a planted word, same letter
  // class, and at distance >= 3 from every other word.
  std::set<std::string> all(taken.begin(), taken.end());
  for (const std::string& w : data.planted) {
    std::vector<std::size_t> positions(w.size());
    for (std::size_t i = 0; i < w.size(); ++i) positions[i] = i;
    for (std::size_t i = positions.size(); i > 1; --i) {
      std::swap(positions[i - 1], positions[rng.Index(i)]);
    }
    std::size_t made = 0;
    for (std::size_t pos : positions) {
      if (made == config.distractors_per_word) break;
      const std::string_view pool = IsVowel(w[pos]) ? kVowels : kConsonants;
      for (int tries = 0; tries < 8; ++tries) {
        std::string d = w;
        d[pos] = pool[rng.Index(pool.size())];
        if (d == w || all.contains(d)) continue;
        bool ok = true;
        for (const std::string& t : taken) {
          if (t != w && DlDistance(d, t) < 3) {
            ok = false;
            break;
          }
        }
        for (const std::string& t : data.distractors) {
          if (!ok) break;
          if (DlDistance(d, t) < 2) ok = false;
        }
        if (!ok) continue;
        all.insert(d);
        data.distractors.push_back(std::move(d));
        ++made;
        break;
      }
    }
  }

  // Embeddings.
  const int dim = config.dimension;
  const Eigen::VectorXd finance = RandomUnit(rng, dim);
  const Eigen::VectorXd nature = RandomUnit(rng, dim);
  data.embeddings = EmbeddingTable(dim);
  auto add = [&](const std::string& w, const Eigen::VectorXd& v) {
    data.embeddings.Add(w, std::span<const double>(v.data(), v.size()));
  };
  for (const auto& w : data.planted) add(w, TopicWord(rng, finance, config.noise));
  for (const auto& w : data.context_words) {
    add(w, TopicWord(rng, finance, config.noise));
  }
  for (const auto& w : data.nature_words) {
    add(w, TopicWord(rng, nature, config.noise));
  }
  for (const auto& w : data.distractors) {
    add(w, TopicWord(rng, nature, config.noise));
  }
  for (const auto& w : data.general_words) add(w, RandomUnit(rng, dim));

  // Oracle vocabulary with background frequencies in [50, 5000].
  std::vector<VocabEntry> counts;
  for (const std::string& w : data.embeddings.words()) {
    const double f = 50.0 * std::pow(100.0, rng.Unit());
    counts.push_back({w, static_cast<Frequency>(f)});
  }
  data.vocab = Vocabulary::FromCounts(counts, 1);

  // Nature pool for ham text includes the distractors.
  std::vector<std::string> nature_pool = data.nature_words;
  nature_pool.insert(nature_pool.end(), data.distractors.begin(),
                     data.distractors.end());

  auto filler = [&](std::vector<std::string>& doc) {
    const std::size_t n = 1 + rng.Index(2);
    for (std::size_t i = 0; i < n; ++i) doc.push_back(rng.Pick(data.general_words));
  };
  auto finance_phrase = [&](std::vector<std::string>& doc, bool planted) {
    std::vector<std::string> phrase = {rng.Pick(data.context_words),
                                       rng.Pick(data.context_words)};
    if (planted) {
      phrase.insert(phrase.begin() + static_cast<std::ptrdiff_t>(rng.Index(3)),
                    rng.Pick(data.planted));
    }
    doc.insert(doc.end(), phrase.begin(), phrase.end());
  };
  auto nature_phrase = [&](std::vector<std::string>& doc) {
    for (int i = 0; i < 3; ++i) doc.push_back(rng.Pick(nature_pool));
  };
  auto render = [](const std::vector<std::string>& words) {
    std::string text;
    for (const auto& w : words) {
      if (!text.empty()) text += ' ';
      text += w;
    }
    text += " .";
    return text;
  };

  const std::size_t spam_docs = config.documents / 2;
  for (std::size_t d = 0; d < config.documents; ++d) {
    const bool spam = d < spam_docs;
    std::vector<std::string> words;
    std::vector<int> phrases;  // 0 finance, 1 nature
    if (spam) {
      phrases = {0, 0, 0, 0, 1};
    } else {
      phrases = {0, 0, 0, 0, 1, 1};
    }
    for (std::size_t i = phrases.size(); i > 1; --i) {
      std::swap(phrases[i - 1], phrases[rng.Index(i)]);
    }
    filler(words);
    for (int kind : phrases) {
      if (kind == 0) {
        finance_phrase(words, spam);
      } else {
        nature_phrase(words);
      }
      filler(words);
    }
    data.corpus.push_back(
        {std::string(spam ? kSpamLabel : kHamLabel), render(words)});
  }
  // Interleave classes deterministically.
  for (std::size_t i = data.corpus.size(); i > 1; --i) {
    std::swap(data.corpus[i - 1], data.corpus[rng.Index(i)]);
  }
  return data;
}

std::pair<Corpus, Corpus> SplitCorpus(const Corpus& corpus,
                                      double test_fraction,
                                      std::uint64_t seed) {
  if (test_fraction < 0.0 || test_fraction > 1.0) {
    throw ContractViolation("test_fraction must lie in [0, 1]");
  }
  Rng rng(seed);
  std::map<std::string, std::vector<std::size_t>> by_label;
  for (std::size_t i = 0; i < corpus.size(); ++i) {
    by_label[corpus[i].label].push_back(i);
  }
  std::vector<bool> is_test(corpus.size(), false);
  for (auto& [label, ids] : by_label) {
    std::vector<std::size_t> order = ids;
    for (std::size_t i = order.size(); i > 1; --i) {
      std::swap(order[i - 1], order[rng.Index(i)]);
    }
    const auto n_test = static_cast<std::size_t>(
        std::llround(static_cast<double>(ids.size()) * test_fraction));
    for (std::size_t i = 0; i < n_test; ++i) is_test[order[i]] = true;
  }
  Corpus train, test;
  for (std::size_t i = 0; i < corpus.size(); ++i) {
    (is_test[i] ? test : train).push_back(corpus[i]);
  }
  return {std::move(train), std::move(test)};
}

}  // namespace veilbreak
