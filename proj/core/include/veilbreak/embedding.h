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

#ifndef VEILBREAK_EMBEDDING_H_
#define VEILBREAK_EMBEDDING_H_

#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include <Eigen/Core>

#include "veilbreak/editdist.h"
#include "veilbreak/error.h"

namespace veilbreak {

inline constexpr int kDefaultWindow = 4;

class MissingEmbedding : public ContractViolation {
 public:
  explicit MissingEmbedding(const std::string& word)
      : ContractViolation("no embedding for '" + word + "'") {}
};

// word -> dense vector, all of one dimension, no zero vectors. Words are
// lowercased; the first occurrence of a word wins.
class EmbeddingTable {
 public:
  explicit EmbeddingTable(int dimension);

  // Returns false (and stores nothing) for a duplicate word. Throws
  // DataError on a dimension mismatch or an all-zero vector.
  bool Add(std::string_view word, std::span<const double> values);

  std::optional<Eigen::Map<const Eigen::VectorXd>> Find(
      std::string_view word) const;
  bool Contains(std::string_view word) const;

  int dimension() const { return dimension_; }
  std::size_t size() const { return words_.size(); }
  // Insertion order.
  std::span<const std::string> words() const { return words_; }

 private:
  int dimension_;
  std::vector<std::string> words_;
  std::vector<double> data_;
  std::unordered_map<std::string, std::size_t> index_;
};

struct EmbeddingLoadStats {
  std::size_t zero_vectors_skipped = 0;
  std::size_t duplicates_ignored = 0;
};

// word2vec text format: header `N D`, then N rows `word v1 ... vD`.
// Throws ParseError on header or row arity problems.
EmbeddingTable ParseEmbeddings(std::istream& in,
                               EmbeddingLoadStats* stats = nullptr);
EmbeddingTable LoadEmbeddings(const std::filesystem::path& path,
                              EmbeddingLoadStats* stats = nullptr);
void WriteEmbeddings(const EmbeddingTable& table, std::ostream& out);

// Tokens around a flagged word. `left` holds the tokens before it with the
// nearest last, `right` those after it with the nearest first; each side
// holds at most `max_window` tokens.
struct ContextWindow {
  std::string center;
  std::vector<std::string> left;
  std::vector<std::string> right;
  int max_window = kDefaultWindow;
};

// Builds a window around `sequence[center]`.
ContextWindow MakeContextWindow(std::span<const std::string> sequence,
                                std::size_t center, int max_window);

// Least-squares fit of `target` by the columns of `context` (D x k).
struct Projection {
  Eigen::VectorXd coefficients;
  Eigen::VectorXd residual;  // context * coefficients - target
  // ||residual||^2 / ||target||.
  double distance = 0.0;
};

// Closed-form minimizer via a complete orthogonal decomposition, which also
// covers collinear or k > D context sets (minimum-norm solution). An empty
// context gives residual = -target and distance = ||target||.
Projection ProjectOntoSpan(const Eigen::MatrixXd& context,
                           const Eigen::VectorXd& target);

// Candidate-context distance for the window of radius p: embeddings of the
// up-to-2p context tokens (those without an embedding are skipped) against
// the candidate's embedding.
double WindowDistance(const EmbeddingTable& table, std::string_view candidate,
                      const ContextWindow& window, int p);

struct ScoredCandidate {
  std::string word;
  double weighted_distance = 0.0;
  // (p, distance for window p), p = 1..max_window.
  std::vector<std::pair<int, double>> per_window;
};

// Sum over p = 1..max_window of WindowDistance(p) / p.
ScoredCandidate WeightedDistance(const EmbeddingTable& table,
                                 std::string_view candidate,
                                 const ContextWindow& window);

struct Selection {
  std::string word;
  std::vector<ScoredCandidate> scores;
  // True when the choice was made by frequency because no candidate had an
  // embedding or no context word did.
  bool frequency_fallback = false;
};

// Picks the candidate with the smallest weighted distance. Ties go to the
// higher-frequency word, then the lexicographically smaller one.
Selection SelectCorrection(const EmbeddingTable& table,
                           const CandidateSet& candidates,
                           const ContextWindow& window);

// Highest frequency, then lexicographically smallest.
const Candidate& MostFrequentCandidate(const CandidateSet& candidates);

}  // namespace veilbreak

#endif  // VEILBREAK_EMBEDDING_H_
