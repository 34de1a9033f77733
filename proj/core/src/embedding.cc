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

#include "veilbreak/embedding.h"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <istream>
#include <ostream>

#include <Eigen/QR>

#include "veilbreak/logging.h"
#include "veilbreak/utf8.h"

namespace veilbreak {
namespace {

std::vector<std::string_view> SplitSpaces(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
    if (i == line.size()) break;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t') ++j;
    out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

template <typename T>
bool ParseNumber(std::string_view field, T& value) {
  auto [ptr, ec] =
      std::from_chars(field.data(), field.data() + field.size(), value);
  return ec == std::errc() && ptr == field.data() + field.size();
}

bool Near(double a, double b) {
  return std::abs(a - b) <= 1e-12 * std::max(std::abs(a), std::abs(b));
}

}  // namespace

EmbeddingTable::EmbeddingTable(int dimension) : dimension_(dimension) {
  if (dimension < 1) throw DataError("embedding dimension must be positive");
}

bool EmbeddingTable::Add(std::string_view word, std::span<const double> values) {
  if (static_cast<int>(values.size()) != dimension_) {
    throw DataError("embedding for '" + std::string(word) + "' has " +
                    std::to_string(values.size()) + " values, expected " +
                    std::to_string(dimension_));
  }
  if (std::all_of(values.begin(), values.end(),
                  [](double v) { return v == 0.0; })) {
    throw DataError("zero embedding for '" + std::string(word) + "'");
  }
  std::string key = utf8::ToLower(word);
  if (index_.contains(key)) return false;
  index_.emplace(key, words_.size());
  words_.push_back(std::move(key));
  data_.insert(data_.end(), values.begin(), values.end());
  return true;
}

std::optional<Eigen::Map<const Eigen::VectorXd>> EmbeddingTable::Find(
    std::string_view word) const {
  auto it = index_.find(utf8::ToLower(word));
  if (it == index_.end()) return std::nullopt;
  return Eigen::Map<const Eigen::VectorXd>(
      data_.data() + it->second * dimension_, dimension_);
}

bool EmbeddingTable::Contains(std::string_view word) const {
  return index_.contains(utf8::ToLower(word));
}

EmbeddingTable ParseEmbeddings(std::istream& in, EmbeddingLoadStats* stats) {
  EmbeddingLoadStats local;
  std::string line;
  if (!std::getline(in, line)) throw ParseError("missing header", 1);
  if (!line.empty() && line.back() == '\r') line.pop_back();
  const auto header = SplitSpaces(line);
  std::size_t rows = 0;
  int dim = 0;
  if (header.size() != 2 || !ParseNumber(header[0], rows) ||
      !ParseNumber(header[1], dim) || dim < 1) {
    throw ParseError("header must be 'N D' with D > 0", 1);
  }
  EmbeddingTable table(dim);
  std::vector<double> values(dim);
  std::size_t lineno = 1;
  std::size_t seen = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    ++seen;
    if (seen > rows) {
      throw ParseError("more rows than the header's N=" + std::to_string(rows),
                       lineno);
    }
    const auto fields = SplitSpaces(line);
    if (fields.size() != static_cast<std::size_t>(dim) + 1) {
      throw ParseError("row has " + std::to_string(fields.size() - 1) +
                           " values, header says " + std::to_string(dim),
                       lineno);
    }
    for (int i = 0; i < dim; ++i) {
      if (!ParseNumber(fields[i + 1], values[i]) || !std::isfinite(values[i])) {
        throw ParseError("bad float '" + std::string(fields[i + 1]) + "'",
                         lineno);
      }
    }
    if (std::all_of(values.begin(), values.end(),
                    [](double v) { return v == 0.0; })) {
      log::Warn("embeddings line " + std::to_string(lineno) +
                ": zero vector for '" + std::string(fields[0]) + "' skipped");
      ++local.zero_vectors_skipped;
      continue;
    }
    if (!table.Add(fields[0], values)) ++local.duplicates_ignored;
  }
  if (in.bad()) throw IoError("read failure while loading embeddings");
  if (seen != rows) {
    throw ParseError("header promises " + std::to_string(rows) +
                         " rows, found " + std::to_string(seen),
                     lineno + 1);
  }
  if (stats != nullptr) *stats = local;
  return table;
}

EmbeddingTable LoadEmbeddings(const std::filesystem::path& path,
                              EmbeddingLoadStats* stats) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open embeddings file: " + path.string());
  return ParseEmbeddings(in, stats);
}

void WriteEmbeddings(const EmbeddingTable& table, std::ostream& out) {
  out << table.size() << ' ' << table.dimension() << '\n';
  const auto old_precision = out.precision(17);
  for (const std::string& w : table.words()) {
    out << w;
    const auto values = table.Find(w);
    for (double v : *values) out << ' ' << v;
    out << '\n';
  }
  out.precision(old_precision);
}

ContextWindow MakeContextWindow(std::span<const std::string> sequence,
                                std::size_t center, int max_window) {
  if (center >= sequence.size()) {
    throw ContractViolation("context center out of range");
  }
  if (max_window < 1) throw ContractViolation("window size must be >= 1");
  ContextWindow w;
  w.center = sequence[center];
  w.max_window = max_window;
  const std::size_t p = static_cast<std::size_t>(max_window);
  const std::size_t begin = center >= p ? center - p : 0;
  const std::size_t end = std::min(sequence.size(), center + 1 + p);
  w.left.assign(sequence.begin() + begin, sequence.begin() + center);
  w.right.assign(sequence.begin() + center + 1, sequence.begin() + end);
  return w;
}

Projection ProjectOntoSpan(const Eigen::MatrixXd& context,
                           const Eigen::VectorXd& target) {
  const double norm = target.norm();
  if (norm == 0.0) throw ContractViolation("target vector is zero");
  Projection out;
  if (context.cols() == 0) {
    out.coefficients = Eigen::VectorXd(0);
    out.residual = -target;
    out.distance = norm;
    return out;
  }
  Eigen::CompleteOrthogonalDecomposition<Eigen::MatrixXd> cod(context);
  out.coefficients = cod.solve(target);
  out.residual = context * out.coefficients - target;
  out.distance = out.residual.squaredNorm() / norm;
  return out;
}

double WindowDistance(const EmbeddingTable& table, std::string_view candidate,
                      const ContextWindow& window, int p) {
  if (p < 1 || p > window.max_window) {
    throw ContractViolation("window radius p must lie in [1, max_window]");
  }
  auto target = table.Find(candidate);
  if (!target) throw MissingEmbedding(std::string(candidate));

  std::vector<Eigen::Map<const Eigen::VectorXd>> columns;
  const std::size_t radius = static_cast<std::size_t>(p);
  const std::size_t left_begin =
      window.left.size() > radius ? window.left.size() - radius : 0;
  for (std::size_t i = left_begin; i < window.left.size(); ++i) {
    if (auto v = table.Find(window.left[i])) columns.push_back(*v);
  }
  for (std::size_t i = 0; i < std::min(radius, window.right.size()); ++i) {
    if (auto v = table.Find(window.right[i])) columns.push_back(*v);
  }
  Eigen::MatrixXd context(table.dimension(),
                          static_cast<Eigen::Index>(columns.size()));
  for (std::size_t c = 0; c < columns.size(); ++c) {
    context.col(static_cast<Eigen::Index>(c)) = columns[c];
  }
  return ProjectOntoSpan(context, *target).distance;
}

ScoredCandidate WeightedDistance(const EmbeddingTable& table,
                                 std::string_view candidate,
                                 const ContextWindow& window) {
  if (window.max_window < 1) {
    throw ContractViolation("window size must be >= 1");
  }
  ScoredCandidate scored;
  scored.word = std::string(candidate);
  for (int p = 1; p <= window.max_window; ++p) {
    const double d = WindowDistance(table, candidate, window, p);
    scored.per_window.emplace_back(p, d);
    scored.weighted_distance += d / p;
  }
  return scored;
}

const Candidate& MostFrequentCandidate(const CandidateSet& candidates) {
  if (candidates.candidates.empty()) {
    throw ContractViolation("empty candidate set");
  }
  return *std::min_element(
      candidates.candidates.begin(), candidates.candidates.end(),
      [](const Candidate& a, const Candidate& b) {
        if (a.frequency != b.frequency) return a.frequency > b.frequency;
        return a.word < b.word;
      });
}

Selection SelectCorrection(const EmbeddingTable& table,
                           const CandidateSet& candidates,
                           const ContextWindow& window) {
  if (candidates.candidates.empty()) {
    throw ContractViolation("SelectCorrection needs at least one candidate");
  }
  Selection sel;
  const auto has_embedding = [&](const std::string& w) {
    return table.Contains(w);
  };
  const std::size_t p = static_cast<std::size_t>(window.max_window);
  const bool any_context =
      std::any_of(window.left.end() - std::min(p, window.left.size()),
                  window.left.end(), has_embedding) ||
      std::any_of(window.right.begin(),
                  window.right.begin() + std::min(p, window.right.size()),
                  has_embedding);

  const Candidate* best = nullptr;
  double best_score = 0.0;
  for (const Candidate& c : candidates.candidates) {
    if (!table.Contains(c.word)) continue;
    ScoredCandidate s = WeightedDistance(table, c.word, window);
    const double score = s.weighted_distance;
    sel.scores.push_back(std::move(s));
    bool better = false;
    if (best == nullptr) {
      better = true;
    } else if (Near(score, best_score)) {
      better = c.frequency > best->frequency ||
               (c.frequency == best->frequency && c.word < best->word);
    } else {
      better = score < best_score;
    }
    if (better) {
      best = &c;
      best_score = score;
    }
  }
  if (best == nullptr || !any_context) {
    sel.word = MostFrequentCandidate(candidates).word;
    sel.frequency_fallback = true;
  } else {
    sel.word = best->word;
  }
  return sel;
}

}  // namespace veilbreak
