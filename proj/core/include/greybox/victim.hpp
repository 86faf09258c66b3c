// Copyright 2026 The Greybox Authors
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

#ifndef GREYBOX_VICTIM_HPP_
#define GREYBOX_VICTIM_HPP_

#include <Eigen/Core>

#include <atomic>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "greybox/dataset.hpp"
#include "greybox/embedding.hpp"

namespace greybox {

using Matrix = Eigen::MatrixXd;

enum class VictimMode { kFeatureExtractor, kFineTuned };

struct VictimConfig {
  VictimMode mode = VictimMode::kFeatureExtractor;
  double dropout_ratio = 0.0;            // [0, 1)
  double learning_rate = 0.05;
  double embedding_learning_rate = 0.0;  // forced to 0 in FeatureExtractor mode
  std::size_t epochs = 30;
  std::size_t batch_size = 32;
  std::uint64_t seed = 0;
  std::size_t n_classes = 2;
  bool length_feature = false;       // sentence victim only
  std::size_t length_cap = 32;       // L_cap for the normalized length feature
};

/// Monotone query counter with an optional hard limit. Thread-safe.
class QueryBudget {
 public:
  QueryBudget() = default;
  explicit QueryBudget(std::optional<std::uint64_t> limit) : limit_(limit) {}

  // Throws BudgetExceededError when the limit would be crossed.
  void charge();
  std::uint64_t used() const { return used_.load(); }
  std::optional<std::uint64_t> limit() const { return limit_; }
  void set_limit(std::optional<std::uint64_t> limit) { limit_ = limit; }

 private:
  std::atomic<std::uint64_t> used_{0};
  std::optional<std::uint64_t> limit_;
};

struct ClassDistribution {
  Vector probs;        // simplex point
  bool degenerate = false;  // empty / all-OOV input, uniform fallback

  std::size_t argmax() const;  // ties toward the lower class index
};

/// Black-box student classifier C = (f, w, b). The head is linear over the
/// mean-of-embeddings feature (plus an optional normalized-length slot).
class VictimModel {
 public:
  VictimConfig config;
  std::vector<std::string> class_names;
  Matrix head_weights;  // n_classes x feature_dim
  Vector head_bias;     // n_classes
  bool sentence_level = false;

  // FineTuned mode: private per-word row deltas on top of the public teacher.
  std::map<std::string, Vector> embedding_deltas;

  std::size_t feature_dim() const;
  Vector feature(const EmbeddingTable& teacher, const std::string& text) const;

  /// One budget-accounted probability query.
  ClassDistribution query(const EmbeddingTable& teacher,
                          const std::string& text) const;

  QueryBudget& budget() const { return *budget_; }

  /// Unaccounted evaluation over a dataset (owner-side accuracy reporting).
  double accuracy(const EmbeddingTable& teacher,
                  const LabeledDataset& dataset) const;

 private:
  mutable std::shared_ptr<QueryBudget> budget_ = std::make_shared<QueryBudget>();
};

VictimModel train_word_victim(const LabeledDataset& dataset,
                              const EmbeddingTable& teacher,
                              const VictimConfig& config);

/// Desk-scale stand-in for a sentence-embedding pipeline: the feature is
/// [mean token vector || min(sentence_count, L_cap)/L_cap].
VictimModel train_sentence_victim(const LabeledDataset& dataset,
                                  const EmbeddingTable& teacher,
                                  const VictimConfig& config);

/// The attacker-side recomputation of the sentence feature from public
/// components only.
Vector sentence_embed(const EmbeddingTable& teacher, const std::string& text,
                      bool length_feature, std::size_t length_cap = 32);

/// Retrains from scratch on original ∪ adversarial with the same config and
/// seed. Adversarial labels must be the original (correct) classes.
VictimModel adversarial_retrain(const VictimModel& victim,
                                const EmbeddingTable& teacher,
                                const LabeledDataset& original,
                                const LabeledDataset& adversarial);

/// Self-describing JSON persistence (config, head parameters, delta rows).
void save_victim(const VictimModel& victim, const std::string& path);
VictimModel load_victim(const std::string& path);

// Mean cross-entropy of softmax(Wx + b) and its analytic gradients; the
// training inner loop and the finite-difference checks share these.
double softmax_xent_loss(const Matrix& weights, const Vector& bias,
                         const std::vector<Vector>& features,
                         const std::vector<std::size_t>& labels);
void softmax_xent_gradients(const Matrix& weights, const Vector& bias,
                            const std::vector<Vector>& features,
                            const std::vector<std::size_t>& labels,
                            Matrix* d_weights, Vector* d_bias);

}  // namespace greybox

#endif  // GREYBOX_VICTIM_HPP_
