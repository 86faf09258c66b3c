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

#ifndef GREYBOX_SHADOW_HPP_
#define GREYBOX_SHADOW_HPP_

#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "greybox/embedding.hpp"
#include "greybox/wordscore.hpp"

namespace greybox {

struct ScorePair {
  std::string word;
  ScoreVector target;  // exact score queried from the real victim
};

struct ShadowTrainOptions {
  std::size_t hidden_units = 64;
  std::size_t epochs = 200;
  std::size_t batch_size = 32;
  double learning_rate = 0.05;
};

/// Single-hidden-layer regressor from teacher vectors to score vectors.
/// Exact scores for the q queried words are served from a cache.
class ShadowModel {
 public:
  Matrix hidden_weights;  // h x d
  Vector hidden_bias;     // h
  Matrix out_weights;     // n_classes x h
  Vector out_bias;        // n_classes
  std::size_t trained_on = 0;  // query count q
  std::map<std::string, ScoreVector> cache;

  std::size_t n_classes() const {
    return static_cast<std::size_t>(out_bias.size());
  }
  /// Raw regressor output, no sparsification, no cache.
  Vector raw_predict(const Vector& embedding) const;
};

/// The q most frequent words, frequency ties broken lexicographically.
/// q beyond the vocabulary returns everything.
std::vector<std::string> select_query_words(
    const std::map<std::string, std::size_t>& frequencies, std::size_t q);

/// Squared-error gradient descent; deterministic per seed. Pairs whose word
/// is missing from the teacher are skipped.
ShadowModel train_shadow(const std::vector<ScorePair>& pairs,
                         const EmbeddingTable& teacher, std::uint64_t seed,
                         const ShadowTrainOptions& options = {});

/// Cached exact score when available, otherwise the sparsified regressor
/// output (keep the max coordinate if positive, zero the rest). OOV words
/// score zero.
ScoreVector shadow_score(const ShadowModel& model, const EmbeddingTable& teacher,
                         const std::string& word);

/// Fraction of non-training words whose shadow argmax class matches the
/// ground-truth argmax class.
double shadow_agreement(const ShadowModel& model, const EmbeddingTable& teacher,
                        const ScoreTable& ground_truth);

/// Self-describing JSON persistence, cached pairs included.
void save_shadow(const ShadowModel& model, const std::string& path);
ShadowModel load_shadow(const std::string& path);

}  // namespace greybox

#endif  // GREYBOX_SHADOW_HPP_
