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

#ifndef GREYBOX_EVAL_HPP_
#define GREYBOX_EVAL_HPP_

#include <cstddef>
#include <functional>
#include <string>
#include <vector>

#include "greybox/attacks.hpp"
#include "greybox/shadow.hpp"
#include "greybox/victim.hpp"
#include "greybox/wordscore.hpp"

namespace greybox {

/// Confusion counts for boundary prediction vs victim output, class 1 as
/// positive.
struct AgreementReport {
  std::size_t tp = 0;
  std::size_t tn = 0;
  std::size_t fp = 0;
  std::size_t fn = 0;
  double avg_acc = 0.0;

  std::size_t total() const { return tp + tn + fp + fn; }
};

struct AttackReport {
  std::size_t attempted = 0;
  std::size_t flipped = 0;
  double accuracy = 0.0;
  double avg_t = 0.0;  // averaged over flipped results only
};

struct UsefulnessEstimate {
  double rho_hat = 0.0;
  std::size_t n = 0;
};

/// A boundary predictor: either a ScoreTable or a ShadowModel over the whole
/// vocabulary, paired with skew ratios.
struct BoundaryPredictor {
  const ScoreTable* table = nullptr;
  const ShadowModel* shadow = nullptr;
  ClassWordRatios ratios;
  std::optional<MulticlassThreshold> threshold;

  std::size_t predict(const EmbeddingTable& teacher,
                      const std::string& text) const;
};

/// Compares predict_class output to the victim argmax, one accounted query
/// per sample. Dataset labels are only the TP/TN anchors.
AgreementReport boundary_agreement(const BoundaryPredictor& predictor,
                                   const VictimModel& victim,
                                   const EmbeddingTable& teacher,
                                   const LabeledDataset& dataset);

/// Victim-verified flips only; one accounted query per result.
AttackReport attack_accuracy(std::vector<AdvResult>& results,
                             const VictimModel& victim,
                             const EmbeddingTable& teacher,
                             bool avg_t_over_all = false);

/// rho_hat = (1/n) sum of y_i * f(x_i) with labels mapped to ±1
/// (class 1 -> +1).
UsefulnessEstimate estimate_usefulness(
    const std::function<double(const std::string&)>& feature,
    const LabeledDataset& dataset);

struct FlipCurvePoint {
  std::size_t step;
  double log_prob_diff;   // log p_source - log p_target from the victim
  double score_sum_diff;  // K_I[source] - K_I[target] from the table
};

/// Iteratively replaces the highest source-score word present in the text
/// with the highest target-score vocabulary word; one accounted victim query
/// per step (plus the baseline).
std::vector<FlipCurvePoint> flip_curve(const std::string& text,
                                       const VictimModel& victim,
                                       const EmbeddingTable& teacher,
                                       const ScoreTable& table,
                                       std::size_t source_class,
                                       std::size_t target_class,
                                       std::size_t max_steps);

}  // namespace greybox

#endif  // GREYBOX_EVAL_HPP_
