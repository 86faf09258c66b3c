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

#include "greybox/eval.hpp"

#include <algorithm>
#include <cmath>

#include "greybox/errors.hpp"

namespace greybox {

std::size_t BoundaryPredictor::predict(const EmbeddingTable& teacher,
                                       const std::string& text) const {
  TokenSeq tokens = tokenize(text);
  InputScore k_i;
  if (table != nullptr) {
    k_i = input_score(tokens, *table, threshold);
  } else if (shadow != nullptr) {
    k_i.sums.assign(shadow->n_classes(), 0.0);
    for (const auto& token : tokens.tokens) {
      ScoreVector k = shadow_score(*shadow, teacher, token);
      for (std::size_t j = 0; j < k.scores.size(); ++j) {
        const double s = k.scores[j];
        if (threshold && s < threshold->cutoff) {
          continue;
        }
        k_i.sums[j] += s;
      }
    }
  } else {
    throw InvalidArgumentError("boundary predictor has no score source");
  }
  return predict_class(k_i, ratios);
}

AgreementReport boundary_agreement(const BoundaryPredictor& predictor,
                                   const VictimModel& victim,
                                   const EmbeddingTable& teacher,
                                   const LabeledDataset& dataset) {
  if (dataset.samples.empty()) {
    throw InvalidArgumentError("empty evaluation dataset");
  }
  AgreementReport report;
  for (const auto& sample : dataset.samples) {
    const std::size_t victim_class = victim.query(teacher, sample.text).argmax();
    const std::size_t predicted = predictor.predict(teacher, sample.text);
    const bool agree = predicted == victim_class;
    // class 1 is the positive class in the confusion counts
    if (sample.label == 1) {
      agree ? ++report.tp : ++report.fn;
    } else {
      agree ? ++report.tn : ++report.fp;
    }
  }
  report.avg_acc = static_cast<double>(report.tp + report.tn) /
                   static_cast<double>(report.total());
  return report;
}

AttackReport attack_accuracy(std::vector<AdvResult>& results,
                             const VictimModel& victim,
                             const EmbeddingTable& teacher,
                             bool avg_t_over_all) {
  if (results.empty()) {
    throw InvalidArgumentError("no attack results to evaluate");
  }
  AttackReport report;
  double t_flipped = 0.0;
  double t_all = 0.0;
  for (auto& result : results) {
    ++report.attempted;
    t_all += result.t;
    const std::size_t predicted =
        victim.query(teacher, result.perturbed).argmax();
    const bool flip = predicted == result.target_class;
    result.victim_flip = flip;
    if (flip) {
      ++report.flipped;
      t_flipped += result.t;
    }
  }
  report.accuracy = static_cast<double>(report.flipped) /
                    static_cast<double>(report.attempted);
  if (avg_t_over_all) {
    report.avg_t = t_all / static_cast<double>(report.attempted);
  } else {
    report.avg_t = report.flipped > 0
                       ? t_flipped / static_cast<double>(report.flipped)
                       : 0.0;
  }
  return report;
}

UsefulnessEstimate estimate_usefulness(
    const std::function<double(const std::string&)>& feature,
    const LabeledDataset& dataset) {
  if (dataset.samples.empty()) {
    throw InvalidArgumentError("empty dataset");
  }
  if (dataset.n_classes() != 2) {
    throw InvalidArgumentError("usefulness estimation needs a binary dataset");
  }
  UsefulnessEstimate estimate;
  double sum = 0.0;
  for (const auto& sample : dataset.samples) {
    const double y = sample.label == 1 ? 1.0 : -1.0;
    sum += y * feature(sample.text);
  }
  estimate.n = dataset.samples.size();
  estimate.rho_hat = sum / static_cast<double>(estimate.n);
  return estimate;
}

std::vector<FlipCurvePoint> flip_curve(const std::string& text,
                                       const VictimModel& victim,
                                       const EmbeddingTable& teacher,
                                       const ScoreTable& table,
                                       std::size_t source_class,
                                       std::size_t target_class,
                                       std::size_t max_steps) {
  // Best replacement word: highest target-class score over the table.
  std::string best_target_word;
  double best_target_score = 0.0;
  for (const auto& [word, k] : table.entries) {
    if (k.scores[target_class] > best_target_score) {
      best_target_word = word;
      best_target_score = k.scores[target_class];
    }
  }

  TokenSeq seq = tokenize(text);
  std::vector<std::string> tokens = seq.tokens;

  auto record = [&](std::size_t step) {
    std::string current;
    for (std::size_t i = 0; i < tokens.size(); ++i) {
      if (i > 0) {
        current += ' ';
      }
      current += tokens[i];
    }
    ClassDistribution dist = victim.query(teacher, current);
    TokenSeq current_seq;
    current_seq.tokens = tokens;
    InputScore k_i = input_score(current_seq, table);
    const double eps = 1e-300;
    return FlipCurvePoint{
        step,
        std::log(std::max(
            dist.probs[static_cast<Eigen::Index>(source_class)], eps)) -
            std::log(std::max(
                dist.probs[static_cast<Eigen::Index>(target_class)], eps)),
        k_i.sums[source_class] - k_i.sums[target_class]};
  };

  std::vector<FlipCurvePoint> curve;
  curve.push_back(record(0));
  for (std::size_t step = 1; step <= max_steps; ++step) {
    // highest remaining source-score word still present in the text
    std::optional<std::size_t> pick;
    double pick_score = 0.0;
    for (std::size_t i = 0; i < tokens.size(); ++i) {
      auto it = table.entries.find(tokens[i]);
      if (it == table.entries.end()) {
        continue;
      }
      const double s = it->second.scores[source_class];
      if (s > pick_score) {
        pick = i;
        pick_score = s;
      }
    }
    if (!pick || best_target_word.empty()) {
      break;  // source-scored words exhausted
    }
    const std::string old = tokens[*pick];
    for (auto& token : tokens) {
      if (token == old) {
        token = best_target_word;
      }
    }
    curve.push_back(record(step));
  }
  return curve;
}

}  // namespace greybox
