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

#ifndef GREYBOX_WORDSCORE_HPP_
#define GREYBOX_WORDSCORE_HPP_

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "greybox/textproc.hpp"
#include "greybox/victim.hpp"

namespace greybox {

/// Per-word, per-class score K_w: at most one strictly positive entry, all
/// others exactly zero.
struct ScoreVector {
  std::vector<double> scores;

  bool all_zero() const;
  // Index of the single positive entry; ties (all-zero) map to class 0.
  std::size_t argmax_class() const;
};

enum class ScoreSource { kVictimQueries, kShadow };

struct ScoreTable {
  std::map<std::string, ScoreVector> entries;
  std::size_t n_classes = 0;
  ScoreSource source = ScoreSource::kVictimQueries;
};

/// Per-class input sums K_I.
struct InputScore {
  std::vector<double> sums;
};

/// Vocabulary skew: t_j is the fraction of nonzero-scored words whose argmax
/// class is j; r_w = t_1/t_0 for binary tables (class 1 = fake by convention).
struct ClassWordRatios {
  std::vector<double> t;
  double r_w = 0.0;
};

struct MulticlassThreshold {
  double percentile = 60.0;  // of all positive scores in the table
  double cutoff = 0.0;
};

/// Binary: K[o] = p_o - p_o'. Multi-class: K[o] = p_o - mean of the rest.
/// Exact argmax ties score zero everywhere.
ScoreVector word_score(const ClassDistribution& probs);

/// Queries each distinct word as a one-word input. Burns exactly one query
/// per distinct word; a budget failure discards the partial table.
ScoreTable build_score_table(const VictimModel& victim,
                             const EmbeddingTable& teacher,
                             const std::vector<std::string>& words);

MulticlassThreshold make_threshold(const ScoreTable& table, double percentile);

/// Sum of per-token scores; OOV tokens contribute zero; with a threshold,
/// per-word scores strictly below the cutoff contribute zero.
InputScore input_score(const TokenSeq& tokens, const ScoreTable& table,
                       const std::optional<MulticlassThreshold>& threshold = {});

/// Skew-corrected argmax of K_I[j]/t_j; falls back to the uncorrected argmax
/// when any t_j is zero. Ties toward the lower index.
std::size_t predict_class(const InputScore& k_i, const ClassWordRatios& ratios);
std::size_t predict_class_uncorrected(const InputScore& k_i);

ClassWordRatios class_word_ratios(const ScoreTable& table);

/// CSV persistence: `word,score_class0,...,score_classN-1`. Reload reproduces
/// predictions exactly.
void save_score_table(const ScoreTable& table, const std::string& path);
ScoreTable load_score_table(const std::string& path);

}  // namespace greybox

#endif  // GREYBOX_WORDSCORE_HPP_
