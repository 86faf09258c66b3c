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

#include "greybox/wordscore.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>

#include "greybox/errors.hpp"

namespace greybox {

bool ScoreVector::all_zero() const {
  return std::all_of(scores.begin(), scores.end(),
                     [](double s) { return s == 0.0; });
}

std::size_t ScoreVector::argmax_class() const {
  std::size_t best = 0;
  for (std::size_t i = 1; i < scores.size(); ++i) {
    if (scores[i] > scores[best]) {
      best = i;
    }
  }
  return best;
}

ScoreVector word_score(const ClassDistribution& probs) {
  const auto n = static_cast<std::size_t>(probs.probs.size());
  if (n < 2) {
    throw InvalidArgumentError("word_score needs at least 2 classes");
  }
  double sum = 0.0;
  for (Eigen::Index i = 0; i < probs.probs.size(); ++i) {
    const double p = probs.probs[i];
    if (p < 0.0 || !std::isfinite(p)) {
      throw InvalidArgumentError("probabilities must be non-negative");
    }
    sum += p;
  }
  if (std::abs(sum - 1.0) > 1e-6) {
    throw InvalidArgumentError("probabilities must sum to 1");
  }

  const std::size_t o = probs.argmax();
  const double p_o = probs.probs[static_cast<Eigen::Index>(o)];
  // Exact argmax tie: zero score for every class.
  bool tie = false;
  for (std::size_t i = 0; i < n; ++i) {
    if (i != o && probs.probs[static_cast<Eigen::Index>(i)] == p_o) {
      tie = true;
      break;
    }
  }
  ScoreVector k;
  k.scores.assign(n, 0.0);
  if (tie) {
    return k;
  }
  double rest = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    if (i != o) {
      rest += probs.probs[static_cast<Eigen::Index>(i)];
    }
  }
  k.scores[o] = p_o - rest / static_cast<double>(n - 1);
  return k;
}

ScoreTable build_score_table(const VictimModel& victim,
                             const EmbeddingTable& teacher,
                             const std::vector<std::string>& words) {
  std::vector<std::string> distinct;
  for (const auto& word : words) {
    if (std::find(distinct.begin(), distinct.end(), word) == distinct.end()) {
      distinct.push_back(word);
    }
  }
  ScoreTable table;
  table.n_classes = victim.config.n_classes;
  table.source = ScoreSource::kVictimQueries;
  for (const auto& word : distinct) {
    // BudgetExceededError propagates; the partial table is discarded with it.
    table.entries[word] = word_score(victim.query(teacher, word));
  }
  return table;
}

MulticlassThreshold make_threshold(const ScoreTable& table, double percentile) {
  if (percentile < 0.0 || percentile >= 100.0) {
    throw InvalidArgumentError("percentile must be in [0, 100)");
  }
  std::vector<double> positives;
  for (const auto& [word, k] : table.entries) {
    for (double s : k.scores) {
      if (s > 0.0) {
        positives.push_back(s);
      }
    }
  }
  MulticlassThreshold th;
  th.percentile = percentile;
  if (positives.empty()) {
    th.cutoff = 0.0;
    return th;
  }
  std::sort(positives.begin(), positives.end());
  const auto rank = static_cast<std::size_t>(
      percentile / 100.0 * static_cast<double>(positives.size()));
  th.cutoff = positives[std::min(rank, positives.size() - 1)];
  return th;
}

InputScore input_score(const TokenSeq& tokens, const ScoreTable& table,
                       const std::optional<MulticlassThreshold>& threshold) {
  InputScore k_i;
  k_i.sums.assign(table.n_classes, 0.0);
  for (const auto& token : tokens.tokens) {
    auto it = table.entries.find(token);
    if (it == table.entries.end()) {
      continue;  // OOV tokens contribute zero
    }
    for (std::size_t j = 0; j < table.n_classes; ++j) {
      const double s = it->second.scores[j];
      if (threshold && s < threshold->cutoff) {
        continue;
      }
      k_i.sums[j] += s;
    }
  }
  return k_i;
}

std::size_t predict_class_uncorrected(const InputScore& k_i) {
  std::size_t best = 0;
  for (std::size_t j = 1; j < k_i.sums.size(); ++j) {
    if (k_i.sums[j] > k_i.sums[best]) {
      best = j;
    }
  }
  return best;
}

std::size_t predict_class(const InputScore& k_i,
                          const ClassWordRatios& ratios) {
  const bool usable =
      ratios.t.size() == k_i.sums.size() &&
      std::all_of(ratios.t.begin(), ratios.t.end(),
                  [](double t) { return t > 0.0; });
  if (!usable) {
    return predict_class_uncorrected(k_i);
  }
  std::size_t best = 0;
  double best_value = k_i.sums[0] / ratios.t[0];
  for (std::size_t j = 1; j < k_i.sums.size(); ++j) {
    const double value = k_i.sums[j] / ratios.t[j];
    if (value > best_value) {
      best = j;
      best_value = value;
    }
  }
  return best;
}

ClassWordRatios class_word_ratios(const ScoreTable& table) {
  std::vector<std::size_t> counts(table.n_classes, 0);
  std::size_t nonzero = 0;
  for (const auto& [word, k] : table.entries) {
    if (k.all_zero()) {
      continue;
    }
    ++counts[k.argmax_class()];
    ++nonzero;
  }
  if (nonzero == 0) {
    throw InvalidArgumentError("score table has no nonzero-scored words");
  }
  ClassWordRatios ratios;
  ratios.t.resize(table.n_classes);
  for (std::size_t j = 0; j < table.n_classes; ++j) {
    ratios.t[j] =
        static_cast<double>(counts[j]) / static_cast<double>(nonzero);
  }
  if (table.n_classes == 2 && counts[0] > 0) {
    ratios.r_w = static_cast<double>(counts[1]) / static_cast<double>(counts[0]);
  }
  return ratios;
}

void save_score_table(const ScoreTable& table, const std::string& path) {
  std::ofstream out(path);
  if (!out) {
    throw ParseError("cannot write score table file: " + path);
  }
  out << "word";
  for (std::size_t j = 0; j < table.n_classes; ++j) {
    out << ",score_class" << j;
  }
  out << '\n';
  out.precision(17);
  for (const auto& [word, k] : table.entries) {
    out << word;
    for (double s : k.scores) {
      out << ',' << s;
    }
    out << '\n';
  }
}

ScoreTable load_score_table(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw ParseError("cannot open score table file: " + path);
  }
  std::string line;
  if (!std::getline(in, line) || line.rfind("word,score_class0", 0) != 0) {
    throw ParseError(path + ": bad score table header");
  }
  ScoreTable table;
  table.n_classes =
      static_cast<std::size_t>(std::count(line.begin(), line.end(), ',')) ;
  std::size_t line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) {
      continue;
    }
    std::istringstream ls(line);
    std::string word;
    if (!std::getline(ls, word, ',')) {
      throw ParseError(path + ":" + std::to_string(line_no) + ": bad record");
    }
    ScoreVector k;
    std::string field;
    while (std::getline(ls, field, ',')) {
      k.scores.push_back(std::stod(field));
    }
    if (k.scores.size() != table.n_classes) {
      throw ParseError(path + ":" + std::to_string(line_no) +
                       ": wrong score count");
    }
    table.entries[word] = std::move(k);
  }
  return table;
}

}  // namespace greybox
