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

#ifndef GREYBOX_ATTACKS_HPP_
#define GREYBOX_ATTACKS_HPP_

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "greybox/embedding.hpp"
#include "greybox/shadow.hpp"
#include "greybox/textproc.hpp"
#include "greybox/victim.hpp"

namespace greybox {

struct AttackConfig {
  std::size_t g_w = 10;      // neighbor pool size
  double th = 0.2;           // max fraction of replaced words, (0, 1]
  std::size_t target_class = 1;
  std::size_t source_class = 0;
};

struct Replacement {
  std::size_t position;  // token index in the original text
  std::string old_word;
  std::string new_word;
};

struct AdvResult {
  std::string original;
  std::string perturbed;
  std::vector<Replacement> replacements;
  double t = 0.0;  // fraction of replaced token positions
  std::size_t source_class = 0;
  std::size_t target_class = 1;
  std::optional<bool> victim_flip;  // filled by eval, never by generation
};

struct SentenceAnchor {
  std::string anchor_text;
  Vector anchor_embedding;
  std::size_t anchor_class = 0;
};

/// Open-class gate: true iff tag(w) is Noun/Verb/Adjective/Adverb and equals
/// tag(w_cand). Unknown tags fail.
bool check_constraints(const PosLexicon& lexicon, const std::string& w,
                       const std::string& w_cand);

/// Among the g_w cosine-nearest neighbors passing the constraints, the one
/// with maximum shadow target-class score; nullopt when no candidate survives
/// or the word itself already outranks the best candidate.
std::optional<std::string> get_replacement_word(const std::string& w,
                                                const AttackConfig& cfg,
                                                const ShadowModel& shadow,
                                                const EmbeddingTable& teacher,
                                                const PosLexicon& lexicon);

/// Score-guided synonym substitution. Token types are taken in descending
/// shadow source-class score and each type replaced at all its positions,
/// stopping before t would exceed th. Issues zero victim queries.
AdvResult generate_adv_example(const std::string& text, const AttackConfig& cfg,
                               const ShadowModel& shadow,
                               const EmbeddingTable& teacher,
                               const PosLexicon& lexicon);

/// Independent re-check of every AdvResult invariant (t bound, constraint
/// pass, g_w-neighborhood membership). Kept separate from the generator.
bool validate_adv_result(const AdvResult& result, const AttackConfig& cfg,
                         const EmbeddingTable& teacher,
                         const PosLexicon& lexicon,
                         std::string* why = nullptr);

/// Keeps the first keep_sentences sentences, rejoined with single spaces.
std::string length_attack(const std::string& text, std::size_t keep_sentences);

/// Appends up to k anchor sentences one at a time (total sentence count
/// capped), returning the final text and the per-step dot product between the
/// running sentence embedding and the anchor embedding.
struct SentenceAppendResult {
  std::string text;
  std::vector<double> dot_products;
};
SentenceAppendResult sentence_append_attack(const std::string& text,
                                            const SentenceAnchor& anchor,
                                            std::size_t k,
                                            const EmbeddingTable& teacher,
                                            bool length_feature = true,
                                            std::size_t max_sentences = 32);

/// Highest-confidence correctly classified anchor_class sample from the pool;
/// one accounted victim query per pool sample.
SentenceAnchor select_anchor(const LabeledDataset& pool,
                             const VictimModel& victim,
                             const EmbeddingTable& teacher,
                             std::size_t anchor_class);

/// JSON-lines round trip for attack reports.
std::string adv_result_to_json(const AdvResult& result);
AdvResult adv_result_from_json(const std::string& line);

}  // namespace greybox

#endif  // GREYBOX_ATTACKS_HPP_
