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

#include "greybox/attacks.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <sstream>

#include <json.hpp>

#include "greybox/errors.hpp"

namespace greybox {

namespace {

bool open_class(PosTag tag) {
  return tag == PosTag::kNoun || tag == PosTag::kVerb ||
         tag == PosTag::kAdjective || tag == PosTag::kAdverb;
}

}  // namespace

bool check_constraints(const PosLexicon& lexicon, const std::string& w,
                       const std::string& w_cand) {
  const PosTag tag = pos_tag(lexicon, w);
  return open_class(tag) && tag == pos_tag(lexicon, w_cand);
}

std::optional<std::string> get_replacement_word(const std::string& w,
                                                const AttackConfig& cfg,
                                                const ShadowModel& shadow,
                                                const EmbeddingTable& teacher,
                                                const PosLexicon& lexicon) {
  if (!teacher.contains(w)) {
    return std::nullopt;
  }
  NeighborList neighbors = nearest_neighbors(teacher, w, cfg.g_w);
  std::optional<std::string> best;
  double best_score = -1.0;
  for (const auto& [candidate, sim] : neighbors.neighbors) {
    if (!check_constraints(lexicon, w, candidate)) {
      continue;
    }
    const double score =
        shadow_score(shadow, teacher, candidate).scores[cfg.target_class];
    if (score > best_score ||
        (score == best_score && best && candidate < *best)) {
      best = candidate;
      best_score = score;
    }
  }
  if (!best) {
    return std::nullopt;
  }
  const double own_score =
      shadow_score(shadow, teacher, w).scores[cfg.target_class];
  if (own_score > best_score) {
    return std::nullopt;  // the word itself already serves the target class
  }
  return best;
}

AdvResult generate_adv_example(const std::string& text,
                               const AttackConfig& cfg,
                               const ShadowModel& shadow,
                               const EmbeddingTable& teacher,
                               const PosLexicon& lexicon) {
  if (cfg.target_class == cfg.source_class) {
    throw InvalidArgumentError("target class must differ from source class");
  }
  AdvResult result;
  result.original = text;
  result.source_class = cfg.source_class;
  result.target_class = cfg.target_class;

  TokenSeq seq = tokenize(text);
  if (seq.empty()) {
    result.perturbed = text;
    return result;
  }

  // Token types in descending source-class score; ties keep first-occurrence
  // order. Each type is replaced consistently at all its positions.
  struct TypeInfo {
    std::string word;
    double source_score;
    std::size_t first_pos;
    std::vector<std::size_t> positions;
  };
  std::map<std::string, std::size_t> type_index;
  std::vector<TypeInfo> types;
  for (std::size_t pos = 0; pos < seq.tokens.size(); ++pos) {
    const std::string& token = seq.tokens[pos];
    auto [it, inserted] = type_index.try_emplace(token, types.size());
    if (inserted) {
      types.push_back({token,
                       shadow_score(shadow, teacher, token)
                           .scores[cfg.source_class],
                       pos,
                       {}});
    }
    types[it->second].positions.push_back(pos);
  }
  std::stable_sort(types.begin(), types.end(),
                   [](const TypeInfo& a, const TypeInfo& b) {
                     if (a.source_score != b.source_score) {
                       return a.source_score > b.source_score;
                     }
                     return a.first_pos < b.first_pos;
                   });

  const auto n_tokens = static_cast<double>(seq.tokens.size());
  std::map<std::string, std::string> substitutions;
  std::size_t replaced_positions = 0;
  for (const TypeInfo& type : types) {
    const double prospective =
        static_cast<double>(replaced_positions + type.positions.size()) /
        n_tokens;
    if (prospective > cfg.th) {
      break;
    }
    auto replacement =
        get_replacement_word(type.word, cfg, shadow, teacher, lexicon);
    if (!replacement) {
      continue;
    }
    substitutions[type.word] = *replacement;
    replaced_positions += type.positions.size();
    for (std::size_t pos : type.positions) {
      result.replacements.push_back({pos, type.word, *replacement});
    }
  }
  std::sort(result.replacements.begin(), result.replacements.end(),
            [](const Replacement& a, const Replacement& b) {
              return a.position < b.position;
            });
  result.t = static_cast<double>(replaced_positions) / n_tokens;

  // Rebuild the surface text through the token spans.
  std::string perturbed;
  std::size_t cursor = 0;
  for (std::size_t pos = 0; pos < seq.tokens.size(); ++pos) {
    const auto [start, end] = seq.spans[pos];
    perturbed += text.substr(cursor, start - cursor);
    auto it = substitutions.find(seq.tokens[pos]);
    perturbed += it == substitutions.end() ? text.substr(start, end - start)
                                           : it->second;
    cursor = end;
  }
  perturbed += text.substr(cursor);
  result.perturbed = std::move(perturbed);
  return result;
}

bool validate_adv_result(const AdvResult& result, const AttackConfig& cfg,
                         const EmbeddingTable& teacher,
                         const PosLexicon& lexicon, std::string* why) {
  auto fail = [&](const std::string& reason) {
    if (why != nullptr) {
      *why = reason;
    }
    return false;
  };
  TokenSeq seq = tokenize(result.original);
  if (seq.empty()) {
    return result.replacements.empty() || fail("replacements in empty text");
  }
  std::vector<bool> touched(seq.tokens.size(), false);
  for (const auto& rep : result.replacements) {
    if (rep.position >= seq.tokens.size()) {
      return fail("replacement position out of range");
    }
    if (touched[rep.position]) {
      return fail("token position replaced twice");
    }
    touched[rep.position] = true;
    if (seq.tokens[rep.position] != rep.old_word) {
      return fail("old word does not match original token");
    }
    if (!check_constraints(lexicon, rep.old_word, rep.new_word)) {
      return fail("part-of-speech constraint violated for '" + rep.old_word +
                  "' -> '" + rep.new_word + "'");
    }
    NeighborList neighbors =
        nearest_neighbors(teacher, rep.old_word, cfg.g_w);
    const bool member =
        std::any_of(neighbors.neighbors.begin(), neighbors.neighbors.end(),
                    [&](const Neighbor& n) { return n.word == rep.new_word; });
    if (!member) {
      return fail("replacement outside the g_w neighborhood of '" +
                  rep.old_word + "'");
    }
  }
  const double t = static_cast<double>(result.replacements.size()) /
                   static_cast<double>(seq.tokens.size());
  if (t > cfg.th + 1e-12) {
    return fail("fraction replaced exceeds th");
  }
  if (std::abs(t - result.t) > 1e-9) {
    return fail("recorded t does not match replacement count");
  }
  return true;
}

std::string length_attack(const std::string& text,
                          std::size_t keep_sentences) {
  std::vector<std::string> sentences = split_sentences(text);
  if (sentences.size() <= keep_sentences) {
    return text;
  }
  std::string out;
  for (std::size_t i = 0; i < keep_sentences; ++i) {
    if (i > 0) {
      out += ' ';
    }
    out += sentences[i];
  }
  return out;
}

SentenceAppendResult sentence_append_attack(const std::string& text,
                                            const SentenceAnchor& anchor,
                                            std::size_t k,
                                            const EmbeddingTable& teacher,
                                            bool length_feature,
                                            std::size_t max_sentences) {
  SentenceAppendResult result;
  result.text = text;
  const std::vector<std::string> anchor_sentences =
      split_sentences(anchor.anchor_text);
  std::size_t current_count = split_sentences(text).size();
  const std::size_t steps = std::min(k, anchor_sentences.size());
  for (std::size_t i = 0; i < steps; ++i) {
    if (current_count >= max_sentences) {
      break;
    }
    if (!result.text.empty()) {
      result.text += ' ';
    }
    result.text += anchor_sentences[i];
    ++current_count;
    const Vector embedded =
        sentence_embed(teacher, result.text, length_feature, max_sentences);
    result.dot_products.push_back(embedded.dot(anchor.anchor_embedding));
  }
  return result;
}

SentenceAnchor select_anchor(const LabeledDataset& pool,
                             const VictimModel& victim,
                             const EmbeddingTable& teacher,
                             std::size_t anchor_class) {
  std::optional<std::size_t> best;
  double best_confidence = -1.0;
  for (std::size_t i = 0; i < pool.samples.size(); ++i) {
    const auto& sample = pool.samples[i];
    if (sample.label != anchor_class) {
      continue;
    }
    ClassDistribution dist = victim.query(teacher, sample.text);
    if (dist.argmax() != anchor_class) {
      continue;
    }
    const double confidence =
        dist.probs[static_cast<Eigen::Index>(anchor_class)];
    if (confidence > best_confidence) {
      best = i;
      best_confidence = confidence;
    }
  }
  if (!best) {
    throw InvalidArgumentError(
        "no correctly classified sample of the anchor class in the pool");
  }
  SentenceAnchor anchor;
  anchor.anchor_text = pool.samples[*best].text;
  anchor.anchor_class = anchor_class;
  anchor.anchor_embedding =
      sentence_embed(teacher, anchor.anchor_text,
                     victim.config.length_feature, victim.config.length_cap);
  return anchor;
}

std::string adv_result_to_json(const AdvResult& result) {
  nlohmann::json j;
  j["original"] = result.original;
  j["perturbed"] = result.perturbed;
  nlohmann::json reps = nlohmann::json::array();
  for (const auto& rep : result.replacements) {
    reps.push_back({{"position", rep.position},
                    {"old", rep.old_word},
                    {"new", rep.new_word}});
  }
  j["replacements"] = reps;
  j["t"] = result.t;
  j["source_class"] = result.source_class;
  j["target_class"] = result.target_class;
  if (result.victim_flip) {
    j["victim_flip"] = *result.victim_flip;
  } else {
    j["victim_flip"] = nullptr;
  }
  return j.dump();
}

AdvResult adv_result_from_json(const std::string& line) {
  nlohmann::json j = nlohmann::json::parse(line);
  AdvResult result;
  result.original = j.at("original").get<std::string>();
  result.perturbed = j.at("perturbed").get<std::string>();
  for (const auto& rep : j.at("replacements")) {
    result.replacements.push_back({rep.at("position").get<std::size_t>(),
                                   rep.at("old").get<std::string>(),
                                   rep.at("new").get<std::string>()});
  }
  result.t = j.at("t").get<double>();
  result.source_class = j.at("source_class").get<std::size_t>();
  result.target_class = j.at("target_class").get<std::size_t>();
  if (!j.at("victim_flip").is_null()) {
    result.victim_flip = j.at("victim_flip").get<bool>();
  }
  return result;
}

}  // namespace greybox
