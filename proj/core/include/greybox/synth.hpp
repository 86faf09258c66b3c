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

#ifndef GREYBOX_SYNTH_HPP_
#define GREYBOX_SYNTH_HPP_

#include <cstdint>
#include <string>
#include <vector>

#include "greybox/dataset.hpp"
#include "greybox/embedding.hpp"
#include "greybox/textproc.hpp"

namespace greybox {

// Deterministic desk-scale corpora used by the shipped experiments and tests.

/// Word-substitution world: each source word carries two same-POS synonyms of
/// the opposite class a short cosine hop away, so score-guided replacement has
/// room to work (and to re-route after adversarial training).
struct SeparableSpec {
  std::size_t n_pairs = 40;       // source words, each with 2 target synonyms
  std::size_t n_fillers = 30;     // closed-class words, no class signal
  std::size_t dim = 50;
  double class_sep = 0.25;        // offset along the shared class axis
  double synonym_noise = 0.25;    // word-specific offset scale
  std::size_t train_per_class = 400;
  std::size_t test_per_class = 100;
  std::size_t class_words_per_text = 5;
  std::size_t fillers_per_text = 5;
};

struct SeparableWorld {
  EmbeddingTable table;
  PosLexicon lexicon;
  LabeledDataset train;
  LabeledDataset test;
  std::vector<std::string> source_words;   // class 0 vocabulary
  std::vector<std::string> target_words_a; // class 1, first synonym set
  std::vector<std::string> target_words_b; // class 1, second synonym set
  std::vector<std::string> fillers;
};

SeparableWorld make_separable_world(const SeparableSpec& spec,
                                    std::uint64_t seed);

/// Length-biased world: both classes draw words from the same distribution;
/// only the sentence count separates them (class 1 "fake" is short).
struct LengthBiasedSpec {
  std::size_t vocab = 120;
  std::size_t dim = 20;
  std::size_t train_per_class = 400;
  std::size_t test_per_class = 100;
  std::size_t fake_min_sentences = 1;
  std::size_t fake_max_sentences = 4;
  std::size_t real_min_sentences = 16;
  std::size_t real_max_sentences = 30;
  std::size_t words_per_sentence = 6;
};

struct LengthBiasedWorld {
  EmbeddingTable table;
  LabeledDataset train;
  LabeledDataset test;
};

LengthBiasedWorld make_length_biased_world(const LengthBiasedSpec& spec,
                                           std::uint64_t seed);

}  // namespace greybox

#endif  // GREYBOX_SYNTH_HPP_
