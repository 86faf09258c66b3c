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

#include "greybox/synth.hpp"

#include <algorithm>
#include <numeric>
#include <random>

namespace greybox {

namespace {

// prefix + base-26 suffix, always 3 letters, so tokenization round-trips.
std::string word_name(const std::string& prefix, std::size_t i) {
  std::string suffix(3, 'a');
  for (std::size_t pos = 0; pos < 3; ++pos) {
    suffix[2 - pos] = static_cast<char>('a' + i % 26);
    i /= 26;
  }
  return prefix + suffix;
}

Vector random_unit(std::size_t dim, std::mt19937_64& rng) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  Vector v(static_cast<Eigen::Index>(dim));
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    v[i] = gauss(rng);
  }
  return v / v.norm();
}

std::vector<std::size_t> sample_distinct(std::size_t n, std::size_t k,
                                         std::mt19937_64& rng) {
  std::vector<std::size_t> all(n);
  std::iota(all.begin(), all.end(), 0);
  std::shuffle(all.begin(), all.end(), rng);
  all.resize(std::min(k, n));
  return all;
}

const PosTag kOpenTags[] = {PosTag::kNoun, PosTag::kVerb, PosTag::kAdjective,
                            PosTag::kAdverb};

}  // namespace

SeparableWorld make_separable_world(const SeparableSpec& spec,
                                    std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  SeparableWorld world;
  world.train.class_names = {"neg", "pos"};
  world.test.class_names = {"neg", "pos"};

  // Shared class axis. Class-1 synonyms sit at +class_sep along it, their
  // class-0 sources at -class_sep; everything else is kept orthogonal to it
  // so the axis is the only population-level signal.
  const Vector axis = random_unit(spec.dim, rng);
  auto perp_unit = [&] {
    Vector v = random_unit(spec.dim, rng);
    v -= v.dot(axis) * axis;
    return Vector(v.normalized());
  };

  for (std::size_t i = 0; i < spec.n_pairs; ++i) {
    const Vector base = perp_unit();
    const Vector src =
        (base - spec.class_sep * axis + spec.synonym_noise * perp_unit())
            .normalized();
    const Vector tgt_a =
        (base + spec.class_sep * axis + spec.synonym_noise * perp_unit())
            .normalized();
    const Vector tgt_b =
        (base + spec.class_sep * axis + spec.synonym_noise * perp_unit())
            .normalized();
    const std::string s = word_name("sor", i);
    const std::string a = word_name("tar", i);
    const std::string b = word_name("tbr", i);
    world.table.insert(s, src);
    world.table.insert(a, tgt_a);
    world.table.insert(b, tgt_b);
    const PosTag tag = kOpenTags[i % 4];
    world.lexicon.entries[s] = tag;
    world.lexicon.entries[a] = tag;
    world.lexicon.entries[b] = tag;
    world.source_words.push_back(s);
    world.target_words_a.push_back(a);
    world.target_words_b.push_back(b);
  }
  for (std::size_t i = 0; i < spec.n_fillers; ++i) {
    const std::string f = word_name("fil", i);
    world.table.insert(f, perp_unit());
    world.lexicon.entries[f] = PosTag::kOther;
    world.fillers.push_back(f);
  }

  std::bernoulli_distribution pick_b(0.5);
  auto make_text = [&](std::size_t label) {
    std::vector<std::string> tokens;
    for (std::size_t idx :
         sample_distinct(spec.n_fillers, spec.fillers_per_text, rng)) {
      tokens.push_back(world.fillers[idx]);
    }
    for (std::size_t idx :
         sample_distinct(spec.n_pairs, spec.class_words_per_text, rng)) {
      if (label == 0) {
        tokens.push_back(world.source_words[idx]);
      } else {
        tokens.push_back(pick_b(rng) ? world.target_words_b[idx]
                                     : world.target_words_a[idx]);
      }
    }
    std::shuffle(tokens.begin(), tokens.end(), rng);
    std::string text;
    for (const auto& token : tokens) {
      if (!text.empty()) {
        text += ' ';
      }
      text += token;
    }
    text += '.';
    return text;
  };

  for (std::size_t label = 0; label < 2; ++label) {
    for (std::size_t i = 0; i < spec.train_per_class; ++i) {
      world.train.samples.push_back({make_text(label), label});
    }
    for (std::size_t i = 0; i < spec.test_per_class; ++i) {
      world.test.samples.push_back({make_text(label), label});
    }
  }
  return world;
}

LengthBiasedWorld make_length_biased_world(const LengthBiasedSpec& spec,
                                           std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  LengthBiasedWorld world;
  world.train.class_names = {"real", "fake"};
  world.test.class_names = {"real", "fake"};

  std::vector<std::string> vocab;
  for (std::size_t i = 0; i < spec.vocab; ++i) {
    const std::string w = word_name("wrd", i);
    world.table.insert(w, random_unit(spec.dim, rng));
    vocab.push_back(w);
  }

  std::uniform_int_distribution<std::size_t> pick_word(0, spec.vocab - 1);
  auto make_text = [&](std::size_t label) {
    std::uniform_int_distribution<std::size_t> pick_len(
        label == 1 ? spec.fake_min_sentences : spec.real_min_sentences,
        label == 1 ? spec.fake_max_sentences : spec.real_max_sentences);
    const std::size_t n_sentences = pick_len(rng);
    std::string text;
    for (std::size_t s = 0; s < n_sentences; ++s) {
      if (s > 0) {
        text += ' ';
      }
      for (std::size_t w = 0; w < spec.words_per_sentence; ++w) {
        if (w > 0) {
          text += ' ';
        }
        text += vocab[pick_word(rng)];
      }
      text += '.';
    }
    return text;
  };

  for (std::size_t label = 0; label < 2; ++label) {
    for (std::size_t i = 0; i < spec.train_per_class; ++i) {
      world.train.samples.push_back({make_text(label), label});
    }
    for (std::size_t i = 0; i < spec.test_per_class; ++i) {
      world.test.samples.push_back({make_text(label), label});
    }
  }
  return world;
}

}  // namespace greybox
