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

#include <benchmark/benchmark.h>

#include <random>

#include "greybox/attacks.hpp"
#include "greybox/embedding.hpp"
#include "greybox/shadow.hpp"
#include "greybox/synth.hpp"
#include "greybox/victim.hpp"
#include "greybox/wordscore.hpp"

using namespace greybox;

namespace {

EmbeddingTable random_table(std::size_t vocab, std::size_t dim) {
  std::mt19937_64 rng(1);
  std::normal_distribution<double> gauss(0.0, 1.0);
  EmbeddingTable table;
  for (std::size_t i = 0; i < vocab; ++i) {
    Vector v(static_cast<Eigen::Index>(dim));
    for (Eigen::Index j = 0; j < v.size(); ++j) {
      v[j] = gauss(rng);
    }
    table.insert("w" + std::to_string(i), v);
  }
  return table;
}

void BM_NearestNeighbors(benchmark::State& state) {
  const auto vocab = static_cast<std::size_t>(state.range(0));
  auto table = random_table(vocab, 50);
  std::size_t i = 0;
  for (auto _ : state) {
    auto got = nearest_neighbors(table, "w" + std::to_string(i % vocab), 10);
    benchmark::DoNotOptimize(got);
    ++i;
  }
}
BENCHMARK(BM_NearestNeighbors)->Arg(1000)->Arg(10000);

void BM_WordScore(benchmark::State& state) {
  ClassDistribution dist;
  dist.probs = Vector(2);
  dist.probs << 0.7, 0.3;
  for (auto _ : state) {
    auto k = word_score(dist);
    benchmark::DoNotOptimize(k);
  }
}
BENCHMARK(BM_WordScore);

struct AttackFixture {
  SeparableWorld world;
  ShadowModel shadow;
  std::vector<std::string> inputs;
};

const AttackFixture& attack_fixture() {
  static const AttackFixture f = [] {
    AttackFixture fx;
    SeparableSpec spec;
    spec.n_pairs = 30;
    spec.n_fillers = 20;
    spec.train_per_class = 200;
    spec.test_per_class = 50;
    fx.world = make_separable_world(spec, 1);
    VictimConfig config;
    auto victim = train_word_victim(fx.world.train, fx.world.table, config);
    auto table =
        build_score_table(victim, fx.world.table, fx.world.table.words());
    std::vector<ScorePair> pairs;
    for (const auto& [word, k] : table.entries) {
      pairs.push_back({word, k});
    }
    fx.shadow = train_shadow(pairs, fx.world.table, 0);
    for (const auto& sample : fx.world.test.samples) {
      if (sample.label == 0) {
        fx.inputs.push_back(sample.text);
      }
    }
    return fx;
  }();
  return f;
}

void BM_GenerateAdvExample(benchmark::State& state) {
  const auto& f = attack_fixture();
  AttackConfig cfg;
  cfg.g_w = 10;
  cfg.th = 0.5;
  std::size_t i = 0;
  for (auto _ : state) {
    auto result = generate_adv_example(f.inputs[i % f.inputs.size()], cfg,
                                       f.shadow, f.world.table,
                                       f.world.lexicon);
    benchmark::DoNotOptimize(result);
    ++i;
  }
}
BENCHMARK(BM_GenerateAdvExample);

void BM_ShadowScore(benchmark::State& state) {
  const auto& f = attack_fixture();
  const auto& words = f.world.table.words();
  std::size_t i = 0;
  for (auto _ : state) {
    auto k = shadow_score(f.shadow, f.world.table, words[i % words.size()]);
    benchmark::DoNotOptimize(k);
    ++i;
  }
}
BENCHMARK(BM_ShadowScore);

void BM_TrainVictim(benchmark::State& state) {
  SeparableSpec spec;
  spec.n_pairs = 20;
  spec.n_fillers = 10;
  spec.train_per_class = 100;
  spec.test_per_class = 10;
  auto world = make_separable_world(spec, 2);
  VictimConfig config;
  for (auto _ : state) {
    auto victim = train_word_victim(world.train, world.table, config);
    benchmark::DoNotOptimize(victim);
  }
}
BENCHMARK(BM_TrainVictim)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
