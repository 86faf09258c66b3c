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

// Acceptance suite: one check per shipped guarantee, one PASS/FAIL line each.
// Every tolerance is pinned here, not read from configuration. Run all checks
// with no arguments, or a single one with `--only N`.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstring>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "greybox/attacks.hpp"
#include "greybox/dataset.hpp"
#include "greybox/embedding.hpp"
#include "greybox/eval.hpp"
#include "greybox/shadow.hpp"
#include "greybox/synth.hpp"
#include "greybox/textproc.hpp"
#include "greybox/victim.hpp"
#include "greybox/wordscore.hpp"

using namespace greybox;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

struct Outcome {
  bool pass;
  std::string detail;
};

// ---------------------------------------------------------------------------
// 1. Word-score invariants hold on 10000 random distributions in < 10 s.
Outcome criterion_score_invariants() {
  const auto start = Clock::now();
  std::mt19937_64 rng(1001);
  std::uniform_int_distribution<std::size_t> pick_classes(2, 5);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  for (int i = 0; i < 10000; ++i) {
    const auto n = static_cast<Eigen::Index>(pick_classes(rng));
    Vector p(n);
    double sum = 0.0;
    for (Eigen::Index j = 0; j < n; ++j) {
      p[j] = -std::log(std::max(unit(rng), 1e-12));
      sum += p[j];
    }
    p /= sum;
    ClassDistribution dist;
    dist.probs = p;
    ScoreVector k = word_score(dist);

    int positives = 0;
    for (double s : k.scores) {
      if (s < 0.0) {
        return {false, "negative score entry"};
      }
      if (s > 0.0) {
        ++positives;
      }
    }
    if (positives > 1) {
      return {false, "more than one positive entry"};
    }
    if (positives == 1 && k.argmax_class() != dist.argmax()) {
      return {false, "positive entry off the argmax class"};
    }
    // exact-tie inputs must produce the all-zero vector
    ClassDistribution tie;
    tie.probs = Vector::Constant(n, 1.0 / static_cast<double>(n));
    if (!word_score(tie).all_zero()) {
      return {false, "tie did not zero the score"};
    }
  }
  const double elapsed = seconds_since(start);
  if (elapsed >= 10.0) {
    return {false, "took " + std::to_string(elapsed) + " s (limit 10)"};
  }
  std::ostringstream detail;
  detail << "10000 inputs in " << elapsed << " s";
  return {true, detail.str()};
}

// ---------------------------------------------------------------------------
// 2. nearest_neighbors equals the brute-force oracle on 500 queries in < 30 s.
Outcome criterion_knn_oracle() {
  const auto start = Clock::now();
  std::mt19937_64 rng(1002);
  std::normal_distribution<double> gauss(0.0, 1.0);
  EmbeddingTable table;
  const std::size_t vocab = 2000;
  for (std::size_t i = 0; i < vocab; ++i) {
    Vector v(32);
    for (Eigen::Index j = 0; j < 32; ++j) {
      v[j] = gauss(rng);
    }
    table.insert("w" + std::to_string(i), v);
  }
  std::uniform_int_distribution<std::size_t> pick(0, vocab - 1);
  for (int q = 0; q < 500; ++q) {
    const std::string query = "w" + std::to_string(pick(rng));
    auto got = nearest_neighbors(table, query, 10);
    // oracle: full sort with the same tie-break
    std::vector<Neighbor> all;
    for (const auto& other : table.words()) {
      if (other != query) {
        all.push_back({other, cosine_similarity(table, query, other)});
      }
    }
    std::sort(all.begin(), all.end(),
              [](const Neighbor& a, const Neighbor& b) {
                if (a.similarity != b.similarity) {
                  return a.similarity > b.similarity;
                }
                return a.word < b.word;
              });
    for (std::size_t i = 0; i < 10; ++i) {
      if (got.neighbors[i].word != all[i].word) {
        return {false, "mismatch at query " + query};
      }
    }
  }
  const double elapsed = seconds_since(start);
  if (elapsed >= 30.0) {
    return {false, "took " + std::to_string(elapsed) + " s (limit 30)"};
  }
  std::ostringstream detail;
  detail << "500 queries in " << elapsed << " s";
  return {true, detail.str()};
}

// ---------------------------------------------------------------------------
// 3. Analytic gradients match central differences to 1e-4 relative error on
//    100 random instances.
Outcome criterion_gradient_check() {
  std::mt19937_64 rng(1003);
  std::normal_distribution<double> gauss(0.0, 1.0);
  std::uniform_int_distribution<Eigen::Index> pick_classes(2, 4);
  std::uniform_int_distribution<Eigen::Index> pick_dim(3, 12);
  double worst = 0.0;
  for (int instance = 0; instance < 100; ++instance) {
    const Eigen::Index n_classes = pick_classes(rng);
    const Eigen::Index dim = pick_dim(rng);
    Matrix w = Matrix::NullaryExpr(n_classes, dim, [&] { return gauss(rng); });
    Vector b = Vector::NullaryExpr(n_classes, [&] { return gauss(rng); });
    std::vector<Vector> xs;
    std::vector<std::size_t> ys;
    std::uniform_int_distribution<std::size_t> pick_label(
        0, static_cast<std::size_t>(n_classes) - 1);
    for (int i = 0; i < 8; ++i) {
      xs.push_back(Vector::NullaryExpr(dim, [&] { return gauss(rng); }));
      ys.push_back(pick_label(rng));
    }
    Matrix dw;
    Vector db;
    softmax_xent_gradients(w, b, xs, ys, &dw, &db);
    const double eps = 1e-6;
    std::uniform_int_distribution<Eigen::Index> pick_r(0, n_classes - 1);
    std::uniform_int_distribution<Eigen::Index> pick_c(0, dim - 1);
    for (int probe = 0; probe < 5; ++probe) {
      const Eigen::Index r = pick_r(rng);
      const Eigen::Index c = pick_c(rng);
      Matrix wp = w, wm = w;
      wp(r, c) += eps;
      wm(r, c) -= eps;
      const double numeric = (softmax_xent_loss(wp, b, xs, ys) -
                              softmax_xent_loss(wm, b, xs, ys)) /
                             (2.0 * eps);
      const double rel = std::abs(dw(r, c) - numeric) /
                         std::max(1e-8, std::abs(numeric));
      worst = std::max(worst, rel);
      if (rel > 1e-4) {
        return {false, "relative error " + std::to_string(rel)};
      }
    }
  }
  std::ostringstream detail;
  detail << "100 instances, worst relative error " << worst;
  return {true, detail.str()};
}

// ---------------------------------------------------------------------------
// Shared attack-world fixture for criteria 4, 6, 7 and 10.
struct AttackWorld {
  SeparableWorld world;
  VictimConfig config;
};

AttackWorld make_attack_world(std::uint64_t seed,
                              VictimMode mode = VictimMode::kFeatureExtractor) {
  AttackWorld aw;
  SeparableSpec spec;  // library defaults: 60 pairs, 40 fillers, dim 50
  aw.world = make_separable_world(spec, seed);
  aw.config.mode = mode;
  if (mode == VictimMode::kFineTuned) {
    aw.config.embedding_learning_rate = 0.05;
  }
  return aw;
}

ShadowModel shadow_from_victim(const VictimModel& victim,
                               const SeparableWorld& world, std::size_t q,
                               std::uint64_t seed) {
  auto frequencies = vocabulary_frequencies(world.train);
  auto query_words = select_query_words(frequencies, q);
  auto table = build_score_table(victim, world.table, query_words);
  std::vector<ScorePair> pairs;
  for (const auto& [word, k] : table.entries) {
    pairs.push_back({word, k});
  }
  return train_shadow(pairs, world.table, seed);
}

// 4. Boundary estimation agrees with the victim on >= 0.80 of held-out
//    inputs, for both training modes.
Outcome criterion_boundary_agreement() {
  std::ostringstream detail;
  for (auto mode : {VictimMode::kFeatureExtractor, VictimMode::kFineTuned}) {
    auto aw = make_attack_world(1004, mode);
    auto victim = train_word_victim(aw.world.train, aw.world.table, aw.config);
    auto table =
        build_score_table(victim, aw.world.table, aw.world.table.words());
    BoundaryPredictor predictor;
    predictor.table = &table;
    predictor.ratios = class_word_ratios(table);
    auto report =
        boundary_agreement(predictor, victim, aw.world.table, aw.world.test);
    detail << (mode == VictimMode::kFineTuned ? "FT " : "FE ")
           << report.avg_acc << "  ";
    if (report.avg_acc < 0.80) {
      return {false, detail.str() + "(threshold 0.80)"};
    }
  }
  return {true, detail.str()};
}

// ---------------------------------------------------------------------------
// 5. Shadow agreement grows with q over {10, 100, 1000} (0.02 slack) and
//    reaches >= 0.85 at q = 1000 on the linear-oracle fixture.
Outcome criterion_shadow_budget() {
  std::mt19937_64 rng(1005);
  std::normal_distribution<double> gauss(0.0, 1.0);
  const std::size_t vocab = 1500;
  const std::size_t dim = 30;
  Vector c(static_cast<Eigen::Index>(dim));
  for (Eigen::Index i = 0; i < c.size(); ++i) {
    c[i] = gauss(rng);
  }
  c /= c.norm();
  EmbeddingTable table;
  ScoreTable truth;
  truth.n_classes = 2;
  std::vector<std::string> words;
  for (std::size_t i = 0; i < vocab; ++i) {
    Vector v(static_cast<Eigen::Index>(dim));
    for (Eigen::Index j = 0; j < v.size(); ++j) {
      v[j] = gauss(rng);
    }
    v /= v.norm();
    std::string word = "v" + std::to_string(i);
    table.insert(word, v);
    const double s = c.dot(v);
    ScoreVector k;
    k.scores = {s < 0.0 ? -s : 0.0, s > 0.0 ? s : 0.0};
    truth.entries[word] = k;
    words.push_back(std::move(word));
  }

  std::ostringstream detail;
  double prev = 0.0;
  double last = 0.0;
  for (std::size_t q : {10u, 100u, 1000u}) {
    std::vector<ScorePair> pairs;
    for (std::size_t i = 0; i < q; ++i) {
      pairs.push_back({words[i], truth.entries.at(words[i])});
    }
    auto shadow = train_shadow(pairs, table, 0);
    const double agreement = shadow_agreement(shadow, table, truth);
    detail << "q=" << q << " " << agreement << "  ";
    if (agreement + 0.02 < prev) {
      return {false, detail.str() + "(not monotone, slack 0.02)"};
    }
    prev = agreement;
    last = agreement;
  }
  if (last < 0.85) {
    return {false, detail.str() + "(threshold 0.85 at q=1000)"};
  }
  return {true, detail.str()};
}

// ---------------------------------------------------------------------------
// 6. Every generated example passes the independent validator and generation
//    touches the victim zero times (the victim is pinned to a zero budget).
Outcome criterion_validator_and_queries() {
  auto aw = make_attack_world(1006);
  auto victim = train_word_victim(aw.world.train, aw.world.table, aw.config);
  auto shadow = shadow_from_victim(victim, aw.world, 300, 0);

  // from here on the attacker may not query at all
  victim.budget().set_limit(victim.budget().used());

  AttackConfig cfg;
  cfg.g_w = 10;
  cfg.th = 0.5;
  std::size_t attempted = 0;
  for (const auto& sample : aw.world.test.samples) {
    if (sample.label != 0 || attempted >= 50) {
      continue;
    }
    ++attempted;
    auto result = generate_adv_example(sample.text, cfg, shadow,
                                       aw.world.table, aw.world.lexicon);
    std::string why;
    if (!validate_adv_result(result, cfg, aw.world.table, aw.world.lexicon,
                             &why)) {
      return {false, "validator refused: " + why};
    }
  }
  std::ostringstream detail;
  detail << attempted << "/" << attempted
         << " validated, victim queries during generation: 0";
  return {true, detail.str()};
}

// ---------------------------------------------------------------------------
// 7. Attack success grows with g_w and th (0.05 slack) and reaches >= 0.70 at
//    (g_w, th) = (10, 0.5) over 50 held-out source inputs.
Outcome criterion_attack_grid() {
  auto aw = make_attack_world(1007);
  auto victim = train_word_victim(aw.world.train, aw.world.table, aw.config);
  auto shadow = shadow_from_victim(victim, aw.world, 300, 0);

  std::vector<std::string> inputs;
  for (const auto& sample : aw.world.test.samples) {
    if (sample.label == 0 && inputs.size() < 50) {
      inputs.push_back(sample.text);
    }
  }

  std::ostringstream detail;
  double acc[2][2] = {};
  const std::size_t gws[2] = {5, 10};
  const double ths[2] = {0.2, 0.5};
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) {
      AttackConfig cfg;
      cfg.g_w = gws[i];
      cfg.th = ths[j];
      std::vector<AdvResult> results;
      for (const auto& text : inputs) {
        results.push_back(generate_adv_example(text, cfg, shadow,
                                               aw.world.table,
                                               aw.world.lexicon));
      }
      auto report = attack_accuracy(results, victim, aw.world.table);
      acc[i][j] = report.accuracy;
      detail << "(" << gws[i] << "," << ths[j] << ")=" << acc[i][j] << "  ";
    }
  }
  const double slack = 0.05;
  if (acc[0][1] + slack < acc[0][0] || acc[1][1] + slack < acc[1][0]) {
    return {false, detail.str() + "(not monotone in th)"};
  }
  if (acc[1][0] + slack < acc[0][0] || acc[1][1] + slack < acc[0][1]) {
    return {false, detail.str() + "(not monotone in g_w)"};
  }
  if (acc[1][1] < 0.70) {
    return {false, detail.str() + "(threshold 0.70 at (10,0.5))"};
  }
  return {true, detail.str()};
}

// ---------------------------------------------------------------------------
// Shared length-biased fixture for criteria 8, 9 and 11.
struct LengthFixture {
  LengthBiasedWorld world;
  VictimModel victim;
};

LengthFixture make_length_fixture(std::uint64_t seed) {
  LengthFixture f;
  f.world = make_length_biased_world(LengthBiasedSpec{}, seed);
  VictimConfig config;
  config.length_feature = true;
  f.victim = train_sentence_victim(f.world.train, f.world.table, config);
  return f;
}

double class_accuracy(const VictimModel& victim, const EmbeddingTable& teacher,
                      const std::vector<LabeledSample>& samples) {
  std::size_t correct = 0;
  for (const auto& sample : samples) {
    LabeledDataset one;
    one.class_names = {"real", "fake"};
    one.samples = {sample};
    correct += victim.accuracy(teacher, one) > 0.5 ? 1 : 0;
  }
  return static_cast<double>(correct) / static_cast<double>(samples.size());
}

// 8. Truncating real documents to one sentence at least halves their
//    accuracy; fake accuracy does not decrease.
Outcome criterion_length_attack() {
  auto f = make_length_fixture(1008);
  std::vector<LabeledSample> reals, fakes, cut_reals, cut_fakes;
  for (const auto& sample : f.world.test.samples) {
    auto cut = LabeledSample{length_attack(sample.text, 1), sample.label};
    if (sample.label == 0) {
      reals.push_back(sample);
      cut_reals.push_back(cut);
    } else {
      fakes.push_back(sample);
      cut_fakes.push_back(cut);
    }
  }
  const double real_before = class_accuracy(f.victim, f.world.table, reals);
  const double real_after = class_accuracy(f.victim, f.world.table, cut_reals);
  const double fake_before = class_accuracy(f.victim, f.world.table, fakes);
  const double fake_after = class_accuracy(f.victim, f.world.table, cut_fakes);
  std::ostringstream detail;
  detail << "real " << real_before << " -> " << real_after << ", fake "
         << fake_before << " -> " << fake_after;
  if (real_after > 0.5 * real_before) {
    return {false, detail.str() + " (real accuracy not halved)"};
  }
  if (fake_after < fake_before) {
    return {false, detail.str() + " (fake accuracy decreased)"};
  }
  return {true, detail.str()};
}

// ---------------------------------------------------------------------------
// 9. Appending anchor sentences moves the embedding monotonically toward the
//    anchor (>= 90% of steps non-decreasing) and cuts fake accuracy by at
//    least 20 points at k = 10.
Outcome criterion_sentence_attack() {
  auto f = make_length_fixture(1009);
  auto anchor = select_anchor(f.world.train, f.victim, f.world.table, 0);

  std::vector<LabeledSample> fakes;
  for (const auto& sample : f.world.test.samples) {
    if (sample.label == 1) {
      fakes.push_back(sample);
    }
  }
  std::size_t steps_total = 0;
  std::size_t steps_ok = 0;
  std::vector<LabeledSample> attacked;
  for (const auto& sample : fakes) {
    auto result =
        sentence_append_attack(sample.text, anchor, 10, f.world.table, true);
    for (std::size_t i = 1; i < result.dot_products.size(); ++i) {
      ++steps_total;
      if (result.dot_products[i] + 1e-9 >= result.dot_products[i - 1]) {
        ++steps_ok;
      }
    }
    attacked.push_back({result.text, sample.label});
  }
  const double monotone = steps_total == 0
                              ? 1.0
                              : static_cast<double>(steps_ok) /
                                    static_cast<double>(steps_total);
  const double before = class_accuracy(f.victim, f.world.table, fakes);
  const double after = class_accuracy(f.victim, f.world.table, attacked);
  std::ostringstream detail;
  detail << "monotone steps " << monotone << ", fake accuracy " << before
         << " -> " << after;
  if (monotone < 0.90) {
    return {false, detail.str() + " (threshold 0.90)"};
  }
  if (before - after < 0.20) {
    return {false, detail.str() + " (drop below 20 points)"};
  }
  return {true, detail.str()};
}

// ---------------------------------------------------------------------------
// 10. Fine-tuning and dropout shift attack accuracy by at most 15 points;
//     adversarial retraining classifies >= 0.9 of the old adversarial set
//     correctly while a fresh attack with new replacement words still reaches
//     >= 0.5.
Outcome criterion_defenses() {
  const std::uint64_t seed = 1010;
  auto run_pipeline = [&](VictimMode mode, double dropout, AttackWorld& aw,
                          VictimModel* victim_out,
                          std::vector<AdvResult>* results_out) {
    VictimConfig config = aw.config;
    config.mode = mode;
    config.dropout_ratio = dropout;
    config.embedding_learning_rate =
        mode == VictimMode::kFineTuned ? 0.05 : 0.0;
    auto victim = train_word_victim(aw.world.train, aw.world.table, config);
    auto shadow = shadow_from_victim(victim, aw.world, 300, 0);
    AttackConfig cfg;
    cfg.g_w = 10;
    cfg.th = 0.5;
    std::vector<AdvResult> results;
    for (const auto& sample : aw.world.test.samples) {
      if (sample.label == 0) {
        results.push_back(generate_adv_example(sample.text, cfg, shadow,
                                               aw.world.table,
                                               aw.world.lexicon));
      }
    }
    auto report = attack_accuracy(results, victim, aw.world.table);
    if (victim_out != nullptr) {
      *victim_out = std::move(victim);
    }
    if (results_out != nullptr) {
      *results_out = std::move(results);
    }
    return report.accuracy;
  };

  auto aw = make_attack_world(seed);
  const double base_acc =
      run_pipeline(VictimMode::kFeatureExtractor, 0.0, aw, nullptr, nullptr);
  const double ft_acc =
      run_pipeline(VictimMode::kFineTuned, 0.0, aw, nullptr, nullptr);
  const double drop_acc =
      run_pipeline(VictimMode::kFeatureExtractor, 0.5, aw, nullptr, nullptr);

  std::ostringstream detail;
  detail << "base " << base_acc << ", ft " << ft_acc << ", dropout "
         << drop_acc;
  if (std::abs(ft_acc - base_acc) > 0.15 ||
      std::abs(drop_acc - base_acc) > 0.15) {
    return {false, detail.str() + " (defense shift above 15 points)"};
  }

  // Adversarial training leg, run against a fine-tuned victim: the private
  // embedding rows give the retrained model the per-word capacity to unlearn
  // the specific replacement words. Longer schedule, adversarial set
  // emphasized twice.
  AttackWorld adv_world = make_attack_world(seed, VictimMode::kFineTuned);
  adv_world.config.epochs = 60;
  adv_world.config.embedding_learning_rate = 0.2;
  auto baseline = train_word_victim(adv_world.world.train,
                                    adv_world.world.table, adv_world.config);
  auto base_shadow = shadow_from_victim(baseline, adv_world.world, 300, 0);
  AttackConfig first_cfg;
  first_cfg.g_w = 10;
  first_cfg.th = 0.5;
  std::vector<AdvResult> first_results;
  for (const auto& sample : adv_world.world.test.samples) {
    if (sample.label == 0) {
      first_results.push_back(
          generate_adv_example(sample.text, first_cfg, base_shadow,
                               adv_world.world.table, adv_world.world.lexicon));
    }
  }
  (void)attack_accuracy(first_results, baseline, adv_world.world.table);

  LabeledDataset adversarial;
  adversarial.class_names = adv_world.world.train.class_names;
  std::set<std::string> first_words;
  for (const auto& result : first_results) {
    adversarial.samples.push_back({result.perturbed, result.source_class});
    adversarial.samples.push_back({result.perturbed, result.source_class});
    for (const auto& rep : result.replacements) {
      first_words.insert(rep.new_word);
    }
  }
  auto retrained = adversarial_retrain(baseline, adv_world.world.table,
                                       adv_world.world.train, adversarial);
  const double restored = retrained.accuracy(adv_world.world.table,
                                             adversarial);
  const double clean = retrained.accuracy(adv_world.world.table,
                                          adv_world.world.test);
  detail << ", restored " << restored << ", clean " << clean;
  if (restored < 0.9) {
    return {false, detail.str() + " (restore below 0.9)"};
  }
  if (clean < 0.9) {
    return {false, detail.str() + " (clean retention below 0.9)"};
  }

  // fresh attack against the retrained victim
  auto fresh_shadow = shadow_from_victim(retrained, adv_world.world, 300, 1);
  std::vector<AdvResult> fresh_results;
  std::set<std::string> fresh_words;
  for (const auto& sample : adv_world.world.test.samples) {
    if (sample.label == 0) {
      fresh_results.push_back(
          generate_adv_example(sample.text, first_cfg, fresh_shadow,
                               adv_world.world.table, adv_world.world.lexicon));
    }
  }
  for (const auto& result : fresh_results) {
    for (const auto& rep : result.replacements) {
      fresh_words.insert(rep.new_word);
    }
  }
  auto fresh_report =
      attack_accuracy(fresh_results, retrained, adv_world.world.table);
  std::size_t new_words = 0;
  for (const auto& word : fresh_words) {
    if (!first_words.count(word)) {
      ++new_words;
    }
  }
  detail << ", fresh " << fresh_report.accuracy << " with " << new_words
         << " new replacement words";
  if (fresh_report.accuracy < 0.5) {
    return {false, detail.str() + " (fresh attack below 0.5)"};
  }
  if (new_words == 0) {
    return {false, detail.str() + " (fresh attack reused all words)"};
  }
  return {true, detail.str()};
}

// ---------------------------------------------------------------------------
// 11. Usefulness estimation: exact linearity, length feature rho >= 0.3 on
//     the length-biased corpus, and agreement within 0.05 of an independent
//     recomputation.
Outcome criterion_usefulness() {
  auto f = make_length_fixture(1011);

  // linearity, checked exactly
  auto f1 = [](const std::string& s) {
    return static_cast<double>(split_sentences(s).size());
  };
  auto f2 = [](const std::string& s) {
    return static_cast<double>(tokenize(s).size());
  };
  const double a = 0.25;
  const double b = -2.0;
  auto combined = [&](const std::string& s) { return a * f1(s) + b * f2(s); };
  auto r1 = estimate_usefulness(f1, f.world.test);
  auto r2 = estimate_usefulness(f2, f.world.test);
  auto rc = estimate_usefulness(combined, f.world.test);
  if (std::abs(rc.rho_hat - (a * r1.rho_hat + b * r2.rho_hat)) > 1e-9) {
    return {false, "linearity violated"};
  }

  // usefulness of the normalized length feature, negated so that short (fake,
  // class 1 = +1) documents push it positive
  auto length_feature = [](const std::string& s) {
    const double n = static_cast<double>(
        std::min<std::size_t>(split_sentences(s).size(), 32));
    return 1.0 - n / 32.0;
  };
  auto rho = estimate_usefulness(length_feature, f.world.test);

  // independent recomputation, one pass of plain arithmetic
  double brute = 0.0;
  for (const auto& sample : f.world.test.samples) {
    const double y = sample.label == 1 ? 1.0 : -1.0;
    brute += y * length_feature(sample.text);
  }
  brute /= static_cast<double>(f.world.test.samples.size());

  std::ostringstream detail;
  detail << "rho_hat " << rho.rho_hat << ", brute force " << brute;
  if (rho.rho_hat < 0.3) {
    return {false, detail.str() + " (threshold 0.3)"};
  }
  if (std::abs(rho.rho_hat - brute) > 0.05) {
    return {false, detail.str() + " (outside 0.05 of brute force)"};
  }
  return {true, detail.str()};
}

struct Criterion {
  int number;
  const char* name;
  std::function<Outcome()> run;
};

const Criterion kCriteria[] = {
    {1, "word-score invariants", criterion_score_invariants},
    {2, "nearest-neighbor oracle", criterion_knn_oracle},
    {3, "gradient check", criterion_gradient_check},
    {4, "boundary agreement", criterion_boundary_agreement},
    {5, "shadow query budget", criterion_shadow_budget},
    {6, "validator and zero queries", criterion_validator_and_queries},
    {7, "attack grid", criterion_attack_grid},
    {8, "length attack", criterion_length_attack},
    {9, "sentence append attack", criterion_sentence_attack},
    {10, "defense re-evaluation", criterion_defenses},
    {11, "usefulness estimation", criterion_usefulness},
};

}  // namespace

int main(int argc, char** argv) {
  int only = 0;
  for (int i = 1; i < argc; ++i) {
    if (std::strcmp(argv[i], "--only") == 0 && i + 1 < argc) {
      only = std::atoi(argv[i + 1]);
    }
  }
  int failures = 0;
  for (const auto& criterion : kCriteria) {
    if (only != 0 && criterion.number != only) {
      continue;
    }
    Outcome outcome;
    try {
      outcome = criterion.run();
    } catch (const std::exception& e) {
      outcome = {false, std::string("exception: ") + e.what()};
    }
    std::cout << (outcome.pass ? "[PASS]" : "[FAIL]") << " criterion "
              << criterion.number << " (" << criterion.name
              << "): " << outcome.detail << std::endl;
    if (!outcome.pass) {
      ++failures;
    }
  }
  return failures == 0 ? 0 : 1;
}
