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

// Command-line front end: victims, score tables, shadows, attacks, and the
// evaluation pipelines, wired for reproducible runs from one seed.

#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "greybox/attacks.hpp"
#include "greybox/dataset.hpp"
#include "greybox/embedding.hpp"
#include "greybox/errors.hpp"
#include "greybox/eval.hpp"
#include "greybox/shadow.hpp"
#include "greybox/synth.hpp"
#include "greybox/textproc.hpp"
#include "greybox/victim.hpp"
#include "greybox/wordscore.hpp"

namespace {

using nlohmann::json;

struct RunConfig {
  std::string embeddings;
  std::string lexicon;
  std::string dataset;
  std::string test_dataset;
  std::string model;
  std::string shadow;
  std::string inputs;
  std::string out;
  std::string mode = "fe";  // fe | ft
  double dropout = 0.0;
  double lr = 0.05;
  double emb_lr = 0.0;
  std::size_t epochs = 30;
  std::size_t batch = 32;
  bool sentence = false;
  bool length_feature = false;
  std::size_t length_cap = 32;
  std::size_t q = 100;
  std::size_t g_w = 10;
  double th = 0.2;
  std::size_t source_class = 0;
  std::size_t target_class = 1;
  std::uint64_t seed = 0;
  std::optional<std::uint64_t> query_limit;
};

json config_to_json(const RunConfig& c) {
  json j;
  j["embeddings"] = c.embeddings;
  j["lexicon"] = c.lexicon;
  j["dataset"] = c.dataset;
  j["test_dataset"] = c.test_dataset;
  j["model"] = c.model;
  j["shadow"] = c.shadow;
  j["inputs"] = c.inputs;
  j["out"] = c.out;
  j["mode"] = c.mode;
  j["dropout"] = c.dropout;
  j["lr"] = c.lr;
  j["emb_lr"] = c.emb_lr;
  j["epochs"] = c.epochs;
  j["batch"] = c.batch;
  j["sentence"] = c.sentence;
  j["length_feature"] = c.length_feature;
  j["length_cap"] = c.length_cap;
  j["q"] = c.q;
  j["g_w"] = c.g_w;
  j["th"] = c.th;
  j["source_class"] = c.source_class;
  j["target_class"] = c.target_class;
  j["seed"] = c.seed;
  if (c.query_limit) {
    j["query_limit"] = *c.query_limit;
  } else {
    j["query_limit"] = nullptr;
  }
  return j;
}

void apply_config_file(RunConfig& c, const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw greybox::ParseError("cannot open config file: " + path);
  }
  json j;
  in >> j;
  auto get = [&](const char* key, auto& field) {
    if (j.contains(key) && !j[key].is_null()) {
      field = j[key].get<std::decay_t<decltype(field)>>();
    }
  };
  get("embeddings", c.embeddings);
  get("lexicon", c.lexicon);
  get("dataset", c.dataset);
  get("test_dataset", c.test_dataset);
  get("model", c.model);
  get("shadow", c.shadow);
  get("inputs", c.inputs);
  get("out", c.out);
  get("mode", c.mode);
  get("dropout", c.dropout);
  get("lr", c.lr);
  get("emb_lr", c.emb_lr);
  get("epochs", c.epochs);
  get("batch", c.batch);
  get("sentence", c.sentence);
  get("length_feature", c.length_feature);
  get("length_cap", c.length_cap);
  get("q", c.q);
  get("g_w", c.g_w);
  get("th", c.th);
  get("source_class", c.source_class);
  get("target_class", c.target_class);
  get("seed", c.seed);
  if (j.contains("query_limit") && !j["query_limit"].is_null()) {
    c.query_limit = j["query_limit"].get<std::uint64_t>();
  }
}

void echo_config(const RunConfig& c, const std::string& command) {
  std::cout << "command: " << command << "\nconfig: " << config_to_json(c).dump()
            << std::endl;
}

greybox::VictimConfig victim_config(const RunConfig& c) {
  greybox::VictimConfig vc;
  vc.mode = c.mode == "ft" ? greybox::VictimMode::kFineTuned
                           : greybox::VictimMode::kFeatureExtractor;
  vc.dropout_ratio = c.dropout;
  vc.learning_rate = c.lr;
  vc.embedding_learning_rate = c.emb_lr;
  vc.epochs = c.epochs;
  vc.batch_size = c.batch;
  vc.seed = c.seed;
  vc.length_feature = c.length_feature;
  vc.length_cap = c.length_cap;
  return vc;
}

std::vector<std::string> read_lines(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw greybox::ParseError("cannot open input file: " + path);
  }
  std::vector<std::string> lines;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty()) {
      lines.push_back(line);
    }
  }
  return lines;
}

int cmd_train_victim(const RunConfig& c) {
  echo_config(c, "train-victim");
  auto teacher = greybox::load_embeddings(c.embeddings);
  auto dataset = greybox::load_dataset_csv(c.dataset);
  auto config = victim_config(c);
  config.n_classes = dataset.n_classes();
  greybox::VictimModel victim =
      c.sentence ? greybox::train_sentence_victim(dataset, teacher, config)
                 : greybox::train_word_victim(dataset, teacher, config);
  std::cout << "train accuracy: " << victim.accuracy(teacher, dataset)
            << std::endl;
  if (!c.test_dataset.empty()) {
    auto test = greybox::load_dataset_csv(c.test_dataset, dataset.class_names);
    std::cout << "test accuracy: " << victim.accuracy(teacher, test)
              << std::endl;
  }
  greybox::save_victim(victim, c.out);
  std::cout << "model written: " << c.out << std::endl;
  return 0;
}

int cmd_score_table(const RunConfig& c) {
  echo_config(c, "score-table");
  auto teacher = greybox::load_embeddings(c.embeddings);
  auto victim = greybox::load_victim(c.model);
  victim.budget().set_limit(c.query_limit);
  std::vector<std::string> words;
  if (!c.dataset.empty()) {
    for (const auto& [word, freq] :
         greybox::vocabulary_frequencies(greybox::load_dataset_csv(c.dataset))) {
      words.push_back(word);
    }
  } else {
    words = teacher.words();
  }
  auto table = greybox::build_score_table(victim, teacher, words);
  greybox::save_score_table(table, c.out);
  std::cout << "queries used: " << victim.budget().used() << std::endl;
  std::cout << "score table written: " << c.out << std::endl;
  return 0;
}

int cmd_shadow(const RunConfig& c, bool ground_truth) {
  echo_config(c, "shadow");
  auto teacher = greybox::load_embeddings(c.embeddings);
  auto victim = greybox::load_victim(c.model);
  victim.budget().set_limit(c.query_limit);
  auto frequencies =
      greybox::vocabulary_frequencies(greybox::load_dataset_csv(c.dataset));
  auto query_words = greybox::select_query_words(frequencies, c.q);
  auto table = greybox::build_score_table(victim, teacher, query_words);
  std::vector<greybox::ScorePair> pairs;
  for (const auto& [word, score] : table.entries) {
    pairs.push_back({word, score});
  }
  auto shadow = greybox::train_shadow(pairs, teacher, c.seed);
  greybox::save_shadow(shadow, c.out);
  std::cout << "queries used: " << victim.budget().used() << std::endl;
  if (ground_truth) {
    // hold-out ground truth built by exhaustive querying, accounted separately
    greybox::VictimModel oracle_victim = greybox::load_victim(c.model);
    auto truth =
        greybox::build_score_table(oracle_victim, teacher, teacher.words());
    std::cout << "ground-truth agreement: "
              << greybox::shadow_agreement(shadow, teacher, truth) << std::endl;
  }
  std::cout << "shadow model written: " << c.out << std::endl;
  return 0;
}

int cmd_attack_word(const RunConfig& c, bool validate) {
  echo_config(c, "attack word");
  auto teacher = greybox::load_embeddings(c.embeddings);
  auto lexicon = greybox::load_lexicon(c.lexicon);
  auto shadow = greybox::load_shadow(c.shadow);
  greybox::AttackConfig cfg{c.g_w, c.th, c.target_class, c.source_class};
  std::ofstream out(c.out);
  if (!out) {
    throw greybox::ParseError("cannot write results file: " + c.out);
  }
  std::size_t emitted = 0;
  for (const auto& text : read_lines(c.inputs)) {
    auto result =
        greybox::generate_adv_example(text, cfg, shadow, teacher, lexicon);
    if (validate) {
      std::string why;
      if (!greybox::validate_adv_result(result, cfg, teacher, lexicon, &why)) {
        std::cerr << "validator refused a result: " << why << std::endl;
        return 1;
      }
    }
    out << greybox::adv_result_to_json(result) << '\n';
    ++emitted;
  }
  std::cout << "results written: " << c.out << " (" << emitted << " records)"
            << std::endl;
  return 0;
}

int cmd_attack_length(const RunConfig& c, std::size_t keep) {
  echo_config(c, "attack length");
  std::ofstream out(c.out);
  if (!out) {
    throw greybox::ParseError("cannot write results file: " + c.out);
  }
  for (const auto& text : read_lines(c.inputs)) {
    json j;
    j["original"] = text;
    j["perturbed"] = greybox::length_attack(text, keep);
    j["keep_sentences"] = keep;
    out << j.dump() << '\n';
  }
  std::cout << "results written: " << c.out << std::endl;
  return 0;
}

int cmd_attack_sentence(const RunConfig& c, std::size_t k) {
  echo_config(c, "attack sentence");
  auto teacher = greybox::load_embeddings(c.embeddings);
  auto victim = greybox::load_victim(c.model);
  victim.budget().set_limit(c.query_limit);
  auto pool = greybox::load_dataset_csv(c.dataset);
  auto anchor =
      greybox::select_anchor(pool, victim, teacher, c.target_class);
  std::ofstream out(c.out);
  if (!out) {
    throw greybox::ParseError("cannot write results file: " + c.out);
  }
  for (const auto& text : read_lines(c.inputs)) {
    auto result = greybox::sentence_append_attack(
        text, anchor, k, teacher, victim.config.length_feature,
        victim.config.length_cap);
    json j;
    j["original"] = text;
    j["perturbed"] = result.text;
    j["dot_products"] = result.dot_products;
    j["anchor_class"] = anchor.anchor_class;
    out << j.dump() << '\n';
  }
  std::cout << "anchor selection queries used: " << victim.budget().used()
            << std::endl;
  std::cout << "results written: " << c.out << std::endl;
  return 0;
}

void print_attack_report(const greybox::AttackReport& report,
                         const RunConfig& c, const std::string& label) {
  json j;
  j["label"] = label;
  j["attempted"] = report.attempted;
  j["flipped"] = report.flipped;
  j["accuracy"] = report.accuracy;
  j["avg_t"] = report.avg_t;
  j["seed"] = c.seed;
  std::cout << j.dump() << std::endl;
  std::cout << label << ": attack accuracy " << report.accuracy << " ("
            << report.flipped << "/" << report.attempted << "), avg t "
            << report.avg_t << std::endl;
}

int cmd_eval_results(const RunConfig& c, bool avg_t_all) {
  auto teacher = greybox::load_embeddings(c.embeddings);
  auto victim = greybox::load_victim(c.model);
  victim.budget().set_limit(c.query_limit);
  std::vector<greybox::AdvResult> results;
  for (const auto& line : read_lines(c.inputs)) {
    results.push_back(greybox::adv_result_from_json(line));
  }
  auto report = greybox::attack_accuracy(results, victim, teacher, avg_t_all);
  print_attack_report(report, c, "attack");
  std::cout << "eval queries used: " << victim.budget().used() << std::endl;
  return 0;
}

int cmd_eval_boundary(const RunConfig& c, const std::string& table_path) {
  auto teacher = greybox::load_embeddings(c.embeddings);
  auto victim = greybox::load_victim(c.model);
  victim.budget().set_limit(c.query_limit);
  auto table = greybox::load_score_table(table_path);
  greybox::BoundaryPredictor predictor;
  predictor.table = &table;
  predictor.ratios = greybox::class_word_ratios(table);
  if (table.n_classes > 2) {
    predictor.threshold = greybox::make_threshold(table, 60.0);
  }
  auto dataset = greybox::load_dataset_csv(c.dataset);
  auto report =
      greybox::boundary_agreement(predictor, victim, teacher, dataset);
  json j;
  j["tp"] = report.tp;
  j["tn"] = report.tn;
  j["fp"] = report.fp;
  j["fn"] = report.fn;
  j["avg_acc"] = report.avg_acc;
  j["seed"] = c.seed;
  std::cout << j.dump() << std::endl;
  std::cout << "boundary agreement: " << report.avg_acc << " (tp " << report.tp
            << ", tn " << report.tn << ", fp " << report.fp << ", fn "
            << report.fn << ")" << std::endl;
  std::cout << "eval queries used: " << victim.budget().used() << std::endl;
  return 0;
}

// Full pipeline against a defense variant: train the variant victim, budget a
// shadow, attack held-out source-class inputs, report victim-verified flips.
int cmd_eval_defense(const RunConfig& c, const std::string& defense) {
  auto teacher = greybox::load_embeddings(c.embeddings);
  auto lexicon = greybox::load_lexicon(c.lexicon);
  auto train = greybox::load_dataset_csv(c.dataset);
  auto test = greybox::load_dataset_csv(c.test_dataset, train.class_names);

  greybox::VictimConfig config = victim_config(c);
  config.n_classes = train.n_classes();
  if (defense == "dropout") {
    config.dropout_ratio = 0.5;
  } else if (defense == "finetune") {
    config.mode = greybox::VictimMode::kFineTuned;
    if (config.embedding_learning_rate == 0.0) {
      config.embedding_learning_rate = config.learning_rate;
    }
  }

  auto run_attack = [&](const greybox::VictimModel& victim,
                        const std::string& label,
                        std::vector<greybox::AdvResult>* keep_results) {
    auto frequencies = greybox::vocabulary_frequencies(train);
    auto query_words = greybox::select_query_words(frequencies, c.q);
    auto table = greybox::build_score_table(victim, teacher, query_words);
    std::vector<greybox::ScorePair> pairs;
    for (const auto& [word, score] : table.entries) {
      pairs.push_back({word, score});
    }
    auto shadow = greybox::train_shadow(pairs, teacher, c.seed);
    greybox::AttackConfig cfg{c.g_w, c.th, c.target_class, c.source_class};
    std::vector<greybox::AdvResult> results;
    for (const auto& sample : test.samples) {
      if (sample.label != c.source_class) {
        continue;
      }
      results.push_back(greybox::generate_adv_example(sample.text, cfg, shadow,
                                                      teacher, lexicon));
    }
    auto report = greybox::attack_accuracy(results, victim, teacher);
    print_attack_report(report, c, label);
    if (keep_results != nullptr) {
      *keep_results = std::move(results);
    }
    return report;
  };

  if (defense == "advtrain") {
    auto baseline =
        greybox::train_word_victim(train, teacher, config);
    std::vector<greybox::AdvResult> results;
    run_attack(baseline, "baseline", &results);
    greybox::LabeledDataset adversarial;
    adversarial.class_names = train.class_names;
    for (const auto& result : results) {
      // original (correct) class labels on the perturbed texts
      adversarial.samples.push_back({result.perturbed, result.source_class});
    }
    auto retrained =
        greybox::adversarial_retrain(baseline, teacher, train, adversarial);
    std::cout << "retrained adversarial-set accuracy: "
              << retrained.accuracy(teacher, adversarial) << std::endl;
    std::cout << "retrained clean test accuracy: "
              << retrained.accuracy(teacher, test) << std::endl;
    run_attack(retrained, "advtrain", nullptr);
    return 0;
  }

  auto victim = greybox::train_word_victim(train, teacher, config);
  std::cout << "victim test accuracy: " << victim.accuracy(teacher, test)
            << std::endl;
  run_attack(victim, defense.empty() ? "baseline" : defense, nullptr);
  return 0;
}

int cmd_sweep(const RunConfig& c, const std::vector<std::size_t>& g_w_grid,
              const std::vector<double>& th_grid, const std::string& csv_path) {
  auto teacher = greybox::load_embeddings(c.embeddings);
  auto lexicon = greybox::load_lexicon(c.lexicon);
  auto train = greybox::load_dataset_csv(c.dataset);
  auto test = greybox::load_dataset_csv(c.test_dataset, train.class_names);
  greybox::VictimConfig config = victim_config(c);
  config.n_classes = train.n_classes();
  auto victim = greybox::train_word_victim(train, teacher, config);

  auto frequencies = greybox::vocabulary_frequencies(train);
  auto query_words = greybox::select_query_words(frequencies, c.q);
  auto table = greybox::build_score_table(victim, teacher, query_words);
  std::vector<greybox::ScorePair> pairs;
  for (const auto& [word, score] : table.entries) {
    pairs.push_back({word, score});
  }
  auto shadow = greybox::train_shadow(pairs, teacher, c.seed);

  std::ofstream csv;
  if (!csv_path.empty()) {
    csv.open(csv_path);
    csv << "g_w,th,accuracy,avg_t,seed\n";
  }
  for (std::size_t g_w : g_w_grid) {
    for (double th : th_grid) {
      greybox::AttackConfig cfg{g_w, th, c.target_class, c.source_class};
      std::vector<greybox::AdvResult> results;
      for (const auto& sample : test.samples) {
        if (sample.label != c.source_class) {
          continue;
        }
        results.push_back(greybox::generate_adv_example(
            sample.text, cfg, shadow, teacher, lexicon));
      }
      auto report = greybox::attack_accuracy(results, victim, teacher);
      std::cout << "g_w=" << g_w << " th=" << th << " accuracy "
                << report.accuracy << " avg_t " << report.avg_t << std::endl;
      if (csv.is_open()) {
        csv << g_w << ',' << th << ',' << report.accuracy << ','
            << report.avg_t << ',' << c.seed << '\n';
      }
    }
  }
  if (csv.is_open()) {
    std::cout << "sweep grid written: " << csv_path << std::endl;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Grey-box misclassification attack toolkit"};
  app.require_subcommand(1);

  RunConfig c;
  std::string config_path;
  app.add_option("--config", config_path, "JSON config file; flags override");

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--embeddings", c.embeddings, "embedding text file");
    sub->add_option("--lexicon", c.lexicon, "part-of-speech lexicon TSV");
    sub->add_option("--dataset", c.dataset, "training dataset CSV");
    sub->add_option("--test-dataset", c.test_dataset, "held-out dataset CSV");
    sub->add_option("--model", c.model, "victim model file");
    sub->add_option("--shadow", c.shadow, "shadow model file");
    sub->add_option("--inputs", c.inputs, "input texts, one per line");
    sub->add_option("--out", c.out, "output path");
    sub->add_option("--seed", c.seed, "master seed");
    sub->add_option("--query-limit", [&c](const CLI::results_t& r) {
      c.query_limit = std::stoull(r[0]);
      return true;
    }, "victim query budget");
  };

  auto* train = app.add_subcommand("train-victim", "train a student victim");
  add_common(train);
  train->add_option("--mode", c.mode, "fe (feature extractor) or ft (fine tuned)");
  train->add_option("--dropout", c.dropout, "dropout ratio");
  train->add_option("--lr", c.lr, "head learning rate");
  train->add_option("--emb-lr", c.emb_lr, "embedding learning rate (ft)");
  train->add_option("--epochs", c.epochs, "training epochs");
  train->add_option("--batch", c.batch, "mini-batch size");
  train->add_flag("--sentence", c.sentence, "sentence-level victim");
  train->add_flag("--length-feature", c.length_feature,
                  "inject the normalized-length feature");
  train->add_option("--length-cap", c.length_cap, "sentence-count cap");

  auto* score = app.add_subcommand("score-table", "build a word-score table");
  add_common(score);

  auto* shadow = app.add_subcommand("shadow", "train a shadow score model");
  add_common(shadow);
  shadow->add_option("--q", c.q, "query budget for score pairs");
  bool ground_truth = false;
  shadow->add_flag("--ground-truth", ground_truth,
                   "also report agreement against exhaustive victim queries");

  auto* attack = app.add_subcommand("attack", "generate adversarial inputs");
  attack->require_subcommand(1);
  auto* attack_word = attack->add_subcommand("word", "synonym substitution");
  add_common(attack_word);
  attack_word->add_option("--gw", c.g_w, "neighbor pool size");
  attack_word->add_option("--th", c.th, "max fraction of replaced words");
  attack_word->add_option("--source", c.source_class, "source class index");
  attack_word->add_option("--target", c.target_class, "target class index");
  bool validate = false;
  attack_word->add_flag("--validate", validate,
                        "re-run the independent constraint validator");
  auto* attack_length = attack->add_subcommand("length", "sentence truncation");
  add_common(attack_length);
  std::size_t keep = 1;
  attack_length->add_option("--keep", keep, "sentences to keep");
  auto* attack_sentence =
      attack->add_subcommand("sentence", "anchor-sentence appending");
  add_common(attack_sentence);
  std::size_t k = 10;
  attack_sentence->add_option("--k", k, "anchor sentences to append");
  attack_sentence->add_option("--target", c.target_class,
                              "anchor (target) class index");

  auto* eval = app.add_subcommand("eval", "reports and defense re-evaluation");
  add_common(eval);
  std::string table_path;
  std::string defense;
  bool avg_t_all = false;
  eval->add_option("--table", table_path, "score table for boundary agreement");
  eval->add_option("--defense", defense,
                   "rerun the attack suite against finetune|dropout|advtrain");
  eval->add_flag("--avg-t-all", avg_t_all, "average t over all attempts");
  eval->add_option("--q", c.q, "shadow query budget (defense pipelines)");
  eval->add_option("--gw", c.g_w, "neighbor pool size");
  eval->add_option("--th", c.th, "max fraction of replaced words");
  eval->add_option("--source", c.source_class, "source class index");
  eval->add_option("--target", c.target_class, "target class index");
  eval->add_option("--mode", c.mode, "victim mode for pipeline runs");
  eval->add_option("--epochs", c.epochs, "victim epochs for pipeline runs");
  eval->add_option("--lr", c.lr, "victim learning rate for pipeline runs");

  auto* sweep = app.add_subcommand("sweep", "attack-knob grid");
  add_common(sweep);
  std::vector<std::size_t> g_w_grid{5, 10};
  std::vector<double> th_grid{0.2, 0.5};
  std::string csv_path;
  sweep->add_option("--gw-grid", g_w_grid, "neighbor pool sizes");
  sweep->add_option("--th-grid", th_grid, "replacement thresholds");
  sweep->add_option("--csv", csv_path, "write the grid as CSV");
  sweep->add_option("--q", c.q, "shadow query budget");
  sweep->add_option("--source", c.source_class, "source class index");
  sweep->add_option("--target", c.target_class, "target class index");
  sweep->add_option("--mode", c.mode, "victim mode");
  sweep->add_option("--epochs", c.epochs, "victim epochs");
  sweep->add_option("--lr", c.lr, "victim learning rate");

  // Apply the config file before flag values land, so flags override it.
  app.preparse_callback([&](std::size_t) {
    for (int i = 1; i < argc - 1; ++i) {
      if (std::string(argv[i]) == "--config") {
        apply_config_file(c, argv[i + 1]);
      }
    }
  });

  try {
    app.parse(argc, argv);
    if (train->parsed()) return cmd_train_victim(c);
    if (score->parsed()) return cmd_score_table(c);
    if (shadow->parsed()) return cmd_shadow(c, ground_truth);
    if (attack_word->parsed()) return cmd_attack_word(c, validate);
    if (attack_length->parsed()) return cmd_attack_length(c, keep);
    if (attack_sentence->parsed()) return cmd_attack_sentence(c, k);
    if (eval->parsed()) {
      echo_config(c, "eval");
      if (!defense.empty()) return cmd_eval_defense(c, defense);
      if (!table_path.empty()) return cmd_eval_boundary(c, table_path);
      return cmd_eval_results(c, avg_t_all);
    }
    if (sweep->parsed()) {
      echo_config(c, "sweep");
      return cmd_sweep(c, g_w_grid, th_grid, csv_path);
    }
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << std::endl;
    return 1;
  }
  return 0;
}
