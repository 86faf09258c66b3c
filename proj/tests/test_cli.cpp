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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdlib>
#include <fstream>
#include <string>

#include "greybox/attacks.hpp"
#include "greybox/dataset.hpp"
#include "greybox/embedding.hpp"
#include "greybox/synth.hpp"
#include "greybox/textproc.hpp"
#include "greybox/wordscore.hpp"

using namespace greybox;

namespace {

const char* kCli = GREYBOX_CLI_PATH;

int run(const std::string& args) {
  const std::string cmd = std::string(kCli) + " " + args + " >cli_out.txt 2>&1";
  return std::system(cmd.c_str());
}

std::string read_all(const std::string& path) {
  std::ifstream in(path);
  std::string content((std::istreambuf_iterator<char>(in)),
                      std::istreambuf_iterator<char>());
  return content;
}

// One fixture on disk, shared by the ordered scenario below.
void write_fixture() {
  SeparableSpec spec;
  spec.n_pairs = 15;
  spec.n_fillers = 10;
  spec.dim = 24;
  spec.train_per_class = 120;
  spec.test_per_class = 30;
  auto world = make_separable_world(spec, 77);
  save_embeddings(world.table, "cli_emb.txt");
  save_lexicon(world.lexicon, "cli_lexicon.tsv");
  save_dataset_csv(world.train, "cli_train.csv");
  save_dataset_csv(world.test, "cli_test.csv");
  std::ofstream inputs("cli_inputs.txt");
  std::size_t n = 0;
  for (const auto& sample : world.test.samples) {
    if (sample.label == 0 && n < 10) {
      inputs << sample.text << '\n';
      ++n;
    }
  }
}

}  // namespace

TEST_CASE("cli end-to-end scenario") {
  write_fixture();

  // train-victim
  REQUIRE(run("train-victim --embeddings cli_emb.txt --dataset cli_train.csv "
              "--test-dataset cli_test.csv --out cli_victim.json") == 0);
  auto train_log = read_all("cli_out.txt");
  CHECK(train_log.find("test accuracy:") != std::string::npos);
  CHECK(train_log.find("config:") != std::string::npos);

  // score-table with a budget
  REQUIRE(run("score-table --embeddings cli_emb.txt --model cli_victim.json "
              "--dataset cli_train.csv --query-limit 500 "
              "--out cli_scores.csv") == 0);
  CHECK(read_all("cli_out.txt").find("queries used:") != std::string::npos);
  auto table = load_score_table("cli_scores.csv");
  CHECK(table.n_classes == 2);
  CHECK_FALSE(table.entries.empty());

  // an exhausted budget must fail with a nonzero exit
  CHECK(run("score-table --embeddings cli_emb.txt --model cli_victim.json "
            "--dataset cli_train.csv --query-limit 3 "
            "--out cli_scores_fail.csv") != 0);

  // shadow with ground-truth agreement
  REQUIRE(run("shadow --embeddings cli_emb.txt --model cli_victim.json "
              "--dataset cli_train.csv --q 40 --ground-truth "
              "--out cli_shadow.json") == 0);
  CHECK(read_all("cli_out.txt").find("ground-truth agreement:") !=
        std::string::npos);

  // word attack with validation
  REQUIRE(run("attack word --embeddings cli_emb.txt --lexicon cli_lexicon.tsv "
              "--shadow cli_shadow.json --inputs cli_inputs.txt --gw 10 "
              "--th 0.5 --validate --out cli_results.jsonl") == 0);
  {
    std::ifstream results("cli_results.jsonl");
    std::string line;
    std::size_t n = 0;
    while (std::getline(results, line)) {
      auto r = adv_result_from_json(line);
      CHECK(r.t <= 0.5 + 1e-12);
      ++n;
    }
    CHECK(n == 10);
  }

  // eval of the attack results against the victim
  REQUIRE(run("eval --embeddings cli_emb.txt --model cli_victim.json "
              "--inputs cli_results.jsonl") == 0);
  CHECK(read_all("cli_out.txt").find("attack accuracy") != std::string::npos);

  // boundary agreement report
  REQUIRE(run("eval --embeddings cli_emb.txt --model cli_victim.json "
              "--table cli_scores.csv --dataset cli_test.csv") == 0);
  CHECK(read_all("cli_out.txt").find("boundary agreement:") !=
        std::string::npos);

  // config file values are overridden by flags
  {
    std::ofstream cfg("cli_config.json");
    cfg << R"({"embeddings": "cli_emb.txt", "model": "cli_victim.json",)"
        << R"( "inputs": "cli_results.jsonl", "th": 0.9})";
  }
  REQUIRE(run("--config cli_config.json eval") == 0);
  REQUIRE(run("--config cli_config.json eval --th 0.1") == 0);
  CHECK(read_all("cli_out.txt").find("\"th\":0.1") != std::string::npos);

  // sweep over the attack grid
  REQUIRE(run("sweep --embeddings cli_emb.txt --lexicon cli_lexicon.tsv "
              "--dataset cli_train.csv --test-dataset cli_test.csv --q 40 "
              "--gw-grid 5 10 --th-grid 0.2 0.5 --csv cli_sweep.csv") == 0);
  auto sweep = read_all("cli_sweep.csv");
  CHECK(sweep.find("g_w,th,accuracy,avg_t,seed") != std::string::npos);
  CHECK(sweep.find("10,0.5") != std::string::npos);

  // length and sentence attacks on the length-biased corpus
  LengthBiasedSpec lspec;
  lspec.train_per_class = 120;
  lspec.test_per_class = 30;
  auto lworld = make_length_biased_world(lspec, 78);
  save_embeddings(lworld.table, "cli_lemb.txt");
  save_dataset_csv(lworld.train, "cli_ltrain.csv");
  save_dataset_csv(lworld.test, "cli_ltest.csv");
  {
    std::ofstream inputs("cli_linputs.txt");
    std::size_t n = 0;
    for (const auto& sample : lworld.test.samples) {
      if (sample.label == 1 && n < 5) {
        inputs << sample.text << '\n';
        ++n;
      }
    }
  }
  REQUIRE(run("train-victim --embeddings cli_lemb.txt --dataset cli_ltrain.csv "
              "--sentence --length-feature --out cli_lvictim.json") == 0);
  REQUIRE(run("attack length --inputs cli_linputs.txt --keep 1 "
              "--out cli_length.jsonl") == 0);
  CHECK(read_all("cli_length.jsonl").find("\"keep_sentences\":1") !=
        std::string::npos);
  REQUIRE(run("attack sentence --embeddings cli_lemb.txt "
              "--model cli_lvictim.json --dataset cli_ltrain.csv "
              "--inputs cli_linputs.txt --k 6 --target 0 "
              "--out cli_sentence.jsonl") == 0);
  CHECK(read_all("cli_sentence.jsonl").find("dot_products") !=
        std::string::npos);

  // defense pipeline, smallest variant
  REQUIRE(run("eval --embeddings cli_emb.txt --lexicon cli_lexicon.tsv "
              "--dataset cli_train.csv --test-dataset cli_test.csv "
              "--defense dropout --q 40 --th 0.5") == 0);
  CHECK(read_all("cli_out.txt").find("attack accuracy") != std::string::npos);

  // unknown flags and missing files fail loudly
  CHECK(run("train-victim --no-such-flag") != 0);
  CHECK(run("eval --embeddings missing.txt --model cli_victim.json "
            "--inputs cli_results.jsonl") != 0);
}
