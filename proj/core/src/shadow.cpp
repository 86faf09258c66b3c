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

#include "greybox/shadow.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iostream>
#include <numeric>
#include <random>

#include <json.hpp>

#include "greybox/errors.hpp"

namespace greybox {

namespace {

Vector tanh_of(const Vector& v) { return v.array().tanh().matrix(); }

}  // namespace

Vector ShadowModel::raw_predict(const Vector& embedding) const {
  Vector h = tanh_of(hidden_weights * embedding + hidden_bias);
  return out_weights * h + out_bias;
}

std::vector<std::string> select_query_words(
    const std::map<std::string, std::size_t>& frequencies, std::size_t q) {
  std::vector<std::pair<std::string, std::size_t>> items(frequencies.begin(),
                                                         frequencies.end());
  std::sort(items.begin(), items.end(), [](const auto& a, const auto& b) {
    if (a.second != b.second) {
      return a.second > b.second;
    }
    return a.first < b.first;
  });
  if (q > items.size()) {
    std::cerr << "warning: q=" << q << " exceeds vocabulary size "
              << items.size() << ", returning full vocabulary\n";
    q = items.size();
  }
  std::vector<std::string> words;
  words.reserve(q);
  for (std::size_t i = 0; i < q; ++i) {
    words.push_back(items[i].first);
  }
  return words;
}

ShadowModel train_shadow(const std::vector<ScorePair>& pairs,
                         const EmbeddingTable& teacher, std::uint64_t seed,
                         const ShadowTrainOptions& options) {
  std::vector<const ScorePair*> usable;
  for (const auto& pair : pairs) {
    if (!teacher.contains(pair.word)) {
      std::cerr << "warning: shadow pair skipped, '" << pair.word
                << "' missing from teacher\n";
      continue;
    }
    usable.push_back(&pair);
  }
  if (usable.size() < 2) {
    throw InvalidArgumentError("train_shadow needs at least 2 usable pairs");
  }
  const std::size_t n_classes = usable.front()->target.scores.size();
  const auto d = static_cast<Eigen::Index>(teacher.dim());
  const auto h = static_cast<Eigen::Index>(options.hidden_units);

  ShadowModel model;
  model.trained_on = usable.size();
  std::mt19937_64 rng(seed);
  const double bound_in = 1.0 / std::sqrt(static_cast<double>(d));
  const double bound_out = 1.0 / std::sqrt(static_cast<double>(h));
  std::uniform_real_distribution<double> init_in(-bound_in, bound_in);
  std::uniform_real_distribution<double> init_out(-bound_out, bound_out);
  model.hidden_weights = Matrix::NullaryExpr(h, d, [&] { return init_in(rng); });
  model.hidden_bias = Vector::Zero(h);
  model.out_weights = Matrix::NullaryExpr(
      static_cast<Eigen::Index>(n_classes), h, [&] { return init_out(rng); });
  model.out_bias = Vector::Zero(static_cast<Eigen::Index>(n_classes));

  std::vector<Vector> inputs;
  std::vector<Vector> targets;
  inputs.reserve(usable.size());
  targets.reserve(usable.size());
  for (const ScorePair* pair : usable) {
    inputs.push_back(teacher.vector_of(pair->word));
    Vector t(static_cast<Eigen::Index>(n_classes));
    for (std::size_t j = 0; j < n_classes; ++j) {
      t[static_cast<Eigen::Index>(j)] = pair->target.scores[j];
    }
    targets.push_back(std::move(t));
    model.cache[pair->word] = pair->target;
  }

  std::vector<std::size_t> order(inputs.size());
  std::iota(order.begin(), order.end(), 0);
  for (std::size_t epoch = 0; epoch < options.epochs; ++epoch) {
    std::shuffle(order.begin(), order.end(), rng);
    for (std::size_t start = 0; start < order.size();
         start += options.batch_size) {
      const std::size_t end =
          std::min(order.size(), start + options.batch_size);
      Matrix d_w1 = Matrix::Zero(h, d);
      Vector d_b1 = Vector::Zero(h);
      Matrix d_w2 =
          Matrix::Zero(static_cast<Eigen::Index>(n_classes), h);
      Vector d_b2 = Vector::Zero(static_cast<Eigen::Index>(n_classes));
      for (std::size_t idx = start; idx < end; ++idx) {
        const Vector& x = inputs[order[idx]];
        Vector hid = tanh_of(model.hidden_weights * x + model.hidden_bias);
        Vector out = model.out_weights * hid + model.out_bias;
        Vector err = out - targets[order[idx]];  // d(0.5*||err||^2)/d out
        d_w2 += err * hid.transpose();
        d_b2 += err;
        Vector d_hid = (model.out_weights.transpose() * err).cwiseProduct(
            (1.0 - hid.array().square()).matrix());
        d_w1 += d_hid * x.transpose();
        d_b1 += d_hid;
      }
      const double scale =
          options.learning_rate / static_cast<double>(end - start);
      model.hidden_weights -= scale * d_w1;
      model.hidden_bias -= scale * d_b1;
      model.out_weights -= scale * d_w2;
      model.out_bias -= scale * d_b2;
    }
  }
  return model;
}

ScoreVector shadow_score(const ShadowModel& model,
                         const EmbeddingTable& teacher,
                         const std::string& word) {
  auto cached = model.cache.find(word);
  if (cached != model.cache.end()) {
    return cached->second;
  }
  ScoreVector k;
  k.scores.assign(model.n_classes(), 0.0);
  if (!teacher.contains(word)) {
    return k;
  }
  Vector out = model.raw_predict(teacher.vector_of(word));
  Eigen::Index best = 0;
  out.maxCoeff(&best);
  if (out[best] > 0.0) {
    k.scores[static_cast<std::size_t>(best)] = out[best];
  }
  return k;
}

double shadow_agreement(const ShadowModel& model,
                        const EmbeddingTable& teacher,
                        const ScoreTable& ground_truth) {
  std::size_t evaluated = 0;
  std::size_t agreed = 0;
  for (const auto& [word, truth] : ground_truth.entries) {
    if (model.cache.count(word)) {
      continue;  // only words outside the q training pairs
    }
    ++evaluated;
    if (shadow_score(model, teacher, word).argmax_class() ==
        truth.argmax_class()) {
      ++agreed;
    }
  }
  if (evaluated == 0) {
    throw InvalidArgumentError("no non-training words to evaluate");
  }
  return static_cast<double>(agreed) / static_cast<double>(evaluated);
}

namespace {

nlohmann::json matrix_to_json(const Matrix& m) {
  nlohmann::json rows = nlohmann::json::array();
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    nlohmann::json row = nlohmann::json::array();
    for (Eigen::Index c = 0; c < m.cols(); ++c) {
      row.push_back(m(r, c));
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

Matrix matrix_from_json(const nlohmann::json& rows) {
  const auto r = static_cast<Eigen::Index>(rows.size());
  const auto c = static_cast<Eigen::Index>(rows.empty() ? 0 : rows[0].size());
  Matrix m(r, c);
  for (Eigen::Index i = 0; i < r; ++i) {
    for (Eigen::Index j = 0; j < c; ++j) {
      m(i, j) = rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]
                    .get<double>();
    }
  }
  return m;
}

}  // namespace

void save_shadow(const ShadowModel& model, const std::string& path) {
  nlohmann::json j;
  j["format"] = "greybox-shadow-v1";
  j["trained_on"] = model.trained_on;
  j["hidden_weights"] = matrix_to_json(model.hidden_weights);
  j["hidden_bias"] = matrix_to_json(model.hidden_bias);
  j["out_weights"] = matrix_to_json(model.out_weights);
  j["out_bias"] = matrix_to_json(model.out_bias);
  nlohmann::json cache = nlohmann::json::object();
  for (const auto& [word, k] : model.cache) {
    cache[word] = k.scores;
  }
  j["cache"] = cache;
  std::ofstream out(path);
  if (!out) {
    throw ParseError("cannot write shadow model file: " + path);
  }
  out << j.dump(2) << '\n';
}

ShadowModel load_shadow(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw ParseError("cannot open shadow model file: " + path);
  }
  nlohmann::json j;
  in >> j;
  if (j.value("format", "") != "greybox-shadow-v1") {
    throw ParseError(path + ": not a greybox shadow model file");
  }
  ShadowModel model;
  model.trained_on = j.at("trained_on").get<std::size_t>();
  model.hidden_weights = matrix_from_json(j.at("hidden_weights"));
  Matrix hb = matrix_from_json(j.at("hidden_bias"));
  model.hidden_bias = hb.col(0);
  model.out_weights = matrix_from_json(j.at("out_weights"));
  Matrix ob = matrix_from_json(j.at("out_bias"));
  model.out_bias = ob.col(0);
  for (const auto& [word, scores] : j.at("cache").items()) {
    ScoreVector k;
    k.scores = scores.get<std::vector<double>>();
    model.cache[word] = std::move(k);
  }
  return model;
}

}  // namespace greybox
