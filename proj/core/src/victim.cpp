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

#include "greybox/victim.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iostream>
#include <numeric>
#include <random>

#include <json.hpp>

#include "greybox/errors.hpp"
#include "greybox/textproc.hpp"

namespace greybox {

namespace {

Vector softmax(const Vector& logits) {
  const double max = logits.maxCoeff();
  Vector exps = (logits.array() - max).exp();
  return exps / exps.sum();
}

struct PreparedSample {
  std::vector<std::string> in_vocab_tokens;
  double norm_length = 0.0;  // sentence victim only
  std::size_t label = 0;
};

double normalized_length(const std::string& text, std::size_t cap) {
  const std::size_t n = split_sentences(text).size();
  return static_cast<double>(std::min(n, cap)) / static_cast<double>(cap);
}

// Mean of embedding rows (teacher plus private deltas), empty -> zero.
Vector mean_vector(const EmbeddingTable& teacher,
                   const std::map<std::string, Vector>& deltas,
                   const std::vector<std::string>& tokens, bool* any) {
  Vector sum = Vector::Zero(static_cast<Eigen::Index>(teacher.dim()));
  std::size_t count = 0;
  for (const auto& token : tokens) {
    if (!teacher.contains(token)) {
      continue;
    }
    sum += teacher.vector_of(token);
    auto it = deltas.find(token);
    if (it != deltas.end()) {
      sum += it->second;
    }
    ++count;
  }
  if (any != nullptr) {
    *any = count > 0;
  }
  if (count > 0) {
    sum /= static_cast<double>(count);
  }
  return sum;
}

VictimModel train_impl(const LabeledDataset& dataset,
                       const EmbeddingTable& teacher, VictimConfig config,
                       bool sentence_level) {
  if (dataset.samples.empty()) {
    throw InvalidArgumentError("empty training dataset");
  }
  config.n_classes = std::max<std::size_t>(config.n_classes,
                                           dataset.class_names.size());
  if (config.mode == VictimMode::kFeatureExtractor) {
    config.embedding_learning_rate = 0.0;
  }
  if (!sentence_level) {
    config.length_feature = false;
  }

  std::vector<std::size_t> class_counts(config.n_classes, 0);
  std::vector<PreparedSample> prepared;
  prepared.reserve(dataset.samples.size());
  for (const auto& sample : dataset.samples) {
    if (sample.label >= config.n_classes) {
      throw InvalidArgumentError("label out of range in training dataset");
    }
    PreparedSample p;
    p.label = sample.label;
    for (auto& token : tokenize(sample.text).tokens) {
      if (teacher.contains(token)) {
        p.in_vocab_tokens.push_back(std::move(token));
      }
    }
    if (p.in_vocab_tokens.empty() && !config.length_feature) {
      std::cerr << "warning: skipping sample with no in-vocabulary tokens\n";
      continue;
    }
    if (config.length_feature) {
      p.norm_length = normalized_length(sample.text, config.length_cap);
    }
    class_counts[sample.label]++;
    prepared.push_back(std::move(p));
  }
  for (std::size_t j = 0; j < class_counts.size(); ++j) {
    if (class_counts[j] == 0) {
      throw InvalidArgumentError("class " + std::to_string(j) +
                                 " absent from training dataset");
    }
  }

  const std::size_t d = teacher.dim();
  const std::size_t feat_dim = d + (config.length_feature ? 1 : 0);
  const auto n_classes = static_cast<Eigen::Index>(config.n_classes);

  VictimModel model;
  model.config = config;
  model.class_names = dataset.class_names;
  model.sentence_level = sentence_level;
  model.head_weights =
      Matrix::Zero(n_classes, static_cast<Eigen::Index>(feat_dim));
  model.head_bias = Vector::Zero(n_classes);

  std::mt19937_64 rng(config.seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  const bool fine_tune = config.embedding_learning_rate > 0.0;
  const double keep = 1.0 - config.dropout_ratio;

  std::vector<std::size_t> order(prepared.size());
  std::iota(order.begin(), order.end(), 0);

  for (std::size_t epoch = 0; epoch < config.epochs; ++epoch) {
    std::shuffle(order.begin(), order.end(), rng);
    for (std::size_t start = 0; start < order.size();
         start += config.batch_size) {
      const std::size_t end =
          std::min(order.size(), start + config.batch_size);
      Matrix dW = Matrix::Zero(model.head_weights.rows(),
                               model.head_weights.cols());
      Vector db = Vector::Zero(n_classes);
      // word -> accumulated embedding-row gradient (fine-tuning only)
      std::map<std::string, Vector> emb_grads;

      for (std::size_t idx = start; idx < end; ++idx) {
        const PreparedSample& p = prepared[order[idx]];
        Vector mean = mean_vector(teacher, model.embedding_deltas,
                                  p.in_vocab_tokens, nullptr);
        Vector x(static_cast<Eigen::Index>(feat_dim));
        x.head(static_cast<Eigen::Index>(d)) = mean;
        if (config.length_feature) {
          x[static_cast<Eigen::Index>(d)] = p.norm_length;
        }
        Vector mask = Vector::Ones(x.size());
        if (config.dropout_ratio > 0.0) {
          for (Eigen::Index i = 0; i < mask.size(); ++i) {
            mask[i] = unit(rng) < keep ? 1.0 / keep : 0.0;
          }
          x = x.cwiseProduct(mask);
        }
        Vector p_hat = softmax(model.head_weights * x + model.head_bias);
        Vector g = p_hat;
        g[static_cast<Eigen::Index>(p.label)] -= 1.0;
        dW += g * x.transpose();
        db += g;
        if (fine_tune && !p.in_vocab_tokens.empty()) {
          // dL/d(mean) through the dropout mask, spread over token rows
          Vector dx = model.head_weights.transpose() * g;
          if (config.dropout_ratio > 0.0) {
            dx = dx.cwiseProduct(mask);
          }
          Vector dmean = dx.head(static_cast<Eigen::Index>(d)) /
                         static_cast<double>(p.in_vocab_tokens.size());
          for (const auto& token : p.in_vocab_tokens) {
            auto [it, inserted] = emb_grads.try_emplace(
                token, Vector::Zero(static_cast<Eigen::Index>(d)));
            it->second += dmean;
          }
        }
      }
      const double scale = 1.0 / static_cast<double>(end - start);
      model.head_weights -= config.learning_rate * scale * dW;
      model.head_bias -= config.learning_rate * scale * db;
      for (auto& [token, grad] : emb_grads) {
        auto [it, inserted] = model.embedding_deltas.try_emplace(
            token, Vector::Zero(static_cast<Eigen::Index>(d)));
        it->second -= config.embedding_learning_rate * scale * grad;
      }
    }
  }
  return model;
}

}  // namespace

void QueryBudget::charge() {
  std::uint64_t current = used_.load();
  for (;;) {
    if (limit_ && current >= *limit_) {
      throw BudgetExceededError("query budget exhausted at " +
                                std::to_string(*limit_) + " queries");
    }
    if (used_.compare_exchange_weak(current, current + 1)) {
      return;
    }
  }
}

std::size_t ClassDistribution::argmax() const {
  std::size_t best = 0;
  for (Eigen::Index i = 1; i < probs.size(); ++i) {
    if (probs[i] > probs[static_cast<Eigen::Index>(best)]) {
      best = static_cast<std::size_t>(i);
    }
  }
  return best;
}

std::size_t VictimModel::feature_dim() const {
  return static_cast<std::size_t>(head_weights.cols());
}

Vector VictimModel::feature(const EmbeddingTable& teacher,
                            const std::string& text) const {
  const std::size_t d = teacher.dim();
  bool any = false;
  Vector mean = mean_vector(teacher, embedding_deltas, tokenize(text).tokens,
                            &any);
  if (!config.length_feature) {
    return mean;
  }
  Vector x(static_cast<Eigen::Index>(d) + 1);
  x.head(static_cast<Eigen::Index>(d)) = mean;
  x[static_cast<Eigen::Index>(d)] =
      normalized_length(text, config.length_cap);
  return x;
}

ClassDistribution VictimModel::query(const EmbeddingTable& teacher,
                                     const std::string& text) const {
  budget_->charge();
  bool any = false;
  Vector mean = mean_vector(teacher, embedding_deltas, tokenize(text).tokens,
                            &any);
  ClassDistribution dist;
  if (!any && !config.length_feature) {
    dist.degenerate = true;
    dist.probs = Vector::Constant(head_bias.size(),
                                  1.0 / static_cast<double>(head_bias.size()));
    return dist;
  }
  Vector x(head_weights.cols());
  x.head(static_cast<Eigen::Index>(teacher.dim())) = mean;
  if (config.length_feature) {
    x[static_cast<Eigen::Index>(teacher.dim())] =
        normalized_length(text, config.length_cap);
  }
  dist.probs = softmax(head_weights * x + head_bias);
  return dist;
}

double VictimModel::accuracy(const EmbeddingTable& teacher,
                             const LabeledDataset& dataset) const {
  if (dataset.samples.empty()) {
    throw InvalidArgumentError("empty evaluation dataset");
  }
  std::size_t correct = 0;
  for (const auto& sample : dataset.samples) {
    Vector x = feature(teacher, sample.text);
    Vector p = softmax(head_weights * x + head_bias);
    std::size_t best = 0;
    for (Eigen::Index i = 1; i < p.size(); ++i) {
      if (p[i] > p[static_cast<Eigen::Index>(best)]) {
        best = static_cast<std::size_t>(i);
      }
    }
    if (best == sample.label) {
      ++correct;
    }
  }
  return static_cast<double>(correct) /
         static_cast<double>(dataset.samples.size());
}

VictimModel train_word_victim(const LabeledDataset& dataset,
                              const EmbeddingTable& teacher,
                              const VictimConfig& config) {
  return train_impl(dataset, teacher, config, /*sentence_level=*/false);
}

VictimModel train_sentence_victim(const LabeledDataset& dataset,
                                  const EmbeddingTable& teacher,
                                  const VictimConfig& config) {
  return train_impl(dataset, teacher, config, /*sentence_level=*/true);
}

Vector sentence_embed(const EmbeddingTable& teacher, const std::string& text,
                      bool length_feature, std::size_t length_cap) {
  bool any = false;
  Vector mean = mean_vector(teacher, {}, tokenize(text).tokens, &any);
  if (!length_feature) {
    return mean;
  }
  Vector x(mean.size() + 1);
  x.head(mean.size()) = mean;
  x[mean.size()] = normalized_length(text, length_cap);
  return x;
}

VictimModel adversarial_retrain(const VictimModel& victim,
                                const EmbeddingTable& teacher,
                                const LabeledDataset& original,
                                const LabeledDataset& adversarial) {
  if (adversarial.samples.empty()) {
    throw InvalidArgumentError("empty adversarial dataset");
  }
  LabeledDataset combined = original;
  for (const auto& sample : adversarial.samples) {
    if (sample.label >= combined.n_classes()) {
      throw InvalidArgumentError("adversarial label out of range");
    }
    combined.samples.push_back(sample);
  }
  return train_impl(combined, teacher, victim.config, victim.sentence_level);
}

double softmax_xent_loss(const Matrix& weights, const Vector& bias,
                         const std::vector<Vector>& features,
                         const std::vector<std::size_t>& labels) {
  double loss = 0.0;
  for (std::size_t i = 0; i < features.size(); ++i) {
    Vector p = softmax(weights * features[i] + bias);
    loss -= std::log(
        std::max(p[static_cast<Eigen::Index>(labels[i])], 1e-300));
  }
  return loss / static_cast<double>(features.size());
}

void softmax_xent_gradients(const Matrix& weights, const Vector& bias,
                            const std::vector<Vector>& features,
                            const std::vector<std::size_t>& labels,
                            Matrix* d_weights, Vector* d_bias) {
  *d_weights = Matrix::Zero(weights.rows(), weights.cols());
  *d_bias = Vector::Zero(bias.size());
  for (std::size_t i = 0; i < features.size(); ++i) {
    Vector g = softmax(weights * features[i] + bias);
    g[static_cast<Eigen::Index>(labels[i])] -= 1.0;
    *d_weights += g * features[i].transpose();
    *d_bias += g;
  }
  *d_weights /= static_cast<double>(features.size());
  *d_bias /= static_cast<double>(features.size());
}

namespace {

nlohmann::json vector_to_json(const Vector& v) {
  nlohmann::json arr = nlohmann::json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    arr.push_back(v[i]);
  }
  return arr;
}

Vector vector_from_json(const nlohmann::json& arr) {
  Vector v(static_cast<Eigen::Index>(arr.size()));
  for (std::size_t i = 0; i < arr.size(); ++i) {
    v[static_cast<Eigen::Index>(i)] = arr[i].get<double>();
  }
  return v;
}

}  // namespace

void save_victim(const VictimModel& victim, const std::string& path) {
  nlohmann::json j;
  j["format"] = "greybox-victim-v1";
  j["config"] = {
      {"mode", victim.config.mode == VictimMode::kFineTuned ? "fine_tuned"
                                                            : "feature_extractor"},
      {"dropout_ratio", victim.config.dropout_ratio},
      {"learning_rate", victim.config.learning_rate},
      {"embedding_learning_rate", victim.config.embedding_learning_rate},
      {"epochs", victim.config.epochs},
      {"batch_size", victim.config.batch_size},
      {"seed", victim.config.seed},
      {"n_classes", victim.config.n_classes},
      {"length_feature", victim.config.length_feature},
      {"length_cap", victim.config.length_cap},
  };
  j["class_names"] = victim.class_names;
  j["sentence_level"] = victim.sentence_level;
  j["head_bias"] = vector_to_json(victim.head_bias);
  nlohmann::json rows = nlohmann::json::array();
  for (Eigen::Index r = 0; r < victim.head_weights.rows(); ++r) {
    rows.push_back(vector_to_json(victim.head_weights.row(r).transpose()));
  }
  j["head_weights"] = rows;
  nlohmann::json deltas = nlohmann::json::object();
  for (const auto& [word, delta] : victim.embedding_deltas) {
    deltas[word] = vector_to_json(delta);
  }
  j["embedding_deltas"] = deltas;

  std::ofstream out(path);
  if (!out) {
    throw ParseError("cannot write victim model file: " + path);
  }
  out << j.dump(2) << '\n';
}

VictimModel load_victim(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw ParseError("cannot open victim model file: " + path);
  }
  nlohmann::json j;
  in >> j;
  if (j.value("format", "") != "greybox-victim-v1") {
    throw ParseError(path + ": not a greybox victim model file");
  }
  VictimModel victim;
  const auto& c = j.at("config");
  victim.config.mode = c.at("mode").get<std::string>() == "fine_tuned"
                           ? VictimMode::kFineTuned
                           : VictimMode::kFeatureExtractor;
  victim.config.dropout_ratio = c.at("dropout_ratio").get<double>();
  victim.config.learning_rate = c.at("learning_rate").get<double>();
  victim.config.embedding_learning_rate =
      c.at("embedding_learning_rate").get<double>();
  victim.config.epochs = c.at("epochs").get<std::size_t>();
  victim.config.batch_size = c.at("batch_size").get<std::size_t>();
  victim.config.seed = c.at("seed").get<std::uint64_t>();
  victim.config.n_classes = c.at("n_classes").get<std::size_t>();
  victim.config.length_feature = c.at("length_feature").get<bool>();
  victim.config.length_cap = c.at("length_cap").get<std::size_t>();
  victim.class_names = j.at("class_names").get<std::vector<std::string>>();
  victim.sentence_level = j.at("sentence_level").get<bool>();
  victim.head_bias = vector_from_json(j.at("head_bias"));
  const auto& rows = j.at("head_weights");
  victim.head_weights = Matrix(static_cast<Eigen::Index>(rows.size()),
                               victim.head_bias.size() > 0
                                   ? vector_from_json(rows.at(0)).size()
                                   : 0);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    victim.head_weights.row(static_cast<Eigen::Index>(r)) =
        vector_from_json(rows.at(r)).transpose();
  }
  for (const auto& [word, delta] : j.at("embedding_deltas").items()) {
    victim.embedding_deltas[word] = vector_from_json(delta);
  }
  return victim;
}

}  // namespace greybox
