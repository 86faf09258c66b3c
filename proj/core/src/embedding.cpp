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

#include "greybox/embedding.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

#include "greybox/errors.hpp"

namespace greybox {

namespace {

std::string lowercase(std::string s) {
  for (char& c : s) {
    c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  }
  return s;
}

}  // namespace

void EmbeddingTable::insert(const std::string& word, const Vector& vec) {
  if (dim_ == 0) {
    dim_ = static_cast<std::size_t>(vec.size());
  }
  if (static_cast<std::size_t>(vec.size()) != dim_) {
    throw InvalidArgumentError("vector dimension mismatch for word '" + word +
                               "'");
  }
  if (!vec.allFinite()) {
    throw InvalidArgumentError("non-finite component in vector for word '" +
                               word + "'");
  }
  const double norm = vec.norm();
  if (norm == 0.0) {
    throw InvalidArgumentError("zero-norm vector for word '" + word + "'");
  }
  std::string key = lowercase(word);
  if (index_.count(key)) {
    return;  // duplicates keep the first occurrence
  }
  index_.emplace(key, words_.size());
  words_.push_back(std::move(key));
  vectors_.push_back(vec);
  norms_.push_back(norm);
}

const Vector& EmbeddingTable::vector_of(const std::string& word) const {
  auto it = index_.find(word);
  if (it == index_.end()) {
    throw OovError(word);
  }
  return vectors_[it->second];
}

double EmbeddingTable::norm_of(const std::string& word) const {
  auto it = index_.find(word);
  if (it == index_.end()) {
    throw OovError(word);
  }
  return norms_[it->second];
}

EmbeddingTable load_embeddings(const std::string& path,
                               std::optional<std::size_t> expected_dim) {
  std::ifstream in(path);
  if (!in) {
    throw ParseError("cannot open embedding file: " + path);
  }
  EmbeddingTable table;
  std::optional<std::size_t> dim = expected_dim;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) {
      continue;
    }
    std::istringstream ls(line);
    std::string word;
    ls >> word;
    std::vector<double> components;
    std::string tok;
    while (ls >> tok) {
      double value = 0.0;
      auto [ptr, ec] =
          std::from_chars(tok.data(), tok.data() + tok.size(), value);
      if (ec != std::errc{} || ptr != tok.data() + tok.size()) {
        throw ParseError(path + ":" + std::to_string(line_no) +
                         ": non-numeric component '" + tok + "'");
      }
      components.push_back(value);
    }
    if (components.empty()) {
      throw ParseError(path + ":" + std::to_string(line_no) +
                       ": no vector components");
    }
    if (!dim) {
      dim = components.size();
    }
    if (components.size() != *dim) {
      throw ParseError(path + ":" + std::to_string(line_no) + ": expected " +
                       std::to_string(*dim) + " components, got " +
                       std::to_string(components.size()));
    }
    Vector vec = Eigen::Map<Vector>(components.data(),
                                    static_cast<Eigen::Index>(components.size()));
    table.insert(word, vec);
  }
  if (table.size() == 0) {
    throw ParseError("empty embedding file: " + path);
  }
  return table;
}

void save_embeddings(const EmbeddingTable& table, const std::string& path) {
  std::ofstream out(path);
  if (!out) {
    throw ParseError("cannot write embedding file: " + path);
  }
  out.precision(6);
  for (const auto& word : table.words()) {
    out << word;
    const Vector& v = table.vector_of(word);
    for (Eigen::Index i = 0; i < v.size(); ++i) {
      out << ' ' << v[i];
    }
    out << '\n';
  }
}

double cosine_similarity(const EmbeddingTable& table, const std::string& a,
                         const std::string& b) {
  const Vector& va = table.vector_of(a);
  const Vector& vb = table.vector_of(b);
  return va.dot(vb) / (table.norm_of(a) * table.norm_of(b));
}

NeighborList nearest_neighbors(const EmbeddingTable& table,
                               const std::string& word, std::size_t k) {
  const Vector& query = table.vector_of(word);
  const double query_norm = table.norm_of(word);

  std::vector<Neighbor> all;
  all.reserve(table.size());
  for (const auto& other : table.words()) {
    if (other == word) {
      continue;
    }
    const double sim =
        table.vector_of(other).dot(query) / (table.norm_of(other) * query_norm);
    all.push_back({other, sim});
  }
  const std::size_t take = std::min(k, all.size());
  auto better = [](const Neighbor& lhs, const Neighbor& rhs) {
    if (lhs.similarity != rhs.similarity) {
      return lhs.similarity > rhs.similarity;
    }
    return lhs.word < rhs.word;
  };
  std::partial_sort(all.begin(), all.begin() + static_cast<std::ptrdiff_t>(take),
                    all.end(), better);
  all.resize(take);
  return NeighborList{word, std::move(all)};
}

}  // namespace greybox
