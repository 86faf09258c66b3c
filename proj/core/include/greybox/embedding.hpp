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

#ifndef GREYBOX_EMBEDDING_HPP_
#define GREYBOX_EMBEDDING_HPP_

#include <Eigen/Core>

#include <cstddef>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

namespace greybox {

using Vector = Eigen::VectorXd;

/// In-memory word-vector table (the public teacher model). Immutable after
/// load; safe for concurrent readers.
class EmbeddingTable {
 public:
  EmbeddingTable() = default;

  // Words are lowercased; duplicates keep the first occurrence; zero-norm
  // vectors are rejected.
  void insert(const std::string& word, const Vector& vec);

  bool contains(const std::string& word) const {
    return index_.count(word) > 0;
  }
  const Vector& vector_of(const std::string& word) const;  // throws OovError
  double norm_of(const std::string& word) const;           // throws OovError

  std::size_t dim() const { return dim_; }
  std::size_t size() const { return words_.size(); }
  const std::vector<std::string>& words() const { return words_; }

 private:
  std::size_t dim_ = 0;
  std::vector<std::string> words_;
  std::vector<Vector> vectors_;
  std::vector<double> norms_;
  std::unordered_map<std::string, std::size_t> index_;
};

struct Neighbor {
  std::string word;
  double similarity;  // cosine, in [-1, 1]
};

struct NeighborList {
  std::string query;
  std::vector<Neighbor> neighbors;  // non-increasing similarity
};

/// Parses the standard one-entry-per-line text format: token followed by d
/// space-separated decimals. Throws ParseError naming the offending line.
EmbeddingTable load_embeddings(const std::string& path,
                               std::optional<std::size_t> expected_dim = {});

/// Writes the table back in the same text format, 6 significant digits.
void save_embeddings(const EmbeddingTable& table, const std::string& path);

double cosine_similarity(const EmbeddingTable& table, const std::string& a,
                         const std::string& b);

/// Exact top-k cosine scan, excluding the query word itself. Ties broken by
/// lexicographic word order. Throws OovError for unknown queries.
NeighborList nearest_neighbors(const EmbeddingTable& table,
                               const std::string& word, std::size_t k);

}  // namespace greybox

#endif  // GREYBOX_EMBEDDING_HPP_
