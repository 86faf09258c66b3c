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

#ifndef GREYBOX_DATASET_HPP_
#define GREYBOX_DATASET_HPP_

#include <cstddef>
#include <map>
#include <string>
#include <vector>

namespace greybox {

struct LabeledSample {
  std::string text;
  std::size_t label;
};

struct LabeledDataset {
  std::vector<LabeledSample> samples;
  std::vector<std::string> class_names;

  std::size_t n_classes() const { return class_names.size(); }
};

/// CSV with a `text,label` header; labels are class names mapped through
/// class_names order. When class_names is empty they are collected in
/// first-appearance order.
LabeledDataset load_dataset_csv(const std::string& path,
                                std::vector<std::string> class_names = {});
void save_dataset_csv(const LabeledDataset& dataset, const std::string& path);

/// Token frequencies over every sample text, after tokenization.
std::map<std::string, std::size_t> vocabulary_frequencies(
    const LabeledDataset& dataset);

}  // namespace greybox

#endif  // GREYBOX_DATASET_HPP_
