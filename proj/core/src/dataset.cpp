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

#include "greybox/dataset.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "greybox/errors.hpp"
#include "greybox/textproc.hpp"

namespace greybox {

namespace {

// Minimal CSV: double quotes around fields containing commas/quotes/newlines,
// embedded quotes doubled.
std::vector<std::string> parse_csv_record(std::istream& in, bool& ok) {
  std::vector<std::string> fields;
  std::string field;
  bool in_quotes = false;
  bool any = false;
  char c;
  while (in.get(c)) {
    any = true;
    if (in_quotes) {
      if (c == '"') {
        if (in.peek() == '"') {
          in.get();
          field += '"';
        } else {
          in_quotes = false;
        }
      } else {
        field += c;
      }
    } else if (c == '"') {
      in_quotes = true;
    } else if (c == ',') {
      fields.push_back(std::move(field));
      field.clear();
    } else if (c == '\n') {
      break;
    } else if (c == '\r') {
      // swallow; \r\n handled by the \n branch
    } else {
      field += c;
    }
  }
  ok = any;
  if (any) {
    fields.push_back(std::move(field));
  }
  return fields;
}

std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n\r") == std::string::npos) {
    return s;
  }
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

}  // namespace

LabeledDataset load_dataset_csv(const std::string& path,
                                std::vector<std::string> class_names) {
  std::ifstream in(path);
  if (!in) {
    throw ParseError("cannot open dataset file: " + path);
  }
  bool ok = false;
  auto header = parse_csv_record(in, ok);
  if (!ok || header.size() < 2 || header[0] != "text" || header[1] != "label") {
    throw ParseError(path + ": expected `text,label` header");
  }
  LabeledDataset dataset;
  dataset.class_names = std::move(class_names);
  const bool fixed_classes = !dataset.class_names.empty();
  std::size_t line_no = 1;
  while (true) {
    auto fields = parse_csv_record(in, ok);
    if (!ok) {
      break;
    }
    ++line_no;
    if (fields.size() == 1 && fields[0].empty()) {
      continue;
    }
    if (fields.size() != 2) {
      throw ParseError(path + ":" + std::to_string(line_no) +
                       ": expected 2 fields, got " +
                       std::to_string(fields.size()));
    }
    const std::string& name = fields[1];
    auto it = std::find(dataset.class_names.begin(), dataset.class_names.end(),
                        name);
    std::size_t label;
    if (it == dataset.class_names.end()) {
      if (fixed_classes) {
        throw ParseError(path + ":" + std::to_string(line_no) +
                         ": unknown class name '" + name + "'");
      }
      label = dataset.class_names.size();
      dataset.class_names.push_back(name);
    } else {
      label = static_cast<std::size_t>(it - dataset.class_names.begin());
    }
    dataset.samples.push_back({fields[0], label});
  }
  if (dataset.samples.empty()) {
    throw ParseError(path + ": no samples");
  }
  return dataset;
}

void save_dataset_csv(const LabeledDataset& dataset, const std::string& path) {
  std::ofstream out(path);
  if (!out) {
    throw ParseError("cannot write dataset file: " + path);
  }
  out << "text,label\n";
  for (const auto& sample : dataset.samples) {
    out << csv_escape(sample.text) << ','
        << csv_escape(dataset.class_names.at(sample.label)) << '\n';
  }
}

std::map<std::string, std::size_t> vocabulary_frequencies(
    const LabeledDataset& dataset) {
  std::map<std::string, std::size_t> freq;
  for (const auto& sample : dataset.samples) {
    for (const auto& token : tokenize(sample.text).tokens) {
      ++freq[token];
    }
  }
  return freq;
}

}  // namespace greybox
