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

#include "greybox/textproc.hpp"

#include <cctype>
#include <fstream>

#include "greybox/errors.hpp"

namespace greybox {

namespace {

bool is_token_char(char c) {
  return std::isalpha(static_cast<unsigned char>(c)) || c == '\'';
}

bool is_space(char c) { return std::isspace(static_cast<unsigned char>(c)); }

}  // namespace

std::string to_string(PosTag tag) {
  switch (tag) {
    case PosTag::kNoun:
      return "Noun";
    case PosTag::kVerb:
      return "Verb";
    case PosTag::kAdjective:
      return "Adjective";
    case PosTag::kAdverb:
      return "Adverb";
    case PosTag::kOther:
      return "Other";
    case PosTag::kUnknown:
      return "Unknown";
  }
  return "Unknown";
}

PosTag pos_tag_from_string(const std::string& s) {
  if (s == "Noun") return PosTag::kNoun;
  if (s == "Verb") return PosTag::kVerb;
  if (s == "Adjective") return PosTag::kAdjective;
  if (s == "Adverb") return PosTag::kAdverb;
  if (s == "Other") return PosTag::kOther;
  throw ParseError("unknown part-of-speech tag: " + s);
}

TokenSeq tokenize(const std::string& text) {
  TokenSeq seq;
  std::size_t i = 0;
  while (i < text.size()) {
    if (!is_token_char(text[i])) {
      ++i;
      continue;
    }
    std::size_t start = i;
    while (i < text.size() && is_token_char(text[i])) {
      ++i;
    }
    std::string token = text.substr(start, i - start);
    for (char& c : token) {
      c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    }
    seq.tokens.push_back(std::move(token));
    seq.spans.emplace_back(start, i);
  }
  return seq;
}

std::vector<std::string> split_sentences(const std::string& text) {
  std::vector<std::string> sentences;
  std::size_t start = 0;
  for (std::size_t i = 0; i < text.size(); ++i) {
    const char c = text[i];
    const bool terminator = (c == '.' || c == '!' || c == '?');
    const bool at_break =
        terminator && (i + 1 == text.size() || is_space(text[i + 1]));
    if (!at_break) {
      continue;
    }
    std::size_t lo = start;
    std::size_t hi = i + 1;
    while (lo < hi && is_space(text[lo])) ++lo;
    while (hi > lo && is_space(text[hi - 1])) --hi;
    if (hi > lo) {
      sentences.push_back(text.substr(lo, hi - lo));
    }
    start = i + 1;
  }
  // trailing fragment without a terminator
  std::size_t lo = start;
  std::size_t hi = text.size();
  while (lo < hi && is_space(text[lo])) ++lo;
  while (hi > lo && is_space(text[hi - 1])) --hi;
  if (hi > lo) {
    sentences.push_back(text.substr(lo, hi - lo));
  }
  return sentences;
}

PosTag pos_tag(const PosLexicon& lexicon, const std::string& word) {
  auto it = lexicon.entries.find(word);
  return it == lexicon.entries.end() ? PosTag::kUnknown : it->second;
}

PosLexicon load_lexicon(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw ParseError("cannot open lexicon file: " + path);
  }
  PosLexicon lexicon;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) {
      continue;
    }
    const std::size_t tab = line.find('\t');
    if (tab == std::string::npos) {
      throw ParseError(path + ":" + std::to_string(line_no) +
                       ": expected `word<TAB>tag`");
    }
    std::string word = line.substr(0, tab);
    for (char& c : word) {
      c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    }
    lexicon.entries[word] = pos_tag_from_string(line.substr(tab + 1));
  }
  return lexicon;
}

void save_lexicon(const PosLexicon& lexicon, const std::string& path) {
  std::ofstream out(path);
  if (!out) {
    throw ParseError("cannot write lexicon file: " + path);
  }
  for (const auto& [word, tag] : lexicon.entries) {
    out << word << '\t' << to_string(tag) << '\n';
  }
}

}  // namespace greybox
