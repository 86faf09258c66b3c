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

#ifndef GREYBOX_TEXTPROC_HPP_
#define GREYBOX_TEXTPROC_HPP_

#include <cstddef>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

namespace greybox {

struct TokenSeq {
  std::vector<std::string> tokens;  // lowercased
  // (start, end) character offsets into the original text, half-open.
  std::vector<std::pair<std::size_t, std::size_t>> spans;

  std::size_t size() const { return tokens.size(); }
  bool empty() const { return tokens.empty(); }
};

enum class PosTag { kNoun, kVerb, kAdjective, kAdverb, kOther, kUnknown };

std::string to_string(PosTag tag);
PosTag pos_tag_from_string(const std::string& s);  // throws ParseError

/// One tag per word, most-frequent-tag style lexicon.
struct PosLexicon {
  std::unordered_map<std::string, PosTag> entries;
};

/// Maximal runs of alphabetic characters and apostrophes become tokens,
/// lowercased; everything else separates.
TokenSeq tokenize(const std::string& text);

/// Splits after '.', '!' or '?' followed by whitespace or end of text;
/// fragments are trimmed and empty fragments dropped.
std::vector<std::string> split_sentences(const std::string& text);

PosTag pos_tag(const PosLexicon& lexicon, const std::string& word);

/// Lexicon file format: `word<TAB>tag` per line, tags from
/// {Noun, Verb, Adjective, Adverb, Other}.
PosLexicon load_lexicon(const std::string& path);
void save_lexicon(const PosLexicon& lexicon, const std::string& path);

}  // namespace greybox

#endif  // GREYBOX_TEXTPROC_HPP_
