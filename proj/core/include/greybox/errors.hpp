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

#ifndef GREYBOX_ERRORS_HPP_
#define GREYBOX_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace greybox {

class ParseError : public std::runtime_error {
 public:
  explicit ParseError(const std::string& msg) : std::runtime_error(msg) {}
};

class OovError : public std::runtime_error {
 public:
  explicit OovError(const std::string& word)
      : std::runtime_error("out-of-vocabulary word: " + word) {}
};

class BudgetExceededError : public std::runtime_error {
 public:
  explicit BudgetExceededError(const std::string& msg)
      : std::runtime_error(msg) {}
};

class InvalidArgumentError : public std::invalid_argument {
 public:
  explicit InvalidArgumentError(const std::string& msg)
      : std::invalid_argument(msg) {}
};

}  // namespace greybox

#endif  // GREYBOX_ERRORS_HPP_
