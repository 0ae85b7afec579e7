// Copyright 2026 The qdist Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cctype>
#include <string>
#include <string_view>
#include <utility>

#include "qdist/errors.hpp"
#include "qdist/numbers.hpp"

namespace qdist::detail {

/// Cursor over the small bracketed text formats used throughout the library.
class TextReader {
 public:
  TextReader(std::string_view text, std::string context)
      : text_(text), context_(std::move(context)) {}

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) {
      ++pos_;
    }
  }

  bool at_end() {
    skip_space();
    return pos_ == text_.size();
  }

  char peek() {
    skip_space();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  bool accept(char c) {
    if (peek() == c && pos_ < text_.size()) {
      ++pos_;
      return true;
    }
    return false;
  }

  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }

  /// A run of letters, digits, '_' or '-' starting with a letter.
  std::string_view identifier() {
    skip_space();
    const std::size_t start = pos_;
    if (pos_ < text_.size() && std::isalpha(static_cast<unsigned char>(text_[pos_]))) {
      while (pos_ < text_.size() && (std::isalnum(static_cast<unsigned char>(text_[pos_])) ||
                                     text_[pos_] == '_' || text_[pos_] == '-')) {
        ++pos_;
      }
    }
    if (start == pos_) fail("expected an identifier");
    return text_.substr(start, pos_ - start);
  }

  /// Either `inf` or a run of digits, '/' and a leading '-'.
  std::string_view number_token() {
    skip_space();
    const std::size_t start = pos_;
    if (text_.substr(pos_, 3) == "inf") {
      pos_ += 3;
      return text_.substr(start, 3);
    }
    if (pos_ < text_.size() && text_[pos_] == '-') ++pos_;
    while (pos_ < text_.size() &&
           (std::isdigit(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '/')) {
      ++pos_;
    }
    if (start == pos_) fail("expected a number");
    return text_.substr(start, pos_ - start);
  }

  Rational rational() {
    const auto [line, column] = position_after_space();
    const std::string_view token = number_token();
    if (token == "inf") fail_at("expected a finite number", line, column);
    try {
      return parse_rational(token);
    } catch (const ParseError&) {
      fail_at("malformed number '" + std::string(token) + "'", line, column);
    }
  }

  ExtendedTime time() {
    const auto [line, column] = position_after_space();
    const std::string_view token = number_token();
    if (token == "inf") return ExtendedTime::infinity();
    Rational value;
    try {
      value = parse_rational(token);
    } catch (const ParseError&) {
      fail_at("malformed number '" + std::string(token) + "'", line, column);
    }
    if (value < 0) domain_fail("negative time " + to_string(value), line, column);
    return ExtendedTime(value);
  }

  UnitRational unit() {
    const auto [line, column] = position_after_space();
    Rational value = rational();
    if (value < 0 || value > 1) {
      domain_fail("value " + to_string(value) + " lies outside [0,1]", line, column);
    }
    return UnitRational(std::move(value));
  }

  std::pair<std::size_t, std::size_t> position() const { return position_of(pos_); }

  std::pair<std::size_t, std::size_t> position_after_space() {
    skip_space();
    return position();
  }

  [[noreturn]] void fail(const std::string& what) const {
    const auto [line, column] = position();
    fail_at(what, line, column);
  }

  [[noreturn]] void fail_at(const std::string& what, std::size_t line,
                            std::size_t column) const {
    throw ParseError(context_ + ": " + what, line, column);
  }

  [[noreturn]] void domain_fail(const std::string& what, std::size_t line,
                                std::size_t column) const {
    throw DomainError(context_ + ": " + what + " at line " + std::to_string(line) +
                      ", column " + std::to_string(column));
  }

 private:
  std::pair<std::size_t, std::size_t> position_of(std::size_t offset) const {
    std::size_t line = 1;
    std::size_t column = 1;
    for (std::size_t i = 0; i < offset && i < text_.size(); ++i) {
      if (text_[i] == '\n') {
        ++line;
        column = 1;
      } else {
        ++column;
      }
    }
    return {line, column};
  }

  std::string_view text_;
  std::string context_;
  std::size_t pos_ = 0;
};

}  // namespace qdist::detail
