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

#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "qdist/enclosure.hpp"
#include "qdist/numbers.hpp"
#include "qdist/staircase.hpp"
#include "qdist/tnorm.hpp"

namespace qdist {

/// Syntax tree of the expression language
///
///   expr := step(p,a) | steps[(p,a),...] | join(expr,...) | meet(expr,...)
///         | conv(expr,expr) | imp(expr,expr) | linear[(t,v),...]
///
/// Nodes are immutable and shared.
class Expression {
 public:
  enum class Kind { Step, Steps, Join, Meet, Conv, Imp, Linear };

  static Expression step(const ExtendedTime& p, const UnitRational& a);
  static Expression steps(Staircase phi);
  static Expression join(std::vector<Expression> operands);
  static Expression meet(std::vector<Expression> operands);
  static Expression conv(Expression lhs, Expression rhs);
  static Expression imp(Expression lhs, Expression rhs);
  static Expression linear(PiecewiseLinearDistribution f);

  Kind kind() const noexcept;
  const std::vector<Expression>& operands() const noexcept;
  /// Valid for Step nodes.
  const Rational& jump() const;
  const Rational& level() const;
  /// Valid for Steps nodes.
  const Staircase& staircase() const;
  /// Valid for Linear nodes.
  const PiecewiseLinearDistribution& distribution() const;

 private:
  struct Node;
  explicit Expression(std::shared_ptr<const Node> node) : node_(std::move(node)) {}

  std::shared_ptr<const Node> node_;
};

/// Throws ParseError (with line and column) on syntax and arity errors and
/// DomainError on out-of-range literals such as step(inf,1).
Expression parse_expression(std::string_view text);

/// Canonical text; parse_expression(to_string(e)) reproduces e.
std::string to_string(const Expression& e);

/// Evaluates to a staircase. Throws DomainError if a linear node occurs.
Staircase evaluate(const Expression& e, const TNormSpec& t);

/// The distribution of a bare linear[...] expression; DomainError otherwise.
PiecewiseLinearDistribution evaluate_linear(const Expression& e);

}  // namespace qdist
