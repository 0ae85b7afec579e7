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

#include "qdist/expression.hpp"

#include <optional>

#include "qdist/delta.hpp"
#include "qdist/errors.hpp"
#include "text_reader.hpp"

namespace qdist {

struct Expression::Node {
  Kind kind;
  std::vector<Expression> operands;
  Rational jump;
  Rational level;
  Staircase staircase;
  std::optional<PiecewiseLinearDistribution> distribution;
};

Expression Expression::step(const ExtendedTime& p, const UnitRational& a) {
  if (p.is_infinite()) throw DomainError("step(p,a) requires a finite p");
  auto node = std::make_shared<Node>();
  node->kind = Kind::Step;
  node->jump = p.finite_value();
  node->level = a.value();
  return Expression(std::move(node));
}

Expression Expression::steps(Staircase phi) {
  auto node = std::make_shared<Node>();
  node->kind = Kind::Steps;
  node->staircase = std::move(phi);
  return Expression(std::move(node));
}

namespace {

Expression::Kind checked_nonempty(Expression::Kind kind, const std::vector<Expression>& xs) {
  if (xs.empty()) throw DomainError("join and meet need at least one operand");
  return kind;
}

}  // namespace

Expression Expression::join(std::vector<Expression> operands) {
  auto node = std::make_shared<Node>();
  node->kind = checked_nonempty(Kind::Join, operands);
  node->operands = std::move(operands);
  return Expression(std::move(node));
}

Expression Expression::meet(std::vector<Expression> operands) {
  auto node = std::make_shared<Node>();
  node->kind = checked_nonempty(Kind::Meet, operands);
  node->operands = std::move(operands);
  return Expression(std::move(node));
}

Expression Expression::conv(Expression lhs, Expression rhs) {
  auto node = std::make_shared<Node>();
  node->kind = Kind::Conv;
  node->operands = {std::move(lhs), std::move(rhs)};
  return Expression(std::move(node));
}

Expression Expression::imp(Expression lhs, Expression rhs) {
  auto node = std::make_shared<Node>();
  node->kind = Kind::Imp;
  node->operands = {std::move(lhs), std::move(rhs)};
  return Expression(std::move(node));
}

Expression Expression::linear(PiecewiseLinearDistribution f) {
  auto node = std::make_shared<Node>();
  node->kind = Kind::Linear;
  node->distribution = std::move(f);
  return Expression(std::move(node));
}

Expression::Kind Expression::kind() const noexcept { return node_->kind; }
const std::vector<Expression>& Expression::operands() const noexcept { return node_->operands; }
const Rational& Expression::jump() const { return node_->jump; }
const Rational& Expression::level() const { return node_->level; }
const Staircase& Expression::staircase() const { return node_->staircase; }

const PiecewiseLinearDistribution& Expression::distribution() const {
  if (!node_->distribution) throw DomainError("not a linear expression");
  return *node_->distribution;
}

namespace {

class ExpressionParser {
 public:
  explicit ExpressionParser(std::string_view text) : in_(text, "expression") {}

  Expression parse() {
    Expression e = expr();
    if (!in_.at_end()) in_.fail("trailing input");
    return e;
  }

 private:
  Expression expr() {
    const auto [line, column] = in_.position_after_space();
    const std::string_view name = in_.identifier();
    if (name == "step") {
      in_.expect('(');
      const auto [pl, pc] = in_.position_after_space();
      ExtendedTime p = in_.time();
      if (p.is_infinite()) in_.domain_fail("step(p,a) requires a finite p", pl, pc);
      in_.expect(',');
      UnitRational a = in_.unit();
      in_.expect(')');
      return Expression::step(p, a);
    }
    if (name == "steps") return Expression::steps(steps_body(line, column));
    if (name == "linear") return Expression::linear(linear_body(line, column));
    if (name == "join" || name == "meet") {
      std::vector<Expression> xs = arguments();
      if (xs.empty()) in_.fail_at(std::string(name) + " expects at least 1 argument", line, column);
      return name == "join" ? Expression::join(std::move(xs)) : Expression::meet(std::move(xs));
    }
    if (name == "conv" || name == "imp") {
      std::vector<Expression> xs = arguments();
      if (xs.size() != 2) {
        in_.fail_at(std::string(name) + " expects 2 arguments, got " + std::to_string(xs.size()),
                    line, column);
      }
      return name == "conv" ? Expression::conv(xs[0], xs[1]) : Expression::imp(xs[0], xs[1]);
    }
    in_.fail_at("unknown operator '" + std::string(name) + "'", line, column);
  }

  std::vector<Expression> arguments() {
    in_.expect('(');
    std::vector<Expression> xs;
    if (in_.accept(')')) return xs;
    do {
      xs.push_back(expr());
    } while (in_.accept(','));
    in_.expect(')');
    return xs;
  }

  Staircase steps_body(std::size_t line, std::size_t column) {
    in_.expect('[');
    std::vector<Step> steps;
    if (!in_.accept(']')) {
      do {
        in_.expect('(');
        const auto [pl, pc] = in_.position_after_space();
        ExtendedTime p = in_.time();
        if (p.is_infinite()) in_.domain_fail("a staircase cannot jump at infinity", pl, pc);
        in_.expect(',');
        UnitRational a = in_.unit();
        in_.expect(')');
        steps.push_back(Step{p.finite_value(), a.value()});
      } while (in_.accept(','));
      in_.expect(']');
    }
    try {
      return Staircase::from_steps(std::move(steps));
    } catch (const DomainError& e) {
      in_.domain_fail(e.what(), line, column);
    }
  }

  PiecewiseLinearDistribution linear_body(std::size_t line, std::size_t column) {
    in_.expect('[');
    std::vector<LinearKnot> knots;
    do {
      in_.expect('(');
      const auto [pl, pc] = in_.position_after_space();
      ExtendedTime t = in_.time();
      if (t.is_infinite()) in_.domain_fail("knot times must be finite", pl, pc);
      in_.expect(',');
      UnitRational v = in_.unit();
      in_.expect(')');
      knots.push_back(LinearKnot{t.finite_value(), v.value()});
    } while (in_.accept(','));
    in_.expect(']');
    try {
      return PiecewiseLinearDistribution::from_knots(std::move(knots));
    } catch (const DomainError& e) {
      in_.domain_fail(e.what(), line, column);
    }
  }

  detail::TextReader in_;
};

}  // namespace

Expression parse_expression(std::string_view text) { return ExpressionParser(text).parse(); }

std::string to_string(const Expression& e) {
  auto list = [](const std::string& head, const std::vector<Expression>& xs) {
    std::string out = head + '(';
    for (std::size_t i = 0; i < xs.size(); ++i) {
      if (i) out += ',';
      out += to_string(xs[i]);
    }
    return out + ')';
  };
  switch (e.kind()) {
    case Expression::Kind::Step:
      return "step(" + to_string(e.jump()) + ',' + to_string(e.level()) + ')';
    case Expression::Kind::Steps:
      return to_string(e.staircase());
    case Expression::Kind::Join:
      return list("join", e.operands());
    case Expression::Kind::Meet:
      return list("meet", e.operands());
    case Expression::Kind::Conv:
      return list("conv", e.operands());
    case Expression::Kind::Imp:
      return list("imp", e.operands());
    case Expression::Kind::Linear:
      return to_string(e.distribution());
  }
  return {};
}

Staircase evaluate(const Expression& e, const TNormSpec& t) {
  const auto& xs = e.operands();
  switch (e.kind()) {
    case Expression::Kind::Step:
      return one_step(ExtendedTime(e.jump()), UnitRational(e.level()));
    case Expression::Kind::Steps:
      return e.staircase();
    case Expression::Kind::Join: {
      Staircase acc = evaluate(xs.front(), t);
      for (std::size_t i = 1; i < xs.size(); ++i) acc = join(acc, evaluate(xs[i], t));
      return acc;
    }
    case Expression::Kind::Meet: {
      Staircase acc = evaluate(xs.front(), t);
      for (std::size_t i = 1; i < xs.size(); ++i) acc = meet(acc, evaluate(xs[i], t));
      return acc;
    }
    case Expression::Kind::Conv:
      return convolve(t, evaluate(xs[0], t), evaluate(xs[1], t));
    case Expression::Kind::Imp:
      return implication(t, evaluate(xs[0], t), evaluate(xs[1], t));
    case Expression::Kind::Linear:
      throw DomainError("a linear[...] operand is only accepted where a continuous distribution is expected");
  }
  throw DomainError("unknown expression node");
}

PiecewiseLinearDistribution evaluate_linear(const Expression& e) {
  if (e.kind() != Expression::Kind::Linear) throw DomainError("expected a linear[...] expression");
  return e.distribution();
}

}  // namespace qdist
