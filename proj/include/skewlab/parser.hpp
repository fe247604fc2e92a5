// Copyright 2026 The skewlab authors
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

#include <cstddef>
#include <memory>
#include <stdexcept>
#include <string>

#include "skewlab/rational.hpp"

namespace skewlab {

/// Syntax error with the byte offset of the offending position and a hint
/// naming what the parser would have accepted there.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t offset, std::string expected, const std::string& found);

  std::size_t offset() const { return offset_; }
  const std::string& expected() const { return expected_; }

 private:
  std::size_t offset_;
  std::string expected_;
};

/// Abstract syntax for CLI expressions: integer literals; the symbols u, w,
/// t; binary + - * /; unary -; integer exponents ^; parentheses;
/// comm(x, y); inv(x); and the additive precision marker O(t^P).
struct Expr {
  enum class Kind {
    Literal,        // integer literal in `literal`
    SymbolU,
    SymbolW,
    SymbolT,
    Add,            // lhs + rhs
    Sub,            // lhs - rhs
    Mul,            // lhs * rhs
    Div,            // lhs / rhs
    Neg,            // - lhs
    Pow,            // lhs ^ exponent (integer literal exponent)
    Comm,           // comm(lhs, rhs)
    Inv,            // inv(lhs)
    PrecisionMark,  // O(t^exponent)
  };

  Kind kind;
  BigInt literal;              // Literal only
  long exponent = 0;           // Pow and PrecisionMark only
  std::unique_ptr<Expr> lhs;   // unary and binary nodes
  std::unique_ptr<Expr> rhs;   // binary nodes
};

using ExprPtr = std::unique_ptr<Expr>;

/// Parses `text` with precedence ^ > unary - > * / > + - (left-associative
/// within a level). Throws ParseError on malformed input.
ExprPtr parse_expr(const std::string& text);

/// Renders a tree back to text; parse_expr(expr_to_string(e)) rebuilds an
/// equal tree.
std::string expr_to_string(const Expr& e);

/// Structural equality of trees.
bool expr_equal(const Expr& a, const Expr& b);

}  // namespace skewlab
