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

#include "skewlab/parser.hpp"

#include <cctype>
#include <sstream>
#include <utility>
#include <vector>

namespace skewlab {

ParseError::ParseError(std::size_t offset, std::string expected, const std::string& found)
    : std::runtime_error("syntax error at byte " + std::to_string(offset) + ": expected " +
                         expected + ", found " + found),
      offset_(offset),
      expected_(std::move(expected)) {}

namespace {

enum class TokKind { Int, Ident, Plus, Minus, Star, Slash, Caret, LParen, RParen, Comma, End };

struct Token {
  TokKind kind;
  std::string text;
  std::size_t offset;
};

std::vector<Token> lex(const std::string& text) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < text.size()) {
    const char c = text[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    const std::size_t start = i;
    if (std::isdigit(static_cast<unsigned char>(c))) {
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
      out.push_back({TokKind::Int, text.substr(start, i - start), start});
      continue;
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      while (i < text.size() &&
             (std::isalnum(static_cast<unsigned char>(text[i])) || text[i] == '_')) {
        ++i;
      }
      out.push_back({TokKind::Ident, text.substr(start, i - start), start});
      continue;
    }
    TokKind kind;
    switch (c) {
      case '+': kind = TokKind::Plus; break;
      case '-': kind = TokKind::Minus; break;
      case '*': kind = TokKind::Star; break;
      case '/': kind = TokKind::Slash; break;
      case '^': kind = TokKind::Caret; break;
      case '(': kind = TokKind::LParen; break;
      case ')': kind = TokKind::RParen; break;
      case ',': kind = TokKind::Comma; break;
      default:
        throw ParseError(start, "a number, symbol, operator, or parenthesis",
                         std::string("'") + c + "'");
    }
    out.push_back({kind, text.substr(start, 1), start});
    ++i;
  }
  out.push_back({TokKind::End, "", text.size()});
  return out;
}

std::string describe(const Token& t) {
  if (t.kind == TokKind::End) return "end of input";
  return "'" + t.text + "'";
}

ExprPtr make_node(Expr::Kind kind, ExprPtr lhs = nullptr, ExprPtr rhs = nullptr) {
  auto e = std::make_unique<Expr>();
  e->kind = kind;
  e->lhs = std::move(lhs);
  e->rhs = std::move(rhs);
  return e;
}

class Parser {
 public:
  explicit Parser(std::vector<Token> tokens) : tokens_(std::move(tokens)) {}

  ExprPtr run() {
    ExprPtr e = parse_sum();
    if (peek().kind != TokKind::End) {
      throw ParseError(peek().offset, "an operator or end of input", describe(peek()));
    }
    return e;
  }

 private:
  const Token& peek() const { return tokens_[pos_]; }
  Token next() { return tokens_[pos_++]; }

  Token expect(TokKind kind, const std::string& what) {
    if (peek().kind != kind) throw ParseError(peek().offset, what, describe(peek()));
    return next();
  }

  // sum := term (('+' | '-') term)*
  ExprPtr parse_sum() {
    ExprPtr e = parse_term();
    while (peek().kind == TokKind::Plus || peek().kind == TokKind::Minus) {
      const bool add = next().kind == TokKind::Plus;
      e = make_node(add ? Expr::Kind::Add : Expr::Kind::Sub, std::move(e), parse_term());
    }
    return e;
  }

  // term := unary (('*' | '/') unary)*
  ExprPtr parse_term() {
    ExprPtr e = parse_unary();
    while (peek().kind == TokKind::Star || peek().kind == TokKind::Slash) {
      const bool mul = next().kind == TokKind::Star;
      e = make_node(mul ? Expr::Kind::Mul : Expr::Kind::Div, std::move(e), parse_unary());
    }
    return e;
  }

  // unary := '-' unary | power   (so '^' binds tighter than unary '-')
  ExprPtr parse_unary() {
    if (peek().kind == TokKind::Minus) {
      next();
      return make_node(Expr::Kind::Neg, parse_unary());
    }
    return parse_power();
  }

  // power := primary ('^' signed_int)*
  ExprPtr parse_power() {
    ExprPtr e = parse_primary();
    while (peek().kind == TokKind::Caret) {
      next();
      ExprPtr p = make_node(Expr::Kind::Pow, std::move(e));
      p->exponent = parse_exponent();
      e = std::move(p);
    }
    return e;
  }

  long parse_exponent() {
    bool negative = false;
    if (peek().kind == TokKind::Minus) {
      next();
      negative = true;
    }
    const Token tok = expect(TokKind::Int, "an integer exponent");
    try {
      const long value = std::stol(tok.text);
      return negative ? -value : value;
    } catch (const std::out_of_range&) {
      throw ParseError(tok.offset, "a machine-representable integer exponent",
                       describe(tok));
    }
  }

  ExprPtr parse_primary() {
    const Token tok = peek();
    switch (tok.kind) {
      case TokKind::Int: {
        next();
        ExprPtr e = make_node(Expr::Kind::Literal);
        e->literal = BigInt(tok.text);
        return e;
      }
      case TokKind::LParen: {
        next();
        ExprPtr e = parse_sum();
        expect(TokKind::RParen, "')'");
        return e;
      }
      case TokKind::Ident:
        next();
        if (tok.text == "u") return make_node(Expr::Kind::SymbolU);
        if (tok.text == "w") return make_node(Expr::Kind::SymbolW);
        if (tok.text == "t") return make_node(Expr::Kind::SymbolT);
        if (tok.text == "comm") {
          expect(TokKind::LParen, "'('");
          ExprPtr x = parse_sum();
          expect(TokKind::Comma, "','");
          ExprPtr y = parse_sum();
          expect(TokKind::RParen, "')'");
          return make_node(Expr::Kind::Comm, std::move(x), std::move(y));
        }
        if (tok.text == "inv") {
          expect(TokKind::LParen, "'('");
          ExprPtr x = parse_sum();
          expect(TokKind::RParen, "')'");
          return make_node(Expr::Kind::Inv, std::move(x));
        }
        if (tok.text == "O") {
          expect(TokKind::LParen, "'('");
          const Token sym = expect(TokKind::Ident, "'t'");
          if (sym.text != "t") throw ParseError(sym.offset, "'t'", describe(sym));
          expect(TokKind::Caret, "'^'");
          ExprPtr e = make_node(Expr::Kind::PrecisionMark);
          e->exponent = parse_exponent();
          expect(TokKind::RParen, "')'");
          return e;
        }
        throw ParseError(tok.offset, "u, w, t, comm, inv, or O", describe(tok));
      default:
        throw ParseError(tok.offset, "a number, u, w, t, comm, inv, O, or '('",
                         describe(tok));
    }
  }

  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
};

// Printing precedence levels; children below the required level get
// parenthesized so the printed form re-parses to the same tree.
int precedence(Expr::Kind kind) {
  switch (kind) {
    case Expr::Kind::Add:
    case Expr::Kind::Sub:
      return 1;
    case Expr::Kind::Mul:
    case Expr::Kind::Div:
      return 2;
    case Expr::Kind::Neg:
      return 3;
    case Expr::Kind::Pow:
      return 4;
    default:
      return 5;
  }
}

void print_expr(const Expr& e, int min_prec, std::ostringstream& out) {
  const int prec = precedence(e.kind);
  const bool parens = prec < min_prec;
  if (parens) out << "(";
  switch (e.kind) {
    case Expr::Kind::Literal:
      out << e.literal.get_str();
      break;
    case Expr::Kind::SymbolU:
      out << "u";
      break;
    case Expr::Kind::SymbolW:
      out << "w";
      break;
    case Expr::Kind::SymbolT:
      out << "t";
      break;
    case Expr::Kind::Add:
    case Expr::Kind::Sub:
      print_expr(*e.lhs, 1, out);
      out << (e.kind == Expr::Kind::Add ? " + " : " - ");
      print_expr(*e.rhs, 2, out);  // wrap right sums: a - (b + c)
      break;
    case Expr::Kind::Mul:
    case Expr::Kind::Div:
      print_expr(*e.lhs, 2, out);
      out << (e.kind == Expr::Kind::Mul ? "*" : "/");
      print_expr(*e.rhs, 3, out);  // wrap right products: a/(b*c)
      break;
    case Expr::Kind::Neg:
      out << "-";
      print_expr(*e.lhs, 3, out);
      break;
    case Expr::Kind::Pow:
      print_expr(*e.lhs, 5, out);  // base must be a primary
      out << "^" << e.exponent;
      break;
    case Expr::Kind::Comm:
      out << "comm(";
      print_expr(*e.lhs, 1, out);
      out << ", ";
      print_expr(*e.rhs, 1, out);
      out << ")";
      break;
    case Expr::Kind::Inv:
      out << "inv(";
      print_expr(*e.lhs, 1, out);
      out << ")";
      break;
    case Expr::Kind::PrecisionMark:
      out << "O(t^" << e.exponent << ")";
      break;
  }
  if (parens) out << ")";
}

}  // namespace

ExprPtr parse_expr(const std::string& text) { return Parser(lex(text)).run(); }

std::string expr_to_string(const Expr& e) {
  std::ostringstream out;
  print_expr(e, 0, out);
  return out.str();
}

bool expr_equal(const Expr& a, const Expr& b) {
  if (a.kind != b.kind) return false;
  if (a.kind == Expr::Kind::Literal && a.literal != b.literal) return false;
  if ((a.kind == Expr::Kind::Pow || a.kind == Expr::Kind::PrecisionMark) &&
      a.exponent != b.exponent) {
    return false;
  }
  if ((a.lhs == nullptr) != (b.lhs == nullptr)) return false;
  if ((a.rhs == nullptr) != (b.rhs == nullptr)) return false;
  if (a.lhs && !expr_equal(*a.lhs, *b.lhs)) return false;
  if (a.rhs && !expr_equal(*a.rhs, *b.rhs)) return false;
  return true;
}

}  // namespace skewlab
