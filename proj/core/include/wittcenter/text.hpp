#pragma once

// Tokenizer and parsers for the element grammars:
//   polynomial   c*V1^e1*V2^e2 + ...
//   Witt vector  [f1; f2; ...; fm]

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "wittcenter/error.hpp"
#include "wittcenter/poly.hpp"

namespace wittcenter {

enum class TokenKind {
  kNumber,
  kIdent,
  kStar,
  kCaret,
  kPlus,
  kMinus,
  kLBracket,
  kRBracket,
  kSemicolon,
  kLParen,
  kRParen,
  kComma,
  kEnd,
};

struct Token {
  TokenKind kind;
  std::string text;
  std::size_t position;
};

std::vector<Token> tokenize(std::string_view input);

class TokenStream {
 public:
  explicit TokenStream(std::string_view input) : tokens_(tokenize(input)) {}

  const Token& peek() const { return tokens_[pos_]; }
  const Token& next() { return tokens_[pos_ < tokens_.size() - 1 ? pos_++ : pos_]; }
  bool accept(TokenKind kind) {
    if (peek().kind != kind) return false;
    next();
    return true;
  }
  const Token& expect(TokenKind kind, const char* what) {
    if (peek().kind != kind) {
      throw ParseError(std::string("expected ") + what, peek().position);
    }
    return next();
  }
  bool at_end() const { return peek().kind == TokenKind::kEnd; }

 private:
  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
};

// Identifiers that appear in the input, in order of first appearance.
std::vector<std::string> collect_identifiers(const std::vector<std::string>& inputs);

unsigned long parse_exponent(TokenStream& ts);

// Parses a polynomial expression up to (not including) a terminator token.
template <CoefficientRing R>
MultiPoly<R> parse_poly(TokenStream& ts, const PolySpacePtr<R>& space) {
  MultiPoly<R> out(space);
  const auto& ring = space->ring();
  bool negate = false;
  if (ts.accept(TokenKind::kMinus)) negate = true;
  else ts.accept(TokenKind::kPlus);
  while (true) {
    BigInt coeff = 1;
    Monomial m(space->nvars());
    do {
      const Token& t = ts.peek();
      if (t.kind == TokenKind::kNumber) {
        ts.next();
        coeff *= BigInt(t.text);
      } else if (t.kind == TokenKind::kIdent) {
        ts.next();
        std::size_t idx = space->index_of(t.text);
        if (idx == space->nvars()) {
          throw ParseError("unknown variable '" + t.text + "'", t.position);
        }
        unsigned long e = 1;
        if (ts.accept(TokenKind::kCaret)) e = parse_exponent(ts);
        m.set(idx, m[idx] + e);
      } else {
        throw ParseError("expected a coefficient or variable", t.position);
      }
    } while (ts.accept(TokenKind::kStar));
    if (negate) coeff = -coeff;
    out.add_term(m, ring.from_int(coeff));
    if (ts.accept(TokenKind::kPlus)) {
      negate = false;
    } else if (ts.accept(TokenKind::kMinus)) {
      negate = true;
    } else {
      break;
    }
  }
  return out;
}

template <CoefficientRing R>
MultiPoly<R> parse_poly(std::string_view text, const PolySpacePtr<R>& space) {
  TokenStream ts(text);
  MultiPoly<R> out = parse_poly(ts, space);
  if (!ts.at_end()) throw ParseError("unexpected trailing input", ts.peek().position);
  return out;
}

}  // namespace wittcenter
