#include "wittcenter/text.hpp"

#include <algorithm>
#include <cctype>

namespace wittcenter {

std::vector<Token> tokenize(std::string_view input) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < input.size()) {
    const char c = input[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t j = i;
      while (j < input.size() && std::isdigit(static_cast<unsigned char>(input[j]))) ++j;
      out.push_back({TokenKind::kNumber, std::string(input.substr(i, j - i)), i});
      i = j;
      continue;
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t j = i;
      while (j < input.size() &&
             (std::isalnum(static_cast<unsigned char>(input[j])) || input[j] == '_')) {
        ++j;
      }
      out.push_back({TokenKind::kIdent, std::string(input.substr(i, j - i)), i});
      i = j;
      continue;
    }
    TokenKind kind;
    switch (c) {
      case '*': kind = TokenKind::kStar; break;
      case '^': kind = TokenKind::kCaret; break;
      case '+': kind = TokenKind::kPlus; break;
      case '-': kind = TokenKind::kMinus; break;
      case '[': kind = TokenKind::kLBracket; break;
      case ']': kind = TokenKind::kRBracket; break;
      case ';': kind = TokenKind::kSemicolon; break;
      case '(': kind = TokenKind::kLParen; break;
      case ')': kind = TokenKind::kRParen; break;
      case ',': kind = TokenKind::kComma; break;
      default:
        throw ParseError(std::string("unexpected character '") + c + "'", i);
    }
    out.push_back({kind, std::string(1, c), i});
    ++i;
  }
  out.push_back({TokenKind::kEnd, "", input.size()});
  return out;
}

std::vector<std::string> collect_identifiers(const std::vector<std::string>& inputs) {
  std::vector<std::string> out;
  for (const auto& in : inputs) {
    for (const auto& t : tokenize(in)) {
      if (t.kind == TokenKind::kIdent &&
          std::find(out.begin(), out.end(), t.text) == out.end()) {
        out.push_back(t.text);
      }
    }
  }
  return out;
}

unsigned long parse_exponent(TokenStream& ts) {
  const Token& t = ts.expect(TokenKind::kNumber, "an exponent");
  if (t.text.size() > 9) throw ParseError("exponent too large", t.position);
  return std::stoul(t.text);
}

}  // namespace wittcenter
