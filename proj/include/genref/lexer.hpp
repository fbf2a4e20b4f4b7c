#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "genref/term.hpp"

namespace genref {

class ParseError : public std::runtime_error {
 public:
  ParseError(term::Position at, std::string expected);

  const term::Position& position() const { return at_; }
  const std::string& expected() const { return expected_; }

 private:
  term::Position at_;
  std::string expected_;
};

enum class TokenKind { Identifier, Keyword, Integer, Punct, End };

struct Token {
  TokenKind kind = TokenKind::End;
  std::string text;
  std::int64_t value = 0;
  term::Span span;

  bool is(TokenKind k, std::string_view t) const { return kind == k && text == t; }
};

/// Tokenises `source` into identifiers, keywords (from `keywords`), decimal
/// integers and the longest matching punctuation from `puncts`. Whitespace
/// and `//` line comments are skipped. The result always ends with an End
/// token.
std::vector<Token> tokenize(std::string_view source, const std::vector<std::string_view>& keywords,
                            const std::vector<std::string_view>& puncts);

/// Cursor over a token vector with the usual expect/accept helpers.
class TokenStream {
 public:
  explicit TokenStream(std::vector<Token> tokens) : tokens_(std::move(tokens)) {}

  const Token& peek(std::size_t ahead = 0) const;
  const Token& next();
  bool atEnd() const { return peek().kind == TokenKind::End; }

  bool acceptPunct(std::string_view p);
  bool acceptKeyword(std::string_view k);
  const Token& expectPunct(std::string_view p);
  const Token& expectKeyword(std::string_view k);
  const Token& expectIdentifier();
  const Token& expectInteger();

  [[noreturn]] void fail(const std::string& expected) const;

  /// End of the most recently consumed token.
  term::Position lastEnd() const { return lastEnd_; }
  term::Position here() const { return peek().span.begin; }

 private:
  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
  term::Position lastEnd_{1, 1};
};

}  // namespace genref
