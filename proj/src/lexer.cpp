#include "genref/lexer.hpp"

#include <algorithm>
#include <cctype>
#include <limits>

namespace genref {

ParseError::ParseError(term::Position at, std::string expected)
    : std::runtime_error(term::to_string(at) + ": expected " + expected),
      at_(at),
      expected_(std::move(expected)) {}

namespace {

bool identStart(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool identPart(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

}  // namespace

std::vector<Token> tokenize(std::string_view src, const std::vector<std::string_view>& keywords,
                            const std::vector<std::string_view>& puncts) {
  std::vector<Token> out;
  term::Position at{1, 1};
  std::size_t i = 0;

  auto advance = [&](std::size_t n) {
    for (std::size_t k = 0; k < n; ++k, ++i) {
      if (src[i] == '\n') {
        ++at.line;
        at.column = 1;
      } else {
        ++at.column;
      }
    }
  };

  while (i < src.size()) {
    const char c = src[i];
    if (c == ' ' || c == '\t' || c == '\r' || c == '\n') {
      advance(1);
      continue;
    }
    if (c == '/' && i + 1 < src.size() && src[i + 1] == '/') {
      while (i < src.size() && src[i] != '\n') advance(1);
      continue;
    }

    Token tok;
    tok.span.begin = at;
    if (identStart(c)) {
      std::size_t j = i;
      while (j < src.size() && identPart(src[j])) ++j;
      tok.text = std::string(src.substr(i, j - i));
      tok.kind = std::find(keywords.begin(), keywords.end(), tok.text) != keywords.end()
                     ? TokenKind::Keyword
                     : TokenKind::Identifier;
      advance(j - i);
    } else if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t j = i;
      std::int64_t value = 0;
      while (j < src.size() && std::isdigit(static_cast<unsigned char>(src[j]))) {
        const int d = src[j] - '0';
        if (value > (std::numeric_limits<std::int64_t>::max() - d) / 10) {
          throw ParseError(at, "integer literal within range");
        }
        value = value * 10 + d;
        ++j;
      }
      tok.kind = TokenKind::Integer;
      tok.text = std::string(src.substr(i, j - i));
      tok.value = value;
      advance(j - i);
    } else {
      std::string_view best;
      for (auto p : puncts) {
        if (p.size() > best.size() && src.substr(i, p.size()) == p) best = p;
      }
      if (best.empty()) throw ParseError(at, "a token");
      tok.kind = TokenKind::Punct;
      tok.text = std::string(best);
      advance(best.size());
    }
    tok.span.end = at;
    out.push_back(std::move(tok));
  }

  Token end;
  end.kind = TokenKind::End;
  end.span = {at, at};
  out.push_back(end);
  return out;
}

const Token& TokenStream::peek(std::size_t ahead) const {
  return tokens_[std::min(pos_ + ahead, tokens_.size() - 1)];
}

const Token& TokenStream::next() {
  const Token& t = tokens_[pos_];
  if (t.kind != TokenKind::End) {
    ++pos_;
    lastEnd_ = t.span.end;
  }
  return t;
}

bool TokenStream::acceptPunct(std::string_view p) {
  if (!peek().is(TokenKind::Punct, p)) return false;
  next();
  return true;
}

bool TokenStream::acceptKeyword(std::string_view k) {
  if (!peek().is(TokenKind::Keyword, k)) return false;
  next();
  return true;
}

const Token& TokenStream::expectPunct(std::string_view p) {
  if (!peek().is(TokenKind::Punct, p)) fail("'" + std::string(p) + "'");
  return next();
}

const Token& TokenStream::expectKeyword(std::string_view k) {
  if (!peek().is(TokenKind::Keyword, k)) fail("'" + std::string(k) + "'");
  return next();
}

const Token& TokenStream::expectIdentifier() {
  if (peek().kind != TokenKind::Identifier) fail("identifier");
  return next();
}

const Token& TokenStream::expectInteger() {
  if (peek().kind != TokenKind::Integer) fail("integer literal");
  return next();
}

void TokenStream::fail(const std::string& expected) const {
  const Token& t = peek();
  std::string found = t.kind == TokenKind::End ? "end of input" : "'" + t.text + "'";
  throw ParseError(t.span.begin, expected + ", found " + found);
}

}  // namespace genref
