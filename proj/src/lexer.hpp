// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cctype>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "sysmod/error.hpp"

namespace sysmod::detail {

struct Token {
  enum class Kind { Ident, Int, Punct, End };

  Kind kind = Kind::End;
  std::string text;
  int line = 1;
  int column = 1;
};

// Words with fixed meaning somewhere in the model or script grammar;
// none of them can name a class, attribute, association or variable.
const std::set<std::string>& reservedWords();

std::vector<Token> lex(std::string_view text);

// Shared recursive-descent machinery for the two parsers.
class ParserBase {
 public:
  explicit ParserBase(std::string_view text) : tokens_(lex(text)) {}

 protected:
  const Token& peek() const { return tokens_[pos_]; }
  bool atEnd() const { return peek().kind == Token::Kind::End; }

  bool check(std::string_view text) const {
    return peek().kind != Token::Kind::End && peek().text == text;
  }

  bool match(std::string_view text) {
    if (!check(text)) return false;
    ++pos_;
    return true;
  }

  Token advance() { return tokens_[pos_++]; }

  void expect(std::string_view text) {
    if (!match(text)) fail("expected '" + std::string(text) + "'");
  }

  // A NAME: an identifier that is not reserved.
  std::string expectName(const char* what) {
    const Token& t = peek();
    if (t.kind != Token::Kind::Ident) {
      fail(std::string("expected ") + what);
    }
    if (reservedWords().count(t.text)) {
      fail(std::string("expected ") + what + ", got reserved word '" + t.text +
           "'");
    }
    ++pos_;
    return t.text;
  }

  std::int64_t expectInt() {
    const Token& t = peek();
    if (t.kind != Token::Kind::Int) fail("expected an integer");
    ++pos_;
    try {
      return std::stoll(t.text);
    } catch (const std::exception&) {
      fail("integer literal out of range");
    }
  }

  [[noreturn]] void fail(const std::string& message) const {
    const Token& t = peek();
    std::string got = t.kind == Token::Kind::End ? "end of input"
                                                 : "'" + t.text + "'";
    throw Error(ErrorKind::SyntaxError, t.line, t.column,
                message + ", got " + got);
  }

  void enterNested() {
    if (++depth_ > kMaxDepth) fail("nesting too deep");
  }
  void leaveNested() { --depth_; }

 private:
  static constexpr int kMaxDepth = 64;
  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
  int depth_ = 0;
};

}  // namespace sysmod::detail
