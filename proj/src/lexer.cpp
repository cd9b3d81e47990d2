// SPDX-License-Identifier: Apache-2.0
#include "lexer.hpp"

namespace sysmod::detail {

const std::set<std::string>& reservedWords() {
  static const std::set<std::string> words = {
      // declarations
      "class", "extends", "subclassOf", "static", "assoc", "via",
      // strategies
      "attribute", "mediator", "redundant", "ordered", "qualified", "by",
      // attributes and types
      "loc", "Int", "Bool", "Boolean", "Void", "Ref", "Loc", "Set", "List",
      "Rec", "Prod", "Oid",
      // literals
      "true", "false", "void", "nil", "unknown",
      // script statements
      "new", "set", "link", "assert", "rel", "contains", "check", "dump",
  };
  return words;
}

std::vector<Token> lex(std::string_view text) {
  std::vector<Token> tokens;
  int line = 1;
  int column = 1;
  std::size_t i = 0;

  auto bump = [&](char c) {
    if (c == '\n') {
      ++line;
      column = 1;
    } else {
      ++column;
    }
  };

  while (i < text.size()) {
    char c = text[i];
    if (c == ' ' || c == '\t' || c == '\r' || c == '\n') {
      bump(c);
      ++i;
      continue;
    }
    if (c == '#' || (c == '/' && i + 1 < text.size() && text[i + 1] == '/')) {
      while (i < text.size() && text[i] != '\n') {
        bump(text[i]);
        ++i;
      }
      continue;
    }

    Token token;
    token.line = line;
    token.column = column;

    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::string word;
      while (i < text.size() &&
             (std::isalnum(static_cast<unsigned char>(text[i])) ||
              text[i] == '_')) {
        word += text[i];
        bump(text[i]);
        ++i;
      }
      token.kind = Token::Kind::Ident;
      token.text = std::move(word);
    } else if (std::isdigit(static_cast<unsigned char>(c)) ||
               (c == '-' && i + 1 < text.size() &&
                std::isdigit(static_cast<unsigned char>(text[i + 1])))) {
      std::string digits;
      digits += c;
      bump(c);
      ++i;
      while (i < text.size() &&
             std::isdigit(static_cast<unsigned char>(text[i]))) {
        digits += text[i];
        bump(text[i]);
        ++i;
      }
      token.kind = Token::Kind::Int;
      token.text = std::move(digits);
    } else if (std::string_view("{}()[]:,=.").find(c) != std::string_view::npos) {
      token.kind = Token::Kind::Punct;
      token.text = std::string(1, c);
      bump(c);
      ++i;
    } else {
      throw Error(ErrorKind::SyntaxError, line, column,
                  "unexpected character (byte " +
                      std::to_string(static_cast<unsigned char>(c)) + ")");
    }
    tokens.push_back(std::move(token));
  }

  Token end;
  end.kind = Token::Kind::End;
  end.line = line;
  end.column = column;
  tokens.push_back(std::move(end));
  return tokens;
}

}  // namespace sysmod::detail
