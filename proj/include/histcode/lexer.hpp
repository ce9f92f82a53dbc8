#pragma once

#include <array>
#include <cctype>
#include <cstddef>
#include <string>
#include <string_view>
#include <unordered_set>
#include <vector>

namespace histcode {

enum class TokenKind { Identifier, Number, String, Char, Operator };

struct Token {
  TokenKind kind;
  std::string text;
  std::size_t begin = 0;  // char offset into the source
  std::size_t end = 0;    // one past the last char
};

inline bool is_java_keyword(std::string_view s) {
  static const std::unordered_set<std::string_view> kKeywords = {
      "abstract", "assert", "boolean", "break", "byte", "case", "catch", "char",
      "class", "const", "continue", "default", "do", "double", "else", "enum",
      "extends", "final", "finally", "float", "for", "goto", "if", "implements",
      "import", "instanceof", "int", "interface", "long", "native", "new",
      "package", "private", "protected", "public", "return", "short", "static",
      "strictfp", "super", "switch", "synchronized", "this", "throw", "throws",
      "transient", "try", "void", "volatile", "while", "var", "yield",
      "true", "false", "null"};
  return kKeywords.count(s) > 0;
}

namespace detail {

inline bool ident_start(char c) {
  return std::isalpha(static_cast<unsigned char>(c)) || c == '_' || c == '$';
}

inline bool ident_part(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '$';
}

// Multi-char operators, longest first so maximal munch works by scan order.
inline const std::vector<std::string_view>& multi_char_operators() {
  static const std::vector<std::string_view> kOps = {
      ">>>=", ">>>", ">>=", "<<=", "...", "->", "::", "==", "!=", "<=", ">=",
      "&&", "||", "++", "--", "+=", "-=", "*=", "/=", "%=", "&=", "|=", "^=",
      "<<", ">>"};
  return kOps;
}

}  // namespace detail

// Lexes a Java compilation unit (or any fragment) into raw tokens. Comments
// are dropped. The lexer is total: malformed input degrades to operator and
// identifier tokens, it never fails.
inline std::vector<Token> lex_java(std::string_view src) {
  std::vector<Token> out;
  std::size_t i = 0;
  const std::size_t n = src.size();

  auto push = [&](TokenKind kind, std::size_t begin, std::size_t end) {
    out.push_back(Token{kind, std::string(src.substr(begin, end - begin)), begin, end});
  };

  while (i < n) {
    const char c = src[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    // Comments.
    if (c == '/' && i + 1 < n && src[i + 1] == '/') {
      while (i < n && src[i] != '\n') ++i;
      continue;
    }
    if (c == '/' && i + 1 < n && src[i + 1] == '*') {
      i += 2;
      while (i + 1 < n && !(src[i] == '*' && src[i + 1] == '/')) ++i;
      i = i + 1 < n ? i + 2 : n;
      continue;
    }
    // Text blocks and string literals.
    if (c == '"') {
      const std::size_t begin = i;
      if (i + 2 < n && src[i + 1] == '"' && src[i + 2] == '"') {
        i += 3;
        while (i + 2 < n && !(src[i] == '"' && src[i + 1] == '"' && src[i + 2] == '"')) ++i;
        i = i + 2 < n ? i + 3 : n;
      } else {
        ++i;
        while (i < n && src[i] != '"' && src[i] != '\n') {
          i += src[i] == '\\' ? 2 : 1;
        }
        if (i < n && src[i] == '"') ++i;
      }
      push(TokenKind::String, begin, std::min(i, n));
      continue;
    }
    if (c == '\'') {
      const std::size_t begin = i;
      ++i;
      while (i < n && src[i] != '\'' && src[i] != '\n') {
        i += src[i] == '\\' ? 2 : 1;
      }
      if (i < n && src[i] == '\'') ++i;
      push(TokenKind::Char, begin, std::min(i, n));
      continue;
    }
    // Numbers (also covers a leading '.', as in .5f).
    if (std::isdigit(static_cast<unsigned char>(c)) ||
        (c == '.' && i + 1 < n && std::isdigit(static_cast<unsigned char>(src[i + 1])))) {
      const std::size_t begin = i;
      ++i;
      while (i < n) {
        const char d = src[i];
        if (std::isalnum(static_cast<unsigned char>(d)) || d == '_' || d == '.') {
          ++i;
        } else if ((d == '+' || d == '-') && (src[i - 1] == 'e' || src[i - 1] == 'E' ||
                                              src[i - 1] == 'p' || src[i - 1] == 'P')) {
          ++i;
        } else {
          break;
        }
      }
      push(TokenKind::Number, begin, i);
      continue;
    }
    if (detail::ident_start(c)) {
      const std::size_t begin = i;
      while (i < n && detail::ident_part(src[i])) ++i;
      push(TokenKind::Identifier, begin, i);
      continue;
    }
    // Operators and punctuation, maximal munch.
    bool matched = false;
    for (std::string_view op : detail::multi_char_operators()) {
      if (src.substr(i, op.size()) == op) {
        push(TokenKind::Operator, i, i + op.size());
        i += op.size();
        matched = true;
        break;
      }
    }
    if (!matched) {
      push(TokenKind::Operator, i, i + 1);
      ++i;
    }
  }
  return out;
}

// Splits an identifier into lowercase subtokens at underscores, '$', camel
// humps, and acronym boundaries: "sumThenReset" -> {sum, then, reset},
// "XMLParser" -> {xml, parser}, "sha256Sum" -> {sha256, sum}.
inline std::vector<std::string> split_subtokens(std::string_view ident) {
  std::vector<std::string> out;
  std::string cur;
  auto flush = [&] {
    if (!cur.empty()) {
      out.push_back(cur);
      cur.clear();
    }
  };
  const std::size_t n = ident.size();
  for (std::size_t i = 0; i < n; ++i) {
    const char c = ident[i];
    if (c == '_' || c == '$') {
      flush();
      continue;
    }
    if (i > 0) {
      const char p = ident[i - 1];
      const bool lower_to_upper =
          (std::islower(static_cast<unsigned char>(p)) || std::isdigit(static_cast<unsigned char>(p))) &&
          std::isupper(static_cast<unsigned char>(c));
      const bool acronym_end = std::isupper(static_cast<unsigned char>(p)) &&
                               std::isupper(static_cast<unsigned char>(c)) && i + 1 < n &&
                               std::islower(static_cast<unsigned char>(ident[i + 1]));
      if (lower_to_upper || acronym_end) flush();
    }
    cur.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
  }
  flush();
  return out;
}

// The encoder's token stream: lexical tokens with identifiers split into
// lowercase subtokens, literals and operators kept verbatim, comments gone.
inline std::vector<std::string> tokenize(std::string_view source) {
  std::vector<std::string> out;
  for (const Token& t : lex_java(source)) {
    if (t.kind == TokenKind::Identifier) {
      for (auto& s : split_subtokens(t.text)) out.push_back(std::move(s));
    } else {
      out.push_back(t.text);
    }
  }
  return out;
}

}  // namespace histcode
