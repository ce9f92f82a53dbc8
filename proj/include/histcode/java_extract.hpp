#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "histcode/lexer.hpp"

namespace histcode {

// One method declaration found in a compilation unit. The span covers the
// whole declaration: leading annotations and modifiers through the closing
// brace of the body. Bodyless declarations (abstract/interface signatures)
// are not reported.
struct ExtractedMethod {
  std::string qualified_name;  // enclosing class chain + name, '.'-joined
  std::string signature;       // comma-joined parameter types, no spaces
  std::size_t begin = 0;
  std::size_t end = 0;

  std::string_view span(std::string_view source) const {
    return source.substr(begin, end - begin);
  }
};

struct ExtractResult {
  std::vector<ExtractedMethod> methods;
  std::vector<std::string> diagnostics;

  bool ok() const { return diagnostics.empty(); }
};

namespace detail {

// Canonical textual form of a parameter type list: token texts concatenated
// with no spaces, parameters joined by commas. "final", annotations and the
// parameter names are dropped; "Map<String, List<Integer>> m" becomes
// "Map<String,List<Integer>>", "int... xs" becomes "int...".
inline std::string canonical_param_types(const std::vector<Token>& tokens,
                                         std::size_t first, std::size_t last) {
  std::vector<std::vector<const Token*>> groups(1);
  int depth = 0;  // (), [] and <> nesting combined, counted per character
  for (std::size_t i = first; i < last; ++i) {
    const Token& t = tokens[i];
    if (t.kind == TokenKind::Operator && t.text == "," && depth == 0) {
      groups.emplace_back();
      continue;
    }
    for (char c : t.text) {
      if (c == '(' || c == '[' || c == '<') ++depth;
      if (c == ')' || c == ']' || c == '>') --depth;
    }
    groups.back().push_back(&t);
  }

  std::string out;
  bool first_param = true;
  for (auto& g : groups) {
    std::vector<const Token*> kept;
    for (const Token* t : g) {
      if (t->kind == TokenKind::Identifier && t->text == "final") continue;
      kept.push_back(t);
    }
    if (kept.empty()) continue;
    // Receiver parameters ("Foo this") declare no argument.
    if (kept.back()->text == "this") continue;
    // The parameter name is the last identifier; everything else is type.
    std::size_t name_idx = kept.size();
    for (std::size_t i = kept.size(); i-- > 0;) {
      if (kept[i]->kind == TokenKind::Identifier) {
        name_idx = i;
        break;
      }
    }
    std::string type;
    for (std::size_t i = 0; i < kept.size(); ++i) {
      if (i == name_idx) continue;
      type += kept[i]->text;
    }
    if (type.empty()) continue;
    if (!first_param) out += ",";
    out += type;
    first_param = false;
  }
  return out;
}

}  // namespace detail

// Extracts every method declaration (with a body) from Java source, tracking
// nested and anonymous classes so that qualified names reflect the enclosing
// chain of named classes. Tolerant: malformed input yields partial results
// plus diagnostics, never an exception.
inline ExtractResult extract_methods(std::string_view java_source) {
  ExtractResult result;
  const std::vector<Token> toks = lex_java(java_source);

  struct Scope {
    enum Kind { ClassLike, Method, Block } kind = Block;
    std::string class_name;          // empty for anonymous classes and blocks
    bool enum_constant_phase = false;
    std::vector<Token> pending;      // member tokens since the last boundary
    std::size_t member_begin = std::string::npos;
    // Valid when kind == Method.
    std::string method_name;
    std::string method_signature;
    std::size_t method_begin = 0;
  };

  std::vector<Scope> scopes;
  scopes.push_back(Scope{Scope::ClassLike, "", false, {}, std::string::npos, "", "", 0});

  auto chain_name = [&](const std::string& leaf) {
    std::string q;
    for (const Scope& s : scopes) {
      if (s.kind == Scope::ClassLike && !s.class_name.empty()) {
        q += s.class_name;
        q += ".";
      }
    }
    return q + leaf;
  };

  auto note_begin = [&](std::size_t pos) {
    Scope& s = scopes.back();
    if (s.member_begin == std::string::npos) s.member_begin = pos;
  };

  std::size_t i = 0;
  while (i < toks.size()) {
    const Token& t = toks[i];

    // Consume annotation uses so their parentheses cannot be mistaken for a
    // parameter list. "@interface" is a declaration and falls through.
    if (t.kind == TokenKind::Operator && t.text == "@") {
      note_begin(t.begin);
      if (i + 1 < toks.size() && toks[i + 1].text == "interface") {
        ++i;  // keep "interface" for the class-declaration rule below
        continue;
      }
      ++i;
      while (i + 1 < toks.size() && toks[i].kind == TokenKind::Identifier &&
             toks[i + 1].text == ".") {
        i += 2;
      }
      if (i < toks.size() && toks[i].kind == TokenKind::Identifier) ++i;
      if (i < toks.size() && toks[i].text == "(") {
        int depth = 0;
        do {
          if (toks[i].text == "(") ++depth;
          if (toks[i].text == ")") --depth;
          ++i;
        } while (i < toks.size() && depth > 0);
      }
      continue;
    }

    if (t.kind == TokenKind::Operator && (t.text == ";" || (t.text == "," && scopes.back().enum_constant_phase))) {
      if (t.text == ";" && scopes.back().enum_constant_phase) {
        scopes.back().enum_constant_phase = false;
      }
      scopes.back().pending.clear();
      scopes.back().member_begin = std::string::npos;
      ++i;
      continue;
    }

    if (t.kind == TokenKind::Operator && t.text == "}") {
      if (scopes.size() == 1) {
        result.diagnostics.push_back("stray '}' at offset " + std::to_string(t.begin));
        ++i;
        continue;
      }
      Scope done = std::move(scopes.back());
      scopes.pop_back();
      if (done.kind == Scope::Method) {
        result.methods.push_back(ExtractedMethod{chain_name(done.method_name),
                                                 done.method_signature,
                                                 done.method_begin, t.end});
      }
      scopes.back().pending.clear();
      scopes.back().member_begin = std::string::npos;
      ++i;
      continue;
    }

    if (!(t.kind == TokenKind::Operator && t.text == "{")) {
      note_begin(t.begin);
      scopes.back().pending.push_back(t);
      ++i;
      continue;
    }

    // Classify this '{'.
    Scope& cur = scopes.back();
    const std::vector<Token>& p = cur.pending;
    Scope next;

    auto is_op = [&](std::size_t k, std::string_view s) {
      return p[k].kind == TokenKind::Operator && p[k].text == s;
    };

    if (cur.enum_constant_phase) {
      next.kind = Scope::ClassLike;  // enum constant body, anonymous
    } else {
      // Named type declaration?
      std::size_t kw = p.size();
      bool is_enum = false;
      for (std::size_t k = 0; k < p.size(); ++k) {
        if (p[k].kind != TokenKind::Identifier) continue;
        if (p[k].text == "class" || p[k].text == "interface" || p[k].text == "enum") {
          kw = k;
          is_enum = p[k].text == "enum";
          break;
        }
        // "record" is contextual: require "record Name (".
        if (p[k].text == "record" && k + 2 < p.size() &&
            p[k + 1].kind == TokenKind::Identifier && is_op(k + 2, "(")) {
          kw = k;
          break;
        }
      }
      if (kw != p.size() && kw + 1 < p.size() && p[kw + 1].kind == TokenKind::Identifier) {
        next.kind = Scope::ClassLike;
        next.class_name = p[kw + 1].text;
        next.enum_constant_phase = is_enum;
      } else {
        // Method body or anonymous class? Skip a throws-tail backwards, then
        // expect ')' closing the parameter list.
        std::size_t k = p.size();
        while (k > 0 && (p[k - 1].kind == TokenKind::Identifier ||
                         (p[k - 1].kind == TokenKind::Operator &&
                          (p[k - 1].text == "." || p[k - 1].text == ",")))) {
          --k;
        }
        bool classified = false;
        if (k > 0 && is_op(k - 1, ")")) {
          const std::size_t close = k - 1;
          int depth = 0;
          std::size_t open = close;
          for (std::size_t j = close + 1; j-- > 0;) {
            if (is_op(j, ")")) ++depth;
            if (is_op(j, "(")) {
              --depth;
              if (depth == 0) {
                open = j;
                break;
              }
            }
            if (j == 0) break;
          }
          if (open != close && open > 0) {
            // Skip explicit type arguments between the name and '('.
            std::size_t j = open - 1;
            if (p[j].kind == TokenKind::Operator && !p[j].text.empty() && p[j].text.back() == '>') {
              int adepth = 0;
              while (true) {
                for (std::size_t c = p[j].text.size(); c-- > 0;) {
                  if (p[j].text[c] == '>') ++adepth;
                  if (p[j].text[c] == '<') --adepth;
                }
                if (adepth <= 0 || j == 0) break;
                --j;
              }
              j = j > 0 ? j - 1 : 0;
            }
            if (p[j].kind == TokenKind::Identifier && !is_java_keyword(p[j].text)) {
              // "new Name(...)" (possibly dot-qualified) opens an anonymous class.
              std::size_t q = j;
              while (q >= 2 && is_op(q - 1, ".") && p[q - 2].kind == TokenKind::Identifier) {
                q -= 2;
              }
              if (q > 0 && p[q - 1].kind == TokenKind::Identifier && p[q - 1].text == "new") {
                next.kind = Scope::ClassLike;  // anonymous
                classified = true;
              } else if (cur.kind == Scope::ClassLike) {
                next.kind = Scope::Method;
                next.method_name = p[j].text;
                next.method_signature = detail::canonical_param_types(p, open + 1, close);
                next.method_begin = cur.member_begin;
                classified = true;
              }
            }
          }
        }
        if (!classified) next.kind = Scope::Block;
      }
    }

    cur.pending.clear();
    cur.member_begin = std::string::npos;
    scopes.push_back(std::move(next));
    ++i;
  }

  if (scopes.size() > 1) {
    result.diagnostics.push_back("unexpected end of input with " +
                                 std::to_string(scopes.size() - 1) + " unclosed scope(s)");
  }
  return result;
}

}  // namespace histcode
