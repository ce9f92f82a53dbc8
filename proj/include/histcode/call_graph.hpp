#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "histcode/java_extract.hpp"
#include "histcode/lexer.hpp"
#include "histcode/types.hpp"

namespace histcode {

// A syntactic invocation site: simple name plus argument count.
struct Invocation {
  std::string simple_name;
  int arity = 0;
};

// One method definition inside a project snapshot.
struct MethodRecord {
  MethodIdentity id;
  std::string source_text;
};

namespace detail {

inline std::string simple_name_of(const std::string& qualified_name) {
  const auto dot = qualified_name.rfind('.');
  return dot == std::string::npos ? qualified_name : qualified_name.substr(dot + 1);
}

inline int param_count_of(const std::string& signature) {
  if (signature.empty()) return 0;
  int depth = 0, count = 1;
  for (char c : signature) {
    if (c == '<' || c == '(' || c == '[') ++depth;
    if (c == '>' || c == ')' || c == ']') --depth;
    if (c == ',' && depth == 0) ++count;
  }
  return count;
}

// Name+arity match; a varargs definition accepts any call with at least
// param_count-1 arguments.
inline bool invocation_matches(const Invocation& inv, const std::string& simple_name,
                               int param_count, bool varargs) {
  if (inv.simple_name != simple_name) return false;
  return varargs ? inv.arity >= param_count - 1 : inv.arity == param_count;
}

}  // namespace detail

// Scans a method's body for call sites: any non-keyword identifier directly
// followed by '(' (constructor calls via `new Foo(...)` included, annotation
// arguments excluded). Best-effort; unresolved or exotic call forms are
// simply not reported.
inline std::vector<Invocation> extract_invocations(std::string_view method_source) {
  // Skip the declaration header so the method's own signature does not count
  // as a call site.
  const auto body_at = method_source.find('{');
  const std::vector<Token> toks =
      lex_java(body_at == std::string_view::npos ? method_source
                                                 : method_source.substr(body_at));
  std::vector<Invocation> out;
  for (std::size_t i = 0; i + 1 < toks.size(); ++i) {
    if (toks[i].kind != TokenKind::Identifier || is_java_keyword(toks[i].text)) continue;
    if (!(toks[i + 1].kind == TokenKind::Operator && toks[i + 1].text == "(")) continue;
    if (i > 0 && toks[i - 1].kind == TokenKind::Operator && toks[i - 1].text == "@") continue;
    int depth = 0, commas = 0;
    bool any_token = false;
    for (std::size_t j = i + 1; j < toks.size(); ++j) {
      const Token& t = toks[j];
      if (t.kind == TokenKind::Operator && t.text == "(") ++depth;
      else if (t.kind == TokenKind::Operator && t.text == ")") {
        --depth;
        if (depth == 0) break;
      } else if (depth == 1) {
        any_token = true;
        if (t.kind == TokenKind::Operator && t.text == ",") ++commas;
      } else if (depth > 1) {
        any_token = true;
      }
    }
    out.push_back(Invocation{toks[i].text, any_token ? commas + 1 : 0});
  }
  return out;
}

// Selects the token-longest caller and callee of `id` among the given method
// records (one project snapshot). Callers invoke the method by simple name
// and arity; callees are in-project definitions invoked from its body. The
// method itself is never its own caller or callee.
inline CallHierarchy mine_call_hierarchy(const std::vector<MethodRecord>& snapshot,
                                         const MethodIdentity& id) {
  CallHierarchy out;
  const MethodRecord* target = nullptr;
  for (const auto& r : snapshot) {
    if (r.id == id) {
      target = &r;
      break;
    }
  }
  if (target == nullptr) return out;

  const std::string target_name = detail::simple_name_of(id.qualified_name);
  const int target_params = detail::param_count_of(id.signature);
  const bool target_varargs = id.signature.find("...") != std::string::npos;

  struct Candidate {
    std::size_t tokens;
    const MethodRecord* rec;
  };
  auto better = [](const Candidate& a, const Candidate& b) {
    if (a.tokens != b.tokens) return a.tokens > b.tokens;
    return a.rec->id.key() < b.rec->id.key();
  };

  std::optional<Candidate> best_caller, best_callee;
  const std::vector<Invocation> target_calls = extract_invocations(target->source_text);

  for (const auto& rec : snapshot) {
    if (rec.id == id) continue;
    const std::size_t tokens = tokenize(rec.source_text).size();

    bool calls_target = false;
    for (const auto& inv : extract_invocations(rec.source_text)) {
      if (detail::invocation_matches(inv, target_name, target_params, target_varargs)) {
        calls_target = true;
        break;
      }
    }
    if (calls_target) {
      Candidate c{tokens, &rec};
      if (!best_caller || better(c, *best_caller)) best_caller = c;
    }

    const std::string rec_name = detail::simple_name_of(rec.id.qualified_name);
    const int rec_params = detail::param_count_of(rec.id.signature);
    const bool rec_varargs = rec.id.signature.find("...") != std::string::npos;
    bool called_by_target = false;
    for (const auto& inv : target_calls) {
      if (detail::invocation_matches(inv, rec_name, rec_params, rec_varargs)) {
        called_by_target = true;
        break;
      }
    }
    if (called_by_target) {
      Candidate c{tokens, &rec};
      if (!best_callee || better(c, *best_callee)) best_callee = c;
    }
  }

  if (best_caller) out.longest_caller = best_caller->rec->source_text;
  if (best_callee) out.longest_callee = best_callee->rec->source_text;
  return out;
}

// Convenience overload over a raw file snapshot (file path -> source text).
inline CallHierarchy mine_call_hierarchy(const std::map<std::string, std::string>& snapshot,
                                         const std::string& project,
                                         const MethodIdentity& id) {
  std::vector<MethodRecord> records;
  for (const auto& [path, text] : snapshot) {
    for (const auto& m : extract_methods(text).methods) {
      records.push_back(MethodRecord{
          MethodIdentity{project, path, m.qualified_name, m.signature},
          std::string(m.span(text))});
    }
  }
  return mine_call_hierarchy(records, id);
}

}  // namespace histcode
