#pragma once

#include <functional>
#include <map>
#include <optional>
#include <unordered_map>
#include <variant>
#include <vector>

#include "kgq/statement.hpp"

namespace kgq {

// One slot of a statement pattern: a variable (bind whatever matches), an IRI
// constant, a value constant, or a ground sort value. Slots left default
// (Any) match everything without binding.
struct PatternSlot {
  struct Any {};
  struct Var { std::string name; };
  using Const =
      std::variant<Any, Var, Iri, Value, ValidityContext, Causality,
                   SequenceNode, Annotations, Provenance>;
  Const slot = Any{};

  static PatternSlot any() { return {}; }
  static PatternSlot var(std::string name) { return {Var{std::move(name)}}; }
  template <typename T>
  static PatternSlot constant(T v) { return {Const{std::move(v)}}; }
};

// The variable assignments produced by matching one statement.
struct Binding {
  std::map<std::string, std::variant<Iri, Value, ValidityContext, Causality,
                                     SequenceNode, Annotations, Provenance>>
      vars;
};

struct StatementPattern {
  std::optional<StatementKind> kind;  // nullopt: any kind
  PatternSlot subject, property, value;
  PatternSlot validity, causality, sequence, annotations, provenance;
};

// Deduplicated statement set with pattern-query access. Immutable during
// matching; insertion happens in single-writer phases between rule rounds.
class KnowledgeGraph {
public:
  KnowledgeGraph() : prefixes_(PrefixTable::builtin()) {}

  // Returns true iff the statement was not already present (structural
  // equality on canonical form). Throws on a malformed statement.
  bool insert(const Statement& s);

  bool contains(const Statement& s) const {
    return index_.count(s.canonical_key()) != 0;
  }

  std::size_t size() const { return statements_.size(); }
  const std::vector<Statement>& statements() const { return statements_; }

  PrefixTable& prefixes() { return prefixes_; }
  const PrefixTable& prefixes() const { return prefixes_; }

  // Yields every statement unifiable with the pattern, in insertion order,
  // together with the variable binding. Extends `base` and rejects matches
  // conflicting with it.
  void query(const StatementPattern& pattern, const Binding& base,
             const std::function<void(const Statement&, const Binding&)>& yield) const;

  void query(const StatementPattern& pattern,
             const std::function<void(const Statement&, const Binding&)>& yield) const {
    query(pattern, Binding{}, yield);
  }

  std::vector<std::pair<Statement, Binding>> query_all(
      const StatementPattern& pattern) const;

private:
  std::vector<Statement> statements_;
  std::unordered_map<std::string, std::size_t> index_;  // canonical key -> pos
  PrefixTable prefixes_;
};

// Tries to unify one statement with a pattern; extends `binding` in place on
// success. Exposed for the brute-force oracles in tests.
bool match_statement(const Statement& s, const StatementPattern& p, Binding& binding);

}  // namespace kgq
