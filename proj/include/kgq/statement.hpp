#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "kgq/annotations.hpp"
#include "kgq/causality.hpp"
#include "kgq/provenance.hpp"
#include "kgq/sequence.hpp"
#include "kgq/validity.hpp"
#include "kgq/value.hpp"

namespace kgq {

enum class StatementKind { st, sno, ssome };

std::string to_string(StatementKind k);
std::optional<StatementKind> statement_kind_from_string(const std::string& s);

// Where a statement came from: asserted in the input, or inferred by a rule.
struct Origin {
  std::string rule;  // empty = asserted

  static Origin asserted() { return {}; }
  static Origin inferred(std::string rule_id) { return {std::move(rule_id)}; }
  bool is_asserted() const { return rule.empty(); }
  bool operator==(const Origin&) const = default;
};

// A multi-qualified statement in many-sorted form: subject/property/value
// plus one object per sort. Kind st carries a value; sno/ssome do not.
struct Statement {
  StatementKind kind = StatementKind::st;
  Iri subject;
  Iri property;
  std::optional<Value> value;  // present iff kind == st
  ValidityContext validity;
  Causality causality;
  SequenceNode sequence;
  Annotations annotations;
  Provenance provenance;
  Origin origin;

  // Throws std::invalid_argument naming the violated invariant.
  void validate() const;

  // Canonical identity string: kind, subject, property, value, and the five
  // canonical sort encodings. Origin is excluded, so an inferred duplicate of
  // an asserted statement is the same statement.
  std::string canonical_key() const;
};

// statement_equal of the model: equality on canonical form.
bool statement_equal(const Statement& a, const Statement& b);

// The raw qualifier-value pairs of a statement before sort construction.
// A multiset: several values per qualifier are allowed.
struct QualifierBag {
  std::vector<std::pair<Iri, Value>> pairs;

  void add(Iri qualifier, Value v) {
    pairs.emplace_back(std::move(qualifier), std::move(v));
  }
  std::size_t size() const { return pairs.size(); }
};

}  // namespace kgq
