#include "kgq/graph.hpp"

namespace kgq {

namespace {

using BoundValue = std::variant<Iri, Value, ValidityContext, Causality,
                                SequenceNode, Annotations, Provenance>;

bool bound_equal(const BoundValue& a, const BoundValue& b) {
  // An Iri binding and a Value binding of the same entity must unify: a
  // variable can appear in subject position (binds Iri) and value position
  // (binds Value).
  if (const auto* ai = std::get_if<Iri>(&a)) {
    if (const auto* bv = std::get_if<Value>(&b)) return bv->is_entity() && bv->iri() == *ai;
  }
  if (const auto* bi = std::get_if<Iri>(&b)) {
    if (const auto* av = std::get_if<Value>(&a)) return av->is_entity() && av->iri() == *bi;
  }
  return a == b;
}

bool bind(Binding& b, const std::string& name, BoundValue v) {
  auto it = b.vars.find(name);
  if (it == b.vars.end()) {
    b.vars.emplace(name, std::move(v));
    return true;
  }
  return bound_equal(it->second, v);
}

// Matches one pattern slot against the actual slot value of a statement.
template <typename Actual>
bool match_slot(const PatternSlot& p, const Actual& actual, Binding& b) {
  if (std::holds_alternative<PatternSlot::Any>(p.slot)) return true;
  if (const auto* var = std::get_if<PatternSlot::Var>(&p.slot))
    return bind(b, var->name, BoundValue{actual});
  if (const auto* c = std::get_if<Actual>(&p.slot)) return *c == actual;
  // Iri constant against a Value slot (or vice versa).
  if constexpr (std::is_same_v<Actual, Value>) {
    if (const auto* iri = std::get_if<Iri>(&p.slot))
      return actual.is_entity() && actual.iri() == *iri;
  }
  if constexpr (std::is_same_v<Actual, Iri>) {
    if (const auto* val = std::get_if<Value>(&p.slot))
      return val->is_entity() && val->iri() == actual;
  }
  return false;
}

}  // namespace

bool match_statement(const Statement& s, const StatementPattern& p, Binding& binding) {
  if (p.kind && *p.kind != s.kind) return false;
  Binding b = binding;
  if (!match_slot(p.subject, s.subject, b)) return false;
  if (!match_slot(p.property, s.property, b)) return false;
  if (s.value) {
    if (!match_slot(p.value, *s.value, b)) return false;
  } else {
    // sno/ssome carry no value; only an unconstrained value slot matches.
    if (!std::holds_alternative<PatternSlot::Any>(p.value.slot)) return false;
  }
  if (!match_slot(p.validity, s.validity, b)) return false;
  if (!match_slot(p.causality, s.causality, b)) return false;
  if (!match_slot(p.sequence, s.sequence, b)) return false;
  if (!match_slot(p.annotations, s.annotations, b)) return false;
  if (!match_slot(p.provenance, s.provenance, b)) return false;
  binding = std::move(b);
  return true;
}

bool KnowledgeGraph::insert(const Statement& s) {
  s.validate();
  std::string key = s.canonical_key();
  if (index_.count(key)) return false;
  index_.emplace(std::move(key), statements_.size());
  statements_.push_back(s);
  return true;
}

void KnowledgeGraph::query(
    const StatementPattern& pattern, const Binding& base,
    const std::function<void(const Statement&, const Binding&)>& yield) const {
  for (const auto& s : statements_) {
    Binding b = base;
    if (match_statement(s, pattern, b)) yield(s, b);
  }
}

std::vector<std::pair<Statement, Binding>> KnowledgeGraph::query_all(
    const StatementPattern& pattern) const {
  std::vector<std::pair<Statement, Binding>> out;
  query(pattern, [&](const Statement& s, const Binding& b) { out.emplace_back(s, b); });
  return out;
}

}  // namespace kgq
