#pragma once

#include <map>
#include <set>

#include "kgq/iri.hpp"
#include "kgq/value.hpp"

namespace kgq {

// Annotations sort value: a keyed multimap from qualifier property to a set
// of values. This generalizes the per-qualifier addA1/getA1 operation family;
// the fixed operations are recovered by fixing the key.
class Annotations {
public:
  Annotations() = default;  // emptyAnnotations

  // Constraint-relation sentinel entities (distinct from P31/P279).
  static const Iri kRelationQualifier;      // pq:P2309
  static const Iri kClassQualifier;         // pq:P2308
  static const Iri kInstanceOfSentinel;     // wd:Q21503252
  static const Iri kSubclassOfSentinel;     // wd:Q21514624

  static Annotations empty() { return {}; }

  bool is_empty() const { return attrs_.empty(); }

  Annotations add(const Iri& qualifier, const Value& v) const {
    Annotations r = *this;
    r.attrs_[qualifier].insert(v);
    return r;
  }

  std::set<Value> get(const Iri& qualifier) const {
    auto it = attrs_.find(qualifier);
    return it == attrs_.end() ? std::set<Value>{} : it->second;
  }

  std::set<Value> get_relation() const { return get(kRelationQualifier); }
  std::set<Value> get_class() const { return get(kClassQualifier); }

  const std::map<Iri, std::set<Value>>& attrs() const { return attrs_; }

  bool operator==(const Annotations&) const = default;

private:
  // Invariant: no empty value sets are stored.
  std::map<Iri, std::set<Value>> attrs_;
};

}  // namespace kgq
