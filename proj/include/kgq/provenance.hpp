#pragma once

#include <set>

#include "kgq/iri.hpp"

namespace kgq {

// Provenance sort value: the set of sources a statement was derived from.
// Unioned through inference.
class Provenance {
public:
  Provenance() = default;  // emptyProvenance

  static Provenance empty() { return {}; }
  static Provenance of(std::set<Iri> sources) {
    Provenance p;
    p.sources_ = std::move(sources);
    return p;
  }

  const std::set<Iri>& sources() const { return sources_; }
  bool is_empty() const { return sources_.empty(); }

  Provenance add_sources(const std::set<Iri>& es) const {
    Provenance r = *this;
    r.sources_.insert(es.begin(), es.end());
    return r;
  }

  static Provenance union_(const Provenance& a, const Provenance& b) {
    Provenance r = a;
    r.sources_.insert(b.sources_.begin(), b.sources_.end());
    return r;
  }

  bool operator==(const Provenance&) const = default;

private:
  std::set<Iri> sources_;
};

}  // namespace kgq
