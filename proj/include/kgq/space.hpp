#pragma once

#include <iosfwd>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "kgq/iri.hpp"

namespace kgq {

// Containment facts between named regions, closed reflexively and
// transitively at load time. The facts come from a CSV with header
// "inner,outer".
class ContainmentTable {
public:
  ContainmentTable() = default;

  void add(const Iri& inner, const Iri& outer);
  void close();  // recomputes the transitive closure; idempotent

  static ContainmentTable load_csv(const std::string& path);
  static ContainmentTable load_csv_stream(std::istream& in);

  bool knows(const Iri& region) const { return regions_.count(region) != 0; }

  // Reflexive-transitive `inside`. Regions absent from the table are only
  // inside themselves.
  bool inside(const Iri& inner, const Iri& outer) const;

private:
  std::set<Iri> regions_;
  std::map<Iri, std::set<Iri>> outers_;  // region -> all enclosing regions
};

// The space dimension of a validity context: a named region, the universal
// region (unconstrained), or the bottom region (nowhere).
class SpaceRegion {
public:
  SpaceRegion() = default;  // universal

  static SpaceRegion universal() { return {}; }
  static SpaceRegion bottom() {
    SpaceRegion s;
    s.bottom_ = true;
    return s;
  }
  static SpaceRegion region(Iri iri) {
    SpaceRegion s;
    s.iri_ = std::move(iri);
    return s;
  }

  bool is_universal() const { return !bottom_ && iri_.empty(); }
  bool is_bottom() const { return bottom_; }
  bool is_region() const { return !bottom_ && !iri_.empty(); }
  const Iri& iri() const { return iri_; }

  bool operator==(const SpaceRegion&) const = default;

  static bool inside(const SpaceRegion& a, const SpaceRegion& b,
                     const ContainmentTable& t);

  // Meet: the smaller region when comparable via inside, bottom when
  // incomparable. Universal is the identity, bottom absorbing.
  static SpaceRegion inter(const SpaceRegion& a, const SpaceRegion& b,
                           const ContainmentTable& t);

  // Join: the larger region when comparable, universal otherwise. Bottom is
  // the identity.
  static SpaceRegion union_(const SpaceRegion& a, const SpaceRegion& b,
                            const ContainmentTable& t);

private:
  Iri iri_;
  bool bottom_ = false;
};

}  // namespace kgq
