#pragma once

#include <iosfwd>
#include <map>
#include <set>
#include <string>

#include "kgq/iri.hpp"

namespace kgq {

// Maps a cause entity to its inverse under statement direction reversal.
// Entities absent from the map are self-inverse; an entity mapped to the
// reserved token "!drop" is removed from the inverted set.
class InverseCauseMap {
public:
  static const std::string kDropToken;  // "!drop"

  // death of subject <-> death of object.
  static InverseCauseMap defaults();

  static InverseCauseMap load_csv(const std::string& path);
  static InverseCauseMap load_csv_stream(std::istream& in);

  // Registers a <-> b (both directions unless b is the drop token).
  void add(const Iri& a, const Iri& b);

  // Self when unmapped; empty Iri means dropped.
  Iri apply(const Iri& e) const;

private:
  std::map<Iri, Iri> pairs_;
};

// Causality sort value: a set of begin causes and a set of end causes.
class Causality {
public:
  Causality() = default;  // emptyCause

  static Causality empty() { return {}; }

  const std::set<Iri>& has_cause() const { return has_; }
  const std::set<Iri>& end_cause() const { return end_; }
  bool is_empty() const { return has_.empty() && end_.empty(); }

  Causality add_end_cause(const std::set<Iri>& es) const;
  Causality add_has_cause(const std::set<Iri>& es) const;

  static Causality union_(const Causality& a, const Causality& b);
  static Causality inverse(const Causality& c, const InverseCauseMap& m);

  bool operator==(const Causality&) const = default;

private:
  std::set<Iri> has_;
  std::set<Iri> end_;
};

}  // namespace kgq
