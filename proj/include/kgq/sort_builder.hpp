#pragma once

#include <iosfwd>
#include <map>
#include <string>
#include <tuple>

#include "kgq/diagnostics.hpp"
#include "kgq/statement.hpp"

namespace kgq {

enum class SortCategory { Validity, Causality, Sequence, Provenance, Annotation };

enum class QualifierRole {
  TimeStart,
  TimeEnd,
  PointInTime,
  Space,
  CauseHas,
  CauseEnd,
  SeqPrev,
  SeqNext,
  SeqOrdinal,
  Source,
  // Known member of its category but without a slot in the basic sort model
  // (applies-to-part, valid-in-period, uncertain dates); routed to
  // Annotations with a diagnostic.
  Generic,
};

std::string to_string(SortCategory c);
std::string to_string(QualifierRole r);

// Qualifier property -> (category, role). Unmapped qualifiers default to
// (Annotation, Generic).
class CategoryMap {
public:
  static CategoryMap builtin();

  // CSV "property,category,role" rows override/extend the builtin table.
  void load_overrides_csv(const std::string& path);
  void load_overrides_stream(std::istream& in);

  void set(const Iri& property, SortCategory c, QualifierRole r);
  std::pair<SortCategory, QualifierRole> categorize(const Iri& qualifier) const;

private:
  std::map<Iri, std::pair<SortCategory, QualifierRole>> entries_;
};

struct SortValues {
  ValidityContext validity;
  Causality causality;
  SequenceNode sequence;
  Annotations annotations;
  Provenance provenance;
};

// Routes every qualifier pair into exactly one sort value; pairs the basic
// model cannot hold land in Annotations with a diagnostic, never dropped.
// `where` labels diagnostics (statement node IRI or similar).
SortValues build_sorts(const QualifierBag& bag, const CategoryMap& categories,
                       Diagnostics& diagnostics, const std::string& where = {});

// Canonical JSON encoding of sort values: keys camelCase and sorted, sets
// sorted lexicographically, absent optional fields omitted, "{}" for an empty
// sort value. Byte-identical regardless of construction order.
std::string encode_validity(const ValidityContext& v);
std::string encode_causality(const Causality& c);
std::string encode_sequence(const SequenceNode& s);
std::string encode_annotations(const Annotations& a);
std::string encode_provenance(const Provenance& p);

// Decoders accept the canonical form plus documented case variants
// ("hascause"/"endcause"). Throw std::runtime_error naming the offending key.
ValidityContext decode_validity(const std::string& json);
Causality decode_causality(const std::string& json);
SequenceNode decode_sequence(const std::string& json);
Annotations decode_annotations(const std::string& json);
Provenance decode_provenance(const std::string& json);

// Statement value field codec (entity IRI string, datavalue object, reserved
// "!" tokens for the special constants).
std::string encode_value(const Value& v);
Value decode_value(const std::string& json);

}  // namespace kgq
