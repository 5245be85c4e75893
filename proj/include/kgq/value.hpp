#pragma once

#include <string>

#include "kgq/iri.hpp"

namespace kgq {

// A node of the value sort. The subsort chain property <= entity <= value is
// checked by the accessors: a Property is accepted wherever an Entity is
// expected. `undefined` is a value constant distinct from every other value.
class Value {
public:
  enum class Kind { Entity, Property, Datavalue, NoValue, SomeValue, Undefined };

  Value() : kind_(Kind::Undefined) {}

  static Value entity(Iri iri) { return Value(Kind::Entity, std::move(iri), {}, {}); }
  static Value property(Iri iri) { return Value(Kind::Property, std::move(iri), {}, {}); }
  static Value datavalue(std::string lexical, Iri datatype) {
    return Value(Kind::Datavalue, {}, std::move(lexical), std::move(datatype));
  }
  static Value no_value() { return Value(Kind::NoValue, {}, {}, {}); }
  static Value some_value() { return Value(Kind::SomeValue, {}, {}, {}); }
  static Value undefined() { return Value(Kind::Undefined, {}, {}, {}); }

  Kind kind() const { return kind_; }
  bool is_entity() const { return kind_ == Kind::Entity || kind_ == Kind::Property; }
  bool is_datavalue() const { return kind_ == Kind::Datavalue; }
  bool is_undefined() const { return kind_ == Kind::Undefined; }

  const Iri& iri() const { return iri_; }
  const std::string& lexical() const { return lexical_; }
  const Iri& datatype() const { return datatype_; }

  // Structural equality, except Entity and Property with the same IRI compare
  // equal (subsort collapse).
  bool operator==(const Value& o) const {
    if (is_entity() && o.is_entity()) return iri_ == o.iri_;
    if (kind_ != o.kind_) return false;
    return iri_ == o.iri_ && lexical_ == o.lexical_ && datatype_ == o.datatype_;
  }

  // Canonical string form used in sort-value JSON: IRIs verbatim, special
  // constants as reserved "!" tokens (IRIs cannot start with '!').
  std::string canonical_token() const;

  // Inverse of canonical_token for string-encoded values. Datavalues are
  // encoded as JSON objects and handled by the sort codec instead.
  static Value from_canonical_token(const std::string& tok);

  bool operator<(const Value& o) const { return canonical_token() < o.canonical_token(); }

private:
  Value(Kind k, Iri iri, std::string lexical, Iri datatype)
      : kind_(k), iri_(std::move(iri)), lexical_(std::move(lexical)),
        datatype_(std::move(datatype)) {}

  Kind kind_;
  Iri iri_;
  std::string lexical_;
  Iri datatype_;
};

}  // namespace kgq
