#include "kgq/statement.hpp"

#include <stdexcept>

#include "kgq/sort_builder.hpp"

namespace kgq {

std::string to_string(StatementKind k) {
  switch (k) {
    case StatementKind::st: return "st";
    case StatementKind::sno: return "sno";
    case StatementKind::ssome: return "ssome";
  }
  return {};
}

std::optional<StatementKind> statement_kind_from_string(const std::string& s) {
  if (s == "st") return StatementKind::st;
  if (s == "sno") return StatementKind::sno;
  if (s == "ssome") return StatementKind::ssome;
  return std::nullopt;
}

void Statement::validate() const {
  if (subject.empty())
    throw std::invalid_argument("statement invariant: subject must be non-empty");
  if (property.empty())
    throw std::invalid_argument("statement invariant: property must be non-empty");
  if (kind == StatementKind::st && !value.has_value())
    throw std::invalid_argument("statement invariant: kind st requires a value");
  if (kind != StatementKind::st && value.has_value())
    throw std::invalid_argument(
        "statement invariant: kinds sno/ssome must not carry a value");
}

std::string Statement::canonical_key() const {
  std::string key = to_string(kind);
  key += '|';
  key += subject.text;
  key += '|';
  key += property.text;
  key += '|';
  if (value) key += encode_value(*value);
  key += '|';
  key += encode_validity(validity);
  key += '|';
  key += encode_causality(causality);
  key += '|';
  key += encode_sequence(sequence);
  key += '|';
  key += encode_annotations(annotations);
  key += '|';
  key += encode_provenance(provenance);
  return key;
}

bool statement_equal(const Statement& a, const Statement& b) {
  return a.canonical_key() == b.canonical_key();
}

}  // namespace kgq
