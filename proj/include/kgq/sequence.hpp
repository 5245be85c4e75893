#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>

#include "kgq/iri.hpp"

namespace kgq {

// Sequence sort value: per-statement predecessor/successor pointers and an
// optional ordinal (replaces / replaced by / series ordinal).
class SequenceNode {
public:
  SequenceNode() = default;  // emptySequence

  static SequenceNode empty() { return {}; }
  static SequenceNode seq(Iri prev, Iri next) {
    SequenceNode s;
    s.previous_ = std::move(prev);
    s.next_ = std::move(next);
    return s;
  }
  static SequenceNode seq(Iri prev, Iri next, std::uint64_t ordinal) {
    SequenceNode s = seq(std::move(prev), std::move(next));
    s.ordinal_ = ordinal;
    return s;
  }
  static SequenceNode with_next(Iri next) {
    SequenceNode s;
    s.next_ = std::move(next);
    return s;
  }
  static SequenceNode with_previous(Iri prev) {
    SequenceNode s;
    s.previous_ = std::move(prev);
    return s;
  }
  static SequenceNode with_ordinal(std::uint64_t ordinal) {
    SequenceNode s;
    s.ordinal_ = ordinal;
    return s;
  }
  static SequenceNode make(std::optional<Iri> prev, std::optional<Iri> next,
                           std::optional<std::uint64_t> ordinal) {
    SequenceNode s;
    s.previous_ = std::move(prev);
    s.next_ = std::move(next);
    s.ordinal_ = ordinal;
    return s;
  }

  bool has_previous() const { return previous_.has_value(); }
  bool has_next() const { return next_.has_value(); }
  bool has_ordinal() const { return ordinal_.has_value(); }
  bool is_empty() const { return !has_previous() && !has_next() && !has_ordinal(); }

  // Absent pointers read as undefined entities; callers test has_* first.
  const Iri* previous() const { return previous_ ? &*previous_ : nullptr; }
  const Iri* next() const { return next_ ? &*next_ : nullptr; }
  std::uint64_t ordinal() const {
    if (!ordinal_) throw std::domain_error("ordinal of ordinal-less sequence node");
    return *ordinal_;
  }

  bool operator==(const SequenceNode&) const = default;

private:
  std::optional<Iri> previous_;
  std::optional<Iri> next_;
  std::optional<std::uint64_t> ordinal_;
};

}  // namespace kgq
