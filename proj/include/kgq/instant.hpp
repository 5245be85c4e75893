#pragma once

#include <cstdint>
#include <optional>
#include <string>

namespace kgq {

// Seconds since the Unix epoch, proleptic Gregorian, UTC. Precision is one
// second; Wikidata precision fields are not modeled.
struct Duration {
  std::optional<std::int64_t> seconds;  // nullopt = undefinedDuration

  static Duration undefined() { return {}; }
  static Duration of(std::int64_t s) { return {s}; }
  bool is_undefined() const { return !seconds.has_value(); }
  bool operator==(const Duration&) const = default;
};

// A time instant: either a defined point (epoch seconds) or undefined, which
// reads as "unconstrained" in interval endpoints.
class Instant {
public:
  Instant() = default;  // undefined
  static Instant undefined() { return {}; }
  static Instant at(std::int64_t epoch_seconds) {
    Instant i;
    i.epoch_ = epoch_seconds;
    return i;
  }

  // Parses "YYYY-MM-DDTHH:MM:SSZ" (optional leading '+'). Returns nullopt on
  // malformed or out-of-calendar input.
  static std::optional<Instant> parse(const std::string& iso);

  bool is_defined() const { return epoch_.has_value(); }
  std::int64_t epoch_seconds() const { return *epoch_; }

  std::string to_iso() const;  // requires is_defined()

  bool operator==(const Instant&) const = default;

  // Total order on defined instants; callers must not compare undefined.
  static bool less(const Instant& a, const Instant& b) {
    return *a.epoch_ < *b.epoch_;
  }

  // min/max per the instant algebra: undefined is absorbing (an unbounded
  // side wins when forming union hulls).
  static Instant min_hull(const Instant& a, const Instant& b);
  static Instant max_hull(const Instant& a, const Instant& b);

  // Directional comparisons treating undefined as -inf (start side) or +inf
  // (end side); used by the interval meet where a defined bound wins.
  static bool start_leq(const Instant& a, const Instant& b);  // a <= b, undefined = -inf
  static bool end_leq(const Instant& a, const Instant& b);    // a <= b, undefined = +inf
  static Instant max_start(const Instant& a, const Instant& b);
  static Instant min_end(const Instant& a, const Instant& b);

  static Duration minus(const Instant& end, const Instant& start);

private:
  std::optional<std::int64_t> epoch_;
};

}  // namespace kgq
