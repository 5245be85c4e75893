#pragma once

#include <stdexcept>

#include "kgq/instant.hpp"

namespace kgq {

// A closed time interval with possibly unbounded endpoints, plus an explicit
// bottom element (the empty interval) so the meet is total. The interval with
// both endpoints undefined is the universal interval.
class TimeInterval {
public:
  TimeInterval() = default;  // universal

  static TimeInterval universal() { return {}; }
  static TimeInterval bottom() {
    TimeInterval i;
    i.bottom_ = true;
    return i;
  }
  // Throws std::invalid_argument if both endpoints are defined and start > end.
  static TimeInterval make(Instant start, Instant end);
  static TimeInterval from_duration(Instant start, Duration d);

  bool is_bottom() const { return bottom_; }
  bool is_universal() const {
    return !bottom_ && !start_.is_defined() && !end_.is_defined();
  }

  // Endpoint accessors; bottom has no meaningful endpoints and returns
  // undefined from both.
  Instant start_time() const { return bottom_ ? Instant::undefined() : start_; }
  Instant end_time() const { return bottom_ ? Instant::undefined() : end_; }
  Duration duration() const { return Instant::minus(end_time(), start_time()); }

  bool operator==(const TimeInterval&) const = default;

  // x inside i; x must be defined (domain error otherwise).
  static bool inside(const Instant& x, const TimeInterval& i);

  static bool disjoint(const TimeInterval& a, const TimeInterval& b);
  static bool test_intersect(const TimeInterval& a, const TimeInterval& b) {
    return !disjoint(a, b);
  }

  // Meet: [maxStart, minEnd], bottom when disjoint. Universal is the identity.
  static TimeInterval inter(const TimeInterval& a, const TimeInterval& b);

  // Hull when overlapping; universal when disjoint (the paper's "undefined"
  // interval read as unconstrained). Bottom is the identity.
  static TimeInterval union_hull(const TimeInterval& a, const TimeInterval& b);

  // a included in b, endpoints read as -inf/+inf when undefined. Bottom is
  // included in everything; nothing but bottom is included in bottom.
  static bool incl(const TimeInterval& a, const TimeInterval& b);

private:
  Instant start_;
  Instant end_;
  bool bottom_ = false;
};

}  // namespace kgq
