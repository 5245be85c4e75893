#pragma once

#include "kgq/interval.hpp"
#include "kgq/space.hpp"

namespace kgq {

// Validity context: a region over time x space. The default (universal time,
// universal space) is emptyValidity, meaning valid everywhere and always. A
// context is BOTTOM (holds nowhere) as soon as one component is bottom.
class ValidityContext {
public:
  ValidityContext() = default;  // emptyValidity

  static ValidityContext empty() { return {}; }
  static ValidityContext time_validity(TimeInterval t) {
    ValidityContext c;
    c.time_ = t;
    return c;
  }
  static ValidityContext space_validity(SpaceRegion s) {
    ValidityContext c;
    c.space_ = s;
    return c;
  }
  static ValidityContext timespace(TimeInterval t, SpaceRegion s) {
    ValidityContext c;
    c.time_ = t;
    c.space_ = s;
    return c;
  }

  bool is_empty() const { return time_.is_universal() && space_.is_universal(); }
  bool is_bottom() const { return time_.is_bottom() || space_.is_bottom(); }

  const TimeInterval& extract_time() const { return time_; }
  const SpaceRegion& extract_space() const { return space_; }

  ValidityContext with_time(TimeInterval t) const {
    return timespace(t, space_);
  }
  ValidityContext with_space(SpaceRegion s) const {
    return timespace(time_, s);
  }

  bool operator==(const ValidityContext&) const = default;

  static ValidityContext inter(const ValidityContext& a, const ValidityContext& b,
                               const ContainmentTable& t) {
    return timespace(TimeInterval::inter(a.time_, b.time_),
                     SpaceRegion::inter(a.space_, b.space_, t));
  }

  static ValidityContext union_(const ValidityContext& a, const ValidityContext& b,
                                const ContainmentTable& t) {
    return timespace(TimeInterval::union_hull(a.time_, b.time_),
                     SpaceRegion::union_(a.space_, b.space_, t));
  }

  // True iff the intersection is not BOTTOM; in particular always true
  // against emptyValidity.
  static bool test_intersect(const ValidityContext& a, const ValidityContext& b,
                             const ContainmentTable& t) {
    return !inter(a, b, t).is_bottom();
  }

  static bool incl(const ValidityContext& a, const ValidityContext& b,
                   const ContainmentTable& t) {
    return TimeInterval::incl(a.time_, b.time_) &&
           SpaceRegion::inside(a.space_, b.space_, t);
  }

private:
  TimeInterval time_;
  SpaceRegion space_;
};

}  // namespace kgq
