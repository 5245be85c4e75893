#include "kgq/interval.hpp"

namespace kgq {

TimeInterval TimeInterval::make(Instant start, Instant end) {
  if (start.is_defined() && end.is_defined() && Instant::less(end, start))
    throw std::invalid_argument("interval start after end: " + start.to_iso() +
                                " > " + end.to_iso());
  TimeInterval i;
  i.start_ = start;
  i.end_ = end;
  return i;
}

TimeInterval TimeInterval::from_duration(Instant start, Duration d) {
  if (!start.is_defined() || d.is_undefined())
    return make(start, Instant::undefined());
  return make(start, Instant::at(start.epoch_seconds() + *d.seconds));
}

bool TimeInterval::inside(const Instant& x, const TimeInterval& i) {
  if (!x.is_defined())
    throw std::domain_error("inside: instant argument is undefined");
  if (i.bottom_) return false;
  return Instant::start_leq(i.start_, x) && Instant::end_leq(x, i.end_);
}

bool TimeInterval::disjoint(const TimeInterval& a, const TimeInterval& b) {
  if (a.bottom_ || b.bottom_) return true;
  // start(a) <= end(b) and start(b) <= end(a), with -inf/+inf reading.
  auto leq = [](const Instant& s, const Instant& e) {
    if (!s.is_defined() || !e.is_defined()) return true;
    return s.epoch_seconds() <= e.epoch_seconds();
  };
  return !(leq(a.start_, b.end_) && leq(b.start_, a.end_));
}

TimeInterval TimeInterval::inter(const TimeInterval& a, const TimeInterval& b) {
  if (disjoint(a, b)) return bottom();
  TimeInterval r;
  r.start_ = Instant::max_start(a.start_, b.start_);
  r.end_ = Instant::min_end(a.end_, b.end_);
  return r;
}

TimeInterval TimeInterval::union_hull(const TimeInterval& a, const TimeInterval& b) {
  if (a.bottom_) return b;
  if (b.bottom_) return a;
  if (disjoint(a, b)) return universal();
  TimeInterval r;
  r.start_ = Instant::min_hull(a.start_, b.start_);
  r.end_ = Instant::max_hull(a.end_, b.end_);
  return r;
}

bool TimeInterval::incl(const TimeInterval& a, const TimeInterval& b) {
  if (a.bottom_) return true;
  if (b.bottom_) return false;
  return Instant::start_leq(b.start_, a.start_) && Instant::end_leq(a.end_, b.end_);
}

}  // namespace kgq
