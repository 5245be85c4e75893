#pragma once

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "kgq/engine.hpp"
#include "kgq/graph.hpp"
#include "kgq/ndjson.hpp"
#include "kgq/sort_builder.hpp"

namespace kgqtest {

using namespace kgq;

// ---------------------------------------------------------------------------
// Constructors

inline Instant at(const std::string& iso) {
  auto t = Instant::parse(iso);
  if (!t) throw std::runtime_error("bad test instant: " + iso);
  return *t;
}

inline TimeInterval iv(const std::string& start, const std::string& end) {
  return TimeInterval::make(at(start), at(end));
}

inline ValidityContext vtime(const std::string& start, const std::string& end) {
  return ValidityContext::time_validity(iv(start, end));
}

inline Causality end_cause(const Iri& e) {
  return Causality::empty().add_end_cause({e});
}

inline Statement make_st(const std::string& s, const std::string& p,
                         const std::string& v, SortValues sorts = {}) {
  Statement st;
  st.kind = StatementKind::st;
  st.subject = Iri{s};
  st.property = Iri{p};
  st.value = Value::entity(Iri{v});
  st.validity = sorts.validity;
  st.causality = sorts.causality;
  st.sequence = sorts.sequence;
  st.annotations = sorts.annotations;
  st.provenance = sorts.provenance;
  return st;
}

// ---------------------------------------------------------------------------
// Paper fixtures

// George C. Scott -- spouse -- Colleen Dewhurst, 1960..1965, end cause divorce.
inline Statement stmt1() {
  SortValues s;
  s.validity = vtime("1960-01-01T00:00:00Z", "1965-01-01T00:00:00Z");
  s.causality = end_cause(Iri{"wd:Q93190"});
  return make_st("wd:Q182450", "wd:P26", "wd:Q253916", s);
}

// The symmetric counterpart of stmt1 (empty sequence and annotations).
inline Statement stmt2() {
  SortValues s;
  s.validity = vtime("1960-01-01T00:00:00Z", "1965-01-01T00:00:00Z");
  s.causality = end_cause(Iri{"wd:Q93190"});
  return make_st("wd:Q253916", "wd:P26", "wd:Q182450", s);
}

// Province of North Carolina -- part of -- Southern Colonies.
inline Statement stmt3() {
  SortValues s;
  s.validity = vtime("1775-05-10T00:00:00Z", "1776-07-04T00:00:00Z");
  return make_st("wd:Q161081", "wd:P361", "wd:Q2301999", s);
}

// Southern Colonies -- part of -- British Empire.
inline Statement stmt4() {
  SortValues s;
  s.validity = vtime("1732-06-09T00:00:00Z", "1776-07-04T00:00:00Z");
  return make_st("wd:Q2301999", "wd:P361", "wd:Q8680", s);
}

// The transitive conclusion of stmt3 and stmt4.
inline Statement stmt5() {
  SortValues s;
  s.validity = vtime("1775-05-10T00:00:00Z", "1776-07-04T00:00:00Z");
  return make_st("wd:Q161081", "wd:P361", "wd:Q8680", s);
}

// Obama -- position held -- President of the US, with sequence pointers to
// Bush and Trump and ordinal 44.
inline Statement obama_statement() {
  SortValues s;
  s.validity = vtime("2009-01-20T00:00:00Z", "2017-01-20T00:00:00Z");
  s.sequence = SequenceNode::seq(Iri{"wd:Q207"}, Iri{"wd:Q22686"}, 44);
  s.provenance = Provenance::of({Iri{"wd:Q54919"}});
  return make_st("wd:Q76", "wd:P39", "wd:Q11696", s);
}

// Declares spouse (P26) a symmetric property.
inline Statement spouse_symmetric_constraint() {
  return make_st("wd:P26", "wd:P2302", "wd:Q21510862");
}

// George C. Scott -- date of death -- the end instant of stmt1's validity.
// The real date differs; the fixture is built to trigger the domain rule.
inline Statement scott_death_statement() {
  Statement st;
  st.kind = StatementKind::st;
  st.subject = Iri{"wd:Q182450"};
  st.property = Iri{"wd:P570"};
  st.value = Value::datavalue("1965-01-01T00:00:00Z", Iri{"xsd:dateTime"});
  st.provenance = Provenance::of({Iri{"wd:Q54920"}});
  return st;
}

// Geneva c Switzerland c Europe, Paris c France c Europe, Malaysia c Asia.
inline ContainmentTable geo_table() {
  ContainmentTable t;
  t.add(Iri{"wd:Q71"}, Iri{"wd:Q39"});
  t.add(Iri{"wd:Q39"}, Iri{"wd:Q46"});
  t.add(Iri{"wd:Q90"}, Iri{"wd:Q142"});
  t.add(Iri{"wd:Q142"}, Iri{"wd:Q46"});
  t.add(Iri{"wd:Q833"}, Iri{"wd:Q48"});
  t.close();
  return t;
}

inline const std::vector<Iri>& geo_regions() {
  static const std::vector<Iri> regions = {
      Iri{"wd:Q71"},  Iri{"wd:Q39"},  Iri{"wd:Q46"}, Iri{"wd:Q90"},
      Iri{"wd:Q142"}, Iri{"wd:Q833"}, Iri{"wd:Q48"}};
  return regions;
}

// ---------------------------------------------------------------------------
// Randomized generators (day granularity, 1700..2100)

struct Rng {
  std::mt19937 gen;
  explicit Rng(unsigned seed) : gen(seed) {}

  std::int64_t range(std::int64_t lo, std::int64_t hi) {  // inclusive
    return std::uniform_int_distribution<std::int64_t>(lo, hi)(gen);
  }
  bool pct(int p) { return range(1, 100) <= p; }
};

inline std::int64_t window_start_epoch() {
  static const std::int64_t v = at("1700-01-01T00:00:00Z").epoch_seconds();
  return v;
}

inline std::int64_t window_day_count() {
  static const std::int64_t v =
      (at("2100-01-01T00:00:00Z").epoch_seconds() - window_start_epoch()) / 86400;
  return v;
}

inline Instant rnd_day(Rng& r) {
  return Instant::at(window_start_epoch() + r.range(0, window_day_count()) * 86400);
}

inline Instant rnd_instant(Rng& r) {  // may be undefined
  return r.pct(15) ? Instant::undefined() : rnd_day(r);
}

// Bounded interval with start anywhere in the window and span <= max_span days.
inline TimeInterval rnd_bounded_interval(Rng& r, std::int64_t max_span_days) {
  std::int64_t start = r.range(0, window_day_count() - max_span_days);
  std::int64_t span = r.range(0, max_span_days);
  return TimeInterval::make(Instant::at(window_start_epoch() + start * 86400),
                            Instant::at(window_start_epoch() + (start + span) * 86400));
}

inline TimeInterval rnd_interval(Rng& r) {  // any element incl. universal/bottom
  if (r.pct(5)) return TimeInterval::universal();
  if (r.pct(5)) return TimeInterval::bottom();
  Instant a = rnd_instant(r);
  Instant b = rnd_instant(r);
  if (a.is_defined() && b.is_defined() && Instant::less(b, a)) std::swap(a, b);
  return TimeInterval::make(a, b);
}

inline SpaceRegion rnd_region(Rng& r) {
  if (r.pct(15)) return SpaceRegion::universal();
  if (r.pct(6)) return SpaceRegion::bottom();
  if (r.pct(10)) return SpaceRegion::region(Iri{"wd:QF" + std::to_string(r.range(1, 5))});
  const auto& pool = geo_regions();
  return SpaceRegion::region(pool[static_cast<std::size_t>(r.range(0, pool.size() - 1))]);
}

inline ValidityContext rnd_validity(Rng& r) {
  return ValidityContext::timespace(rnd_interval(r), rnd_region(r));
}

inline Iri rnd_entity(Rng& r) { return Iri{"wd:Q" + std::to_string(r.range(1, 60))}; }

inline std::set<Iri> rnd_iri_set(Rng& r, int max_size) {
  std::set<Iri> s;
  for (std::int64_t i = r.range(0, max_size); i > 0; --i) s.insert(rnd_entity(r));
  return s;
}

inline Causality rnd_causality(Rng& r) {
  return Causality::empty().add_has_cause(rnd_iri_set(r, 3)).add_end_cause(
      rnd_iri_set(r, 3));
}

inline SequenceNode rnd_sequence(Rng& r) {
  std::optional<Iri> prev, next;
  std::optional<std::uint64_t> ordinal;
  if (r.pct(50)) prev = rnd_entity(r);
  if (r.pct(50)) next = rnd_entity(r);
  if (r.pct(50)) ordinal = static_cast<std::uint64_t>(r.range(0, 200));
  return SequenceNode::make(prev, next, ordinal);
}

inline Provenance rnd_provenance(Rng& r) { return Provenance::of(rnd_iri_set(r, 3)); }

inline Value rnd_value(Rng& r) {
  switch (r.range(0, 5)) {
    case 0: return Value::entity(rnd_entity(r));
    case 1: return Value::property(Iri{"wd:P" + std::to_string(r.range(1, 40))});
    case 2:
      return Value::datavalue(rnd_day(r).to_iso(), Iri{"xsd:dateTime"});
    case 3: return Value::datavalue(std::to_string(r.range(0, 999)), Iri{"xsd:integer"});
    case 4: return r.pct(50) ? Value::no_value() : Value::some_value();
    default: return Value::undefined();
  }
}

inline Annotations rnd_annotations(Rng& r) {
  Annotations a;
  for (std::int64_t i = r.range(0, 3); i > 0; --i)
    a = a.add(Iri{"pq:P" + std::to_string(r.range(1, 30))}, rnd_value(r));
  return a;
}

inline Statement rnd_statement(Rng& r) {
  Statement st;
  switch (r.range(0, 9)) {
    case 0: st.kind = StatementKind::sno; break;
    case 1: st.kind = StatementKind::ssome; break;
    default: st.kind = StatementKind::st; break;
  }
  st.subject = rnd_entity(r);
  st.property = Iri{"wd:P" + std::to_string(r.range(1, 40))};
  if (st.kind == StatementKind::st) {
    Value v = rnd_value(r);
    while (v.is_undefined()) v = rnd_value(r);
    st.value = v;
  }
  st.validity = rnd_validity(r);
  st.causality = rnd_causality(r);
  st.sequence = rnd_sequence(r);
  st.annotations = rnd_annotations(r);
  st.provenance = rnd_provenance(r);
  return st;
}

// ---------------------------------------------------------------------------
// Failure accumulator shared by the property suites

struct Failures {
  int count = 0;
  std::string first;
  void check(bool ok, const std::string& what) {
    if (!ok && count++ == 0) first = what;
  }
};

// ---------------------------------------------------------------------------
// Axiom suites. Each returns the number of failing cases out of `cases`
// randomized rounds; the first failure message lands in *why when non-null.

inline int check_value_axioms(int cases, unsigned seed, std::string* why = nullptr) {
  Rng r(seed);
  Failures f;
  for (int i = 0; i < cases; ++i) {
    Value v = rnd_value(r);
    f.check(!(v == Value::undefined()) || v.is_undefined(),
            "value equals undefined: " + v.canonical_token());
    if (!v.is_undefined())
      f.check(!(Value::undefined() == v), "undefined equals " + v.canonical_token());
    f.check(v == v, "value not reflexive");
    if (!v.is_datavalue())
      f.check(Value::from_canonical_token(v.canonical_token()) == v,
              "canonical token round trip: " + v.canonical_token());
    Iri e = rnd_entity(r);
    f.check(Value::property(e) == Value::entity(e), "property/entity subsort collapse");
    f.check(!(Value::entity(e) == Value::no_value()), "entity equals noValue");
    f.check(!(Value::no_value() == Value::some_value()), "noValue equals someValue");
  }
  if (why && f.count) *why = f.first;
  return f.count;
}

inline int check_instant_axioms(int cases, unsigned seed, std::string* why = nullptr) {
  Rng r(seed);
  Failures f;
  for (int i = 0; i < cases; ++i) {
    Instant a = rnd_day(r), b = rnd_day(r), u = Instant::undefined();
    f.check(*Instant::parse(a.to_iso()) == a, "iso round trip " + a.to_iso());
    f.check(Instant::min_hull(a, a) == a, "min(a,a) != a");
    f.check(Instant::max_hull(a, a) == a, "max(a,a) != a");
    f.check(Instant::min_hull(a, u) == u, "min(a,undefined) != undefined");
    f.check(Instant::max_hull(u, a) == u, "max(undefined,a) != undefined");
    f.check(Instant::min_hull(a, b) == Instant::min_hull(b, a), "min not commutative");
    f.check(Instant::max_hull(a, b) == Instant::max_hull(b, a), "max not commutative");
    Instant lo = Instant::less(a, b) ? a : b;
    Instant hi = Instant::less(a, b) ? b : a;
    f.check(Instant::min_hull(a, b) == lo, "min_hull is not the lesser instant");
    f.check(Instant::max_hull(a, b) == hi, "max_hull is not the greater instant");
    f.check(Instant::start_leq(u, a) && Instant::end_leq(a, u),
            "undefined not -inf/+inf in directional compare");
    f.check(Instant::max_start(a, u) == a && Instant::min_end(u, a) == a,
            "defined bound does not win the meet");
    f.check(Instant::max_start(a, b) == hi && Instant::min_end(a, b) == lo,
            "max_start/min_end on defined pair");
    Duration d = Instant::minus(hi, lo);
    f.check(!d.is_undefined() &&
                *d.seconds == hi.epoch_seconds() - lo.epoch_seconds(),
            "duration arithmetic");
    f.check(Instant::minus(u, a).is_undefined() && Instant::minus(a, u).is_undefined(),
            "duration with undefined endpoint");
  }
  if (why && f.count) *why = f.first;
  return f.count;
}

inline int check_interval_axioms(int cases, unsigned seed, std::string* why = nullptr) {
  Rng r(seed);
  Failures f;
  const TimeInterval univ = TimeInterval::universal();
  const TimeInterval bot = TimeInterval::bottom();
  for (int i = 0; i < cases; ++i) {
    TimeInterval a = rnd_interval(r), b = rnd_interval(r), c = rnd_interval(r);
    Instant x = rnd_day(r);

    f.check(TimeInterval::inside(x, univ), "instant not inside universal");
    f.check(!TimeInterval::inside(x, bot), "instant inside bottom");
    if (!a.is_bottom()) {
      bool expect = Instant::start_leq(a.start_time(), x) &&
                    Instant::end_leq(x, a.end_time());
      f.check(TimeInterval::inside(x, a) == expect, "inside endpoint law");
    }

    f.check(a.start_time() == TimeInterval::make(a.start_time(), a.end_time()).start_time() ||
                a.is_bottom(),
            "startTime accessor");
    f.check(TimeInterval::make(x, Instant::undefined()).end_time() == Instant::undefined(),
            "endTime(interval(x, undefined)) != undefined");

    f.check(TimeInterval::disjoint(a, b) == TimeInterval::disjoint(b, a),
            "disjoint not symmetric");
    f.check(TimeInterval::disjoint(bot, a), "bottom not disjoint from everything");
    f.check(a.is_bottom() || !TimeInterval::disjoint(a, univ),
            "non-bottom disjoint from universal");
    f.check(TimeInterval::test_intersect(a, b) == !TimeInterval::disjoint(a, b),
            "testIntersect != !disjoint");

    f.check(TimeInterval::inter(a, univ) == a, "universal not identity of inter");
    f.check(TimeInterval::inter(a, a) == a, "inter not idempotent");
    f.check(TimeInterval::inter(a, b) == TimeInterval::inter(b, a),
            "inter not commutative");
    f.check(TimeInterval::inter(TimeInterval::inter(a, b), c) ==
                TimeInterval::inter(a, TimeInterval::inter(b, c)),
            "inter not associative");
    f.check(TimeInterval::inter(a, bot).is_bottom(), "bottom not absorbing for inter");
    f.check(TimeInterval::incl(TimeInterval::inter(a, b), a), "inter not below a");
    f.check(TimeInterval::disjoint(a, b) == TimeInterval::inter(a, b).is_bottom(),
            "disjoint vs empty meet");

    f.check(TimeInterval::union_hull(a, a) == a, "union not idempotent");
    f.check(TimeInterval::union_hull(a, b) == TimeInterval::union_hull(b, a),
            "union not commutative");
    f.check(TimeInterval::union_hull(a, bot) == a, "bottom not identity of union");
    if (!TimeInterval::disjoint(a, b) && !a.is_bottom() && !b.is_bottom()) {
      TimeInterval u = TimeInterval::union_hull(a, b);
      f.check(u.start_time() == Instant::min_hull(a.start_time(), b.start_time()) &&
                  u.end_time() == Instant::max_hull(a.end_time(), b.end_time()),
              "union hull endpoints");
      f.check(TimeInterval::incl(a, u) && TimeInterval::incl(b, u),
              "operands not inside union hull");
    } else if (!a.is_bottom() && !b.is_bottom()) {
      f.check(TimeInterval::union_hull(a, b) == univ, "disjoint union not universal");
    }

    f.check(TimeInterval::incl(a, a), "incl not reflexive");
    f.check(TimeInterval::incl(bot, a), "bottom not included in a");
    if (TimeInterval::incl(a, b) && TimeInterval::incl(b, a))
      f.check(a == b, "incl not antisymmetric");
    if (TimeInterval::incl(a, b) && TimeInterval::incl(b, c))
      f.check(TimeInterval::incl(a, c), "incl not transitive");
  }
  if (why && f.count) *why = f.first;
  return f.count;
}

inline int check_space_axioms(int cases, unsigned seed, std::string* why = nullptr) {
  Rng r(seed);
  Failures f;
  const ContainmentTable t = geo_table();
  const SpaceRegion univ = SpaceRegion::universal();
  const SpaceRegion bot = SpaceRegion::bottom();
  for (int i = 0; i < cases; ++i) {
    SpaceRegion a = rnd_region(r), b = rnd_region(r), c = rnd_region(r);

    f.check(SpaceRegion::inside(a, a, t), "inside not reflexive");
    f.check(SpaceRegion::inside(a, univ, t), "a not inside universal");
    f.check(SpaceRegion::inside(bot, a, t), "bottom not inside a");
    if (SpaceRegion::inside(a, b, t) && SpaceRegion::inside(b, c, t))
      f.check(SpaceRegion::inside(a, c, t), "inside not transitive");

    SpaceRegion m = SpaceRegion::inter(b, c, t);
    f.check(SpaceRegion::inside(a, m, t) ==
                (SpaceRegion::inside(a, b, t) && SpaceRegion::inside(a, c, t)),
            "inside(a, inter(b,c)) law");
    f.check(SpaceRegion::inter(a, a, t) == a, "interSpace not idempotent");
    f.check(SpaceRegion::inter(a, univ, t) == a, "universal not identity of inter");
    f.check(SpaceRegion::inter(a, bot, t).is_bottom(), "bottom not absorbing");
    f.check(SpaceRegion::inter(a, b, t) == SpaceRegion::inter(b, a, t),
            "interSpace not commutative");
    if (a.is_region() && b.is_region() && !(a == b) &&
        !SpaceRegion::inside(a, b, t) && !SpaceRegion::inside(b, a, t))
      f.check(SpaceRegion::inter(a, b, t).is_bottom(), "incomparable meet not bottom");

    f.check(SpaceRegion::union_(a, a, t) == a, "unionSpace not idempotent");
    f.check(SpaceRegion::union_(a, bot, t) == a, "bottom not identity of union");
    f.check(SpaceRegion::union_(a, b, t) == SpaceRegion::union_(b, a, t),
            "unionSpace not commutative");
    SpaceRegion u = SpaceRegion::union_(a, b, t);
    f.check(SpaceRegion::inside(a, u, t) && SpaceRegion::inside(b, u, t),
            "operands not inside union");
  }
  if (why && f.count) *why = f.first;
  return f.count;
}

inline int check_validity_axioms(int cases, unsigned seed, std::string* why = nullptr) {
  Rng r(seed);
  Failures f;
  const ContainmentTable t = geo_table();
  const ValidityContext e = ValidityContext::empty();
  for (int i = 0; i < cases; ++i) {
    ValidityContext a = rnd_validity(r), b = rnd_validity(r), c = rnd_validity(r);
    TimeInterval ti = rnd_interval(r);
    SpaceRegion sp = rnd_region(r);

    f.check(ValidityContext::inter(e, a, t) == a, "interValidity(empty, a) != a");
    f.check(ValidityContext::inter(a, a, t) == a, "interValidity not idempotent");
    f.check(ValidityContext::inter(a, b, t) == ValidityContext::inter(b, a, t),
            "interValidity not commutative");
    f.check(ValidityContext::inter(ValidityContext::inter(a, b, t), c, t) ==
                ValidityContext::inter(a, ValidityContext::inter(b, c, t), t),
            "interValidity not associative");
    ValidityContext m = ValidityContext::inter(a, b, t);
    f.check(m.extract_time() == TimeInterval::inter(a.extract_time(), b.extract_time()),
            "interValidity time component");
    f.check(m.extract_space() ==
                SpaceRegion::inter(a.extract_space(), b.extract_space(), t),
            "interValidity space component");
    if (a.is_bottom() || b.is_bottom())
      f.check(m.is_bottom(), "BOTTOM not absorbing for interValidity");

    f.check(ValidityContext::test_intersect(a, b, t) == !m.is_bottom(),
            "testIntersectValidity vs meet");
    f.check(a.is_bottom() || ValidityContext::test_intersect(a, e, t),
            "testIntersect vs empty not true");

    f.check(a.with_time(ti).extract_time() == ti, "extractTime(setTime(a, t)) != t");
    f.check(a.with_space(sp).extract_space() == sp, "extractSpace(setSpace(a, s)) != s");
    f.check(a.with_time(ti).extract_space() == a.extract_space(),
            "setTime disturbs space");
    f.check(a.with_time(ti).with_space(sp) == a.with_space(sp).with_time(ti),
            "setTime/setSpace do not commute");
    f.check(ValidityContext::time_validity(ti) == e.with_time(ti),
            "setTime(emptyValidity, t) != timeValidity(t)");
    f.check(ValidityContext::space_validity(sp).extract_time().is_universal(),
            "extractTime(spaceValidity(s)) not universal");
    f.check(a == ValidityContext::timespace(a.extract_time(), a.extract_space()),
            "context not determined by components");

    ValidityContext u = ValidityContext::union_(a, b, t);
    f.check(u.extract_time() ==
                TimeInterval::union_hull(a.extract_time(), b.extract_time()),
            "unionValidity time component");
    f.check(ValidityContext::union_(e, a, t) == e, "union with empty not empty");

    f.check(ValidityContext::incl(a, a, t), "incl not reflexive");
    if (ValidityContext::incl(a, b, t) && ValidityContext::incl(b, a, t))
      f.check(a == b, "incl not antisymmetric");
    if (ValidityContext::incl(a, b, t) && ValidityContext::incl(b, c, t))
      f.check(ValidityContext::incl(a, c, t), "incl not transitive");
    f.check(ValidityContext::incl(m, a, t), "meet not below a");
  }
  if (why && f.count) *why = f.first;
  return f.count;
}

inline int check_causality_axioms(int cases, unsigned seed, std::string* why = nullptr) {
  Rng r(seed);
  Failures f;
  const Causality e = Causality::empty();
  const InverseCauseMap defaults = InverseCauseMap::defaults();
  for (int i = 0; i < cases; ++i) {
    Causality a = rnd_causality(r), b = rnd_causality(r), c = rnd_causality(r);
    std::set<Iri> es = rnd_iri_set(r, 3);
    Iri e1 = rnd_entity(r);

    Causality added = a.add_end_cause({e1});
    std::set<Iri> expect = a.end_cause();
    expect.insert(e1);
    f.check(added.end_cause() == expect, "getEndCause(addEndCause({e1}, a)) law");
    f.check(added.has_cause() == a.has_cause(), "addEndCause disturbs hasCause");
    f.check(a.add_has_cause({e1}).end_cause() == a.end_cause(),
            "addHasCause disturbs endCause");
    f.check(a.add_end_cause({}) == a && a.add_has_cause({}) == a,
            "empty-set addition not identity");

    Causality u = Causality::union_(a, b);
    std::set<Iri> ends = a.end_cause();
    ends.insert(b.end_cause().begin(), b.end_cause().end());
    std::set<Iri> has = a.has_cause();
    has.insert(b.has_cause().begin(), b.has_cause().end());
    f.check(u.end_cause() == ends && u.has_cause() == has, "unionCause components");
    f.check(Causality::union_(a, b) == Causality::union_(b, a),
            "unionCause not commutative");
    f.check(Causality::union_(Causality::union_(a, b), c) ==
                Causality::union_(a, Causality::union_(b, c)),
            "unionCause not associative");
    f.check(Causality::union_(a, a) == a, "unionCause not idempotent");
    f.check(Causality::union_(e, a) == a, "emptyCause not identity");

    f.check(Causality::inverse(Causality::inverse(a, defaults), defaults) == a,
            "inverse not involutive under the default map");
    Causality inv = Causality::inverse(a.add_end_cause({e1}), defaults);
    f.check(inv.end_cause().count(defaults.apply(e1)) == 1,
            "inverse does not distribute over addEndCause");
    f.check((a == b) == (a.end_cause() == b.end_cause() && a.has_cause() == b.has_cause()),
            "causality equality law");
    (void)es;
  }
  if (why && f.count) *why = f.first;
  return f.count;
}

inline int check_sequence_axioms(int cases, unsigned seed, std::string* why = nullptr) {
  Rng r(seed);
  Failures f;
  for (int i = 0; i < cases; ++i) {
    Iri x = rnd_entity(r), y = rnd_entity(r);
    std::uint64_t n = static_cast<std::uint64_t>(r.range(0, 500));

    SequenceNode s2 = SequenceNode::seq(x, y);
    f.check(s2.previous() && *s2.previous() == x, "previous(seq(x,y)) != x");
    f.check(s2.next() && *s2.next() == y, "next(seq(x,y)) != y");
    f.check(!s2.has_ordinal(), "seq(x,y) has an ordinal");

    SequenceNode s3 = SequenceNode::seq(x, y, n);
    f.check(s3.has_ordinal() && s3.ordinal() == n, "ordinal(seq(x,y,n)) != n");
    f.check(s3.previous() && *s3.previous() == x && s3.next() && *s3.next() == y,
            "seq(x,y,n) pointers");

    SequenceNode wn = SequenceNode::with_next(x);
    f.check(wn.previous() == nullptr && !wn.has_previous(),
            "previous(seqWithNext(x)) defined");
    f.check(wn.has_next() && *wn.next() == x, "next(seqWithNext(x)) != x");

    SequenceNode wp = SequenceNode::with_previous(x);
    f.check(wp.next() == nullptr && !wp.has_next(), "next(seqWithPrev(x)) defined");
    f.check(wp.has_previous() && *wp.previous() == x, "previous(seqWithPrev(x)) != x");

    SequenceNode wo = SequenceNode::with_ordinal(n);
    f.check(!wo.has_previous() && !wo.has_next() && wo.ordinal() == n,
            "seqWithOrdinal fields");

    SequenceNode es = SequenceNode::empty();
    f.check(!es.has_previous() && !es.has_next() && !es.has_ordinal() && es.is_empty(),
            "emptySequence has a field");

    std::optional<Iri> p = r.pct(50) ? std::optional<Iri>(x) : std::nullopt;
    std::optional<Iri> nx = r.pct(50) ? std::optional<Iri>(y) : std::nullopt;
    std::optional<std::uint64_t> o =
        r.pct(50) ? std::optional<std::uint64_t>(n) : std::nullopt;
    SequenceNode m = SequenceNode::make(p, nx, o);
    f.check(m.has_previous() == p.has_value() && m.has_next() == nx.has_value() &&
                m.has_ordinal() == o.has_value(),
            "make/accessor round trip presence");
  }
  if (why && f.count) *why = f.first;
  return f.count;
}

inline int check_provenance_axioms(int cases, unsigned seed, std::string* why = nullptr) {
  Rng r(seed);
  Failures f;
  const Provenance e = Provenance::empty();
  for (int i = 0; i < cases; ++i) {
    Provenance a = rnd_provenance(r), b = rnd_provenance(r), c = rnd_provenance(r);
    std::set<Iri> es = rnd_iri_set(r, 3);

    Provenance u = Provenance::union_(a, b);
    std::set<Iri> expect = a.sources();
    expect.insert(b.sources().begin(), b.sources().end());
    f.check(u.sources() == expect, "getSources(union(a,b)) law");
    f.check(Provenance::union_(a, b) == Provenance::union_(b, a),
            "unionProv not commutative");
    f.check(Provenance::union_(Provenance::union_(a, b), c) ==
                Provenance::union_(a, Provenance::union_(b, c)),
            "unionProv not associative");
    f.check(Provenance::union_(a, a) == a, "unionProv not idempotent");
    f.check(Provenance::union_(e, a) == a, "emptyProvenance not identity");

    Provenance added = a.add_sources(es);
    expect = a.sources();
    expect.insert(es.begin(), es.end());
    f.check(added.sources() == expect, "addSources law");
  }
  if (why && f.count) *why = f.first;
  return f.count;
}

inline int check_annotations_axioms(int cases, unsigned seed, std::string* why = nullptr) {
  Rng r(seed);
  Failures f;
  for (int i = 0; i < cases; ++i) {
    Annotations a = rnd_annotations(r);
    Iri q{"pq:P" + std::to_string(r.range(1, 30))};
    Iri q2{"pq:P" + std::to_string(r.range(31, 60))};
    Value v = rnd_value(r);

    std::set<Value> expect = a.get(q);
    expect.insert(v);
    f.check(a.add(q, v).get(q) == expect, "getA(addA(a, v)) != {v} union getA(a)");
    f.check(a.add(q, v).get(q2) == a.get(q2), "add disturbs other keys");
    f.check(Annotations::empty().get(q).empty(), "getA(emptyAnnotations) not empty");
    f.check(a.add(q, v).add(q, v) == a.add(q, v), "add not idempotent");

    Annotations rel = a.add(Annotations::kRelationQualifier, v);
    f.check(rel.get_relation() == rel.get(Annotations::kRelationQualifier),
            "getRelation alias");
    Annotations cls = a.add(Annotations::kClassQualifier, v);
    f.check(cls.get_class() == cls.get(Annotations::kClassQualifier), "getClass alias");
  }
  if (why && f.count) *why = f.first;
  return f.count;
}

// ---------------------------------------------------------------------------
// Interval brute-force oracle (day enumeration)

inline int check_interval_oracle(int pairs, unsigned seed, std::string* why = nullptr) {
  Rng r(seed);
  Failures f;
  for (int i = 0; i < pairs; ++i) {
    TimeInterval a = rnd_bounded_interval(r, 180);
    TimeInterval b;
    if (r.pct(60)) {
      std::int64_t d1 = a.start_time().epoch_seconds() + r.range(-120, 120) * 86400;
      std::int64_t d2 = a.start_time().epoch_seconds() + r.range(-120, 120) * 86400;
      b = TimeInterval::make(Instant::at(std::min(d1, d2)),
                             Instant::at(std::max(d1, d2)));
    } else {
      b = rnd_bounded_interval(r, 180);
    }

    auto member = [](std::int64_t day, const TimeInterval& t) {
      return t.start_time().epoch_seconds() <= day && day <= t.end_time().epoch_seconds();
    };
    std::int64_t lo = std::min(a.start_time().epoch_seconds(),
                               b.start_time().epoch_seconds()) - 2 * 86400;
    std::int64_t hi = std::max(a.end_time().epoch_seconds(),
                               b.end_time().epoch_seconds()) + 2 * 86400;

    bool any_common = false;
    std::int64_t first_common = 0, last_common = 0;
    std::int64_t first_any = 0, last_any = 0;
    bool any_member = false;
    for (std::int64_t d = lo; d <= hi; d += 86400) {
      bool in_a = member(d, a), in_b = member(d, b);
      f.check(TimeInterval::inside(Instant::at(d), a) == in_a, "inside disagrees with oracle");
      if (in_a && in_b) {
        if (!any_common) first_common = d;
        last_common = d;
        any_common = true;
      }
      if (in_a || in_b) {
        if (!any_member) first_any = d;
        last_any = d;
        any_member = true;
      }
    }

    f.check(TimeInterval::disjoint(a, b) == !any_common, "disjoint disagrees with oracle");

    TimeInterval m = TimeInterval::inter(a, b);
    if (any_common)
      f.check(m == TimeInterval::make(Instant::at(first_common), Instant::at(last_common)),
              "interInterval disagrees with oracle");
    else
      f.check(m.is_bottom(), "interInterval of disjoint pair not bottom");

    TimeInterval u = TimeInterval::union_hull(a, b);
    if (any_common)
      f.check(u == TimeInterval::make(Instant::at(first_any), Instant::at(last_any)),
              "unionInterval disagrees with hull oracle");
    else
      f.check(u.is_universal(), "unionInterval of disjoint pair not universal");
  }
  if (why && f.count) *why = f.first;
  return f.count;
}

// ---------------------------------------------------------------------------
// Taxonomy saturation oracle

// Brute-force join iteration over instance-of/subclass-of, independent of the
// engine's matching machinery.
inline std::set<std::string> taxonomy_closure_oracle(std::vector<Statement> all) {
  std::set<std::string> keys;
  for (const auto& s : all) keys.insert(s.canonical_key());
  const ContainmentTable t;
  bool changed = true;
  while (changed) {
    changed = false;
    std::vector<Statement> fresh;
    for (const auto& s1 : all) {
      for (const auto& s2 : all) {
        bool chain1 = s1.property == Iri{"wd:P31"} && s2.property == Iri{"wd:P279"};
        bool chain2 = s1.property == Iri{"wd:P279"} && s2.property == Iri{"wd:P279"};
        if (!chain1 && !chain2) continue;
        if (!s1.value || !s1.value->is_entity()) continue;
        if (!(s1.value->iri() == s2.subject)) continue;
        if (!ValidityContext::test_intersect(s1.validity, s2.validity, t)) continue;
        Statement d;
        d.kind = StatementKind::st;
        d.subject = s1.subject;
        d.property = chain1 ? Iri{"wd:P31"} : Iri{"wd:P279"};
        d.value = s2.value;
        d.validity = ValidityContext::inter(s1.validity, s2.validity, t);
        d.causality = Causality::union_(s1.causality, s2.causality);
        d.provenance = Provenance::union_(s1.provenance, s2.provenance);
        if (keys.insert(d.canonical_key()).second) {
          fresh.push_back(d);
          changed = true;
        }
      }
    }
    all.insert(all.end(), fresh.begin(), fresh.end());
    if (keys.size() > 20000) throw std::runtime_error("oracle closure too large");
  }
  return keys;
}

inline std::vector<Statement> rnd_taxonomy(unsigned seed) {
  Rng r(seed + 17);
  std::int64_t classes = r.range(3, 40);
  std::int64_t edges = r.range(1, 60);
  std::int64_t instances = r.range(1, 12);
  auto cls = [](std::int64_t i) { return "wd:QC" + std::to_string(i); };
  auto validity = [&r]() {
    return r.pct(25) ? ValidityContext::empty()
                     : ValidityContext::time_validity(rnd_bounded_interval(r, 3000));
  };
  auto provenance = [&r]() {
    return r.pct(50) ? Provenance::of({Iri{"wd:QR" + std::to_string(r.range(1, 9))}})
                     : Provenance::empty();
  };
  std::vector<Statement> out;
  for (std::int64_t i = 0; i < edges; ++i) {
    std::int64_t from = r.range(1, classes - 1);
    std::int64_t to = r.range(from + 1, std::min(classes, from + 6));
    SortValues s;
    s.validity = validity();
    s.provenance = provenance();
    s.causality = r.pct(30) ? end_cause(rnd_entity(r)) : Causality::empty();
    out.push_back(make_st(cls(from), "wd:P279", cls(to), s));
  }
  for (std::int64_t i = 0; i < instances; ++i) {
    SortValues s;
    s.validity = validity();
    s.provenance = provenance();
    out.push_back(make_st("wd:QX" + std::to_string(i), "wd:P31", cls(r.range(1, classes)), s));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Misc helpers

inline std::set<std::string> graph_keys(const KnowledgeGraph& g) {
  std::set<std::string> keys;
  for (const auto& s : g.statements()) keys.insert(s.canonical_key());
  return keys;
}

inline std::string sorted_ndjson(const KnowledgeGraph& g) {
  std::ostringstream buf;
  write_graph_ndjson(g, buf);
  std::vector<std::string> lines;
  std::istringstream in(buf.str());
  for (std::string line; std::getline(in, line);) lines.push_back(line);
  std::sort(lines.begin(), lines.end());
  std::string out;
  for (const auto& l : lines) out += l + "\n";
  return out;
}

inline std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

}  // namespace kgqtest
