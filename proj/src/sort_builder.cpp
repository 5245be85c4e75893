#include "kgq/sort_builder.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace kgq {

using nlohmann::json;  // default json: object keys kept sorted

std::string to_string(SortCategory c) {
  switch (c) {
    case SortCategory::Validity: return "validity";
    case SortCategory::Causality: return "causality";
    case SortCategory::Sequence: return "sequence";
    case SortCategory::Provenance: return "provenance";
    case SortCategory::Annotation: return "annotation";
  }
  return {};
}

std::string to_string(QualifierRole r) {
  switch (r) {
    case QualifierRole::TimeStart: return "timeStart";
    case QualifierRole::TimeEnd: return "timeEnd";
    case QualifierRole::PointInTime: return "pointInTime";
    case QualifierRole::Space: return "space";
    case QualifierRole::CauseHas: return "causeHas";
    case QualifierRole::CauseEnd: return "causeEnd";
    case QualifierRole::SeqPrev: return "seqPrev";
    case QualifierRole::SeqNext: return "seqNext";
    case QualifierRole::SeqOrdinal: return "seqOrdinal";
    case QualifierRole::Source: return "source";
    case QualifierRole::Generic: return "generic";
  }
  return {};
}

namespace {

SortCategory category_from_string(const std::string& s) {
  if (s == "validity") return SortCategory::Validity;
  if (s == "causality") return SortCategory::Causality;
  if (s == "sequence") return SortCategory::Sequence;
  if (s == "provenance") return SortCategory::Provenance;
  if (s == "annotation") return SortCategory::Annotation;
  throw std::runtime_error("unknown sort category: " + s);
}

QualifierRole role_from_string(const std::string& s) {
  if (s == "timeStart") return QualifierRole::TimeStart;
  if (s == "timeEnd") return QualifierRole::TimeEnd;
  if (s == "pointInTime") return QualifierRole::PointInTime;
  if (s == "space") return QualifierRole::Space;
  if (s == "causeHas") return QualifierRole::CauseHas;
  if (s == "causeEnd") return QualifierRole::CauseEnd;
  if (s == "seqPrev") return QualifierRole::SeqPrev;
  if (s == "seqNext") return QualifierRole::SeqNext;
  if (s == "seqOrdinal") return QualifierRole::SeqOrdinal;
  if (s == "source") return QualifierRole::Source;
  if (s == "generic") return QualifierRole::Generic;
  throw std::runtime_error("unknown qualifier role: " + s);
}

bool role_legal(SortCategory c, QualifierRole r) {
  switch (r) {
    case QualifierRole::TimeStart:
    case QualifierRole::TimeEnd:
    case QualifierRole::PointInTime:
    case QualifierRole::Space:
      return c == SortCategory::Validity;
    case QualifierRole::CauseHas:
    case QualifierRole::CauseEnd:
      return c == SortCategory::Causality;
    case QualifierRole::SeqPrev:
    case QualifierRole::SeqNext:
    case QualifierRole::SeqOrdinal:
      return c == SortCategory::Sequence;
    case QualifierRole::Source:
      return c == SortCategory::Provenance;
    case QualifierRole::Generic:
      return true;  // any category may carry slotless members
  }
  return false;
}

}  // namespace

CategoryMap CategoryMap::builtin() {
  CategoryMap m;
  auto set = [&m](const char* p, SortCategory c, QualifierRole r) {
    m.set(Iri{p}, c, r);
  };
  set("pq:P580", SortCategory::Validity, QualifierRole::TimeStart);
  set("pq:P582", SortCategory::Validity, QualifierRole::TimeEnd);
  set("pq:P585", SortCategory::Validity, QualifierRole::PointInTime);
  set("pq:P1001", SortCategory::Validity, QualifierRole::Space);
  // Known validity qualifiers without a slot in the time x space model.
  set("pq:P518", SortCategory::Validity, QualifierRole::Generic);
  set("pq:P1264", SortCategory::Validity, QualifierRole::Generic);
  set("pq:P1319", SortCategory::Validity, QualifierRole::Generic);
  set("pq:P1326", SortCategory::Validity, QualifierRole::Generic);

  set("pq:P828", SortCategory::Causality, QualifierRole::CauseHas);
  set("pq:P1534", SortCategory::Causality, QualifierRole::CauseEnd);

  set("pq:P1365", SortCategory::Sequence, QualifierRole::SeqPrev);
  set("pq:P155", SortCategory::Sequence, QualifierRole::SeqPrev);
  set("pq:P1366", SortCategory::Sequence, QualifierRole::SeqNext);
  set("pq:P156", SortCategory::Sequence, QualifierRole::SeqNext);
  set("pq:P1545", SortCategory::Sequence, QualifierRole::SeqOrdinal);

  set("pq:P1932", SortCategory::Provenance, QualifierRole::Source);
  set("pq:P459", SortCategory::Provenance, QualifierRole::Source);
  set("pq:P1810", SortCategory::Provenance, QualifierRole::Source);
  set("pq:P1013", SortCategory::Provenance, QualifierRole::Source);
  set("pq:P1480", SortCategory::Provenance, QualifierRole::Source);
  return m;
}

void CategoryMap::set(const Iri& property, SortCategory c, QualifierRole r) {
  if (!role_legal(c, r))
    throw std::runtime_error("role " + to_string(r) + " not legal for category " +
                             to_string(c));
  entries_[property] = {c, r};
}

std::pair<SortCategory, QualifierRole> CategoryMap::categorize(
    const Iri& qualifier) const {
  auto it = entries_.find(qualifier);
  if (it != entries_.end()) return it->second;
  return {SortCategory::Annotation, QualifierRole::Generic};
}

void CategoryMap::load_overrides_csv(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open category-map file: " + path);
  load_overrides_stream(in);
}

void CategoryMap::load_overrides_stream(std::istream& in) {
  std::string line;
  bool first = true;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    if (first) {
      first = false;
      if (line == "property,category,role") continue;
    }
    std::istringstream row(line);
    std::string prop, cat, role;
    if (!std::getline(row, prop, ',') || !std::getline(row, cat, ',') ||
        !std::getline(row, role))
      throw std::runtime_error("malformed category-map row: " + line);
    set(Iri{prop}, category_from_string(cat), role_from_string(role));
  }
}

namespace {

// One endpoint of the validity interval as it accumulates from qualifiers.
struct EndpointSlot {
  bool set = false;
  Instant instant;  // undefined when marked noValue/someValue
};

std::optional<Instant> parse_time_value(const Value& v) {
  if (!v.is_datavalue()) return std::nullopt;
  return Instant::parse(v.lexical());
}

}  // namespace

SortValues build_sorts(const QualifierBag& bag, const CategoryMap& categories,
                       Diagnostics& diagnostics, const std::string& where) {
  SortValues out;
  Annotations ann;
  EndpointSlot start, end, point;
  std::optional<Iri> space;
  std::set<Iri> has_cause, end_cause, sources;
  std::optional<Iri> seq_prev, seq_next;
  std::optional<std::uint64_t> seq_ordinal;

  auto fallback = [&](const Iri& q, const Value& v, const std::string& msg) {
    ann = ann.add(q, v);
    diagnostics.push_back({where, q.text + ": " + msg});
  };

  auto time_endpoint = [&](const Iri& q, const Value& v, EndpointSlot& slot,
                           const char* name) {
    if (slot.set) {
      fallback(q, v, std::string("duplicate ") + name + " qualifier; first value wins");
      return;
    }
    if (v.kind() == Value::Kind::NoValue) {
      slot = {true, Instant::undefined()};
      return;
    }
    if (v.kind() == Value::Kind::SomeValue) {
      slot = {true, Instant::undefined()};
      diagnostics.push_back({where, q.text + ": someValue time endpoint left unconstrained"});
      return;
    }
    auto t = parse_time_value(v);
    if (!t) {
      fallback(q, v, std::string("unparseable ") + name + " value");
      return;
    }
    slot = {true, *t};
  };

  auto entity_member = [&](const Iri& q, const Value& v, std::set<Iri>& dest,
                           const char* name) {
    if (v.kind() == Value::Kind::NoValue || v.kind() == Value::Kind::SomeValue) {
      fallback(q, v, std::string(name) + ": noValue/someValue member skipped");
      return;
    }
    if (!v.is_entity()) {
      fallback(q, v, std::string(name) + ": non-entity value");
      return;
    }
    dest.insert(v.iri());
  };

  auto pointer = [&](const Iri& q, const Value& v, std::optional<Iri>& dest,
                     const char* name) {
    if (!v.is_entity()) {
      fallback(q, v, std::string(name) + ": non-entity sequence pointer");
      return;
    }
    if (dest) {
      fallback(q, v, std::string("duplicate ") + name + " pointer; first value wins");
      return;
    }
    dest = v.iri();
  };

  for (const auto& [q, v] : bag.pairs) {
    auto [cat, role] = categories.categorize(q);
    switch (role) {
      case QualifierRole::TimeStart:
        time_endpoint(q, v, start, "start time");
        break;
      case QualifierRole::TimeEnd:
        time_endpoint(q, v, end, "end time");
        break;
      case QualifierRole::PointInTime:
        time_endpoint(q, v, point, "point in time");
        break;
      case QualifierRole::Space:
        if (!v.is_entity()) {
          fallback(q, v, "space qualifier with non-entity value");
        } else if (space) {
          fallback(q, v, "duplicate space qualifier; first value wins");
        } else {
          space = v.iri();
        }
        break;
      case QualifierRole::CauseHas:
        entity_member(q, v, has_cause, "has cause");
        break;
      case QualifierRole::CauseEnd:
        entity_member(q, v, end_cause, "end cause");
        break;
      case QualifierRole::SeqPrev:
        pointer(q, v, seq_prev, "previous");
        break;
      case QualifierRole::SeqNext:
        pointer(q, v, seq_next, "next");
        break;
      case QualifierRole::SeqOrdinal: {
        if (seq_ordinal) {
          fallback(q, v, "duplicate ordinal; first value wins");
          break;
        }
        const std::string& lex = v.lexical();
        if (!v.is_datavalue() || lex.empty() ||
            lex.find_first_not_of("0123456789") != std::string::npos) {
          fallback(q, v, "ordinal is not a natural number");
          break;
        }
        seq_ordinal = std::stoull(lex);
        break;
      }
      case QualifierRole::Source:
        entity_member(q, v, sources, "provenance source");
        break;
      case QualifierRole::Generic:
        if (cat == SortCategory::Annotation) {
          ann = ann.add(q, v);
        } else {
          fallback(q, v, to_string(cat) +
                             " qualifier without a slot in the basic sort model");
        }
        break;
    }
  }

  // Assemble the time interval. A lone point in time is the degenerate
  // interval [t, t].
  TimeInterval time = TimeInterval::universal();
  if (point.set && (start.set || end.set)) {
    diagnostics.push_back(
        {where, "point-in-time combined with start/end; point routed to annotations"});
    if (point.instant.is_defined())
      ann = ann.add(Iri{"pq:P585"},
                    Value::datavalue(point.instant.to_iso(), Iri{"xsd:dateTime"}));
    point.set = false;
  }
  try {
    if (point.set) {
      time = TimeInterval::make(point.instant, point.instant);
    } else if (start.set || end.set) {
      time = TimeInterval::make(start.set ? start.instant : Instant::undefined(),
                                end.set ? end.instant : Instant::undefined());
    }
  } catch (const std::invalid_argument& e) {
    diagnostics.push_back({where, std::string("validity time dropped: ") + e.what()});
    if (start.instant.is_defined())
      ann = ann.add(Iri{"pq:P580"},
                    Value::datavalue(start.instant.to_iso(), Iri{"xsd:dateTime"}));
    if (end.instant.is_defined())
      ann = ann.add(Iri{"pq:P582"},
                    Value::datavalue(end.instant.to_iso(), Iri{"xsd:dateTime"}));
  }

  out.validity = ValidityContext::timespace(
      time, space ? SpaceRegion::region(*space) : SpaceRegion::universal());
  out.causality = Causality::empty().add_has_cause(has_cause).add_end_cause(end_cause);
  out.sequence = SequenceNode::make(seq_prev, seq_next, seq_ordinal);
  out.annotations = ann;
  out.provenance = Provenance::of(sources);
  return out;
}

}  // namespace kgq
