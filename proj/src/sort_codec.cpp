#include <stdexcept>

#include <json.hpp>

#include "kgq/sort_builder.hpp"

// Canonical JSON codec for sort values. nlohmann's default json keeps object
// keys sorted, which gives the canonical key order directly; std::set gives
// sorted array members.

namespace kgq {

using nlohmann::json;

namespace {

json value_to_json(const Value& v) {
  if (v.is_datavalue())
    return json{{"datatype", v.datatype().text}, {"lexical", v.lexical()}};
  return json(v.canonical_token());
}

Value value_from_json(const json& j, const char* where) {
  if (j.is_string()) return Value::from_canonical_token(j.get<std::string>());
  if (j.is_object()) {
    for (const auto& [k, _] : j.items())
      if (k != "datatype" && k != "lexical")
        throw std::runtime_error(std::string("decode ") + where +
                                 ": unexpected value key '" + k + "'");
    if (!j.contains("lexical") || !j.contains("datatype"))
      throw std::runtime_error(std::string("decode ") + where +
                               ": datavalue needs 'lexical' and 'datatype'");
    return Value::datavalue(j.at("lexical").get<std::string>(),
                            Iri{j.at("datatype").get<std::string>()});
  }
  throw std::runtime_error(std::string("decode ") + where + ": bad value form");
}

json parse_or_throw(const std::string& text, const char* what) {
  json j = json::parse(text, nullptr, false);
  if (j.is_discarded() || !j.is_object())
    throw std::runtime_error(std::string("decode ") + what +
                             ": input is not a JSON object");
  return j;
}

[[noreturn]] void bad_key(const char* what, const std::string& key) {
  throw std::runtime_error(std::string("decode ") + what + ": unexpected key '" +
                           key + "'");
}

}  // namespace

std::string encode_validity(const ValidityContext& v) {
  json j = json::object();
  const TimeInterval& t = v.extract_time();
  if (t.is_bottom()) {
    j["time"] = json{{"empty", true}};
  } else if (!t.is_universal()) {
    json jt = json::object();
    if (t.start_time().is_defined()) jt["start"] = t.start_time().to_iso();
    if (t.end_time().is_defined()) jt["end"] = t.end_time().to_iso();
    j["time"] = jt;
  }
  const SpaceRegion& s = v.extract_space();
  if (s.is_bottom())
    j["space"] = json{{"empty", true}};
  else if (s.is_region())
    j["space"] = json{{"region", s.iri().text}};
  return j.dump();
}

ValidityContext decode_validity(const std::string& text) {
  json j = parse_or_throw(text, "validity");
  TimeInterval time = TimeInterval::universal();
  SpaceRegion space = SpaceRegion::universal();
  for (const auto& [key, val] : j.items()) {
    if (key == "time") {
      Instant start, end;
      bool bottom = false;
      for (const auto& [k2, v2] : val.items()) {
        if (k2 == "start" || k2 == "end") {
          auto t = Instant::parse(v2.get<std::string>());
          if (!t)
            throw std::runtime_error("decode validity: bad instant in '" + k2 + "'");
          (k2 == "start" ? start : end) = *t;
        } else if (k2 == "empty") {
          bottom = v2.get<bool>();
        } else {
          bad_key("validity", "time." + k2);
        }
      }
      time = bottom ? TimeInterval::bottom() : TimeInterval::make(start, end);
    } else if (key == "space") {
      for (const auto& [k2, v2] : val.items()) {
        if (k2 == "region")
          space = SpaceRegion::region(Iri{v2.get<std::string>()});
        else if (k2 == "empty" && v2.get<bool>())
          space = SpaceRegion::bottom();
        else
          bad_key("validity", "space." + k2);
      }
    } else {
      bad_key("validity", key);
    }
  }
  return ValidityContext::timespace(time, space);
}

std::string encode_causality(const Causality& c) {
  if (c.is_empty()) return "{}";
  json j;
  j["endCause"] = json::array();
  for (const auto& e : c.end_cause()) j["endCause"].push_back(e.text);
  j["hasCause"] = json::array();
  for (const auto& e : c.has_cause()) j["hasCause"].push_back(e.text);
  return j.dump();
}

Causality decode_causality(const std::string& text) {
  json j = parse_or_throw(text, "causality");
  std::set<Iri> has, end;
  for (const auto& [key, val] : j.items()) {
    std::set<Iri>* dest = nullptr;
    if (key == "endCause" || key == "endcause")
      dest = &end;
    else if (key == "hasCause" || key == "hascause")
      dest = &has;
    else
      bad_key("causality", key);
    if (!val.is_array())
      throw std::runtime_error("decode causality: '" + key + "' is not an array");
    for (const auto& e : val) dest->insert(Iri{e.get<std::string>()});
  }
  return Causality::empty().add_has_cause(has).add_end_cause(end);
}

std::string encode_sequence(const SequenceNode& s) {
  json j = json::object();
  if (s.has_next()) j["next"] = s.next()->text;
  if (s.has_ordinal()) j["ordinal"] = s.ordinal();
  if (s.has_previous()) j["previous"] = s.previous()->text;
  return j.dump();
}

SequenceNode decode_sequence(const std::string& text) {
  json j = parse_or_throw(text, "sequence");
  std::optional<Iri> prev, next;
  std::optional<std::uint64_t> ordinal;
  for (const auto& [key, val] : j.items()) {
    if (key == "previous")
      prev = Iri{val.get<std::string>()};
    else if (key == "next")
      next = Iri{val.get<std::string>()};
    else if (key == "ordinal")
      ordinal = val.get<std::uint64_t>();
    else
      bad_key("sequence", key);
  }
  return SequenceNode::make(prev, next, ordinal);
}

std::string encode_annotations(const Annotations& a) {
  json j = json::object();
  for (const auto& [key, values] : a.attrs()) {
    json arr = json::array();
    for (const auto& v : values) arr.push_back(value_to_json(v));
    j[key.text] = arr;
  }
  return j.dump();
}

Annotations decode_annotations(const std::string& text) {
  json j = parse_or_throw(text, "annotations");
  Annotations a;
  for (const auto& [key, val] : j.items()) {
    if (!val.is_array())
      throw std::runtime_error("decode annotations: '" + key + "' is not an array");
    for (const auto& e : val) a = a.add(Iri{key}, value_from_json(e, "annotations"));
  }
  return a;
}

std::string encode_provenance(const Provenance& p) {
  if (p.is_empty()) return "{}";
  json j;
  j["sources"] = json::array();
  for (const auto& e : p.sources()) j["sources"].push_back(e.text);
  return j.dump();
}

Provenance decode_provenance(const std::string& text) {
  json j = parse_or_throw(text, "provenance");
  std::set<Iri> sources;
  for (const auto& [key, val] : j.items()) {
    if (key != "sources") bad_key("provenance", key);
    if (!val.is_array())
      throw std::runtime_error("decode provenance: 'sources' is not an array");
    for (const auto& e : val) sources.insert(Iri{e.get<std::string>()});
  }
  return Provenance::of(sources);
}

std::string encode_value(const Value& v) { return value_to_json(v).dump(); }

Value decode_value(const std::string& text) {
  json j = json::parse(text, nullptr, false);
  if (j.is_discarded())
    throw std::runtime_error("decode value: malformed JSON");
  return value_from_json(j, "value");
}

}  // namespace kgq
