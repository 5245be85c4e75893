#include "kgq/ndjson.hpp"

#include <fstream>
#include <stdexcept>

#include <json.hpp>

#include "kgq/sort_builder.hpp"

namespace kgq {

using nlohmann::json;

std::string statement_to_ndjson_line(const Statement& s) {
  // Fixed key order, so build the line by hand instead of through a json
  // object (which would sort keys).
  std::string line = "{\"kind\":\"" + to_string(s.kind) + "\"";
  line += ",\"s\":" + json(s.subject.text).dump();
  line += ",\"p\":" + json(s.property.text).dump();
  if (s.value) line += ",\"v\":" + encode_value(*s.value);
  line += ",\"validity\":" + encode_validity(s.validity);
  line += ",\"causality\":" + encode_causality(s.causality);
  line += ",\"sequence\":" + encode_sequence(s.sequence);
  line += ",\"annotations\":" + encode_annotations(s.annotations);
  line += ",\"provenance\":" + encode_provenance(s.provenance);
  line += ",\"origin\":";
  line += s.origin.is_asserted() ? json("asserted").dump()
                                 : json("inferred:" + s.origin.rule).dump();
  line += "}";
  return line;
}

Statement statement_from_ndjson_line(const std::string& line) {
  json j = json::parse(line, nullptr, false);
  if (j.is_discarded() || !j.is_object())
    throw std::runtime_error("NDJSON line is not a JSON object");
  Statement s;
  auto kind = statement_kind_from_string(j.value("kind", "st"));
  if (!kind) throw std::runtime_error("unknown statement kind in NDJSON line");
  s.kind = *kind;
  s.subject = Iri{j.at("s").get<std::string>()};
  s.property = Iri{j.at("p").get<std::string>()};
  if (j.contains("v")) s.value = decode_value(j.at("v").dump());
  if (j.contains("validity")) s.validity = decode_validity(j.at("validity").dump());
  if (j.contains("causality")) s.causality = decode_causality(j.at("causality").dump());
  if (j.contains("sequence")) s.sequence = decode_sequence(j.at("sequence").dump());
  if (j.contains("annotations"))
    s.annotations = decode_annotations(j.at("annotations").dump());
  if (j.contains("provenance"))
    s.provenance = decode_provenance(j.at("provenance").dump());
  std::string origin = j.value("origin", "asserted");
  if (origin == "asserted")
    s.origin = Origin::asserted();
  else if (origin.rfind("inferred:", 0) == 0)
    s.origin = Origin::inferred(origin.substr(9));
  else
    throw std::runtime_error("unknown origin in NDJSON line: " + origin);
  s.validate();
  return s;
}

void write_graph_ndjson(const KnowledgeGraph& g, std::ostream& out) {
  for (const auto& s : g.statements()) out << statement_to_ndjson_line(s) << '\n';
}

void write_graph_ndjson(const KnowledgeGraph& g, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open for writing: " + path);
  write_graph_ndjson(g, out);
}

KnowledgeGraph read_graph_ndjson(std::istream& in) {
  KnowledgeGraph g;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    try {
      g.insert(statement_from_ndjson_line(line));
    } catch (const std::exception& e) {
      throw std::runtime_error("line " + std::to_string(lineno) + ": " + e.what());
    }
  }
  return g;
}

KnowledgeGraph read_graph_ndjson(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open graph file: " + path);
  return read_graph_ndjson(in);
}

}  // namespace kgq
