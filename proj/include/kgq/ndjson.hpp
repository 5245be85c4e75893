#pragma once

#include <iosfwd>
#include <string>

#include "kgq/graph.hpp"

namespace kgq {

// Native persistence: NDJSON, one statement per line, keys in the fixed order
// kind, s, p, v, validity, causality, sequence, annotations, provenance,
// origin. Sort sub-objects use the canonical sort JSON.
std::string statement_to_ndjson_line(const Statement& s);
Statement statement_from_ndjson_line(const std::string& line);

void write_graph_ndjson(const KnowledgeGraph& g, std::ostream& out);
void write_graph_ndjson(const KnowledgeGraph& g, const std::string& path);

KnowledgeGraph read_graph_ndjson(std::istream& in);
KnowledgeGraph read_graph_ndjson(const std::string& path);

}  // namespace kgq
