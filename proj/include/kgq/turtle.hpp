#pragma once

#include <iosfwd>
#include <string>

#include "kgq/diagnostics.hpp"
#include "kgq/graph.hpp"
#include "kgq/sort_builder.hpp"

namespace kgq {

struct IngestReport {
  std::size_t triples_read = 0;
  std::size_t triples_skipped = 0;
  std::size_t statements = 0;
  Diagnostics diagnostics;
};

// Reads the restricted Turtle statement layout: entity--p:--statement node,
// node--ps:--value, pq: qualifiers, prov:wasDerivedFrom references. A node
// typed rdf:type wdno:Pnn becomes a sno statement; a blank ps: object becomes
// ssome. Triples outside the layout are skipped and counted, never fatal.
// Parse errors on a line throw std::runtime_error naming the line.
IngestReport ingest_turtle(std::istream& in, KnowledgeGraph& g,
                           const CategoryMap& categories = CategoryMap::builtin());
IngestReport ingest_turtle_file(const std::string& path, KnowledgeGraph& g,
                                const CategoryMap& categories = CategoryMap::builtin());

// Writes the graph back in the same layout, sort values as canonical JSON
// literals under pq:validityJ .. pq:provenanceJ. Output is byte-stable:
// statements ordered by subject then canonical key, five sort triples in
// fixed order, deterministic statement node names.
void emit_sort_triples(const KnowledgeGraph& g, std::ostream& out);
std::string emit_sort_triples(const KnowledgeGraph& g);

}  // namespace kgq
