#include "kgq/iri.hpp"

#include <stdexcept>

namespace kgq {

PrefixTable PrefixTable::builtin() {
  PrefixTable t;
  t.declare("wd", "http://www.wikidata.org/entity/");
  t.declare("wds", "http://www.wikidata.org/entity/statement/");
  t.declare("wdno", "http://www.wikidata.org/prop/novalue/");
  t.declare("p", "http://www.wikidata.org/prop/");
  t.declare("ps", "http://www.wikidata.org/prop/statement/");
  t.declare("pq", "http://www.wikidata.org/prop/qualifier/");
  t.declare("prov", "http://www.w3.org/ns/prov#");
  t.declare("rdf", "http://www.w3.org/1999/02/22-rdf-syntax-ns#");
  t.declare("xsd", "http://www.w3.org/2001/XMLSchema#");
  t.declare("kgq", "urn:kgq:fn:");
  // Default prefix: Wikidata entities/properties, matching the rule syntax
  // ":P26".
  t.declare("", "http://www.wikidata.org/entity/");
  return t;
}

void PrefixTable::declare(const std::string& prefix, const std::string& base) {
  prefixes_[prefix] = base;
}

bool PrefixTable::has(const std::string& prefix) const {
  return prefixes_.count(prefix) != 0;
}

std::optional<std::string> PrefixTable::expand(const std::string& prefixed) const {
  auto colon = prefixed.find(':');
  if (colon == std::string::npos) return std::nullopt;
  auto it = prefixes_.find(prefixed.substr(0, colon));
  if (it == prefixes_.end()) return std::nullopt;
  return it->second + prefixed.substr(colon + 1);
}

std::string PrefixTable::compact(const std::string& full) const {
  const std::string* best_base = nullptr;
  const std::string* best_prefix = nullptr;
  for (const auto& [prefix, base] : prefixes_) {
    if (prefix.empty()) continue;  // never compact to the bare default prefix
    if (full.size() > base.size() && full.compare(0, base.size(), base) == 0) {
      if (!best_base || base.size() > best_base->size()) {
        best_base = &base;
        best_prefix = &prefix;
      }
    }
  }
  if (!best_base) return full;
  return *best_prefix + ":" + full.substr(best_base->size());
}

Iri normalize_iri(const std::string& written, const PrefixTable& prefixes) {
  return normalize_iri(written, prefixes, prefixes);
}

Iri normalize_iri(const std::string& written, const PrefixTable& expand_with,
                  const PrefixTable& compact_with) {
  std::string s = written;
  if (s.size() >= 2 && s.front() == '<' && s.back() == '>') {
    return Iri{compact_with.compact(s.substr(1, s.size() - 2))};
  }
  if (s.rfind("http://", 0) == 0 || s.rfind("https://", 0) == 0 ||
      s.rfind("urn:", 0) == 0) {
    return Iri{compact_with.compact(s)};
  }
  auto full = expand_with.expand(s);
  if (!full) throw std::runtime_error("undeclared prefix in IRI: " + s);
  return Iri{compact_with.compact(*full)};
}

}  // namespace kgq
