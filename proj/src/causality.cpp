#include "kgq/causality.hpp"

#include <fstream>
#include <stdexcept>

namespace kgq {

const std::string InverseCauseMap::kDropToken = "!drop";

InverseCauseMap InverseCauseMap::defaults() {
  InverseCauseMap m;
  // death of subject (wd:Q99521170) <-> death of object.
  m.add(Iri{"wd:Q99521170"}, Iri{"wd:Q99521171"});
  return m;
}

void InverseCauseMap::add(const Iri& a, const Iri& b) {
  pairs_[a] = b;
  if (b.text != kDropToken) pairs_[b] = a;
}

Iri InverseCauseMap::apply(const Iri& e) const {
  auto it = pairs_.find(e);
  if (it == pairs_.end()) return e;
  if (it->second.text == kDropToken) return Iri{};
  return it->second;
}

InverseCauseMap InverseCauseMap::load_csv(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open inverse-cause file: " + path);
  return load_csv_stream(in);
}

InverseCauseMap InverseCauseMap::load_csv_stream(std::istream& in) {
  InverseCauseMap m;
  std::string line;
  bool first = true;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    if (first) {
      first = false;
      if (line == "entity,inverse") continue;
    }
    auto comma = line.find(',');
    if (comma == std::string::npos)
      throw std::runtime_error("malformed inverse-cause row: " + line);
    m.add(Iri{line.substr(0, comma)}, Iri{line.substr(comma + 1)});
  }
  return m;
}

Causality Causality::add_end_cause(const std::set<Iri>& es) const {
  Causality r = *this;
  r.end_.insert(es.begin(), es.end());
  return r;
}

Causality Causality::add_has_cause(const std::set<Iri>& es) const {
  Causality r = *this;
  r.has_.insert(es.begin(), es.end());
  return r;
}

Causality Causality::union_(const Causality& a, const Causality& b) {
  Causality r = a;
  r.has_.insert(b.has_.begin(), b.has_.end());
  r.end_.insert(b.end_.begin(), b.end_.end());
  return r;
}

Causality Causality::inverse(const Causality& c, const InverseCauseMap& m) {
  Causality r;
  for (const auto& e : c.has_) {
    Iri inv = m.apply(e);
    if (!inv.empty()) r.has_.insert(inv);
  }
  for (const auto& e : c.end_) {
    Iri inv = m.apply(e);
    if (!inv.empty()) r.end_.insert(inv);
  }
  return r;
}

}  // namespace kgq
