#include "kgq/space.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace kgq {

void ContainmentTable::add(const Iri& inner, const Iri& outer) {
  regions_.insert(inner);
  regions_.insert(outer);
  outers_[inner].insert(outer);
}

void ContainmentTable::close() {
  bool changed = true;
  while (changed) {
    changed = false;
    for (auto& [inner, outs] : outers_) {
      std::set<Iri> add;
      for (const auto& mid : outs) {
        auto it = outers_.find(mid);
        if (it == outers_.end()) continue;
        for (const auto& far : it->second)
          if (!outs.count(far)) add.insert(far);
      }
      if (!add.empty()) {
        outs.insert(add.begin(), add.end());
        changed = true;
      }
    }
  }
}

ContainmentTable ContainmentTable::load_csv(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open containment file: " + path);
  return load_csv_stream(in);
}

ContainmentTable ContainmentTable::load_csv_stream(std::istream& in) {
  ContainmentTable t;
  std::string line;
  bool first = true;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    if (first) {
      first = false;
      if (line == "inner,outer") continue;  // header optional but expected
    }
    auto comma = line.find(',');
    if (comma == std::string::npos)
      throw std::runtime_error("malformed containment row: " + line);
    t.add(Iri{line.substr(0, comma)}, Iri{line.substr(comma + 1)});
  }
  t.close();
  return t;
}

bool ContainmentTable::inside(const Iri& inner, const Iri& outer) const {
  if (inner == outer) return true;
  auto it = outers_.find(inner);
  return it != outers_.end() && it->second.count(outer) != 0;
}

bool SpaceRegion::inside(const SpaceRegion& a, const SpaceRegion& b,
                         const ContainmentTable& t) {
  if (a.is_bottom() || b.is_universal()) return true;
  if (b.is_bottom() || a.is_universal()) return a == b;
  return t.inside(a.iri_, b.iri_);
}

SpaceRegion SpaceRegion::inter(const SpaceRegion& a, const SpaceRegion& b,
                               const ContainmentTable& t) {
  if (a.is_bottom() || b.is_bottom()) return bottom();
  if (a.is_universal()) return b;
  if (b.is_universal()) return a;
  if (inside(a, b, t)) return a;
  if (inside(b, a, t)) return b;
  return bottom();
}

SpaceRegion SpaceRegion::union_(const SpaceRegion& a, const SpaceRegion& b,
                                const ContainmentTable& t) {
  if (a.is_bottom()) return b;
  if (b.is_bottom()) return a;
  if (a.is_universal() || b.is_universal()) return universal();
  if (inside(a, b, t)) return b;
  if (inside(b, a, t)) return a;
  return universal();
}

}  // namespace kgq
