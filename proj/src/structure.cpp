#include "ppcp/structure.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace ppcp {

Structure::Structure(int domain_size) : domain_size_(domain_size) {
  if (domain_size_ < 1) throw std::invalid_argument("Structure: domain size must be positive");
}

const Structure::Relation& Structure::relation(const std::string& name) const {
  auto it = relations_.find(name);
  if (it == relations_.end()) throw std::invalid_argument("Structure: unknown relation " + name);
  return it->second;
}

void Structure::add_relation(const std::string& name, int arity) {
  if (arity < 1) throw std::invalid_argument("Structure: relation arity must be positive");
  if (!relations_.emplace(name, Relation{arity, {}}).second)
    throw std::invalid_argument("Structure: duplicate relation " + name);
}

void Structure::add_tuple(const std::string& name, std::vector<int> tuple) {
  auto it = relations_.find(name);
  if (it == relations_.end()) throw std::invalid_argument("Structure: unknown relation " + name);
  auto& rel = it->second;
  if (static_cast<int>(tuple.size()) != rel.arity)
    throw std::invalid_argument("Structure: tuple length does not match arity of " + name);
  for (int v : tuple)
    if (v < 0 || v >= domain_size_) throw std::invalid_argument("Structure: tuple entry out of domain");
  auto pos = std::lower_bound(rel.tuples.begin(), rel.tuples.end(), tuple);
  if (pos == rel.tuples.end() || *pos != tuple) rel.tuples.insert(pos, std::move(tuple));
}

void Structure::set_relation(const std::string& name, int arity, std::vector<std::vector<int>> tuples) {
  relations_.erase(name);
  add_relation(name, arity);
  for (auto& t : tuples) add_tuple(name, std::move(t));
}

std::string Structure::to_json() const {
  nlohmann::json j;
  j["domain"] = domain_size_;
  j["relations"] = nlohmann::json::object();
  for (const auto& [name, rel] : relations_) {
    j["relations"][name] = {{"arity", rel.arity}, {"tuples", rel.tuples}};
  }
  return j.dump(2) + "\n";
}

Structure Structure::from_json(const std::string& text) {
  nlohmann::json j = nlohmann::json::parse(text);
  Structure s(j.at("domain").get<int>());
  for (const auto& [name, rel] : j.at("relations").items()) {
    s.add_relation(name, rel.at("arity").get<int>());
    for (const auto& t : rel.at("tuples")) s.add_tuple(name, t.get<std::vector<int>>());
  }
  return s;
}

namespace {

const char* kPalette[] = {"black", "red", "blue", "forestgreen", "darkorange",
                          "purple", "brown", "deeppink", "gray40", "teal"};

bool self_inverse(const Structure::Relation& rel) {
  for (const auto& t : rel.tuples) {
    std::vector<int> rev{t[1], t[0]};
    if (!std::binary_search(rel.tuples.begin(), rel.tuples.end(), rev)) return false;
  }
  return true;
}

} // namespace

std::string Structure::to_dot() const {
  std::ostringstream os;
  os << "digraph S {\n  node [shape=circle, fontsize=10];\n";
  for (int v = 0; v < domain_size_; ++v) os << "  " << v << ";\n";
  std::size_t color = 0;
  for (const auto& [name, rel] : relations_) {
    if (rel.arity != 2) throw std::invalid_argument("to_dot: relation " + name + " is not binary");
    const char* c = kPalette[color++ % (sizeof(kPalette) / sizeof(kPalette[0]))];
    if (self_inverse(rel)) {
      for (const auto& t : rel.tuples) {
        if (t[0] > t[1]) continue;
        os << "  " << t[0] << " -> " << t[1] << " [dir=none, style=dashed, color=\"" << c
           << "\", label=\"" << name << "\"];\n";
      }
    } else {
      for (const auto& t : rel.tuples)
        os << "  " << t[0] << " -> " << t[1] << " [color=\"" << c << "\", label=\"" << name
           << "\"];\n";
    }
  }
  os << "}\n";
  return os.str();
}

std::vector<std::vector<int>> connected_components(const Structure& s) {
  std::vector<int> parent(s.domain_size());
  for (int i = 0; i < s.domain_size(); ++i) parent[i] = i;
  std::function<int(int)> find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  auto unite = [&](int a, int b) { parent[find(a)] = find(b); };
  for (const auto& [name, rel] : s.relations())
    for (const auto& t : rel.tuples)
      for (std::size_t i = 1; i < t.size(); ++i) unite(t[0], t[i]);

  std::map<int, std::vector<int>> blocks;
  for (int v = 0; v < s.domain_size(); ++v) blocks[find(v)].push_back(v);
  std::vector<std::vector<int>> out;
  for (auto& [root, block] : blocks) out.push_back(std::move(block));
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a[0] < b[0]; });
  return out;
}

Structure induced_substructure(const Structure& s, const std::vector<int>& vertices) {
  std::vector<int> pos(s.domain_size(), -1);
  for (std::size_t i = 0; i < vertices.size(); ++i) pos[vertices[i]] = static_cast<int>(i);
  Structure out(static_cast<int>(vertices.size()));
  for (const auto& [name, rel] : s.relations()) {
    out.add_relation(name, rel.arity);
    for (const auto& t : rel.tuples) {
      std::vector<int> mapped;
      mapped.reserve(t.size());
      bool inside = true;
      for (int v : t) {
        if (pos[v] < 0) {
          inside = false;
          break;
        }
        mapped.push_back(pos[v]);
      }
      if (inside) out.add_tuple(name, std::move(mapped));
    }
  }
  return out;
}

Structure reversed_structure(const Structure& s) {
  Structure out(s.domain_size());
  for (const auto& [name, rel] : s.relations()) {
    if (rel.arity != 2) throw std::invalid_argument("reversed_structure: relation " + name + " is not binary");
    out.add_relation(name, 2);
    for (const auto& t : rel.tuples) out.add_tuple(name, {t[1], t[0]});
  }
  return out;
}

} // namespace ppcp
