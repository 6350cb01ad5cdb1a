#include "ppcp/catalog.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

#include "ppcp/act_struct.hpp"

namespace ppcp {

namespace {

bool parse_indexed(const std::string& name, char prefix, int& n) {
  if (name.size() < 2 || name[0] != prefix) return false;
  for (std::size_t i = 1; i < name.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(name[i]))) return false;
  n = std::stoi(name.substr(1));
  return true;
}

Group make_cyclic(int n) {
  if (n == 1) return Group::trivial(1, "Z1");
  std::ostringstream cyc;
  cyc << '(';
  for (int i = 1; i <= n; ++i) {
    if (i > 1) cyc << ' ';
    cyc << i;
  }
  cyc << ')';
  return Group(n, {Perm::from_cycles(cyc.str(), n)}, "Z" + std::to_string(n));
}

Group make_symmetric(int n) {
  if (n == 1) return Group::trivial(1, "S1");
  if (n == 2) return Group(2, {Perm::from_cycles("(1 2)", 2)}, "S2");
  std::ostringstream cyc;
  cyc << '(';
  for (int i = 1; i <= n; ++i) {
    if (i > 1) cyc << ' ';
    cyc << i;
  }
  cyc << ')';
  return Group(n, {Perm::from_cycles("(1 2)", n), Perm::from_cycles(cyc.str(), n)},
               "S" + std::to_string(n));
}

Group make_alternating(int n) {
  if (n <= 2) return Group::trivial(std::max(n, 1), "A" + std::to_string(n));
  if (n == 3) return Group(3, {Perm::from_cycles("(1 2 3)", 3)}, "A3");
  if (n == 5)
    return Group(5, {Perm::from_cycles("(3 4 5)", 5), Perm::from_cycles("(1 3)(2 4)", 5)}, "A5");
  if (n == 6)
    return Group(6, {Perm::from_cycles("(1 2 3 5)(4 6)", 6), Perm::from_cycles("(1 2)(3 4)", 6)},
                 "A6");
  // (1 2 3) together with an even full-support cycle
  std::ostringstream cyc;
  cyc << '(';
  const int start = (n % 2 == 1) ? 1 : 2;
  for (int i = start; i <= n; ++i) {
    if (i > start) cyc << ' ';
    cyc << i;
  }
  cyc << ')';
  return Group(n, {Perm::from_cycles("(1 2 3)", n), Perm::from_cycles(cyc.str(), n)},
               "A" + std::to_string(n));
}

Group make_psl27() {
  return Group(7, {Perm::from_cycles("(1 2 3 4 5 6 7)", 7), Perm::from_cycles("(2 6)(3 4)", 7)},
               "PSL27");
}

} // namespace

bool is_builtin_group(const std::string& name) {
  int n;
  if (name == "PSL27" || name == "PSL(2,7)") return true;
  if (parse_indexed(name, 'Z', n) && n >= 1) return true;
  if (parse_indexed(name, 'S', n) && n >= 1 && n <= 7) return true;
  if (parse_indexed(name, 'A', n) && n >= 1 && n <= 7) return true;
  return false;
}

Group builtin_group(const std::string& name) {
  int n;
  if (name == "PSL27" || name == "PSL(2,7)") return make_psl27();
  if (parse_indexed(name, 'Z', n) && n >= 1) return make_cyclic(n);
  if (parse_indexed(name, 'S', n) && n >= 1 && n <= 7) return make_symmetric(n);
  if (parse_indexed(name, 'A', n) && n >= 1 && n <= 7) return make_alternating(n);
  throw std::invalid_argument("unknown built-in group: " + name);
}

bool is_builtin_structure(const std::string& name) {
  int n;
  if (name == "T3" || name == "P1" || name == "C1") return true;
  return parse_indexed(name, 'C', n) && n >= 1;
}

Structure builtin_structure(const std::string& name) {
  if (name == "T3") {
    Structure s(3);
    s.set_relation("E", 2, {{0, 1}, {0, 2}, {1, 2}});
    return s;
  }
  if (name == "P1") {
    Structure s(2);
    s.set_relation("E", 2, {{0, 1}});
    return s;
  }
  int n;
  if (parse_indexed(name, 'C', n) && n >= 1) {
    Structure s(n);
    s.add_relation("E", 2);
    for (int i = 0; i < n; ++i) s.add_tuple("E", {i, (i + 1) % n});
    return s;
  }
  throw std::invalid_argument("unknown built-in structure: " + name);
}

namespace {

struct ParsedFile {
  std::string name;
  int degree = 0;
  std::vector<std::string> gens;
  int points = -1;
  std::vector<std::string> acts;
};

ParsedFile parse_lines(std::istream& in) {
  ParsedFile f;
  std::string line;
  while (std::getline(in, line)) {
    std::istringstream ls(line);
    std::string key;
    if (!(ls >> key) || key[0] == '#') continue;
    std::string rest;
    std::getline(ls, rest);
    auto trim = [](std::string s) {
      const auto a = s.find_first_not_of(" \t\r");
      if (a == std::string::npos) return std::string();
      const auto b = s.find_last_not_of(" \t\r");
      return s.substr(a, b - a + 1);
    };
    rest = trim(rest);
    if (key == "name")
      f.name = rest;
    else if (key == "degree")
      f.degree = std::stoi(rest);
    else if (key == "gen")
      f.gens.push_back(rest);
    else if (key == "points")
      f.points = std::stoi(rest);
    else if (key == "act")
      f.acts.push_back(rest);
    else
      throw std::invalid_argument("group file: unknown key '" + key + "'");
  }
  if (f.degree < 1) throw std::invalid_argument("group file: missing or invalid degree");
  if (f.gens.empty()) throw std::invalid_argument("group file: no generators");
  return f;
}

} // namespace

Group parse_group_file(std::istream& in) {
  auto f = parse_lines(in);
  std::vector<Perm> gens;
  gens.reserve(f.gens.size());
  for (const auto& g : f.gens) gens.push_back(Perm::from_cycles(g, f.degree));
  return Group(f.degree, std::move(gens), f.name);
}

std::string write_group_file(const Group& g) {
  std::ostringstream os;
  if (!g.name().empty()) os << "name " << g.name() << "\n";
  os << "degree " << g.degree() << "\n";
  for (const auto& p : g.generators()) os << "gen " << p.cycle_string() << "\n";
  return os.str();
}

Action parse_action_file(std::istream& in) {
  auto f = parse_lines(in);
  std::vector<Perm> gens;
  for (const auto& g : f.gens) gens.push_back(Perm::from_cycles(g, f.degree));
  Group group(f.degree, std::move(gens), f.name);
  if (f.acts.empty() && f.points < 0) return Action::natural(group);
  if (f.points < 1) throw std::invalid_argument("action file: missing points line");
  if (f.acts.size() != f.gens.size())
    throw std::invalid_argument("action file: need one act line per gen line");
  std::vector<Perm> images;
  for (const auto& a : f.acts) images.push_back(Perm::from_cycles(a, f.points));
  return Action(std::move(group), f.points, std::move(images));
}

Group group_from_spec(const std::string& spec) {
  if (is_builtin_group(spec)) return builtin_group(spec);
  std::ifstream in(spec);
  if (!in) throw std::invalid_argument("cannot open group spec '" + spec + "'");
  return parse_group_file(in);
}

Action action_from_spec(const std::string& spec, std::size_t group_cap) {
  if (spec.rfind("prim:", 0) == 0) return prim_action(group_from_spec(spec.substr(5)), group_cap);
  if (spec.rfind("reg:", 0) == 0) return Action::regular(group_from_spec(spec.substr(4)));
  if (is_builtin_group(spec)) return Action::natural(builtin_group(spec));
  std::ifstream in(spec);
  if (!in) throw std::invalid_argument("cannot open action spec '" + spec + "'");
  return parse_action_file(in);
}

Structure structure_from_spec(const std::string& spec, std::size_t group_cap) {
  if (is_builtin_structure(spec)) return builtin_structure(spec);
  if (spec.rfind("prim:", 0) == 0)
    return structure_of_action(prim_action(group_from_spec(spec.substr(5)), group_cap));
  std::ifstream in(spec);
  if (!in) throw std::invalid_argument("cannot open structure spec '" + spec + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return Structure::from_json(buf.str());
}

} // namespace ppcp
