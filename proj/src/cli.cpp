#include "ppcp/cli.hpp"

#include <fstream>
#include <sstream>

#include <CLI11.hpp>

#include "ppcp/act_struct.hpp"
#include "ppcp/catalog.hpp"
#include "ppcp/criterion.hpp"
#include "ppcp/errors.hpp"
#include "ppcp/forge.hpp"
#include "ppcp/hom.hpp"
#include "ppcp/minor.hpp"
#include "ppcp/polymorphism.hpp"
#include "ppcp/reduce.hpp"
#include "ppcp/subgroups.hpp"

namespace ppcp {

namespace {

struct Options {
  std::size_t budget = 0; // 0 = per-operation defaults
  int threads = 1;

  std::size_t or_default(std::size_t fallback) const { return budget ? budget : fallback; }
};

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::invalid_argument("cannot write file " + path);
  out << content;
}

std::string group_info_text(const Group& g, std::size_t cap) {
  std::ostringstream os;
  os << "group " << (g.name().empty() ? "(unnamed)" : g.name()) << "\n";
  os << "degree " << g.degree() << "\n";
  os << "order " << g.order() << "\n";
  os << "simple " << (is_simple(g) ? "yes" : "no") << "\n";
  if (g.order() >= 2) {
    auto maximal = maximal_subgroup_classes(g, cap);
    os << "maximal subgroup classes " << maximal.size() << "\n";
    for (const auto& m : maximal)
      os << "  order " << m.order << "  index " << g.order() / m.order << "  class size "
         << m.class_size << "\n";
  }
  return os.str();
}

int cmd_group_info(const Options& opt, const std::string& spec, std::ostringstream& out) {
  Group g = group_from_spec(spec);
  out << group_info_text(g, opt.or_default(kDefaultLatticeCap));
  return 0;
}

int cmd_group_prim(const Options& opt, const std::string& spec, const std::string& dot_file,
                   const std::string& json_file, std::ostringstream& out) {
  Group g = group_from_spec(spec);
  auto maximal = maximal_subgroup_classes(g, opt.or_default(kDefaultLatticeCap));
  Action prim = prim_action(g, opt.or_default(kDefaultLatticeCap));
  Structure s = structure_of_action(prim, LabelMode::Generators);

  out << "group " << (g.name().empty() ? "(unnamed)" : g.name()) << " of order " << g.order()
      << "\n";
  out << "maximal subgroup classes:";
  for (const auto& m : maximal) out << " " << m.order;
  out << "\n";
  out << "points " << prim.points() << "\n";
  out << "components:";
  for (const auto& c : connected_components(s)) out << " " << c.size();
  out << "\n";
  if (!dot_file.empty()) write_file(dot_file, s.to_dot());
  if (!json_file.empty()) write_file(json_file, s.to_json());
  return 0;
}

int cmd_structure_components(const Options& opt, const std::string& spec,
                              std::ostringstream& out) {
  Structure s = structure_from_spec(spec, opt.or_default(kDefaultLatticeCap));
  auto comps = connected_components(s);
  out << "domain " << s.domain_size() << "\n";
  out << "components " << comps.size() << "\n";
  for (const auto& c : comps) {
    out << "  size " << c.size() << ":";
    for (int v : c) out << " " << v;
    out << "\n";
  }
  return 0;
}

int cmd_structure_hom(const Options& opt, const std::string& a_spec, const std::string& b_spec,
                      std::ostringstream& out) {
  Structure a = structure_from_spec(a_spec, opt.or_default(kDefaultLatticeCap));
  Structure b = structure_from_spec(b_spec, opt.or_default(kDefaultLatticeCap));
  auto hom = find_homomorphism(a, b, opt.or_default(kDefaultHomNodeBudget));
  if (!hom) {
    out << "no homomorphism\n";
    return 1;
  }
  out << "homomorphism:";
  for (int v : hom->map) out << " " << v;
  out << "\n";
  return 0;
}

int cmd_cond_check(const Options& opt, const std::string& structure_spec,
                   const std::string& literal, std::ostringstream& out) {
  Structure s = structure_from_spec(structure_spec, opt.or_default(kDefaultLatticeCap));
  MinorCondition cond = condition_from_literal(literal);
  auto witness = find_polymorphism(s, cond, opt.or_default(kDefaultPolyLeafBudget),
                                   opt.or_default(kDefaultPolyMergeBudget));
  if (!witness) {
    out << "no " << cond.kind() << " polymorphism (complete search)\n";
    return 1;
  }
  out << "witness found\n";
  for (const auto& [sym, op] : *witness) {
    out << "  symbol " << sym << " arity " << op.arity() << " table";
    for (int v : op.table()) out << " " << v;
    out << "\n";
  }
  return 0;
}

int cmd_cond_criterion(const Options& opt, const std::string& g_spec, const std::string& h_spec,
                       std::ostringstream& out) {
  Action gact = action_from_spec(g_spec, opt.or_default(kDefaultLatticeCap));
  Action hact = action_from_spec(h_spec, opt.or_default(kDefaultLatticeCap));
  bool holds = action_criterion(gact, hact, opt.or_default(kDefaultCriterionBudget), opt.threads);
  out << "Pol(S(G on X)) " << (holds ? "satisfies" : "does not satisfy")
      << " the condition of H on Y\n";
  return holds ? 0 : 1;
}

int cmd_fs_spectrum(const Options& opt, const std::string& spec, int upto,
                    std::ostringstream& out) {
  Group g = group_from_spec(spec);
  auto fs = fs_spectrum(g, upto, opt.or_default(kDefaultLatticeCap));
  out << "components:";
  for (auto s : fs.component_sizes) out << " " << s;
  out << "\n";
  out << "failing arities up to " << fs.upto << ":";
  for (int k : fs.failing_arities) out << " " << k;
  out << "\n";
  out << "smallest failing arity " << fs.smallest_failing << "\n";
  out << "largest maximal-subgroup index " << fs.largest_index;
  if (fs.index_reading_differs) out << " (differs from the smallest component size)";
  out << "\n";
  return 0;
}

int cmd_forge_pipeline(int domain, int max_arity, const std::string& report_file,
                       std::ostringstream& out) {
  if (domain != 2) throw std::invalid_argument("forge pipeline: only --domain 2 is supported");
  auto report =
      pipeline(FiniteOperation::boolean_majority(), FiniteOperation::boolean_xor3(), max_arity);
  out << report.text();
  if (!report_file.empty()) write_file(report_file, report.text());
  return report.all_ok ? 0 : 1;
}

int cmd_reduce(const Options& opt, const std::string& action_spec, std::ostringstream& out) {
  Action a = action_from_spec(action_spec, opt.or_default(kDefaultLatticeCap));
  auto r = reduce_to_simple(a, opt.or_default(kDefaultLatticeCap));
  for (const auto& s : r.steps) out << s << "\n";
  if (r.verdict == ReduceResult::Verdict::FixedPoint) {
    out << "verdict: fixed point\n";
  } else {
    out << "verdict: simple group of order " << r.simple_group->order() << "\n";
  }
  return 0;
}

} // namespace

CommandResult run(const std::vector<std::string>& args) {
  CLI::App app{"permutation group actions, polymorphism conditions, and pp-constructions"};
  app.require_subcommand(1);

  Options opt;
  app.add_option("--budget", opt.budget, "override every enumeration cap");
  app.add_option("--threads", opt.threads, "criterion enumeration workers")->check(CLI::Range(1, 256));

  std::string spec, spec_b, dot_file, json_file, structure_spec, literal, g_spec, h_spec;
  std::string report_file, action_spec;
  int upto = 25;
  int domain = 2;
  int max_arity = 5;

  auto* group = app.add_subcommand("group", "group computations");
  auto* info = group->add_subcommand("info", "order, simplicity, maximal subgroup classes");
  info->add_option("spec", spec, "built-in name or group file")->required();
  auto* prim = group->add_subcommand("prim", "the union of all primitive actions");
  prim->add_option("spec", spec, "built-in name or group file")->required();
  prim->add_option("--dot", dot_file, "write the generator-reduct structure as DOT");
  prim->add_option("--json", json_file, "write the generator-reduct structure as JSON");

  auto* structure = app.add_subcommand("structure", "structure computations");
  auto* components = structure->add_subcommand("components", "connected components");
  components->add_option("spec", spec, "structure spec")->required();
  auto* hom = structure->add_subcommand("hom", "find a homomorphism");
  hom->add_option("a", spec, "source structure")->required();
  hom->add_option("b", spec_b, "target structure")->required();

  auto* cond = app.add_subcommand("cond", "minor conditions");
  auto* check = cond->add_subcommand("check", "search for polymorphisms satisfying a condition");
  check->add_option("--structure", structure_spec, "structure spec")->required();
  check->add_option("--cond", literal, "condition literal")->required();
  auto* criterion = cond->add_subcommand("criterion", "fixed-point criterion for action conditions");
  criterion->set_help_flag("--help", "print help"); // frees -h / --h
  criterion->add_option("--g", g_spec, "acting structure side")->required();
  criterion->add_option("--h", h_spec, "condition side")->required();
  auto* spectrum = cond->add_subcommand("fs-spectrum", "failing fully symmetric arities");
  spectrum->add_option("spec", spec, "group spec")->required();
  spectrum->add_option("--upto", upto, "arity bound")->check(CLI::PositiveNumber);

  auto* forge = app.add_subcommand("forge", "operation constructions");
  auto* pipe = forge->add_subcommand("pipeline", "run and verify the construction chain");
  pipe->add_option("--domain", domain, "domain size (2)");
  pipe->add_option("--max", max_arity, "largest totally symmetric arity (3 or 5)");
  pipe->add_option("--report", report_file, "write the verification report to a file");

  auto* reduce = app.add_subcommand("reduce", "reduce an action to a simple group or fixed point");
  reduce->add_option("--action", action_spec, "action spec")->required();

  std::vector<std::string> argv_rev(args.rbegin(), args.rend());
  std::ostringstream out;
  try {
    app.parse(argv_rev);
  } catch (const CLI::ParseError& e) {
    std::ostringstream err;
    if (e.get_exit_code() == 0) { // --help
      err << app.help();
      return {0, err.str()};
    }
    err << "error: " << e.what() << "\n";
    return {2, err.str()};
  }

  try {
    int code = 2;
    if (info->parsed())
      code = cmd_group_info(opt, spec, out);
    else if (prim->parsed())
      code = cmd_group_prim(opt, spec, dot_file, json_file, out);
    else if (components->parsed())
      code = cmd_structure_components(opt, spec, out);
    else if (hom->parsed())
      code = cmd_structure_hom(opt, spec, spec_b, out);
    else if (check->parsed())
      code = cmd_cond_check(opt, structure_spec, literal, out);
    else if (criterion->parsed())
      code = cmd_cond_criterion(opt, g_spec, h_spec, out);
    else if (spectrum->parsed())
      code = cmd_fs_spectrum(opt, spec, upto, out);
    else if (pipe->parsed())
      code = cmd_forge_pipeline(domain, max_arity, report_file, out);
    else if (reduce->parsed())
      code = cmd_reduce(opt, action_spec, out);
    else
      out << "error: no subcommand\n";
    return {code, out.str()};
  } catch (const BudgetError& e) {
    out << "budget error: " << e.what() << "\n";
    return {2, out.str()};
  } catch (const std::exception& e) {
    out << "error: " << e.what() << "\n";
    return {2, out.str()};
  }
}

} // namespace ppcp
