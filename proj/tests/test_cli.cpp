#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <sstream>

#include "ppcp/catalog.hpp"
#include "ppcp/cli.hpp"
#include "ppcp/structure.hpp"

using namespace ppcp;

namespace {

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

} // namespace

TEST_CASE("group info") {
  auto r = run({"group", "info", "A5"});
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("order 60") != std::string::npos);
  CHECK(r.output.find("simple yes") != std::string::npos);
  CHECK(r.output.find("maximal subgroup classes 3") != std::string::npos);
}

TEST_CASE("group prim with artifacts") {
  const std::string json_path = "/tmp/ppcp_test_prim.json";
  const std::string dot_path = "/tmp/ppcp_test_prim.dot";
  auto r = run({"group", "prim", "A5", "--json", json_path, "--dot", dot_path});
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("points 21") != std::string::npos);

  // the JSON artifact round-trips through the parser
  Structure s = Structure::from_json(slurp(json_path));
  CHECK(s.domain_size() == 21);
  CHECK(s.to_json() == slurp(json_path));
  CHECK(slurp(dot_path).find("digraph") != std::string::npos);
  std::remove(json_path.c_str());
  std::remove(dot_path.c_str());
}

TEST_CASE("cond check distinguishes yes, no, and budget") {
  auto no = run({"cond", "check", "--structure", "T3", "--cond", "maltsev"});
  CHECK(no.exit_code == 1);
  CHECK(no.output.find("no maltsev polymorphism") != std::string::npos);

  auto yes = run({"cond", "check", "--structure", "C2", "--cond", "cyclic:3"});
  CHECK(yes.exit_code == 0);
  CHECK(yes.output.find("witness found") != std::string::npos);

  auto budget = run({"--budget", "2", "cond", "check", "--structure", "T3", "--cond", "maltsev"});
  CHECK(budget.exit_code == 2);
  CHECK(budget.output.find("budget") != std::string::npos);
}

TEST_CASE("cond criterion exit codes") {
  CHECK(run({"cond", "criterion", "--g", "Z2", "--h", "Z3"}).exit_code == 0);
  CHECK(run({"cond", "criterion", "--g", "Z2", "--h", "Z2"}).exit_code == 1);
  CHECK(run({"cond", "criterion", "--g", "prim:Z5", "--h", "reg:Z5"}).exit_code == 1);
  CHECK(run({"--threads", "2", "cond", "criterion", "--g", "Z3", "--h", "Z2"}).exit_code == 0);
}

TEST_CASE("fs spectrum output") {
  auto r = run({"cond", "fs-spectrum", "A5", "--upto", "25"});
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("5 6 10 11 12 15 16 17 18 20 21 22 23 24 25") != std::string::npos);
  CHECK(r.output.find("smallest failing arity 5") != std::string::npos);
}

TEST_CASE("structure subcommands") {
  auto comps = run({"structure", "components", "prim:A5"});
  CHECK(comps.exit_code == 0);
  CHECK(comps.output.find("components 3") != std::string::npos);

  CHECK(run({"structure", "hom", "C2", "C2"}).exit_code == 0);
  CHECK(run({"structure", "hom", "C3", "C2"}).exit_code == 1);
}

TEST_CASE("reduce subcommand") {
  auto r = run({"reduce", "--action", "S3"});
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("verdict: simple group of order 3") != std::string::npos);
}

TEST_CASE("usage errors exit with 2") {
  CHECK(run({"group"}).exit_code == 2);
  CHECK(run({"group", "info", "NOSUCH"}).exit_code == 2);
  CHECK(run({"nonsense"}).exit_code == 2);
}

TEST_CASE("byte-identical output across runs") {
  auto a = run({"group", "prim", "PSL27"});
  auto b = run({"group", "prim", "PSL27"});
  CHECK(a.exit_code == 0);
  CHECK(a.output == b.output);
}

TEST_CASE("action files parse and run") {
  const std::string path = "/tmp/ppcp_test_action.txt";
  {
    std::ofstream out(path);
    out << "name S3-cosets\n";
    out << "degree 3\n";
    out << "gen (1 2)\n";
    out << "gen (1 2 3)\n";
    out << "points 3\n";
    out << "act (1 2)\n";
    out << "act (1 2 3)\n";
  }
  auto r = run({"reduce", "--action", path});
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("verdict: simple group of order 3") != std::string::npos);
  std::remove(path.c_str());
}

TEST_CASE("group file round trip") {
  Group g = builtin_group("A5");
  std::string text = write_group_file(g);
  std::istringstream in(text);
  Group back = parse_group_file(in);
  CHECK(back.order() == 60);
  CHECK(back.name() == "A5");
  CHECK(back.generators() == g.generators());
}
