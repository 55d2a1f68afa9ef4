#include <doctest.h>

#include <sstream>

#include <json.hpp>

#include "fixtures.hpp"
#include "p3c/cli.hpp"
#include "p3c/graph_io.hpp"
#include "p3c/p3_partition.hpp"

using namespace p3c;
using namespace p3c::test;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(const std::vector<std::string> &args, const std::string &input = "") {
  std::istringstream in(input);
  std::ostringstream out, err;
  const int code = run_cli(args, in, out, err);
  return {code, out.str(), err.str()};
}

const std::string c5_edges = "5 5\n0 1\n1 2\n2 3\n3 4\n4 0\n";
const std::string paw_edges = "# paw\n4 4\n0 1\n0 2\n1 2\n0 3\n";
const std::string p4_edges = "4 3\n0 1\n1 2\n2 3\n";

} // namespace

TEST_CASE("check") {
  const auto c5 = run({"check"}, c5_edges);
  CHECK(c5.code == exit_ok);
  CHECK(c5.out.rfind("P3-connected: true (m=1)", 0) == 0);

  const auto k3 = run({"check", "-"}, "Bw\n");
  CHECK(k3.code == exit_negative);
  CHECK(k3.out.rfind("P3-connected: false", 0) == 0);
  CHECK(k3.out.find("witness: {0,1} edge 0-1") != std::string::npos);

  const auto bad = run({"check"}, "3 1\n0 7\n");
  CHECK(bad.code == exit_input);
  CHECK(bad.err.find("line 2") != std::string::npos);

  CHECK(run({"check", "/nonexistent/file"}).code == exit_input);
  CHECK(run({"check", "--format", "graph6"}, "B w\n").code == exit_input);
}

TEST_CASE("check in graph6 batch mode") {
  const auto batch = run({"check"}, "Dhc\nBw\n");
  CHECK(batch.code == exit_negative);
  CHECK(batch.out == "Dhc P3-connected: true (m=1)\nBw P3-connected: false (m=3) witness {0,1}\n");

  const auto json_batch = run({"check", "--json"}, "Dhc\nDhc\n");
  CHECK(json_batch.code == exit_ok);
  const auto parsed = nlohmann::json::parse(json_batch.out);
  REQUIRE(parsed.is_array());
  CHECK(parsed.size() == 2);
  CHECK(parsed[0]["p3_connected"] == true);
}

TEST_CASE("check json") {
  const auto paw = run({"check", "--json"}, paw_edges);
  CHECK(paw.code == exit_negative);
  const auto j = nlohmann::json::parse(paw.out);
  CHECK(j["class_count"] == 2);
  CHECK(j["agree"] == true);
  CHECK(j["witness"]["members"] == nlohmann::json::array({1, 2}));
  CHECK(j["witness"]["edge"] == nlohmann::json::array({1, 2}));
}

TEST_CASE("classes") {
  const auto text = run({"classes"}, paw_edges);
  CHECK(text.code == exit_ok);
  CHECK(text.out == "m=2\nclass 0: 0-1 0-2 0-3\nclass 3: 1-2\n");

  const auto json = run({"classes", "--json"}, paw_edges);
  const auto j = nlohmann::json::parse(json.out);
  CHECK(j["class_count"] == 2);
  CHECK(j["classes"][0]["edges"].size() == 3);
  CHECK(j["classes"][1]["edges"].size() == 1);
}

TEST_CASE("class json re-validates against the library") {
  for (const std::string g6 : {"Dhc", "C{", "IheA@GUAo", "G?qa`_"}) {
    const Graph g = parse_graph6(g6);
    const auto out = run({"classes", "--json"}, g6 + "\n");
    const auto j = nlohmann::json::parse(out.out);
    std::vector<EdgeId> class_of(g.size());
    for (const auto &cls : j["classes"])
      for (const auto &e : cls["edges"])
        class_of[g.require_edge({e[0].get<int>(), e[1].get<int>()})] = cls["id"].get<EdgeId>();
    CHECK(class_of == p3_partition(g).class_of);
  }
}

TEST_CASE("chain") {
  const auto p4 = run({"chain", "-", "0-1", "2-3"}, p4_edges);
  CHECK(p4.code == exit_ok);
  CHECK(p4.out == "0-1 1-2 2-3\n");

  const auto json = run({"chain", "-", "2-3", "0-1", "--json"}, p4_edges);
  CHECK(nlohmann::json::parse(json.out)["chain"] ==
        nlohmann::json::parse("[[2,3],[1,2],[0,1]]"));

  const auto none = run({"chain", "-", "1-2", "0-1", "--json"}, paw_edges);
  CHECK(none.code == exit_negative);
  CHECK(nlohmann::json::parse(none.out)["chain"].is_null());

  CHECK(run({"chain", "-", "0-2", "2-3"}, p4_edges).code == exit_input);
  CHECK(run({"chain", "-", "0_1", "2-3"}, p4_edges).code == exit_input);
  CHECK(run({"chain", "-", "0-1"}, p4_edges).code == exit_input);
}

TEST_CASE("module") {
  const auto paw = run({"module", "--json"}, paw_edges);
  CHECK(paw.code == exit_ok);
  const auto j = nlohmann::json::parse(paw.out);
  CHECK(j["module"] == nlohmann::json::array({1, 2}));

  const auto c5 = run({"module"}, c5_edges);
  CHECK(c5.code == exit_negative);
  CHECK(c5.out == "no non-stable homogeneous set\n");
}

TEST_CASE("export") {
  const auto dot = run({"export"}, paw_edges);
  CHECK(dot.code == exit_ok);
  CHECK(dot.out.rfind("graph {", 0) == 0);
  CHECK(dot.out.find("1 -- 2 [color=\"#ff7f0e\", label=\"3\"]") != std::string::npos);
  const auto plain = run({"export", "--plain"}, paw_edges);
  CHECK(plain.out.find("color") == std::string::npos);
}

TEST_CASE("gen") {
  const auto gnp = run({"gen", "gnp", "--n", "6", "--p", "1", "--seed", "3"});
  CHECK(gnp.code == exit_ok);
  CHECK(parse_edge_list(gnp.out) == complete_graph(6));

  const auto tf = run({"gen", "triangle-free", "--n", "3", "--p", "1", "--format", "graph6"});
  CHECK(parse_graph6(tf.out) == Graph(3, {{0, 1}, {0, 2}}));

  const auto a = run({"gen", "gnp", "--n", "20", "--p", "0.3", "--seed", "11"});
  const auto b = run({"gen", "gnp", "--n", "20", "--p", "0.3", "--seed", "11"});
  CHECK(a.out == b.out);

  CHECK(run({"gen", "gnp", "--n", "5", "--p", "2"}).code == exit_input);
  CHECK(run({"gen", "cube", "--n", "5"}).code == exit_input);
}

TEST_CASE("verify") {
  const auto v = run({"verify", "--n", "4"});
  CHECK(v.code == exit_ok);
  CHECK(v.out.rfind("scanned 38 connected labeled graphs, 0 disagreements", 0) == 0);

  const auto all = run({"verify", "--n", "4", "--n-min", "1", "--all-graphs", "--json"});
  CHECK(all.code == exit_ok);
  const auto j = nlohmann::json::parse(all.out);
  CHECK(j["totals"]["scanned"] == 75);
  CHECK(j["per_n"].size() == 4);

  const auto iso = run({"verify", "--n", "5", "--dedup"});
  CHECK(iso.out.rfind("scanned 21 connected graphs up to isomorphism, 0 disagreements", 0) == 0);

  CHECK(run({"verify", "--n", "9"}).code == exit_input);
  CHECK(run({"verify", "--n", "3", "--n-min", "5"}).code == exit_input);
}

TEST_CASE("usage errors") {
  CHECK(run({}).code == exit_input);
  CHECK(run({"frobnicate"}).code == exit_input);
  CHECK(run({"--help"}).code == exit_ok);
}
