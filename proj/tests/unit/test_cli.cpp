#include <doctest.h>

#include <sstream>

#include "support/fixtures.hpp"
#include "symdyn/cli/commands.hpp"
#include "symdyn/cli/documents.hpp"
#include "symdyn/errors.hpp"

using namespace symdyn;
using namespace symdyn::cli;

namespace {

CommandResult run(std::vector<std::string> args, const std::string& stdin_text = "") {
  std::istringstream in(stdin_text);
  return run_command(args, in);
}

Json report(const CommandResult& r) { return Json::parse(r.output); }

std::string error_message(const Json& doc, Digraph (*parse)(const Json&)) {
  try {
    parse(doc);
  } catch (const InvalidArgument& e) {
    return e.what();
  }
  return "";
}

}  // namespace

TEST_CASE("graph documents") {
  const Json doc = Json::parse(R"({"schema": 1, "mode": "vertex", "vertices": ["0","1","2","3"],
    "edges": [["0","0"],["0","1"],["1","2"],["1","3"],["2","0"],["2","1"],["3","1"]]})");
  const Digraph g = parse_graph(doc);
  CHECK(g.vertex_count() == 4);
  CHECK(g.edges().size() == 7);
  CHECK(g == fixtures::mickey());
  CHECK(parse_graph(emit_graph(g)) == g);
  CHECK(parse_graph(emit_graph(fixtures::edge_mickey())) == fixtures::edge_mickey());

  CHECK_NOTHROW(parse_graph(Json::parse(
      R"({"schema": 1, "mode": "vertex", "vertices": ["v"], "edges": [["v","v"]]})")));
}

TEST_CASE("graph document errors name the field") {
  const Json dup_label = Json::parse(R"({"schema": 1, "mode": "edge", "vertices": ["P","Q"],
    "edges": [["P","Q","0"],["Q","P","0"]]})");
  CHECK(error_message(dup_label, parse_graph).find("edges[1][2]") != std::string::npos);

  const Json dup_edge = Json::parse(R"({"schema": 1, "mode": "vertex", "vertices": ["0"],
    "edges": [["0","0"],["0","0"]]})");
  CHECK(error_message(dup_edge, parse_graph).find("edges[1]") != std::string::npos);

  const Json dangling = Json::parse(R"({"schema": 1, "mode": "vertex", "vertices": ["0"],
    "edges": [["0","7"]]})");
  CHECK(error_message(dangling, parse_graph).find("unknown vertex '7'") != std::string::npos);

  const Json no_label = Json::parse(R"({"schema": 1, "mode": "edge", "vertices": ["0"],
    "edges": [["0","0"]]})");
  CHECK_THROWS_AS(parse_graph(no_label), InvalidArgument);
  CHECK_THROWS_AS(parse_graph(Json::parse(R"({"schema": 2, "mode": "vertex"})")), InvalidArgument);
}

TEST_CASE("substitution documents") {
  const RandomSubstitution s =
      parse_substitution(Json::parse(R"({"schema": 1, "images": {"a": ["ab","ba"], "b": ["a"]}})"));
  CHECK(s == fixtures::random_fibonacci());
  CHECK(parse_substitution(emit_substitution(s)) == s);
  CHECK_NOTHROW(parse_substitution(Json::parse(R"({"schema": 1, "images": {"a": ["a"]}})")));

  try {
    parse_substitution(Json::parse(R"({"schema": 1, "images": {"a": ["ab"]}})"));
    FAIL("undefined letter accepted");
  } catch (const InvalidArgument& e) {
    CHECK(std::string(e.what()).find("'b' is not a key") != std::string::npos);
  }
  CHECK_THROWS_AS(parse_substitution(Json::parse(R"({"schema": 1, "images": {"a": []}})")),
                  InvalidArgument);
  CHECK_THROWS_AS(parse_substitution(Json::parse(R"({"schema": 1, "images": {"a": [""]}})")),
                  InvalidArgument);

  const RandomSubstitution multi = parse_substitution(Json::parse(
      R"({"schema": 1, "images": {"x0": [["x0","x1"],["x1","x0"]], "x1": [["x0"]]}})"));
  CHECK(multi.images(0).size() == 2);
  CHECK(parse_substitution(emit_substitution(multi)) == multi);
}

TEST_CASE("matrix documents") {
  const MatrixDocument m = parse_matrix(Json::parse(R"({"schema": 1, "matrix": [[1,1],[1,0]]})"));
  CHECK(m.alphabet.symbols() == std::vector<std::string>{"0", "1"});
  const MatrixDocument back = parse_matrix(emit_matrix(m.matrix, m.alphabet));
  CHECK(back.matrix == m.matrix);
  CHECK_THROWS_AS(parse_matrix(Json::parse(R"({"schema": 1, "matrix": [[1,2],[1,0]]})")),
                  InvalidArgument);
}

TEST_CASE("cyclesub command") {
  const CommandResult r = run({"cyclesub", "--graph", "mickey", "--mode", "vertex"});
  REQUIRE(r.exit_code == kExitOk);
  const Json j = report(r);
  CHECK(j["schema_version"] == kReportSchema);
  CHECK(j["command"] == "cyclesub");
  CHECK(j["result"]["substitution"]["images"]["1"] ==
        Json::array({"1", "1201", "121", "131"}));
  CHECK(j["resource_caps"]["exceeded"].is_null());
  CHECK_FALSE(j.contains("timing"));
  CHECK(run({"cyclesub", "--graph", "mickey", "--mode", "edge"}).exit_code == kExitPrecondition);
}

TEST_CASE("reports are deterministic and digest their inputs") {
  const auto a = run({"verify", "--graph", "golden", "--max-len", "8"});
  const auto b = run({"verify", "--graph", "golden", "--max-len", "8"});
  CHECK(a.output == b.output);
  const Json j = report(a);
  CHECK(j["result"]["equal"] == true);
  CHECK(j["arguments"]["graph"] == "golden");
  CHECK(j["input_digest"].get<std::string>().rfind("fnv1a64:", 0) == 0);
  const auto c = run({"verify", "--graph", "mickey", "--max-len", "8"});
  CHECK(report(c)["input_digest"] != j["input_digest"]);
  CHECK(report(run({"--timing", "verify", "--graph", "golden"})).contains("timing"));
}

TEST_CASE("documents can come from stdin") {
  const std::string doc = R"({"schema": 1, "images": {"a": ["ab","ba"], "b": ["a"]}})";
  const CommandResult r = run({"language", "--substitution", "-", "--len", "4"}, doc);
  REQUIRE(r.exit_code == kExitOk);
  const Json j = report(r);
  CHECK(j["result"]["counts"] == Json::array({2, 4, 7, 13}));
  CHECK(j["result"]["words"]["2"] == Json::array({"aa", "ab", "ba", "bb"}));
  CHECK(j["result"]["certificate"]["period"] == 1);
}

TEST_CASE("witness command") {
  const Json j = report(run({"witness", "--graph", "mickey", "--word", "213120012"}));
  CHECK(j["result"]["root"] == "2");
  CHECK(j["result"]["depth"] == 4);
  CHECK(j["result"]["chain"].back() == "213120012");
}

TEST_CASE("numeric commands") {
  const std::string matrix = R"({"schema": 1, "matrix": [[1,1],[1,0]]})";
  const Json p = report(run({"perron", "--matrix", "-"}, matrix));
  CHECK(p["result"]["eigenvalue"].get<double>() == doctest::Approx(1.6180339887).epsilon(1e-10));
  CHECK(p["result"]["primitive"] == true);

  const Json g = report(run({"gapshift", "--min", "2", "--max", "3", "--len", "5", "--words"}));
  CHECK(g["result"]["counts"][2] == 4);
  CHECK(g["result"]["words"]["3"].size() == 4);

  const Json e = report(run({"entropy", "--graph", "golden", "--max-len", "16"}));
  CHECK(e["result"]["counts"][15] == 2584);
  CHECK(e["result"]["estimate"]["horizon"] == 16);
}

TEST_CASE("extend command") {
  const std::string fib = R"({"schema": 1, "images": {"a": ["ab","ba"], "b": ["a"]}})";
  const Json p = report(run({"extend", "--mode", "product", "--substitution", "-", "--m", "2"}, fib));
  CHECK(p["result"]["substitution"]["images"].size() == 4);
  CHECK(p["result"]["code"]["b:2"] == "b");
  const Json f = report(run({"extend", "--mode", "fractional", "--l", "1", "--k", "2", "--m", "2"}));
  CHECK(f["result"]["psi"]["images"]["a"] == Json::array({"ba"}));
  const Json eps = report(run({"extend", "--mode", "epsilon", "--substitution", "-", "--n", "2"}, fib));
  CHECK(eps["result"]["distinguished"]["a"]["realization"] == "aab");
}

TEST_CASE("exit codes") {
  CHECK(run({}).exit_code == kExitUsage);
  CHECK(run({"nonsense"}).exit_code == kExitUsage);
  CHECK(run({"verify"}).exit_code == kExitUsage);
  CHECK(run({"verify", "--graph", "golden", "--max-len", "x"}).exit_code == kExitUsage);
  CHECK(run({"--help"}).exit_code == kExitOk);

  const std::string fib = R"({"schema": 1, "images": {"a": ["ab","ba"], "b": ["a"]}})";
  const CommandResult capped =
      run({"--max-set-size", "3", "language", "--substitution", "-", "--len", "6"}, fib);
  CHECK(capped.exit_code == kExitResourceCap);
  CHECK(report(capped)["resource_caps"]["exceeded"] == "max_set_size");

  const CommandResult bad = run({"witness", "--graph", "mickey", "--word", "0123"});
  CHECK(bad.exit_code == kExitPrecondition);
  CHECK(report(bad)["error"]["kind"] == "invalid_input");
  CHECK(run({"cyclesub", "--graph", "/nonexistent/file.json"}).exit_code == kExitPrecondition);
  CHECK(run({"cyclesub", "--graph", "-"}, "{not json").exit_code == kExitPrecondition);
  CHECK(run({"entropy", "--max-len", "4"}).exit_code == kExitPrecondition);
}
