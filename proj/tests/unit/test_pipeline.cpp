#include <unistd.h>

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "doctest.h"
#include "frankno/error.hpp"
#include "frankno/graph.hpp"
#include "frankno/oracle.hpp"
#include "frankno/orientation.hpp"
#include "frankno/pipeline.hpp"
#include "named_graphs.hpp"

namespace {

using namespace frankno;
using namespace frankno::testsupport;

PipelineResult run_lines(const std::vector<std::string>& lines,
                         const PipelineOptions& options) {
  std::string text;
  for (const std::string& l : lines) {
    text += l;
    text += '\n';
  }
  std::istringstream in(text);
  return run_pipeline(in, options);
}

const nlohmann::json* order_row(const nlohmann::json& summary, int order) {
  for (const auto& row : summary.at("orders")) {
    if (row.at("order") == order) return &row;
  }
  return nullptr;
}

TEST_CASE("run mode names round-trip") {
  for (RunMode mode :
       {RunMode::automatic, RunMode::heuristic, RunMode::exact,
        RunMode::oracle, RunMode::four_flow, RunMode::two_flow}) {
    const auto parsed = parse_run_mode(run_mode_name(mode));
    REQUIRE(parsed.has_value());
    CHECK(*parsed == mode);
  }
  CHECK_FALSE(parse_run_mode("fn2").has_value());
  CHECK_FALSE(parse_run_mode("").has_value());
}

TEST_CASE("auto mode routes a mixed batch") {
  const std::vector<std::string> lines = {
      write_graph6(petersen()),       // snark: heuristic misses, exact says no
      write_graph6(complete_graph(4)),       // no witness, exact says yes
      write_graph6(flower_snark(5)),  // heuristic witness
      write_graph6(prism()),          // fails the cyclic-4 precondition
      "!!not-graph6",                 // parse error
      write_graph6(complete_bipartite(3, 3)),
  };
  PipelineOptions options;
  options.require_cyclic4 = true;
  const PipelineResult result = run_lines(lines, options);
  CHECK_FALSE(result.internal_error);
  REQUIRE(result.records.size() == 6);

  CHECK(result.records[0].verdict == "fn2-no");
  CHECK(result.records[0].method == "exact");
  CHECK(result.records[0].n == 10);

  CHECK(result.records[1].verdict == "fn2-yes");
  CHECK(result.records[1].method == "exact");

  CHECK(result.records[2].verdict == "fn2-yes");
  CHECK(result.records[2].method.substr(0, 10) == "heuristic-");

  CHECK(result.records[3].verdict == "skipped-precondition");
  CHECK(result.records[3].detail == "not cyclically 4-edge-connected");

  CHECK(result.records[4].verdict == "skipped-precondition");
  CHECK(result.records[4].n == -1);

  CHECK(result.records[5].verdict == "fn2-yes");
  CHECK(result.records[5].method == "exact");

  // Indices follow the input order.
  for (size_t i = 0; i < result.records.size(); ++i) {
    CHECK(result.records[i].index == static_cast<int>(i));
    CHECK(result.records[i].graph6 == lines[i]);
  }

  const PipelineSummary& s = result.summary;
  CHECK(s.lines == 6);
  CHECK(s.parse_errors == 1);
  const auto summary = nlohmann::json::parse(summary_json(s));
  CHECK(summary.at("graphs") == 6);
  CHECK(summary.at("parse-errors") == 1);
  const nlohmann::json* ten = order_row(summary, 10);
  REQUIRE(ten != nullptr);
  CHECK(ten->at("total") == 1);
  CHECK(ten->at("fn2-no") == 1);
  CHECK(ten->at("heuristic-passed") == 0);
  const nlohmann::json* twenty = order_row(summary, 20);
  REQUIRE(twenty != nullptr);
  CHECK(twenty->at("total") == 1);
  CHECK(twenty->at("fn2-yes") == 1);
  CHECK(twenty->at("heuristic-passed") == 1);
  const nlohmann::json* six = order_row(summary, 6);
  REQUIRE(six != nullptr);
  CHECK(six->at("total") == 2);  // prism and K3,3
  CHECK(six->at("skipped-precondition") == 1);
  CHECK(six->at("fn2-yes") == 1);
}

TEST_CASE("records are independent of the worker count") {
  const std::vector<std::string> lines = {
      write_graph6(complete_graph(4)),
      write_graph6(petersen()),
      write_graph6(circular_ladder(5)),
      write_graph6(cube_q3()),
      write_graph6(complete_bipartite(3, 3)),
      write_graph6(flower_snark(5)),
  };
  PipelineOptions serial;
  serial.require_cyclic4 = true;
  PipelineOptions parallel = serial;
  parallel.jobs = 4;
  const PipelineResult a = run_lines(lines, serial);
  const PipelineResult b = run_lines(lines, parallel);
  REQUIRE(a.records.size() == b.records.size());
  for (size_t i = 0; i < a.records.size(); ++i) {
    CHECK(a.records[i].index == b.records[i].index);
    CHECK(a.records[i].n == b.records[i].n);
    CHECK(a.records[i].verdict == b.records[i].verdict);
    CHECK(a.records[i].method == b.records[i].method);
    CHECK(a.records[i].detail == b.records[i].detail);
    CHECK(a.records[i].certificate.has_value() ==
          b.records[i].certificate.has_value());
    if (a.records[i].certificate.has_value()) {
      CHECK(a.records[i].certificate->orientations ==
            b.records[i].certificate->orientations);
    }
  }
}

TEST_CASE("heuristic mode reports misses as inconclusive") {
  PipelineOptions options;
  options.mode = RunMode::heuristic;
  const PipelineResult result = run_lines(
      {write_graph6(petersen()), write_graph6(circular_ladder(5))}, options);
  CHECK(result.records[0].verdict == "inconclusive");
  CHECK(result.records[0].detail == "no heuristic witness");
  CHECK(result.records[1].verdict == "fn2-yes");
  CHECK(result.records[1].method == "heuristic-2odd");
  REQUIRE(result.records[1].certificate.has_value());
  const Graph g = circular_ladder(5);
  CHECK(verify_certificate(g, *result.records[1].certificate).ok);
}

TEST_CASE("auto mode never reports fn2-no on an exhausted budget") {
  PipelineOptions options;
  options.budget_nodes = 10;
  const PipelineResult result =
      run_lines({write_graph6(petersen())}, options);
  CHECK(result.records[0].verdict == "inconclusive");
  CHECK(result.records[0].method == "exact");
  CHECK(result.records[0].detail.find("budget") != std::string::npos);
}

TEST_CASE("oracle mode agrees with the brute-force count") {
  for (const Graph& g : {complete_graph(4), complete_bipartite(3, 3), prism(),
                         cube_q3(), petersen(), circular_ladder(5)}) {
    PipelineOptions options;
    options.mode = RunMode::oracle;
    const PipelineResult result = run_lines({write_graph6(g)}, options);
    const bool oracle_two = frank_number_bruteforce(g, 2) == 2;
    if (oracle_two) {
      CHECK(result.records[0].verdict == "fn2-yes");
      REQUIRE(result.records[0].certificate.has_value());
      CHECK(result.records[0].certificate->method == "oracle");
      CHECK(verify_certificate(g, *result.records[0].certificate).ok);
    } else {
      CHECK(result.records[0].verdict == "fn2-no");
      CHECK(result.records[0].method == "oracle");
    }
  }
}

TEST_CASE("flow modes certify and skip per colourability") {
  PipelineOptions two;
  two.mode = RunMode::two_flow;
  const PipelineResult colourable =
      run_lines({write_graph6(complete_bipartite(3, 3))}, two);
  CHECK(colourable.records[0].verdict == "fn2-yes");
  CHECK(colourable.records[0].method == "flow-4flow");
  REQUIRE(colourable.records[0].certificate.has_value());
  CHECK(verify_certificate(complete_bipartite(3, 3),
                           *colourable.records[0].certificate)
            .ok);

  const PipelineResult snark = run_lines({write_graph6(petersen())}, two);
  CHECK(snark.records[0].verdict == "skipped-precondition");
  CHECK(snark.records[0].detail == "no proper 3-edge-colouring");

  PipelineOptions four;
  four.mode = RunMode::four_flow;
  const PipelineResult quad = run_lines({write_graph6(petersen())}, four);
  CHECK(quad.records[0].verdict == "inconclusive");
  CHECK(quad.records[0].method == "flow-6flow");
  CHECK(quad.records[0].detail == "four orientations cover all edges");
  REQUIRE(quad.records[0].certificate.has_value());
  CHECK(quad.records[0].certificate->orientations.size() == 4);
  CHECK(verify_certificate(petersen(), *quad.records[0].certificate).ok);
}

TEST_CASE("snarks-only filters colourable graphs") {
  PipelineOptions options;
  options.snarks_only = true;
  options.require_cyclic4 = true;
  const PipelineResult result = run_lines(
      {write_graph6(petersen()), write_graph6(complete_bipartite(3, 3))},
      options);
  CHECK(result.records[0].verdict == "fn2-no");  // the snark is processed
  CHECK(result.records[1].verdict == "skipped-precondition");
  CHECK(result.records[1].detail == "snarks-only: 3-edge-colourable");
  CHECK(result.records[1].flags.three_edge_colourable == 1);
}

TEST_CASE("precondition failures abort the batch unless downgraded") {
  PipelineOptions heuristics_only;
  heuristics_only.mode = RunMode::heuristic;
  CHECK_THROWS_AS((void)run_lines({write_graph6(prism())}, heuristics_only),
                  error);

  PipelineOptions exact_mode;
  exact_mode.mode = RunMode::exact;
  CHECK_THROWS_AS((void)run_lines({write_graph6(two_k4_bridge())}, exact_mode),
                  error);

  exact_mode.require_cyclic4 = true;
  const PipelineResult skipped =
      run_lines({write_graph6(two_k4_bridge())}, exact_mode);
  CHECK(skipped.records[0].verdict == "skipped-precondition");
  CHECK(skipped.records[0].detail == "not 3-edge-connected");

  // A non-cubic graph.
  const Graph c5 = Graph::from_edges(
      5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {0, 4}});
  const PipelineResult non_cubic =
      run_lines({write_graph6(c5)}, exact_mode);
  CHECK(non_cubic.records[0].verdict == "skipped-precondition");
  CHECK(non_cubic.records[0].detail == "not cubic");
}

TEST_CASE("certificate files are written and round-trip") {
  const std::filesystem::path dir =
      std::filesystem::temp_directory_path() /
      ("frankno-pipeline-certs-" + std::to_string(::getpid()));
  PipelineOptions options;
  options.require_cyclic4 = true;
  options.certificate_dir = dir.string();
  const PipelineResult result = run_lines(
      {write_graph6(complete_graph(4)), write_graph6(petersen())}, options);

  REQUIRE(result.records.size() == 2);
  REQUIRE(!result.records[0].certificate_path.empty());
  CHECK(result.records[1].certificate_path.empty());

  std::ifstream file(result.records[0].certificate_path);
  REQUIRE(file.good());
  std::stringstream buffer;
  buffer << file.rdbuf();
  const auto [g, cert] = certificate_from_json(buffer.str());
  CHECK(g == complete_graph(4));
  CHECK(cert.method == "exact");
  CHECK(verify_certificate(g, cert).ok);

  std::filesystem::remove_all(dir);
}

TEST_CASE("record lines are tab-separated") {
  VerdictRecord r;
  r.index = 7;
  r.n = 10;
  r.verdict = "fn2-yes";
  r.method = "heuristic-2odd";
  r.millis = 1.5;
  r.certificate_path = "certs/cert-000007.json";
  CHECK(record_tsv_line(r) ==
        "7\t10\tfn2-yes\theuristic-2odd\t1.500\tcerts/cert-000007.json");

  VerdictRecord unparsed;
  unparsed.index = 0;
  unparsed.verdict = "skipped-precondition";
  unparsed.method = "-";
  CHECK(record_tsv_line(unparsed) ==
        "0\t-\tskipped-precondition\t-\t0.000\t-");
}

TEST_CASE("empty input yields an empty clean batch") {
  std::istringstream in("\n   \n");
  const PipelineResult result = run_pipeline(in, PipelineOptions{});
  CHECK(result.records.empty());
  CHECK(result.summary.lines == 0);
  CHECK_FALSE(result.internal_error);
  const auto summary = nlohmann::json::parse(summary_json(result.summary));
  CHECK(summary.at("orders").empty());
}

}  // namespace
