#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "frankno/graph.hpp"
#include "frankno/orientation.hpp"

namespace frankno {

// Routing modes of the batch pipeline.
//   automatic  - heuristic first, exact search on the graphs it misses
//   heuristic  - heuristic only; misses become `inconclusive`
//   exact      - exact search only
//   oracle     - brute-force orientation-pair enumeration (tiny graphs)
//   four_flow  - emit the four-orientation certificate built from a
//                nowhere-zero (Z2 x Z3)-flow (witnesses Frank number <= 4)
//   two_flow   - emit the two-orientation certificate built from a
//                nowhere-zero (Z2 x Z2)-flow of a 3-edge-colourable graph
enum class RunMode { automatic, heuristic, exact, oracle, four_flow, two_flow };

// Command-line spellings: auto, heuristic, exact, oracle, fn4, fn2flow.
std::optional<RunMode> parse_run_mode(std::string_view name);
const char* run_mode_name(RunMode mode);

struct PipelineOptions {
  RunMode mode = RunMode::automatic;
  // Keep only graphs with no proper 3-edge-colouring (and record the rest as
  // skipped).
  bool snarks_only = false;
  // Record graphs that fail the routed method's preconditions (cubic,
  // 3-edge-connected, cyclically 4-edge-connected for the heuristic) as
  // skipped instead of letting the error abort the batch.
  bool require_cyclic4 = false;
  // Directory for certificate JSON files; empty disables emission.
  std::string certificate_dir;
  // Exact-search budgets, 0 = unlimited.  The time budget is per graph; the
  // heuristic stage of `automatic` consumes part of it.
  unsigned long long budget_nodes = 0;
  int timeout_ms = 0;
  // Worker threads; records are merged back into input order, so the output
  // is independent of this value.
  int jobs = 1;
};

// What was established about a graph while routing it.  -1 unknown, 0 no,
// 1 yes.  Only facts the route needed are filled in.
struct ClassFlags {
  int cubic = -1;
  int three_edge_connected = -1;
  int cyclically_4ec = -1;
  int three_edge_colourable = -1;
};

struct VerdictRecord {
  int index = 0;        // 0-based position among the input's non-blank lines
  int n = -1;           // vertex count; -1 when the line did not parse
  std::string graph6;   // the input line, trimmed
  ClassFlags flags;
  std::string verdict;  // fn2-yes | fn2-no | inconclusive | skipped-precondition
  std::string method;   // certificate/search method, "-" when none applies
  std::string detail;   // reason for a skip or inconclusive verdict
  double millis = 0.0;
  std::string certificate_path;  // empty unless a certificate file was written
  std::optional<FrankCertificate> certificate;
};

// One summary row per vertex count, in the shape of the census tables:
// how many graphs of that order were seen and how many the heuristic settled.
struct OrderSummary {
  int order = 0;
  long long total = 0;
  long long heuristic_passed = 0;
  long long fn2_yes = 0;
  long long fn2_no = 0;
  long long inconclusive = 0;
  long long skipped = 0;
};

struct PipelineSummary {
  long long lines = 0;  // non-blank input lines consumed
  long long parse_errors = 0;
  std::vector<OrderSummary> orders;  // ascending by order
  double elapsed_ms = 0.0;
};

struct PipelineResult {
  std::vector<VerdictRecord> records;  // input order
  PipelineSummary summary;
  // Set when some graph hit an internal assertion (a certificate that failed
  // its own verification, or contradicting cross-checks).  Such graphs are
  // recorded as inconclusive and the batch continues; callers should report a
  // nonzero exit.
  bool internal_error = false;
};

// Reads graph6 lines from `in` and routes every graph per the options.
// Parse failures become skipped records and never abort the batch.  Graphs
// that fail the routed method's preconditions abort the batch with the
// underlying error unless `require_cyclic4` converts them into skips.
PipelineResult run_pipeline(std::istream& in, const PipelineOptions& options);

// Tab-separated record line: index, n, verdict, method, millis,
// certificate path ("-" when absent).  No trailing newline.
std::string record_tsv_line(const VerdictRecord& r);

// Summary as a JSON object with per-order rows ("order", "total",
// "heuristic-passed", "fn2-yes", "fn2-no", "inconclusive",
// "skipped-precondition") plus batch totals.
std::string summary_json(const PipelineSummary& s);

}  // namespace frankno
