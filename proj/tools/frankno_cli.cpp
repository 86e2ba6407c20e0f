// Batch driver: reads graph6 lines, decides/certifies Frank number 2 per the
// selected mode, prints one TSV record per input line to standard output and
// a JSON summary (per-order totals and heuristic pass counts) to standard
// error or --summary.
//
// Exit status: 0 clean batch, 1 internal assertion or per-graph error that
// aborted the run, 2 unusable input file.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "frankno/error.hpp"
#include "frankno/pipeline.hpp"

namespace {

int run(int argc, char** argv) {
  CLI::App app{
      "Decides whether cubic 3-edge-connected graphs have Frank number 2 and "
      "emits verifiable orientation certificates"};

  std::string input = "-";
  std::string mode_name = "auto";
  frankno::PipelineOptions options;
  std::string summary_path;

  app.add_option("input", input,
                 "graph6 file, one graph per line ('-' reads standard input)")
      ->capture_default_str();
  app.add_option("--mode", mode_name,
                 "auto | heuristic | exact | oracle | fn4 | fn2flow")
      ->capture_default_str()
      ->check(CLI::IsMember(
          {"auto", "heuristic", "exact", "oracle", "fn4", "fn2flow"}));
  app.add_flag("--snarks-only", options.snarks_only,
               "keep only graphs with no proper 3-edge-colouring; the rest "
               "are recorded as skipped");
  app.add_flag("--require-cyclic4", options.require_cyclic4,
               "record graphs failing the routed method's preconditions as "
               "skipped instead of aborting the batch");
  app.add_option("--certificates", options.certificate_dir,
                 "directory for certificate JSON files (created if missing)");
  app.add_option("--budget-nodes", options.budget_nodes,
                 "exact-search node budget per graph (0 = unlimited)");
  app.add_option("--timeout-ms", options.timeout_ms,
                 "per-graph time budget in milliseconds (0 = unlimited)");
  app.add_option("--jobs", options.jobs,
                 "worker threads; output order is input order regardless")
      ->capture_default_str();
  app.add_option("--summary", summary_path,
                 "write the JSON summary to this file instead of stderr");

  CLI11_PARSE(app, argc, argv);
  options.mode = *frankno::parse_run_mode(mode_name);

  std::ifstream file;
  std::istream* in = &std::cin;
  if (input != "-") {
    file.open(input);
    if (!file) {
      std::cerr << "error: cannot open input file '" << input << "'\n";
      return 2;
    }
    in = &file;
  }

  frankno::PipelineResult result;
  try {
    result = frankno::run_pipeline(*in, options);
  } catch (const frankno::error& e) {
    std::cerr << "error: " << frankno::errc_name(e.kind()) << ": " << e.what()
              << '\n';
    return e.kind() == frankno::errc::unusable_input ? 2 : 1;
  }

  for (const frankno::VerdictRecord& r : result.records) {
    std::cout << frankno::record_tsv_line(r) << '\n';
  }

  const std::string summary = frankno::summary_json(result.summary);
  if (summary_path.empty()) {
    std::cerr << summary << '\n';
  } else {
    std::ofstream out(summary_path);
    out << summary << '\n';
    if (!out) {
      std::cerr << "error: cannot write summary file '" << summary_path
                << "'\n";
      return 1;
    }
  }

  return result.internal_error ? 1 : 0;
}

}  // namespace

int main(int argc, char** argv) { return run(argc, argv); }
