#include "frankno/pipeline.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdint>
#include <cstdio>
#include <exception>
#include <filesystem>
#include <fstream>
#include <istream>
#include <map>
#include <mutex>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include <json.hpp>

#include "frankno/error.hpp"
#include "frankno/exact.hpp"
#include "frankno/flows.hpp"
#include "frankno/heuristic.hpp"
#include "frankno/oracle.hpp"
#include "frankno/topology.hpp"

namespace frankno {

namespace {

using steady_clock = std::chrono::steady_clock;

double elapsed_millis(steady_clock::time_point since) {
  return std::chrono::duration<double, std::milli>(steady_clock::now() - since)
      .count();
}

// Remaining per-graph time budget in whole milliseconds.  Returns 0 (no
// limit) when no budget was set; never returns less than 1 once a budget
// exists, so an overspent graph still fails fast with budget_exceeded
// instead of running unbounded.
int remaining_ms(steady_clock::time_point start, int timeout_ms) {
  if (timeout_ms <= 0) return 0;
  const double spent = elapsed_millis(start);
  if (spent >= static_cast<double>(timeout_ms)) return 1;
  const int left = timeout_ms - static_cast<int>(spent);
  return left < 1 ? 1 : left;
}

struct ProcessOutcome {
  VerdictRecord record;
  bool internal = false;
};

void mark_skip(VerdictRecord& r, const std::string& why) {
  r.verdict = "skipped-precondition";
  r.method = "-";
  r.detail = why;
}

void mark_internal(ProcessOutcome& out, const std::string& why) {
  out.record.verdict = "inconclusive";
  out.record.method = "-";
  out.record.detail = "internal: " + why;
  out.record.certificate.reset();
  out.internal = true;
}

// Brute-force search for a covering orientation pair, streamed in the
// deterministic enumeration order with early exit.  Deletable sets are
// invariant under full reversal, so scanning the edge-0-fixed
// representatives loses nothing.
struct OracleScan {
  bool covered = false;
  FrankCertificate cert;
};

OracleScan oracle_pair_scan(const Graph& g) {
  const uint64_t all = (uint64_t{1} << g.m()) - 1;
  std::vector<uint64_t> masks;
  std::vector<Orientation> orientations;
  std::vector<EdgeSet> dsets;
  OracleScan out;
  for_each_strong_orientation(g, [&](const Orientation& o) {
    EdgeSet d = deletable_edges(g, o);
    uint64_t mask = 0;
    for (int e : d) mask |= uint64_t{1} << e;
    if (mask == all) {
      out.covered = true;
      out.cert = FrankCertificate{"oracle", {o}, {d}};
      return false;
    }
    for (size_t j = 0; j < masks.size(); ++j) {
      if ((masks[j] | mask) == all) {
        out.covered = true;
        out.cert =
            FrankCertificate{"oracle", {orientations[j], o}, {dsets[j], d}};
        return false;
      }
    }
    masks.push_back(mask);
    orientations.push_back(o);
    dsets.push_back(std::move(d));
    return true;
  });
  return out;
}

void accept_certificate(ProcessOutcome& out, FrankCertificate cert,
                        const std::string& verdict) {
  out.record.verdict = verdict;
  out.record.method = cert.method;
  out.record.certificate = std::move(cert);
}

// Pre-checks shared by every mode when precondition failures are downgraded
// to skips.  Returns false (with the record marked) when the graph cannot be
// routed.  `need_cyclic4` additionally demands the heuristic's hypothesis.
bool route_preconditions(const Graph& g, VerdictRecord& r, bool need_cyclic4) {
  r.flags.cubic = g.is_cubic() ? 1 : 0;
  if (!r.flags.cubic) {
    mark_skip(r, "not cubic");
    return false;
  }
  if (need_cyclic4) {
    r.flags.cyclically_4ec = cyclic_edge_connectivity_at_least(g, 4) ? 1 : 0;
    if (!r.flags.cyclically_4ec) {
      mark_skip(r, "not cyclically 4-edge-connected");
      return false;
    }
    // Cubic and cyclically 4-edge-connected implies 3-edge-connected.
    r.flags.three_edge_connected = 1;
    return true;
  }
  r.flags.three_edge_connected = edge_connectivity_at_least(g, 3) ? 1 : 0;
  if (!r.flags.three_edge_connected) {
    mark_skip(r, "not 3-edge-connected");
    return false;
  }
  return true;
}

void run_exact_stage(ProcessOutcome& out, const Graph& g,
                     const PipelineOptions& options,
                     steady_clock::time_point start) {
  ExactOptions eo;
  eo.max_nodes = options.budget_nodes;
  eo.timeout_ms = remaining_ms(start, options.timeout_ms);
  try {
    const ExactResult r = exact_frank2(g, eo);
    if (r.frank2) {
      accept_certificate(out, *r.certificate, "fn2-yes");
    } else {
      out.record.verdict = "fn2-no";
      out.record.method = "exact";
    }
  } catch (const error& e) {
    if (e.kind() != errc::budget_exceeded) throw;
    out.record.verdict = "inconclusive";
    out.record.method = "exact";
    out.record.detail = e.what();
  }
}

ProcessOutcome process_one(int index, const std::string& line,
                           const PipelineOptions& options) {
  const auto start = steady_clock::now();
  ProcessOutcome out;
  VerdictRecord& r = out.record;
  r.index = index;
  r.graph6 = line;

  Graph g;
  try {
    g = parse_graph6(line);
  } catch (const error& e) {
    mark_skip(r, std::string("parse: ") + e.what());
    r.millis = elapsed_millis(start);
    return out;
  }
  r.n = g.n();

  try {
    if (options.snarks_only) {
      r.flags.cubic = g.is_cubic() ? 1 : 0;
      if (!r.flags.cubic) {
        mark_skip(r, "snarks-only: not cubic");
        r.millis = elapsed_millis(start);
        return out;
      }
      const auto colouring = three_edge_colouring(g);
      r.flags.three_edge_colourable = colouring.has_value() ? 1 : 0;
      if (colouring) {
        mark_skip(r, "snarks-only: 3-edge-colourable");
        r.millis = elapsed_millis(start);
        return out;
      }
    }

    switch (options.mode) {
      case RunMode::automatic:
      case RunMode::heuristic: {
        if (options.require_cyclic4 &&
            !route_preconditions(g, r, /*need_cyclic4=*/true)) {
          break;
        }
        const auto witness = heuristic_frank2(g);
        r.flags.cubic = 1;
        r.flags.three_edge_connected = 1;
        r.flags.cyclically_4ec = 1;
        if (witness) {
          accept_certificate(out, certificate_from_witness(g, *witness),
                             "fn2-yes");
        } else if (options.mode == RunMode::heuristic) {
          r.verdict = "inconclusive";
          r.method = "-";
          r.detail = "no heuristic witness";
        } else {
          run_exact_stage(out, g, options, start);
        }
        break;
      }
      case RunMode::exact: {
        if (options.require_cyclic4 &&
            !route_preconditions(g, r, /*need_cyclic4=*/false)) {
          break;
        }
        run_exact_stage(out, g, options, start);
        break;
      }
      case RunMode::oracle: {
        if (options.require_cyclic4 &&
            !route_preconditions(g, r, /*need_cyclic4=*/false)) {
          break;
        }
        if (!g.is_cubic() || !edge_connectivity_at_least(g, 3)) {
          raise(errc::precondition_violated,
                "oracle mode needs a cubic 3-edge-connected graph");
        }
        try {
          const OracleScan scan = oracle_pair_scan(g);
          if (scan.covered) {
            accept_certificate(out, scan.cert, "fn2-yes");
          } else {
            r.verdict = "fn2-no";
            r.method = "oracle";
          }
        } catch (const error& e) {
          if (e.kind() != errc::cap_exceeded) throw;
          mark_skip(r, e.what());
        }
        break;
      }
      case RunMode::two_flow: {
        if (options.require_cyclic4 &&
            !route_preconditions(g, r, /*need_cyclic4=*/false)) {
          break;
        }
        if (r.flags.three_edge_colourable < 0) {
          r.flags.three_edge_colourable =
              three_edge_colouring(g).has_value() ? 1 : 0;
        }
        if (!r.flags.three_edge_colourable) {
          mark_skip(r, "no proper 3-edge-colouring");
          break;
        }
        const auto flow = find_z2z2_flow(g);
        if (!flow) {
          raise(errc::internal_contradiction,
                "3-edge-colourable graph yielded no (Z2 x Z2)-flow");
        }
        accept_certificate(out, orientations_from_4flow(g, *flow), "fn2-yes");
        break;
      }
      case RunMode::four_flow: {
        if (options.require_cyclic4 &&
            !route_preconditions(g, r, /*need_cyclic4=*/false)) {
          break;
        }
        // Check the hypothesis up front: a graph with a bridge legitimately
        // has no nowhere-zero flow, which must surface as a precondition
        // failure rather than a missing-flow contradiction below.
        if (!g.is_cubic() || !edge_connectivity_at_least(g, 3)) {
          raise(errc::precondition_violated,
                "the four-orientation construction needs a cubic "
                "3-edge-connected graph");
        }
        const auto flow = find_z2z3_flow(g);
        if (!flow) {
          raise(errc::internal_contradiction,
                "3-edge-connected graph yielded no (Z2 x Z3)-flow");
        }
        // Witnesses Frank number <= 4, which leaves the fn = 2 question open.
        accept_certificate(out, four_orientations(g, *flow), "inconclusive");
        out.record.detail = "four orientations cover all edges";
        break;
      }
    }
  } catch (const error& e) {
    switch (e.kind()) {
      case errc::internal_contradiction:
      case errc::lift_contradiction:
        mark_internal(out, e.what());
        break;
      case errc::precondition_violated:
      case errc::not_cubic:
        if (options.require_cyclic4) {
          mark_skip(r, e.what());
          break;
        }
        throw;
      default:
        throw;
    }
  }

  r.millis = elapsed_millis(start);
  return out;
}

bool starts_with(const std::string& s, const char* prefix) {
  return s.rfind(prefix, 0) == 0;
}

}  // namespace

std::optional<RunMode> parse_run_mode(std::string_view name) {
  if (name == "auto") return RunMode::automatic;
  if (name == "heuristic") return RunMode::heuristic;
  if (name == "exact") return RunMode::exact;
  if (name == "oracle") return RunMode::oracle;
  if (name == "fn4") return RunMode::four_flow;
  if (name == "fn2flow") return RunMode::two_flow;
  return std::nullopt;
}

const char* run_mode_name(RunMode mode) {
  switch (mode) {
    case RunMode::automatic: return "auto";
    case RunMode::heuristic: return "heuristic";
    case RunMode::exact: return "exact";
    case RunMode::oracle: return "oracle";
    case RunMode::four_flow: return "fn4";
    case RunMode::two_flow: return "fn2flow";
  }
  return "?";
}

PipelineResult run_pipeline(std::istream& in, const PipelineOptions& options) {
  const auto batch_start = steady_clock::now();

  std::vector<std::string> lines;
  std::string raw;
  while (std::getline(in, raw)) {
    // Trim whitespace and tolerate CRLF; blank lines carry no graph.
    size_t b = raw.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) continue;
    size_t e = raw.find_last_not_of(" \t\r\n");
    lines.push_back(raw.substr(b, e - b + 1));
  }

  std::vector<ProcessOutcome> outcomes(lines.size());
  std::atomic<size_t> next{0};
  std::atomic<bool> stop{false};
  std::mutex error_mutex;
  std::exception_ptr first_error;

  const auto worker = [&] {
    while (!stop.load(std::memory_order_relaxed)) {
      const size_t i = next.fetch_add(1);
      if (i >= lines.size()) return;
      try {
        outcomes[i] =
            process_one(static_cast<int>(i), lines[i], options);
      } catch (...) {
        const std::lock_guard<std::mutex> lock(error_mutex);
        if (!first_error) first_error = std::current_exception();
        stop.store(true, std::memory_order_relaxed);
      }
    }
  };

  int jobs = options.jobs < 1 ? 1 : options.jobs;
  const int items = lines.empty() ? 1 : static_cast<int>(lines.size());
  jobs = std::min(jobs, items);
  if (jobs <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(static_cast<size_t>(jobs));
    for (int t = 0; t < jobs; ++t) pool.emplace_back(worker);
    for (std::thread& t : pool) t.join();
  }
  if (first_error) std::rethrow_exception(first_error);

  PipelineResult result;
  result.records.reserve(outcomes.size());

  if (!options.certificate_dir.empty()) {
    std::filesystem::create_directories(options.certificate_dir);
  }

  for (ProcessOutcome& out : outcomes) {
    if (out.internal) result.internal_error = true;
    VerdictRecord& r = out.record;
    if (!options.certificate_dir.empty() && r.certificate.has_value()) {
      // The emitted file must stand on its own: re-verify before writing.
      const Graph g = parse_graph6(r.graph6);
      const VerifyReport audit = verify_certificate(g, *r.certificate);
      if (!audit.ok) {
        mark_internal(out, "emitted certificate failed verification: " +
                               audit.reason);
        result.internal_error = true;
      } else {
        char name[32];
        std::snprintf(name, sizeof(name), "cert-%06d.json", r.index);
        const std::filesystem::path path =
            std::filesystem::path(options.certificate_dir) / name;
        std::ofstream file(path);
        file << certificate_to_json(g, *r.certificate) << '\n';
        if (!file) {
          raise(errc::unusable_input,
                "cannot write certificate file " + path.string());
        }
        r.certificate_path = path.string();
      }
    }
    result.records.push_back(std::move(out.record));
  }

  PipelineSummary& s = result.summary;
  s.lines = static_cast<long long>(result.records.size());
  std::map<int, OrderSummary> orders;
  for (const VerdictRecord& r : result.records) {
    if (r.n < 0) {
      ++s.parse_errors;
      continue;
    }
    OrderSummary& row = orders[r.n];
    row.order = r.n;
    ++row.total;
    if (r.verdict == "fn2-yes") {
      ++row.fn2_yes;
      if (starts_with(r.method, "heuristic-")) ++row.heuristic_passed;
    } else if (r.verdict == "fn2-no") {
      ++row.fn2_no;
    } else if (r.verdict == "inconclusive") {
      ++row.inconclusive;
    } else {
      ++row.skipped;
    }
  }
  for (auto& [order, row] : orders) s.orders.push_back(row);
  s.elapsed_ms = elapsed_millis(batch_start);
  return result;
}

std::string record_tsv_line(const VerdictRecord& r) {
  char millis[32];
  std::snprintf(millis, sizeof(millis), "%.3f", r.millis);
  std::string line = std::to_string(r.index);
  line += '\t';
  line += r.n < 0 ? std::string("-") : std::to_string(r.n);
  line += '\t';
  line += r.verdict;
  line += '\t';
  line += r.method.empty() ? std::string("-") : r.method;
  line += '\t';
  line += millis;
  line += '\t';
  line += r.certificate_path.empty() ? std::string("-") : r.certificate_path;
  return line;
}

std::string summary_json(const PipelineSummary& s) {
  nlohmann::json orders = nlohmann::json::array();
  for (const OrderSummary& row : s.orders) {
    orders.push_back({{"order", row.order},
                      {"total", row.total},
                      {"heuristic-passed", row.heuristic_passed},
                      {"fn2-yes", row.fn2_yes},
                      {"fn2-no", row.fn2_no},
                      {"inconclusive", row.inconclusive},
                      {"skipped-precondition", row.skipped}});
  }
  const nlohmann::json doc = {{"graphs", s.lines},
                              {"parse-errors", s.parse_errors},
                              {"orders", orders},
                              {"elapsed-ms", s.elapsed_ms}};
  return doc.dump(2);
}

}  // namespace frankno
