#include "frankno/orientation.hpp"

#include <algorithm>
#include <cassert>
#include <string>
#include <vector>

#include <json.hpp>

#include "frankno/error.hpp"

namespace frankno {

namespace {

// Vertices reachable from src when walking arcs forward (along = true) or
// backward (along = false), never using skip_edge (-1 disables skipping).
std::vector<char> reachable(const Graph& g, const Orientation& o, int src,
                            bool along, int skip_edge) {
  std::vector<char> seen(static_cast<size_t>(g.n()), 0);
  std::vector<int> stack;
  stack.push_back(src);
  seen[static_cast<size_t>(src)] = 1;
  while (!stack.empty()) {
    const int v = stack.back();
    stack.pop_back();
    const auto& inc = g.incident(v);
    const auto& nbr = g.neighbors(v);
    for (size_t i = 0; i < inc.size(); ++i) {
      const int e = inc[i];
      if (e == skip_edge) continue;
      const bool leaves_v = (o.tail(g, e) == v);
      if (leaves_v != along) continue;
      const int w = nbr[i];
      if (!seen[static_cast<size_t>(w)]) {
        seen[static_cast<size_t>(w)] = 1;
        stack.push_back(w);
      }
    }
  }
  return seen;
}

void check_sizes(const Graph& g, const Orientation& o) {
  if (o.size() != g.m()) {
    raise(errc::precondition_violated,
          "orientation covers " + std::to_string(o.size()) +
              " edges but the graph has " + std::to_string(g.m()));
  }
}

bool all_seen(const std::vector<char>& seen) {
  return std::all_of(seen.begin(), seen.end(), [](char c) { return c != 0; });
}

}  // namespace

Orientation reverse(const Orientation& o) {
  Orientation r(o.size());
  for (int e = 0; e < o.size(); ++e) r.set_reversed(e, !o.reversed(e));
  return r;
}

bool is_strong(const Graph& g, const Orientation& o) {
  check_sizes(g, o);
  if (g.n() <= 1) return true;
  return all_seen(reachable(g, o, 0, true, -1)) &&
         all_seen(reachable(g, o, 0, false, -1));
}

bool is_deletable(const Graph& g, const Orientation& o, int e) {
  check_sizes(g, o);
  if (e < 0 || e >= g.m()) {
    raise(errc::precondition_violated,
          "edge index " + std::to_string(e) + " out of range");
  }
  if (!is_strong(g, o)) {
    raise(errc::not_strong, "deletability is defined on strong orientations");
  }
  const int u = o.tail(g, e);
  const int v = o.head(g, e);
  return reachable(g, o, u, true, e)[static_cast<size_t>(v)] != 0;
}

EdgeSet deletable_edges(const Graph& g, const Orientation& o) {
  check_sizes(g, o);
  if (!is_strong(g, o)) return {};
  EdgeSet out;
  for (int e = 0; e < g.m(); ++e) {
    const int u = o.tail(g, e);
    const int v = o.head(g, e);
    if (reachable(g, o, u, true, e)[static_cast<size_t>(v)] != 0) {
      out.push_back(e);
    }
  }
  return out;
}

void PartialOrientation::orient_toward(const Graph& g, int e, int head) {
  assert(e >= 0 && e < size());
  assert(st_[static_cast<size_t>(e)] == kUnset);
  const Edge ed = g.edge(e);
  assert(head == ed.u || head == ed.v);
  st_[static_cast<size_t>(e)] = (head == ed.v) ? kForward : kBackward;
  ++count_;
}

int PartialOrientation::tail(const Graph& g, int e) const {
  assert(oriented(e));
  return st_[static_cast<size_t>(e)] == kForward ? g.edge(e).u : g.edge(e).v;
}

int PartialOrientation::head(const Graph& g, int e) const {
  assert(oriented(e));
  return st_[static_cast<size_t>(e)] == kForward ? g.edge(e).v : g.edge(e).u;
}

Orientation PartialOrientation::to_orientation() const {
  assert(complete());
  Orientation o(size());
  for (int e = 0; e < size(); ++e) {
    o.set_reversed(e, st_[static_cast<size_t>(e)] == kBackward);
  }
  return o;
}

VerifyReport verify_certificate(const Graph& g, const FrankCertificate& c) {
  VerifyReport rep;
  if (c.orientations.empty()) {
    rep.reason = "certificate lists no orientations";
    return rep;
  }
  if (c.deletable.size() != c.orientations.size()) {
    rep.reason = "certificate has " + std::to_string(c.orientations.size()) +
                 " orientations but " + std::to_string(c.deletable.size()) +
                 " deletable-edge claims";
    return rep;
  }
  for (size_t i = 0; i < c.orientations.size(); ++i) {
    if (c.orientations[i].size() != g.m()) {
      rep.reason = "orientation " + std::to_string(i) + " covers " +
                   std::to_string(c.orientations[i].size()) +
                   " edges but the graph has " + std::to_string(g.m());
      return rep;
    }
  }
  std::vector<char> covered(static_cast<size_t>(g.m()), 0);
  for (size_t i = 0; i < c.orientations.size(); ++i) {
    const EdgeSet actual = deletable_edges(g, c.orientations[i]);
    for (int e : c.deletable[i]) {
      if (e < 0 || e >= g.m()) {
        rep.reason = "orientation " + std::to_string(i) +
                     " claims out-of-range edge " + std::to_string(e);
        return rep;
      }
      if (!edgeset_contains(actual, e)) {
        rep.reason = "orientation " + std::to_string(i) + " claims edge " +
                     std::to_string(e) + " deletable but it is not";
        return rep;
      }
    }
    for (int e : actual) covered[static_cast<size_t>(e)] = 1;
  }
  for (int e = 0; e < g.m(); ++e) {
    if (!covered[static_cast<size_t>(e)]) {
      rep.first_uncovered_edge = e;
      rep.reason = "edge " + std::to_string(e) +
                   " is deletable in none of the orientations";
      return rep;
    }
  }
  rep.ok = true;
  return rep;
}

std::string certificate_to_json(const Graph& g, const FrankCertificate& c) {
  nlohmann::json j;
  j["format"] = "frank-certificate-v1";
  j["graph6"] = write_graph6(g);
  j["method"] = c.method;
  nlohmann::json arr = nlohmann::json::array();
  for (size_t i = 0; i < c.orientations.size(); ++i) {
    std::string bits(static_cast<size_t>(c.orientations[i].size()), '0');
    for (int e = 0; e < c.orientations[i].size(); ++e) {
      if (c.orientations[i].reversed(e)) bits[static_cast<size_t>(e)] = '1';
    }
    nlohmann::json entry;
    entry["directions"] = bits;
    entry["deletable"] =
        i < c.deletable.size() ? c.deletable[i] : EdgeSet{};
    arr.push_back(std::move(entry));
  }
  j["orientations"] = std::move(arr);
  return j.dump(2) + "\n";
}

std::pair<Graph, FrankCertificate> certificate_from_json(
    const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& ex) {
    raise(errc::unusable_input, std::string("certificate is not valid JSON: ") +
                                    ex.what());
  }
  if (!j.is_object() || !j.contains("graph6") || !j["graph6"].is_string() ||
      !j.contains("method") || !j["method"].is_string() ||
      !j.contains("orientations") || !j["orientations"].is_array()) {
    raise(errc::unusable_input,
          "certificate JSON must be an object with graph6, method and "
          "orientations fields");
  }
  Graph g = parse_graph6(j["graph6"].get<std::string>());
  FrankCertificate cert;
  cert.method = j["method"].get<std::string>();
  for (const auto& entry : j["orientations"]) {
    if (!entry.is_object() || !entry.contains("directions") ||
        !entry["directions"].is_string()) {
      raise(errc::unusable_input,
            "each orientation entry needs a directions string");
    }
    const std::string bits = entry["directions"].get<std::string>();
    if (static_cast<int>(bits.size()) != g.m()) {
      raise(errc::unusable_input,
            "directions string has " + std::to_string(bits.size()) +
                " bits but the graph has " + std::to_string(g.m()) +
                " edges");
    }
    Orientation o(g.m());
    for (int e = 0; e < g.m(); ++e) {
      const char ch = bits[static_cast<size_t>(e)];
      if (ch != '0' && ch != '1') {
        raise(errc::unusable_input,
              "directions strings may only contain 0 and 1");
      }
      o.set_reversed(e, ch == '1');
    }
    EdgeSet claimed;
    if (entry.contains("deletable")) {
      if (!entry["deletable"].is_array()) {
        raise(errc::unusable_input, "deletable must be an array of edge indices");
      }
      for (const auto& v : entry["deletable"]) {
        if (!v.is_number_integer()) {
          raise(errc::unusable_input,
                "deletable must be an array of edge indices");
        }
        const int e = v.get<int>();
        if (e < 0 || e >= g.m()) {
          raise(errc::unusable_input,
                "deletable edge index " + std::to_string(e) + " out of range");
        }
        claimed.push_back(e);
      }
      std::sort(claimed.begin(), claimed.end());
      claimed.erase(std::unique(claimed.begin(), claimed.end()),
                    claimed.end());
    }
    cert.orientations.push_back(std::move(o));
    cert.deletable.push_back(std::move(claimed));
  }
  return {std::move(g), std::move(cert)};
}

}  // namespace frankno
