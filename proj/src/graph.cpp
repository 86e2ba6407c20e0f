#include "frankno/graph.hpp"

#include <algorithm>

#include "frankno/error.hpp"

namespace frankno {

Graph Graph::from_edges(int n, const std::vector<std::pair<int, int>>& edges) {
  if (n < 0) raise(errc::precondition_violated, "negative vertex count");
  Graph g;
  g.n_ = n;
  g.edges_.reserve(edges.size());
  for (const auto& [a, b] : edges) {
    if (a < 0 || b < 0 || a >= n || b >= n)
      raise(errc::precondition_violated,
            "edge endpoint out of range: (" + std::to_string(a) + "," +
                std::to_string(b) + ") with n=" + std::to_string(n));
    if (a == b)
      raise(errc::precondition_violated, "loop at vertex " + std::to_string(a));
    g.edges_.push_back(Edge{std::min(a, b), std::max(a, b)});
  }
  std::sort(g.edges_.begin(), g.edges_.end(), [](const Edge& x, const Edge& y) {
    return x.u != y.u ? x.u < y.u : x.v < y.v;
  });
  for (size_t i = 1; i < g.edges_.size(); ++i)
    if (g.edges_[i] == g.edges_[i - 1])
      raise(errc::precondition_violated,
            "duplicate edge (" + std::to_string(g.edges_[i].u) + "," +
                std::to_string(g.edges_[i].v) + ")");
  g.inc_.assign(n, {});
  g.nbr_.assign(n, {});
  for (int e = 0; e < g.m(); ++e) {
    g.inc_[g.edges_[e].u].push_back(e);
    g.inc_[g.edges_[e].v].push_back(e);
    g.nbr_[g.edges_[e].u].push_back(g.edges_[e].v);
    g.nbr_[g.edges_[e].v].push_back(g.edges_[e].u);
  }
  return g;
}

int Graph::edge_index(int u, int v) const {
  if (u == v) return -1;
  if (u > v) std::swap(u, v);
  Edge probe{u, v};
  auto it = std::lower_bound(
      edges_.begin(), edges_.end(), probe, [](const Edge& x, const Edge& y) {
        return x.u != y.u ? x.u < y.u : x.v < y.v;
      });
  if (it != edges_.end() && *it == probe)
    return static_cast<int>(it - edges_.begin());
  return -1;
}

bool Graph::is_cubic() const {
  for (int v = 0; v < n_; ++v)
    if (degree(v) != 3) return false;
  return n_ > 0;
}

namespace {

constexpr std::string_view kGraph6Header = ">>graph6<<";

// Value of a graph6 byte at `off`, or an error naming the offset.
uint32_t graph6_byte(std::string_view line, size_t off) {
  unsigned char c = static_cast<unsigned char>(line[off]);
  if (c < 63 || c > 126)
    raise(errc::char_out_of_range,
          "byte 0x" + std::to_string(static_cast<int>(c)) + " at offset " +
              std::to_string(off) + " outside the printable range [63,126]");
  return c - 63;
}

void need_bytes(std::string_view line, size_t off, size_t count,
                const char* what) {
  if (line.size() < off + count)
    raise(errc::malformed_length_field,
          std::string(what) + " truncated at offset " +
              std::to_string(line.size()) + " (need " + std::to_string(count) +
              " bytes from offset " + std::to_string(off) + ")");
}

}  // namespace

Graph parse_graph6(std::string_view line) {
  while (!line.empty() &&
         (line.back() == '\n' || line.back() == '\r' || line.back() == ' ' ||
          line.back() == '\t'))
    line.remove_suffix(1);

  size_t pos = 0;
  if (line.substr(0, kGraph6Header.size()) == kGraph6Header)
    pos = kGraph6Header.size();

  need_bytes(line, pos, 1, "length field");
  uint64_t n = 0;
  if (line[pos] != '~') {
    n = graph6_byte(line, pos);
    pos += 1;
  } else if (pos + 1 < line.size() && line[pos + 1] != '~') {
    need_bytes(line, pos + 1, 3, "3-byte length field");
    n = 0;
    for (int i = 0; i < 3; ++i) n = (n << 6) | graph6_byte(line, pos + 1 + i);
    pos += 4;
  } else {
    need_bytes(line, pos + 2, 6, "6-byte length field");
    n = 0;
    for (int i = 0; i < 6; ++i) n = (n << 6) | graph6_byte(line, pos + 2 + i);
    pos += 8;
  }

  const unsigned __int128 bit_count =
      (unsigned __int128)n * (n > 0 ? n - 1 : 0) / 2;
  const unsigned __int128 data_bytes = (bit_count + 5) / 6;
  if (data_bytes > line.size())  // also catches absurd n before allocating
    raise(errc::malformed_length_field,
          "data section for n=" + std::to_string(n) + " needs " +
              std::to_string((uint64_t)data_bytes) + " bytes, line has " +
              std::to_string(line.size() - pos) + " (offset " +
              std::to_string(pos) + ")");
  const size_t nbytes = static_cast<size_t>(data_bytes);
  if (line.size() - pos != nbytes)
    raise(errc::malformed_length_field,
          "data section for n=" + std::to_string(n) + " must be exactly " +
              std::to_string(nbytes) + " bytes, line has " +
              std::to_string(line.size() - pos) + " (offset " +
              std::to_string(pos) + ")");

  std::vector<std::pair<int, int>> edges;
  const uint64_t nbits = static_cast<uint64_t>(bit_count);
  uint64_t k = 0;
  uint32_t cur = 0;
  for (uint64_t v = 1; v < n; ++v) {
    for (uint64_t u = 0; u < v; ++u, ++k) {
      if (k % 6 == 0) cur = graph6_byte(line, pos + k / 6);
      if (cur & (1u << (5 - k % 6)))
        edges.emplace_back(static_cast<int>(u), static_cast<int>(v));
    }
  }
  if (nbits % 6 != 0 && nbytes > 0) {
    uint32_t last = graph6_byte(line, pos + nbytes - 1);
    uint32_t pad_mask = (1u << (6 - nbits % 6)) - 1;
    if (last & pad_mask)
      raise(errc::trailing_bits_nonzero,
            "padding bits set in final data byte at offset " +
                std::to_string(pos + nbytes - 1));
  }
  return Graph::from_edges(static_cast<int>(n), edges);
}

std::string write_graph6(const Graph& g) {
  std::string out;
  const uint64_t n = static_cast<uint64_t>(g.n());
  if (n <= 62) {
    out.push_back(static_cast<char>(63 + n));
  } else if (n <= 258047) {
    out.push_back('~');
    for (int i = 2; i >= 0; --i)
      out.push_back(static_cast<char>(63 + ((n >> (6 * i)) & 63)));
  } else {
    out.append("~~");
    for (int i = 5; i >= 0; --i)
      out.push_back(static_cast<char>(63 + ((n >> (6 * i)) & 63)));
  }
  const uint64_t nbits = n * (n > 0 ? n - 1 : 0) / 2;
  const size_t nbytes = static_cast<size_t>((nbits + 5) / 6);
  std::vector<uint8_t> data(nbytes, 0);
  uint64_t k = 0;
  for (int v = 1; v < g.n(); ++v)
    for (int u = 0; u < v; ++u, ++k)
      if (g.has_edge(u, v)) data[k / 6] |= 1u << (5 - k % 6);
  for (uint8_t b : data) out.push_back(static_cast<char>(63 + b));
  return out;
}

}  // namespace frankno
