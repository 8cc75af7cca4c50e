#include "ramsey/graph6.hpp"

namespace ramsey {

namespace {

constexpr int kOffset = 63;

void push_group(std::string& out, int bits) { out.push_back(static_cast<char>(bits + kOffset)); }

}  // namespace

std::string emit_graph6(const Graph& g) {
  const int n = g.vertex_count();
  std::string out;
  if (n <= 62) {
    push_group(out, n);
  } else {
    // Three 6-bit groups after '~' carry n big-endian; enough for our n <= 64.
    out.push_back('~');
    push_group(out, (n >> 12) & 0x3f);
    push_group(out, (n >> 6) & 0x3f);
    push_group(out, n & 0x3f);
  }
  int acc = 0;
  int filled = 0;
  for (int v = 1; v < n; ++v) {
    for (int u = 0; u < v; ++u) {
      acc = (acc << 1) | (g.has_edge(u, v) ? 1 : 0);
      if (++filled == 6) {
        push_group(out, acc);
        acc = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) push_group(out, acc << (6 - filled));
  return out;
}

Graph parse_graph6(const std::string& text) {
  std::size_t pos = 0;
  const auto need = [&](std::size_t k) {
    if (pos + k > text.size())
      throw Graph6Error("graph6: truncated input, expected " + std::to_string(k) + " more byte(s)", text.size());
  };
  const auto sixbits = [&]() -> int {
    need(1);
    const unsigned char c = static_cast<unsigned char>(text[pos]);
    if (c < 63 || c > 126) throw Graph6Error("graph6: byte out of range 63..126", pos);
    ++pos;
    return c - kOffset;
  };

  need(1);
  long n;
  if (static_cast<unsigned char>(text[0]) == '~') {
    ++pos;
    if (pos < text.size() && static_cast<unsigned char>(text[pos]) == '~')
      throw Graph6Error("graph6: 36-bit vertex counts exceed the 64-vertex limit", pos);
    const long a = sixbits();
    const long b = sixbits();
    const long c = sixbits();
    n = (a << 12) | (b << 6) | c;
  } else {
    n = sixbits();
  }
  if (n > Graph::max_vertices)
    throw Graph6Error("graph6: " + std::to_string(n) + " vertices exceeds the 64-vertex limit", 0);

  Graph g(static_cast<int>(n));
  int acc = 0;
  int avail = 0;
  for (int v = 1; v < n; ++v) {
    for (int u = 0; u < v; ++u) {
      if (avail == 0) {
        acc = sixbits();
        avail = 6;
      }
      if ((acc >> (avail - 1)) & 1) g.add_edge(u, v);
      --avail;
    }
  }
  if (avail > 0 && (acc & ((1 << avail) - 1)) != 0)
    throw Graph6Error("graph6: nonzero padding bits", pos - 1);
  if (pos != text.size()) throw Graph6Error("graph6: trailing bytes after encoding", pos);
  return g;
}

}  // namespace ramsey
