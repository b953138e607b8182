#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "strikeback/graph.hpp"

namespace strikeback {

// graph6 with a single-byte size header (n <= 62). Bits follow the upper
// triangle column by column: (0,1), (0,2), (1,2), (0,3), ... six bits per
// byte, each byte offset by 63.

inline constexpr int kGraph6MaxOrder = 62;

inline std::string to_graph6(const Graph& g) {
  const int n = g.order();
  if (n > kGraph6MaxOrder) throw GraphError("graph6: n=" + std::to_string(n) + " needs an extended header");
  std::string out(1, static_cast<char>(63 + n));
  int acc = 0;
  int filled = 0;
  for (Vertex j = 1; j < n; ++j) {
    for (Vertex i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.adjacent(i, j) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(63 + acc));
        acc = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) out.push_back(static_cast<char>(63 + (acc << (6 - filled))));
  return out;
}

inline Graph parse_graph6(std::string_view text) {
  while (!text.empty() && (text.back() == '\n' || text.back() == '\r')) text.remove_suffix(1);
  if (text.starts_with(">>graph6<<")) text.remove_prefix(10);
  if (text.empty()) throw GraphError("graph6: empty input");
  for (char ch : text) {
    const int c = static_cast<unsigned char>(ch);
    if (c < 63 || c > 126) throw GraphError("graph6: byte " + std::to_string(c) + " outside 63..126");
  }
  const int header = static_cast<unsigned char>(text[0]) - 63;
  if (header == 63) {
    if (text.size() < 4) throw GraphError("graph6: truncated extended size header");
    throw GraphError("graph6: extended size headers (n > 62) are not supported");
  }
  const int n = header;
  if (n < 1) throw GraphError("graph6: malformed header (n=0)");
  const std::size_t bits = static_cast<std::size_t>(n) * (n - 1) / 2;
  const std::size_t want = (bits + 5) / 6;
  const std::string_view body = text.substr(1);
  if (body.size() < want) throw GraphError("graph6: truncated bit stream");
  if (body.size() > want) throw GraphError("graph6: trailing bytes after bit stream");

  std::vector<Edge> es;
  std::size_t k = 0;
  auto bit = [&](std::size_t idx) {
    const int byte = static_cast<unsigned char>(body[idx / 6]) - 63;
    return (byte >> (5 - idx % 6)) & 1;
  };
  for (Vertex j = 1; j < n; ++j)
    for (Vertex i = 0; i < j; ++i, ++k)
      if (bit(k)) es.emplace_back(i, j);
  for (std::size_t pad = bits; pad < want * 6; ++pad)
    if (bit(pad)) throw GraphError("graph6: nonzero padding bits");
  return Graph::from_edges(n, es);
}

}  // namespace strikeback
