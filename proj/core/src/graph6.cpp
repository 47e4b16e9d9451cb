#include "scminor/graph6.hpp"

#include "scminor/errors.hpp"

namespace scminor {
namespace {

constexpr int kBias = 63;

std::size_t body_length(int n) {
  const std::size_t bits = static_cast<std::size_t>(n) * static_cast<std::size_t>(n - 1) / 2;
  return (bits + 5) / 6;
}

}  // namespace

Graph parse_graph6(std::string_view text) {
  if (!text.empty() && text.back() == '\n') text.remove_suffix(1);
  if (!text.empty() && text.back() == '\r') text.remove_suffix(1);
  if (text.empty()) throw ParseError("empty graph6 string", 0);

  const int header = static_cast<unsigned char>(text[0]);
  if (header < kBias || header > 126) throw ParseError("invalid graph6 header byte", 0);
  if (header == 126) throw ParseError("long-form graph6 (n > 62) is not supported", 0);
  const int n = header - kBias;

  const std::size_t expected = body_length(n);
  if (text.size() - 1 != expected) {
    const std::size_t at = text.size() - 1 < expected ? text.size() : 1 + expected;
    throw ParseError("graph6 length mismatch: expected " + std::to_string(expected) +
                         " data bytes for n=" + std::to_string(n) + ", got " +
                         std::to_string(text.size() - 1),
                     at);
  }

  Graph g(n);
  std::size_t k = 0;  // bit index into the upper triangle
  for (int v = 1; v < n; ++v) {
    for (int u = 0; u < v; ++u, ++k) {
      const std::size_t offset = 1 + k / 6;
      const int byte = static_cast<unsigned char>(text[offset]);
      if (byte < kBias || byte > 126) throw ParseError("invalid graph6 data byte", offset);
      if ((((byte - kBias) >> (5 - k % 6)) & 1) != 0) g.add_edge(u, v);
    }
  }
  if (k % 6 != 0) {
    const std::size_t offset = text.size() - 1;
    const int byte = static_cast<unsigned char>(text[offset]) - kBias;
    const int pad = 6 - static_cast<int>(k % 6);
    if ((byte & ((1 << pad) - 1)) != 0) throw ParseError("nonzero graph6 padding bits", offset);
  }
  return g;
}

std::string write_graph6(const Graph& g) {
  const int n = g.order();
  if (n > kGraph6MaxOrder) {
    throw CapacityError("graph6 short form supports n <= 62, got " + std::to_string(n));
  }
  std::string out;
  out.reserve(1 + body_length(n));
  out.push_back(static_cast<char>(kBias + n));
  int acc = 0;
  int filled = 0;
  for (int v = 1; v < n; ++v) {
    for (int u = 0; u < v; ++u) {
      acc = (acc << 1) | (g.has_edge(u, v) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(kBias + acc));
        acc = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) out.push_back(static_cast<char>(kBias + (acc << (6 - filled))));
  return out;
}

}  // namespace scminor
