#ifndef PLANARC5_GRAPH6_HPP
#define PLANARC5_GRAPH6_HPP

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "planarc5/graph.hpp"

namespace planarc5 {

class Graph6Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

namespace detail {

inline constexpr std::uint64_t kGraph6MaxOrder = 68719476735ULL;  // 2^36 - 1

inline void graph6_put_order(std::string& out, std::uint64_t n) {
  if (n <= 62) {
    out.push_back(static_cast<char>(n + 63));
  } else if (n <= 258047) {
    out.push_back('~');
    for (int shift = 12; shift >= 0; shift -= 6) out.push_back(static_cast<char>(((n >> shift) & 63) + 63));
  } else {
    out.append("~~");
    for (int shift = 30; shift >= 0; shift -= 6) out.push_back(static_cast<char>(((n >> shift) & 63) + 63));
  }
}

inline unsigned graph6_byte(char c, std::size_t pos) {
  auto b = static_cast<unsigned char>(c);
  if (b < 63 || b > 126)
    throw Graph6Error("graph6: byte " + std::to_string(b) + " at offset " + std::to_string(pos) + " outside 63..126");
  return b - 63U;
}

}  // namespace detail

/// Standard graph6 encoding: N(n) followed by the upper triangle in column
/// order (0,1),(0,2),(1,2),(0,3),... packed big-endian in 6-bit groups.
inline std::string graph6_encode(const Graph& g) {
  const std::size_t n = g.order();
  std::string out;
  detail::graph6_put_order(out, n);
  unsigned acc = 0;
  int filled = 0;
  for (Vertex j = 1; j < n; ++j) {
    for (Vertex i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.has_edge(i, j) ? 1U : 0U);
      if (++filled == 6) {
        out.push_back(static_cast<char>(acc + 63));
        acc = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) out.push_back(static_cast<char>((acc << (6 - filled)) + 63));
  return out;
}

/// Decodes one graph6 line. Trailing CR/LF and a leading ">>graph6<<" header
/// are tolerated; anything else malformed throws Graph6Error.
inline Graph graph6_decode(std::string_view text) {
  while (!text.empty() && (text.back() == '\n' || text.back() == '\r')) text.remove_suffix(1);
  constexpr std::string_view header = ">>graph6<<";
  if (text.substr(0, header.size()) == header) text.remove_prefix(header.size());
  if (text.empty()) throw Graph6Error("graph6: empty input");

  std::size_t pos = 0;
  std::uint64_t n = 0;
  auto take = [&](int count) {
    if (pos + static_cast<std::size_t>(count) > text.size()) throw Graph6Error("graph6: truncated size prefix");
    std::uint64_t v = 0;
    for (int k = 0; k < count; ++k, ++pos) v = (v << 6) | detail::graph6_byte(text[pos], pos);
    return v;
  };
  if (text[0] == '~') {
    if (text.size() > 1 && text[1] == '~') {
      pos = 2;
      n = take(6);
    } else {
      pos = 1;
      n = take(3);
    }
  } else {
    n = take(1);
  }

  const std::uint64_t bits = n * (n == 0 ? 0 : n - 1) / 2;
  const std::uint64_t expected = (bits + 5) / 6;
  if (text.size() - pos != expected)
    throw Graph6Error("graph6: body has " + std::to_string(text.size() - pos) + " bytes, expected " +
                      std::to_string(expected) + " for n=" + std::to_string(n));

  std::vector<std::pair<Vertex, Vertex>> edges;
  std::uint64_t k = 0;
  for (Vertex j = 1; j < n; ++j) {
    for (Vertex i = 0; i < j; ++i, ++k) {
      std::size_t at = pos + k / 6;
      unsigned group = detail::graph6_byte(text[at], at);
      if ((group >> (5 - k % 6)) & 1U) edges.emplace_back(i, j);
    }
  }
  // Padding bits must be zero.
  if (bits % 6 != 0) {
    std::size_t at = text.size() - 1;
    unsigned pad_mask = (1U << (6 - bits % 6)) - 1;
    if (detail::graph6_byte(text[at], at) & pad_mask) throw Graph6Error("graph6: nonzero padding bits");
  }
  return Graph::from_edges(static_cast<std::size_t>(n), edges);
}

}  // namespace planarc5

#endif  // PLANARC5_GRAPH6_HPP
