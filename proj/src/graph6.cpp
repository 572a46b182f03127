#include "spectradom/graph6.hpp"

#include <vector>

namespace spectradom {

namespace {

constexpr int kBias = 63;
constexpr std::string_view kHeader = ">>graph6<<";

int payload_length(int n) {
  const int bits = n * (n - 1) / 2;
  return (bits + 5) / 6;
}

}  // namespace

Graph parse_graph6(std::string_view text) {
  while (!text.empty() && (text.back() == '\n' || text.back() == '\r')) text.remove_suffix(1);
  std::size_t pos = 0;
  if (text.starts_with(kHeader)) pos = kHeader.size();

  auto sextet = [&](std::size_t at) -> int {
    if (at >= text.size()) throw ParseError("unexpected end of input", at);
    const int c = static_cast<unsigned char>(text[at]);
    if (c < kBias || c > 126) throw ParseError("character outside 63..126", at);
    return c - kBias;
  };

  if (pos >= text.size()) throw ParseError("missing size header", pos);
  int n = 0;
  if (text[pos] == '~') {
    if (pos + 1 < text.size() && text[pos + 1] == '~') {
      throw ParseError("order exceeds 64 vertices", pos);
    }
    long long big = 0;
    for (std::size_t i = 1; i <= 3; ++i) big = (big << 6) | sextet(pos + i);
    if (big < 63) throw ParseError("malformed header: order below 63 in long form", pos);
    if (big > kMaxVertices) throw ParseError("order exceeds 64 vertices", pos);
    n = static_cast<int>(big);
    pos += 4;
  } else {
    n = sextet(pos);
    ++pos;
  }
  if (n == 0) throw ParseError("graph with zero vertices is not supported", pos - 1);

  const std::size_t expected = static_cast<std::size_t>(payload_length(n));
  if (text.size() - pos != expected) {
    throw ParseError("payload has " + std::to_string(text.size() - pos) + " bytes, expected " +
                         std::to_string(expected),
                     pos);
  }

  std::vector<std::uint64_t> rows(n, 0);
  int k = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i, ++k) {
      const int byte = sextet(pos + k / 6);
      if ((byte >> (5 - k % 6)) & 1) {
        rows[i] |= std::uint64_t{1} << j;
        rows[j] |= std::uint64_t{1} << i;
      }
    }
  }
  if (k % 6 != 0) {
    const int last = sextet(pos + k / 6);
    if (last & ((1 << (6 - k % 6)) - 1)) throw ParseError("nonzero padding bits", pos + k / 6);
  }
  return Graph::from_rows(rows);
}

std::string emit_graph6(const Graph& g) {
  const int n = g.order();
  std::string out;
  if (n <= 62) {
    out += static_cast<char>(n + kBias);
  } else {
    out += '~';
    for (int shift = 12; shift >= 0; shift -= 6) out += static_cast<char>(((n >> shift) & 63) + kBias);
  }
  std::string payload(payload_length(n), '\0');
  int k = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i, ++k) {
      if (g.adjacent(i, j)) payload[k / 6] = static_cast<char>(payload[k / 6] | (1 << (5 - k % 6)));
    }
  }
  for (char& c : payload) c = static_cast<char>(c + kBias);
  return out + payload;
}

}  // namespace spectradom
