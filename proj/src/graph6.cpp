#include "mostar/graph6.hpp"

#include "mostar/error.hpp"

namespace mostar::graph6 {
namespace {

constexpr int kBias = 63;
constexpr int kMaxDataByte = 63;

[[noreturn]] void fail(const std::string& why) { throw Error(ErrorKind::kParse, "graph6: " + why); }

}  // namespace

std::string encode(const Graph& g) {
  const int n = g.order();
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(kBias + n));
  } else {
    out.push_back('~');
    for (int shift = 12; shift >= 0; shift -= 6) out.push_back(static_cast<char>(kBias + ((n >> shift) & 0x3F)));
  }
  int acc = 0;
  int filled = 0;
  for (int v = 1; v < n; ++v) {
    const Row row = g.rows()[v];
    for (int u = 0; u < v; ++u) {
      acc = (acc << 1) | static_cast<int>((row >> u) & 1U);
      if (++filled == 6) {
        out.push_back(static_cast<char>(kBias + acc));
        acc = filled = 0;
      }
    }
  }
  if (filled > 0) out.push_back(static_cast<char>(kBias + (acc << (6 - filled))));
  return out;
}

Graph decode(std::string_view text) {
  while (!text.empty() && (text.back() == '\n' || text.back() == '\r')) text.remove_suffix(1);
  if (text.starts_with(">>graph6<<")) text.remove_prefix(10);
  if (text.empty()) fail("empty input");
  for (char c : text) {
    const int value = static_cast<unsigned char>(c) - kBias;
    if (value < 0 || value > kMaxDataByte) fail("byte outside '?'..'~'");
  }

  std::size_t pos = 0;
  int n = 0;
  if (text[0] != '~') {
    n = text[0] - kBias;
    pos = 1;
  } else {
    if (text.size() < 4 || text[1] == '~') fail("orders beyond 258047 are not supported");
    for (std::size_t i = 1; i <= 3; ++i) n = (n << 6) | (text[i] - kBias);
    pos = 4;
  }
  if (n < 1 || n > Graph::kMaxOrder) fail("order " + std::to_string(n) + " outside 1..64");

  const std::size_t bits = static_cast<std::size_t>(n) * (n - 1) / 2;
  const std::size_t data_bytes = (bits + 5) / 6;
  if (text.size() - pos != data_bytes) {
    fail("expected " + std::to_string(data_bytes) + " data bytes for n=" + std::to_string(n) + ", got " +
         std::to_string(text.size() - pos));
  }

  std::array<Row, Graph::kMaxOrder> rows{};
  std::size_t index = 0;
  for (int v = 1; v < n; ++v) {
    for (int u = 0; u < v; ++u, ++index) {
      const int byte = text[pos + index / 6] - kBias;
      if ((byte >> (5 - index % 6)) & 1) {
        rows[u] |= Row{1} << v;
        rows[v] |= Row{1} << u;
      }
    }
  }
  if (bits % 6 != 0) {
    const int last = text.back() - kBias;
    if (last & ((1 << (6 - bits % 6)) - 1)) fail("nonzero padding bits");
  }
  return Graph::from_rows({rows.data(), static_cast<std::size_t>(n)});
}

}  // namespace mostar::graph6
