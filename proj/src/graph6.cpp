#include "partite/graph6.hpp"

namespace partite {

std::string graph6_encode(const Graph& g) {
  const long long n = g.order();
  if (n > 258047) throw Error("graph6 encoding supports n <= 258047");
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(63 + n));
  } else {
    out.push_back(126);
    out.push_back(static_cast<char>(63 + ((n >> 12) & 63)));
    out.push_back(static_cast<char>(63 + ((n >> 6) & 63)));
    out.push_back(static_cast<char>(63 + (n & 63)));
  }
  int acc = 0, bits = 0;
  for (int v = 1; v < n; ++v) {
    for (int u = 0; u < v; ++u) {
      acc = (acc << 1) | (g.has_edge(u, v) ? 1 : 0);
      if (++bits == 6) {
        out.push_back(static_cast<char>(63 + acc));
        acc = 0;
        bits = 0;
      }
    }
  }
  if (bits > 0) out.push_back(static_cast<char>(63 + (acc << (6 - bits))));
  return out;
}

Graph graph6_decode(std::string_view text) {
  std::size_t begin = 0, end = text.size();
  while (begin < end && (text[begin] == ' ' || text[begin] == '\n' || text[begin] == '\r' || text[begin] == '\t'))
    ++begin;
  while (end > begin && (text[end - 1] == ' ' || text[end - 1] == '\n' || text[end - 1] == '\r' || text[end - 1] == '\t'))
    --end;
  constexpr std::string_view header = ">>graph6<<";
  if (end - begin >= header.size() && text.substr(begin, header.size()) == header) begin += header.size();
  if (begin == end) throw ParseError("empty graph6 input", begin);

  std::size_t pos = begin;
  auto next_byte = [&]() -> int {
    if (pos >= end) throw ParseError("truncated graph6 input", pos);
    unsigned char c = static_cast<unsigned char>(text[pos]);
    if (c < 63 || c > 126) throw ParseError("byte outside graph6 range 63..126", pos);
    ++pos;
    return c - 63;
  };

  long long n;
  int first = next_byte();
  if (first < 63) {
    n = first;
  } else {
    long long a = next_byte(), b = next_byte(), c = next_byte();
    n = (a << 12) | (b << 6) | c;
    if (n <= 62) throw ParseError("overlong graph6 size field", begin);
  }
  if (n < 1) throw ParseError("graph6 size 0 not supported (graphs need a vertex)", begin);
  if (n > 258047) throw ParseError("graph6 size beyond supported range", begin);

  GraphBuilder builder(static_cast<int>(n));
  int acc = 0, avail = 0;
  for (int v = 1; v < n; ++v) {
    for (int u = 0; u < v; ++u) {
      if (avail == 0) {
        acc = next_byte();
        avail = 6;
      }
      if ((acc >> (avail - 1)) & 1) builder.add_edge(u, v);
      --avail;
    }
  }
  if (avail > 0 && (acc & ((1 << avail) - 1)) != 0)
    throw ParseError("nonzero padding bits in graph6 input", pos - 1);
  if (pos != end) throw ParseError("trailing bytes after graph6 data", pos);
  return builder.build();
}

}  // namespace partite
