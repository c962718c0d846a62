#include "sspec/graph6.hpp"

#include "sspec/errors.hpp"

namespace sspec {

namespace {

int sixbits(std::string_view s, std::size_t pos) {
  if (pos >= s.size()) throw ParseError("graph6: unexpected end of input", pos);
  auto c = static_cast<unsigned char>(s[pos]);
  if (c < 63 || c > 126) throw ParseError("graph6: character outside 63..126", pos);
  return c - 63;
}

}  // namespace

Graph parse_graph6(std::string_view s) {
  if (s.empty()) throw ParseError("graph6: empty string", 0);
  std::size_t pos = 0;
  std::size_t n = 0;
  if (s[0] == '~') {
    if (s.size() > 1 && s[1] == '~')
      throw ParseError("graph6: 8-byte header (n > 258047) not supported", 1);
    for (pos = 1; pos < 4; ++pos) n = (n << 6) | static_cast<std::size_t>(sixbits(s, pos));
  } else {
    n = static_cast<std::size_t>(sixbits(s, 0));
    pos = 1;
  }

  const std::size_t nbits = n * (n - (n > 0 ? 1 : 0)) / 2;
  const std::size_t nbytes = (nbits + 5) / 6;
  if (s.size() != pos + nbytes) {
    std::size_t at = s.size() < pos + nbytes ? s.size() : pos + nbytes;
    throw ParseError("graph6: length " + std::to_string(s.size()) + " does not match n=" +
                         std::to_string(n) + " (expected " + std::to_string(pos + nbytes) + ")",
                     at);
  }

  std::vector<Edge> edges;
  std::size_t bit = 0;
  for (Vertex j = 1; j < n; ++j) {
    for (Vertex i = 0; i < j; ++i, ++bit) {
      int byte = sixbits(s, pos + bit / 6);
      if ((byte >> (5 - bit % 6)) & 1) edges.emplace_back(i, j);
    }
  }
  if (nbytes > 0) {
    std::size_t last = pos + nbytes - 1;
    int byte = sixbits(s, last);
    int pad = static_cast<int>(nbytes * 6 - nbits);
    if (byte & ((1 << pad) - 1)) throw ParseError("graph6: nonzero padding bits", last);
  }
  return Graph::from_edges(n, edges);
}

std::string write_graph6(const Graph& g) {
  const std::size_t n = g.order();
  if (n > kGraph6MaxOrder) throw InputError("graph6: order exceeds 258047");
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(63 + n));
  } else {
    out.push_back('~');
    for (int shift = 12; shift >= 0; shift -= 6)
      out.push_back(static_cast<char>(63 + ((n >> shift) & 63)));
  }
  int acc = 0, filled = 0;
  for (Vertex j = 1; j < n; ++j) {
    for (Vertex i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.adjacent(i, j) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(63 + acc));
        acc = filled = 0;
      }
    }
  }
  if (filled) out.push_back(static_cast<char>(63 + (acc << (6 - filled))));
  return out;
}

}  // namespace sspec
