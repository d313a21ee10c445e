#include "cyclab/graph.hpp"

// graph6 layout: a size header N(n) followed by the upper triangle of the
// adjacency matrix read in column order (x_{0,1}, x_{0,2}, x_{1,2}, x_{0,3},
// ...), packed into 6-bit groups most significant bit first, each group
// stored as the byte group+63. Header forms:
//   0 <= n <= 62          one byte n+63
//   63 <= n <= 258047     '~' then three bytes holding 18 bits
//   larger n              '~~' then six bytes holding 36 bits

namespace cyclab {

namespace {

constexpr int kOffset = 63;

long long decode_header(std::string_view line, std::size_t& pos) {
  auto need = [&](std::size_t count) {
    if (line.size() < pos + count)
      throw Graph6Error("truncated size header", line.size());
  };
  auto group = [&](std::size_t at) -> long long {
    unsigned char c = static_cast<unsigned char>(line[at]);
    return c - kOffset;
  };
  need(1);
  if (line[pos] != '~') return group(pos++);
  ++pos;
  need(1);
  int groups = 3;
  if (line[pos] == '~') {
    ++pos;
    groups = 6;
  }
  need(static_cast<std::size_t>(groups));
  long long n = 0;
  for (int i = 0; i < groups; ++i) n = (n << 6) | group(pos++);
  return n;
}

}  // namespace

Graph parse_graph6(std::string_view line) {
  if (line.empty()) throw Graph6Error("empty graph6 record", 0);
  for (std::size_t i = 0; i < line.size(); ++i) {
    unsigned char c = static_cast<unsigned char>(line[i]);
    if (c < 63 || c > 126) throw Graph6Error("byte out of graph6 range", i);
  }
  std::size_t pos = 0;
  long long n = decode_header(line, pos);
  if (n > kMaxVertices)
    throw Graph6Error("vertex count " + std::to_string(n) + " exceeds build cap " +
                          std::to_string(kMaxVertices),
                      0);
  long long bits = n * (n - 1) / 2;
  std::size_t payload = static_cast<std::size_t>((bits + 5) / 6);
  if (line.size() < pos + payload) throw Graph6Error("truncated payload", line.size());
  if (line.size() > pos + payload) throw Graph6Error("trailing garbage", pos + payload);

  std::vector<VertexSet> rows(static_cast<std::size_t>(n));
  long long t = 0;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i, ++t) {
      int byte = line[pos + static_cast<std::size_t>(t / 6)] - kOffset;
      if ((byte >> (5 - t % 6)) & 1) {
        rows[static_cast<std::size_t>(i)].set(j);
        rows[static_cast<std::size_t>(j)].set(i);
      }
    }
  // padding bits must be zero
  for (; t < static_cast<long long>(payload) * 6; ++t) {
    int byte = line[pos + static_cast<std::size_t>(t / 6)] - kOffset;
    if ((byte >> (5 - t % 6)) & 1)
      throw Graph6Error("nonzero padding bits", pos + static_cast<std::size_t>(t / 6));
  }
  return Graph::from_rows(static_cast<int>(n), std::move(rows));
}

std::string write_graph6(const Graph& g) {
  long long n = g.n();
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(n + kOffset));
  } else if (n <= 258047) {
    out.push_back('~');
    for (int shift = 12; shift >= 0; shift -= 6)
      out.push_back(static_cast<char>(((n >> shift) & 63) + kOffset));
  } else {
    out.append("~~");
    for (int shift = 30; shift >= 0; shift -= 6)
      out.push_back(static_cast<char>(((n >> shift) & 63) + kOffset));
  }
  int group = 0, filled = 0;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i) {
      group = (group << 1) | (g.adjacent(i, j) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(group + kOffset));
        group = filled = 0;
      }
    }
  if (filled) out.push_back(static_cast<char>((group << (6 - filled)) + kOffset));
  return out;
}

}  // namespace cyclab
