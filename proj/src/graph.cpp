#include "tdp/graph.hpp"

#include <istream>
#include <sstream>
#include <stdexcept>

namespace tdp {

Graph::Graph(int order) {
  if (order < 0) {
    throw std::invalid_argument("graph order must be nonnegative");
  }
  if (order > kMaxVertices) {
    throw CapacityError("graph order " + std::to_string(order) +
                        " exceeds capacity " + std::to_string(kMaxVertices));
  }
  n_ = order;
  adj_.assign(static_cast<std::size_t>(order), 0);
}

void Graph::add_edge(int u, int v) {
  if (u < 0 || v < 0 || u >= n_ || v >= n_) {
    throw std::out_of_range("edge endpoint out of range");
  }
  if (u == v) {
    throw std::invalid_argument("self-loops are not allowed");
  }
  adj_[u] |= std::uint64_t{1} << v;
  adj_[v] |= std::uint64_t{1} << u;
}

void Graph::remove_edge(int u, int v) {
  if (u < 0 || v < 0 || u >= n_ || v >= n_) {
    throw std::out_of_range("edge endpoint out of range");
  }
  adj_[u] &= ~(std::uint64_t{1} << v);
  adj_[v] &= ~(std::uint64_t{1} << u);
}

int Graph::edge_count() const {
  int twice = 0;
  for (std::uint64_t m : adj_) twice += std::popcount(m);
  return twice / 2;
}

std::vector<EdgeRef> Graph::edges() const {
  std::vector<EdgeRef> out;
  for (int u = 0; u < n_; ++u) {
    std::uint64_t above = adj_[u] >> u >> 1;  // neighbors v with v > u
    while (above) {
      out.push_back({u, u + 1 + std::countr_zero(above)});
      above &= above - 1;
    }
  }
  return out;
}

bool Graph::has_isolated_vertex() const {
  for (std::uint64_t m : adj_) {
    if (m == 0) return true;
  }
  return false;
}

Graph Graph::without_vertex(int v) const {
  if (v < 0 || v >= n_) {
    throw std::out_of_range("vertex out of range");
  }
  return without_vertices(std::uint64_t{1} << v);
}

Graph Graph::without_vertices(std::uint64_t drop) const {
  const std::uint64_t keep = full_mask() & ~drop;
  Graph h(std::popcount(keep));
  auto renumber = [keep](int v) {
    return std::popcount(keep & ((std::uint64_t{1} << v) - 1));
  };
  for (int u = 0; u < n_; ++u) {
    if (!((keep >> u) & 1)) continue;
    std::uint64_t m = (adj_[u] & keep) >> u >> 1;
    while (m) {
      int w = u + 1 + std::countr_zero(m);
      m &= m - 1;
      h.add_edge(renumber(u), renumber(w));
    }
  }
  return h;
}

Graph Graph::without_edge(int u, int v) const {
  if (u < 0 || v < 0 || u >= n_ || v >= n_) {
    throw std::out_of_range("edge endpoint out of range");
  }
  if (!has_edge(u, v)) {
    throw std::invalid_argument("edge not present");
  }
  Graph h = *this;
  h.remove_edge(u, v);
  return h;
}

std::uint64_t support_vertices(const Graph& g) {
  std::uint64_t s = 0;
  for (int v = 0; v < g.order(); ++v) {
    if (g.degree(v) == 1) s |= g.neighbors(v);
  }
  return s;
}

namespace {

constexpr std::string_view kGraph6Header = ">>graph6<<";

int sixbit(std::string_view s, std::size_t i) {
  unsigned char c = static_cast<unsigned char>(s[i]);
  if (c < 63 || c > 126) {
    throw ParseError("graph6: character outside 63..126 at byte " +
                         std::to_string(i),
                     i);
  }
  return c - 63;
}

}  // namespace

Graph parse_graph6(std::string_view text) {
  std::size_t pos = 0;
  if (text.substr(0, kGraph6Header.size()) == kGraph6Header) {
    pos = kGraph6Header.size();
  }
  if (pos >= text.size()) {
    throw ParseError("graph6: empty input", pos);
  }

  const std::size_t size_field = pos;
  unsigned long long n = 0;
  if (text[pos] != '~') {
    n = static_cast<unsigned long long>(sixbit(text, pos));
    pos += 1;
  } else if (pos + 1 < text.size() && text[pos + 1] == '~') {
    if (text.size() < pos + 8) {
      throw ParseError("graph6: truncated size field", size_field);
    }
    for (int k = 0; k < 6; ++k) {
      n = (n << 6) | static_cast<unsigned long long>(sixbit(text, pos + 2 + k));
    }
    pos += 8;
  } else {
    if (text.size() < pos + 4) {
      throw ParseError("graph6: truncated size field", size_field);
    }
    for (int k = 0; k < 3; ++k) {
      n = (n << 6) | static_cast<unsigned long long>(sixbit(text, pos + 1 + k));
    }
    if (n < 63) {
      throw ParseError("graph6: non-canonical multi-byte size field",
                       size_field);
    }
    pos += 4;
  }
  if (n > static_cast<unsigned long long>(kMaxVertices)) {
    throw ParseError("graph6: order " + std::to_string(n) +
                         " exceeds capacity " + std::to_string(kMaxVertices),
                     size_field);
  }

  Graph g(static_cast<int>(n));
  const std::size_t bits = n * (n - 1) / 2;
  const std::size_t need = (bits + 5) / 6;
  if (text.size() - pos < need) {
    throw ParseError("graph6: body truncated", text.size());
  }
  if (text.size() - pos > need) {
    throw ParseError("graph6: trailing data", pos + need);
  }

  // Body bits run through the upper triangle in column order:
  // x(0,1), x(0,2), x(1,2), x(0,3), ...
  std::size_t bit = 0;
  int row = 0;
  int col = 1;
  for (std::size_t k = 0; k < need; ++k) {
    int d = sixbit(text, pos + k);
    for (int b = 5; b >= 0; --b, ++bit) {
      bool on = (d >> b) & 1;
      if (bit < bits) {
        if (on) g.add_edge(row, col);
        if (++row == col) {
          ++col;
          row = 0;
        }
      } else if (on) {
        throw ParseError("graph6: nonzero padding bits", pos + k);
      }
    }
  }
  return g;
}

std::string write_graph6(const Graph& g) {
  const int n = g.order();
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(63 + n));
  } else {
    out.push_back('~');
    out.push_back(static_cast<char>(63 + ((n >> 12) & 63)));
    out.push_back(static_cast<char>(63 + ((n >> 6) & 63)));
    out.push_back(static_cast<char>(63 + (n & 63)));
  }
  int acc = 0;
  int filled = 0;
  for (int col = 1; col < n; ++col) {
    for (int row = 0; row < col; ++row) {
      acc = (acc << 1) | (g.has_edge(row, col) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(63 + acc));
        acc = 0;
        filled = 0;
      }
    }
  }
  if (filled) {
    out.push_back(static_cast<char>(63 + (acc << (6 - filled))));
  }
  return out;
}

Graph from_edge_list(int n, const std::vector<std::pair<int, int>>& edges) {
  Graph g(n);
  for (auto [u, v] : edges) g.add_edge(u, v);
  return g;
}

namespace {

// Significant content of a line: text before any '#', if non-blank.
bool significant(const std::string& line, std::string& content) {
  auto cut = line.find('#');
  content = line.substr(0, cut);
  return content.find_first_not_of(" \t\r\n") != std::string::npos;
}

long long take_int(std::istringstream& ss, const char* what,
                   std::size_t lineno) {
  long long value = 0;
  if (!(ss >> value)) {
    throw ParseError("edge list: expected " + std::string(what) + " on line " +
                         std::to_string(lineno),
                     lineno);
  }
  return value;
}

void expect_end(std::istringstream& ss, std::size_t lineno) {
  std::string extra;
  if (ss >> extra) {
    throw ParseError("edge list: unexpected token '" + extra + "' on line " +
                         std::to_string(lineno),
                     lineno);
  }
}

}  // namespace

Graph parse_edge_list(std::istream& in) {
  std::string line;
  std::string content;
  std::size_t lineno = 0;

  long long n = -1;
  long long m = -1;
  while (std::getline(in, line)) {
    ++lineno;
    if (!significant(line, content)) continue;
    std::istringstream ss(content);
    n = take_int(ss, "vertex count", lineno);
    m = take_int(ss, "edge count", lineno);
    expect_end(ss, lineno);
    break;
  }
  if (n < 0 && m < 0) {
    throw ParseError("edge list: missing header line", lineno + 1);
  }
  if (n < 0 || n > kMaxVertices) {
    throw ParseError("edge list: vertex count " + std::to_string(n) +
                         " outside 0.." + std::to_string(kMaxVertices) +
                         " on line " + std::to_string(lineno),
                     lineno);
  }
  if (m < 0) {
    throw ParseError("edge list: negative edge count on line " +
                         std::to_string(lineno),
                     lineno);
  }

  Graph g(static_cast<int>(n));
  long long seen = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!significant(line, content)) continue;
    if (seen == m) {
      throw ParseError("edge list: more than " + std::to_string(m) +
                           " edges (line " + std::to_string(lineno) + ")",
                       lineno);
    }
    std::istringstream ss(content);
    long long u = take_int(ss, "edge endpoint", lineno);
    long long v = take_int(ss, "edge endpoint", lineno);
    expect_end(ss, lineno);
    if (u < 0 || v < 0 || u >= n || v >= n) {
      throw ParseError("edge list: endpoint outside 0.." + std::to_string(n - 1) +
                           " on line " + std::to_string(lineno),
                       lineno);
    }
    if (u == v) {
      throw ParseError("edge list: self-loop on line " + std::to_string(lineno),
                       lineno);
    }
    g.add_edge(static_cast<int>(u), static_cast<int>(v));
    ++seen;
  }
  if (seen != m) {
    throw ParseError("edge list: expected " + std::to_string(m) +
                         " edges, got " + std::to_string(seen) + " (line " +
                         std::to_string(lineno + 1) + ")",
                     lineno + 1);
  }
  return g;
}

}  // namespace tdp
