#pragma once

#include <bit>
#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "tdp/errors.hpp"

namespace tdp {

// Hard order cap: one machine word per neighborhood.
inline constexpr int kMaxVertices = 64;

struct EdgeRef {
  int u = 0;  // always u < v
  int v = 0;

  friend auto operator<=>(const EdgeRef&, const EdgeRef&) = default;
};

// Simple undirected graph on vertices 0..n-1, stored as one open-neighborhood
// bitmask per vertex. Invariants: adj[v] bit v is clear, adj[u] bit v equals
// adj[v] bit u, and bits >= n are clear.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int order);

  int order() const { return n_; }
  std::uint64_t full_mask() const {
    return n_ == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n_) - 1;
  }

  std::uint64_t neighbors(int v) const { return adj_[v]; }
  std::uint64_t closed_neighborhood(int v) const {
    return adj_[v] | (std::uint64_t{1} << v);
  }
  int degree(int v) const { return std::popcount(adj_[v]); }
  bool has_edge(int u, int v) const { return (adj_[u] >> v) & 1; }

  void add_edge(int u, int v);
  void remove_edge(int u, int v);

  int edge_count() const;
  std::vector<EdgeRef> edges() const;  // ascending (u, v)

  bool has_isolated_vertex() const;

  // Copies with vertices renumbered to stay contiguous.
  Graph without_vertex(int v) const;
  Graph without_vertices(std::uint64_t drop) const;
  Graph without_edge(int u, int v) const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  int n_ = 0;
  std::vector<std::uint64_t> adj_;
};

// Vertices adjacent to at least one degree-1 vertex.
std::uint64_t support_vertices(const Graph& g);

// graph6 codec. parse accepts an optional ">>graph6<<" header and reports
// defects by byte offset; write emits the canonical form for the labeling
// (single size byte up to n = 62, '~' + 3 bytes for 63 and 64).
Graph parse_graph6(std::string_view text);
std::string write_graph6(const Graph& g);

Graph from_edge_list(int n, const std::vector<std::pair<int, int>>& edges);

// Edge-list text: first significant line "n m", then m lines "u v".
// '#' starts a comment; blank lines are skipped; defects report line numbers.
Graph parse_edge_list(std::istream& in);

}  // namespace tdp
