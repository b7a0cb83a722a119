#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "tdp/graph.hpp"
#include "tdp/polynomial.hpp"

namespace tdp {

// Subset enumeration is exponential; refuse orders past this.
inline constexpr int kBruteForceCapacity = 28;

// True iff every vertex of g has a neighbor in s.
bool is_total_dominating(const Graph& g, std::uint64_t s);

// Exact D_t(G, x) by pruned subset enumeration. threads: 1 sequential,
// 0 auto, N workers. Counting is exact, so the result is identical for
// every thread count.
Polynomial brute_force_tdp(const Graph& g, int threads = 1);

// Lowest nonzero coefficient index of D_t; empty when no total dominating
// set exists (isolated vertex).
std::optional<int> total_domination_number(const Graph& g);

// Verifies D_t(G) == D_t(G-v) + D_t(G.v) - D_t(G*v), where G.v removes the
// edges inside N(v) and G*v additionally removes v itself.
bool vertex_decomposition_check(const Graph& g, int v);

// D_t(G) = D_t(G-uv) + x^2 D_t(G - N[u]) for a true-twin edge: requires
// uv in E and N[u] == N[v].
Polynomial twin_edge_reduction(const Graph& g, EdgeRef e, int threads = 1);

// D_t(G) = D_t(G-v) + x(x+1)^(n-1) - x for v adjacent to every other
// vertex; requires n >= 2.
Polynomial dominating_vertex_reduction(const Graph& g, int v, int threads = 1);

enum class ReductionRule {
  // Deleted edge: each endpoint keeps a support-vertex neighbor other than
  // the opposite endpoint.
  kSupportAdjacent,
  // Deleted edge: true-twin edge whose twins dominate some outside vertex.
  kTwinDominated,
  // Recurrence split on a true-twin edge (main line continues on G-e).
  kTwinEdgeSplit,
  // Recurrence on a vertex adjacent to all others (main line on G-v).
  kDominatingVertex,
};

struct ReductionStep {
  ReductionRule rule = ReductionRule::kSupportAdjacent;
  EdgeRef edge{};   // for the edge rules
  int vertex = -1;  // for kDominatingVertex
  std::optional<bool> certified;

  friend bool operator==(const ReductionStep&, const ReductionStep&) = default;
};

// Replaying the deletions over the input graph's vertex ids reproduces the
// main-line result.
struct ReductionTrace {
  std::vector<ReductionStep> steps;
};

// Edges whose deletion keeps D_t by rule, ascending (u, v); an edge
// admitted by both rules is labeled kSupportAdjacent.
std::vector<std::pair<EdgeRef, ReductionRule>> irrelevant_edge_candidates(
    const Graph& g);

// Rule-independent check that deleting e keeps D_t.
bool certify_irrelevant(const Graph& g, EdgeRef e, int threads = 1);

// Deletes the first candidate edge, recomputes, repeats until none is left.
// certify_steps brute-force checks each deletion when the order is within
// brute-force capacity; otherwise certified stays unset.
std::pair<Graph, ReductionTrace> simplify(const Graph& g,
                                          bool certify_steps = false);

// D_t via accelerators: candidate-edge deletion, component factoring, the
// dominating-vertex and twin-edge recurrences, brute force at the leaves.
// Steps carry input-graph vertex ids; side branches of the twin split only
// contribute polynomial terms, not steps.
std::pair<Polynomial, ReductionTrace> reduce_tdp(const Graph& g,
                                                 int threads = 1);

}  // namespace tdp
